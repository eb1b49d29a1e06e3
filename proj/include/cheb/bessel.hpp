#pragma once

namespace cheb {

// Modified Bessel function I_n(x) of the first kind by the ascending series
// sum_m (x/2)^(n+2m) / (m! (n+m)!), truncated when a term drops below 1e-18
// of the partial sum. Valid for n >= 0 and x in [0, 50], the range the
// coefficient oracles need.
double bessel_i(int n, double x);

// Bessel function J_n(x) of the first kind by the alternating ascending
// series with compensated summation. Valid for n >= 0 and |x| <= 20.
double bessel_j(int n, double x);

} // namespace cheb
