#pragma once

#include <complex>
#include <vector>

#include "cheb/errors.hpp"

namespace cheb {

enum class Kind { FirstKind, SecondKind };

// Finite Chebyshev expansion. First-kind series use the halved-first-term
// convention: f(x) = coeffs[0]/2 + sum_{k>=1} coeffs[k] T_k(x), so the stored
// coefficients are exactly the contour-integral values. Second-kind series
// evaluate as sum_k coeffs[k] U_k(x) with no halving.
struct ChebSeries {
    Kind kind = Kind::FirstKind;
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Clenshaw evaluation. |x| <= 1 is the intended domain; values outside are
// extrapolation and still computed.
double eval_series(const ChebSeries& series, double x);

// Clenshaw evaluation at a complex point (used for residuals of near-interval
// roots and diagnostics).
std::complex<double> eval_series(const ChebSeries& series, std::complex<double> x);

// Joukowski map z = (u + 1/u)/2.
std::complex<double> joukowski(std::complex<double> u);

// Inverse Joukowski map u = z + sqrt(z^2 - 1) with the branch |u| >= 1.
std::complex<double> inverse_joukowski(std::complex<double> z);

// First-kind to second-kind conversion b_n = (a_n - a_{n+2})/2 applied to the
// stored coefficients, missing indices treated as zero. Output length equals
// input length, so the conversion is exact only when the input carries two
// trailing zero coefficients.
ChebSeries t_to_u(const ChebSeries& series);

// s-th derivative of a first-kind series by the coefficient recurrence
// a_{k-1}^{(s)} = a_{k+1}^{(s)} + 2k a_k^{(s-1)}. s = 0 is the identity;
// s > degree gives the zero series.
ChebSeries differentiate(const ChebSeries& series, int s);

} // namespace cheb
