#pragma once

#include <vector>

#include "cheb/functions.hpp"

namespace cheb {

// Quadrature prescription: ellipse parameter rho >= 1 and trapezoidal node
// count m.
struct ContourPlan {
    double rho = 1.0;
    int m = 1;
};

struct CoeffResult {
    int n = 0;
    Complex value;
    ContourPlan plan;
    double imag_diagnostic = 0.0; // |Im value| / max(1, |Re value|)
};

// Point (rho e^{i theta} + (rho e^{i theta})^{-1}) / 2 on the Bernstein
// ellipse. No restriction on rho; rho and 1/rho trace conjugate ellipses.
Complex ellipse_point(double rho, double theta);

// The m trapezoidal nodes z_j at angles theta_j = 2 pi j / m.
std::vector<Complex> contour_nodes(const ContourPlan& plan);

// n-th first-kind coefficient a_n(m, rho) by the m-point trapezoidal rule.
// Requires the sampling condition m > n and rho < fn.rho_max.
CoeffResult coeff_t(const AnalyticFn& fn, int n, const ContourPlan& plan);

// n-th second-kind coefficient b_n(m, rho); requires m > n + 2.
CoeffResult coeff_u(const AnalyticFn& fn, int n, const ContourPlan& plan);

// Coefficients n = 0..N from one shared sample vector. Every bin is the same
// ascending-index compensated sum as the per-coefficient operation, so batch
// and per-coefficient results are identical bit for bit; the transform is the
// plain O(N m) one. threads > 1 parallelizes over samples and bins without
// touching any summation order, so results do not depend on the schedule.
std::vector<CoeffResult> batch_coeffs_t(const AnalyticFn& fn, int N,
                                        const ContourPlan& plan, int threads = 1);

// Second-kind batch; the (1 - rho^{-2} e^{-4 pi i j / m}) weight is folded
// into the sample vector before the transform. Requires m > N + 2.
std::vector<CoeffResult> batch_coeffs_u(const AnalyticFn& fn, int N,
                                        const ContourPlan& plan, int threads = 1);

} // namespace cheb
