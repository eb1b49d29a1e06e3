#pragma once

#include "cheb/contour.hpp"
#include "cheb/functions.hpp"
#include "cheb/radius_rule.hpp"

namespace cheb {

struct ConditionEstimate {
    int n = 0;
    double rho = 1.0;
    double m_rho = 0.0;     // (1/pi) integral of the |weighted f| along the ellipse
    double kappa = 0.0;     // +inf sentinel when the reference coefficient is zero
    double ref_coeff = 0.0; // the |a_n| (or |b_n|) used
    bool zero_ref = false;
};

// Trapezoidal estimate of M(rho) = (1/pi) \int_0^{2pi} |f| dtheta with q
// nodes. |f| is only piecewise smooth in theta when f has zeros on the
// contour, so convergence is O(q^-2) there rather than spectral.
double m_of_rho(const AnalyticFn& fn, double rho, int q = 2048);

// Condition number of the first-kind coefficient integral,
// kappa = M(rho) / (|ref| rho^n), with M evaluated at q = 1024 and 2048 and
// Richardson-combined. ref = 0 yields the +inf sentinel with zero_ref set.
ConditionEstimate kappa_t(const AnalyticFn& fn, int n, double rho, double ref);

// Second-kind condition number; the |1 - (rho e^{i theta})^{-2}| weight is
// part of the numerator integrand and kappa = m_rho / (2 |ref| rho^n).
ConditionEstimate kappa_u(const AnalyticFn& fn, int n, double rho, double ref);

// Numeric optimal radius: golden-section minimization of log kappa(n, rho)
// over log rho, which is unimodal because log M is convex in log rho. For
// finite rho_max the bracket is (1, (1 - 1e-3) rho_max); otherwise it starts
// at [1.1, max(4n+4, 8)] and the upper end doubles while kappa still
// decreases, capped at 1e6. A probe coefficient (m = 4n + 64, bracket
// midpoint) below 1e-300 sets *underflow and returns the bracket upper end.
double radius_auto(const AnalyticFn& fn, int n, double rho_max, double tol = 1e-3,
                   bool* underflow = nullptr);

// Optimal radius for the function's own rule, dispatching Auto rules to
// radius_auto.
double optimal_radius(const AnalyticFn& fn, int n);

} // namespace cheb
