#pragma once

#include <limits>
#include <variant>

namespace cheb {

// Contour fixed at one ellipse parameter for every coefficient.
struct FixedRadius {
    double rho = 1.0;
};

// Entire function with M(rho) ~ exp(mu rho^nu) rho^varsigma as rho -> inf.
// The optimal radius for coefficient n is ((n - varsigma) / (mu nu))^(1/nu).
struct EntireRadius {
    double mu = 0.5;
    double nu = 1.0;
    double varsigma = -0.5;
};

// Function whose nearest singularity is a pole with |u(z0)| = A > 1. The
// refined flag switches on the log(A^2 +- 1) correction terms, which are
// slightly more accurate for small A and n.
struct PoleRadius {
    double A = 2.0;
    bool refined = false;
};

// Branch point limiting analyticity at rho_max; the radius is pushed to
// (1 - 1e-3) rho_max so the trapezoidal rule still converges at fixed m.
struct BranchLimitRadius {
    double rho_max = 2.0;
};

// Numeric minimization of the condition number over the contour radius
// (see radius_auto in conditioning.hpp).
struct AutoRadius {
    double rho_max_hint = std::numeric_limits<double>::infinity();
    double tolerance = 1e-3;
};

using RadiusRule =
    std::variant<FixedRadius, EntireRadius, PoleRadius, BranchLimitRadius, AutoRadius>;

enum class NodeClass { EntireLike, PoleLike };

// Closed-form optimal radius for coefficient n. Auto rules need the function
// itself; use optimal_radius(fn, n) from conditioning.hpp for those.
double optimal_radius(const RadiusRule& rule, int n);

// Trapezoidal node-count heuristic for relative accuracy eps:
// ceil(max(n (3 log 2 + log n) log(1/eps), 50)) for pole-like functions,
// max(2n + 2, 100) for entire-like ones.
int nodes_estimate(int n, double eps, NodeClass cls);

} // namespace cheb
