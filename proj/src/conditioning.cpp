#include "cheb/conditioning.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cheb/errors.hpp"

namespace cheb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <typename... Ts> struct overload : Ts... {
    using Ts::operator()...;
};
template <typename... Ts> overload(Ts...) -> overload<Ts...>;

// (1/pi) \int |f(z(theta))| |weight(theta)| dtheta by the q-point trapezoidal
// rule; weight is 1 for the first kind and 1 - (rho e^{i theta})^{-2} for the
// second.
double mean_modulus(const AnalyticFn& fn, double rho, int q, bool second_kind_weight) {
    const double half_sum = 0.5 * (rho + 1.0 / rho);
    const double half_diff = 0.5 * (rho - 1.0 / rho);
    const double inv_rho2 = 1.0 / (rho * rho);
    double sum = 0.0, comp = 0.0;
    for (int j = 0; j < q; ++j) {
        const double theta = (kTwoPi * j) / q;
        const Complex u = std::polar(1.0, theta);
        const Complex z(half_sum * u.real(), half_diff * u.imag());
        Complex v = fn.eval(z);
        if (second_kind_weight)
            v *= 1.0 - inv_rho2 * std::conj(u) * std::conj(u);
        const double a = std::abs(v);
        if (!std::isfinite(a))
            throw evaluation_error("function '" + fn.name + "' is non-finite on the rho = " +
                                   std::to_string(rho) + " ellipse");
        const double y = a - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return 2.0 * sum / q;
}

// q and 2q estimates combined by one Richardson step; the h^2 term of the
// |f| kinks cancels, and for smooth integrands both estimates are already
// converged so the combination is harmless.
double refined_mean_modulus(const AnalyticFn& fn, double rho, bool second_kind_weight) {
    const double coarse = mean_modulus(fn, rho, 1024, second_kind_weight);
    const double fine = mean_modulus(fn, rho, 2048, second_kind_weight);
    return fine + (fine - coarse) / 3.0;
}

void check_rho(const AnalyticFn& fn, double rho) {
    if (!(rho >= 1.0))
        throw precondition_error("m_of_rho: rho must be at least 1");
    if (!(rho < fn.rho_max))
        throw analyticity_error("rho = " + std::to_string(rho) +
                                " reaches the singularity of '" + fn.name + "'");
}

ConditionEstimate make_estimate(int n, double rho, double m_rho, double ref, double denom_scale) {
    ConditionEstimate est;
    est.n = n;
    est.rho = rho;
    est.m_rho = m_rho;
    est.ref_coeff = ref;
    if (ref == 0.0) {
        est.kappa = std::numeric_limits<double>::infinity();
        est.zero_ref = true;
        return est;
    }
    const double p = std::pow(rho, static_cast<double>(n));
    est.kappa = m_rho / (denom_scale * std::abs(ref) * p);
    return est;
}

} // namespace

double m_of_rho(const AnalyticFn& fn, double rho, int q) {
    check_rho(fn, rho);
    if (q < 64)
        throw precondition_error("m_of_rho: need at least 64 quadrature nodes");
    return mean_modulus(fn, rho, q, false);
}

ConditionEstimate kappa_t(const AnalyticFn& fn, int n, double rho, double ref) {
    if (n < 0)
        throw precondition_error("kappa_t: index must be non-negative");
    check_rho(fn, rho);
    return make_estimate(n, rho, refined_mean_modulus(fn, rho, false), ref, 1.0);
}

ConditionEstimate kappa_u(const AnalyticFn& fn, int n, double rho, double ref) {
    if (n < 0)
        throw precondition_error("kappa_u: index must be non-negative");
    check_rho(fn, rho);
    return make_estimate(n, rho, refined_mean_modulus(fn, rho, true), ref, 2.0);
}

double radius_auto(const AnalyticFn& fn, int n, double rho_max, double tol, bool* underflow) {
    if (n < 0)
        throw precondition_error("radius_auto: index must be non-negative");
    if (!(rho_max > 1.0))
        throw precondition_error("radius_auto: rho_max must exceed 1");
    if (!(tol > 0.0))
        tol = 1e-3;
    if (underflow)
        *underflow = false;

    // log kappa up to the additive -log|a_n| constant, which does not move
    // the argmin.
    auto objective = [&](double log_rho) {
        return std::log(mean_modulus(fn, std::exp(log_rho), 1024, false)) - n * log_rho;
    };

    double lo, hi;
    if (std::isfinite(rho_max)) {
        lo = 0.0;
        hi = std::log(rho_max) + std::log1p(-1e-3);
        if (!(hi > lo))
            return std::exp(0.5 * (lo + hi));
    } else {
        lo = std::log(1.1);
        hi = std::log(std::max(4.0 * n + 4.0, 8.0));
        double f_hi = objective(hi);
        while (std::exp(hi) < 1e6) {
            const double next = hi + std::numbers::ln2;
            const double f_next = objective(next);
            if (f_next >= f_hi) {
                hi = next; // the increase brackets the minimum
                break;
            }
            hi = next;
            f_hi = f_next;
        }
    }

    // Reference probe; its only role is the underflow check, since kappa's
    // rho-dependence sits entirely in M(rho)/rho^n.
    const double mid = std::exp(0.5 * (lo + hi));
    const CoeffResult probe = coeff_t(fn, n, ContourPlan{mid, 4 * n + 64});
    if (std::abs(probe.value) < 1e-300) {
        if (underflow)
            *underflow = true;
        return std::exp(hi);
    }

    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = objective(x1);
    double f2 = objective(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = objective(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = objective(x2);
        }
    }
    return std::exp(0.5 * (a + b));
}

double optimal_radius(const RadiusRule& rule, int n) {
    if (n < 0)
        throw precondition_error("optimal_radius: index must be non-negative");
    return std::visit(
        overload{
            [](const FixedRadius& r) { return r.rho; },
            [n](const EntireRadius& r) {
                return std::max(1.0, std::pow((n - r.varsigma) / (r.mu * r.nu), 1.0 / r.nu));
            },
            [n](const PoleRadius& r) {
                const double three_log2 = 3.0 * std::numbers::ln2;
                double denom;
                if (n == 0) {
                    denom = three_log2;
                } else {
                    denom = n * (three_log2 + std::log(static_cast<double>(n)));
                    if (r.refined) {
                        const double d =
                            n * (three_log2 - std::log(r.A * r.A + 1.0) +
                                 std::log(r.A * r.A - 1.0) + std::log(static_cast<double>(n)));
                        if (d > 1.0)
                            denom = d;
                    }
                }
                return std::max(1.0, r.A * (1.0 - 1.0 / denom));
            },
            [](const BranchLimitRadius& r) { return (1.0 - 1e-3) * r.rho_max; },
            [](const AutoRadius&) -> double {
                throw precondition_error(
                    "optimal_radius: Auto rules need the function; call optimal_radius(fn, n)");
            }},
        rule);
}

double optimal_radius(const AnalyticFn& fn, int n) {
    if (const auto* auto_rule = std::get_if<AutoRadius>(&fn.radius_rule)) {
        const double cap = std::min(auto_rule->rho_max_hint, fn.rho_max);
        return radius_auto(fn, n, cap, auto_rule->tolerance);
    }
    return optimal_radius(fn.radius_rule, n);
}

int nodes_estimate(int n, double eps, NodeClass cls) {
    if (n < 0)
        throw precondition_error("nodes_estimate: index must be non-negative");
    if (!(eps > 0.0 && eps < 1.0))
        throw precondition_error("nodes_estimate: eps must lie in (0, 1)");
    if (cls == NodeClass::EntireLike)
        return std::max(2 * n + 2, 100);
    if (n == 0)
        return 50;
    const double m =
        n * (3.0 * std::numbers::ln2 + std::log(static_cast<double>(n))) * std::log(1.0 / eps);
    return static_cast<int>(std::ceil(std::max(m, 50.0)));
}

} // namespace cheb
