#include "cheb/functions.hpp"

#include <cmath>
#include <utility>

#include "cheb/bessel.hpp"
#include "cheb/errors.hpp"

namespace cheb {

namespace {

// cos(d + q pi/2) by quadrant, so the zeros at d = 0, odd q are exact.
double quadrant_cos(double d, int q) {
    switch (((q % 4) + 4) % 4) {
    case 0: return std::cos(d);
    case 1: return -std::sin(d);
    case 2: return -std::cos(d);
    default: return std::sin(d);
    }
}

double factorial(int s) {
    double f = 1.0;
    for (int k = 2; k <= s; ++k)
        f *= k;
    return f;
}

// Minimal double-double arithmetic for the pole coefficient oracle: the base
// a - sqrt(a^2 - 1) carries an O(eps) representation error which r^n
// amplifies n-fold, so plain doubles cap the oracle near 1e-14 at n = 100.
struct DoubleDouble {
    double hi = 0.0, lo = 0.0;
};

DoubleDouble two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

DoubleDouble two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

DoubleDouble dd_add(DoubleDouble a, DoubleDouble b) {
    DoubleDouble s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    const DoubleDouble r = two_sum(s.hi, s.lo);
    return r;
}

DoubleDouble dd_mul(DoubleDouble a, DoubleDouble b) {
    DoubleDouble p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return two_sum(p.hi, p.lo);
}

DoubleDouble dd_pow(DoubleDouble base, int n) {
    DoubleDouble result{1.0, 0.0};
    while (n > 0) {
        if (n & 1)
            result = dd_mul(result, base);
        base = dd_mul(base, base);
        n >>= 1;
    }
    return result;
}

// sqrt(v) with one Newton refinement in double-double.
DoubleDouble dd_sqrt(DoubleDouble v) {
    const double s0 = std::sqrt(v.hi);
    const DoubleDouble s0sq = two_prod(s0, s0);
    const DoubleDouble resid = dd_add(v, {-s0sq.hi, -s0sq.lo});
    return two_sum(s0, resid.hi / (2.0 * s0));
}

// (a - sqrt(a^2 - 1))^n, accurate to a couple of ulps for the n used here.
double pole_decay_power(double a, int n) {
    const DoubleDouble a2 = two_prod(a, a);
    const DoubleDouble root = dd_sqrt(dd_add(a2, {-1.0, 0.0}));
    const DoubleDouble r = dd_add({a, 0.0}, {-root.hi, -root.lo});
    return dd_pow(r, n).hi;
}

double pow2(int s) { return std::ldexp(1.0, s); }

void expect_params(const std::string& name, const std::vector<double>& params,
                   std::size_t arity) {
    if (params.size() != arity)
        throw registry_error("registry function '" + name + "' takes " +
                             std::to_string(arity) + " parameter(s), got " +
                             std::to_string(params.size()));
}

Complex horner(const std::vector<double>& mono, Complex z) {
    Complex v = 0.0;
    for (auto it = mono.rbegin(); it != mono.rend(); ++it)
        v = v * z + *it;
    return v;
}

AnalyticFn make_exp() {
    AnalyticFn fn;
    fn.name = "exp";
    fn.eval = [](Complex z) { return std::exp(z); };
    fn.radius_rule = EntireRadius{0.5, 1.0, -0.5};
    fn.coeff_oracle = [](int n) { return 2.0 * bessel_i(n, 1.0); };
    fn.deriv_oracle = [](int, double x) { return std::exp(x); };
    return fn;
}

AnalyticFn make_cos_affine(double c, double d) {
    AnalyticFn fn;
    fn.name = "cos_affine";
    fn.eval = [c, d](Complex z) { return std::cos(c * z + d); };
    fn.radius_rule = EntireRadius{0.5 * c, 1.0, -0.5};
    fn.coeff_oracle = [c, d](int n) { return 2.0 * quadrant_cos(d, n) * bessel_j(n, c); };
    fn.deriv_oracle = [c, d](int s, double x) {
        return std::pow(c, s) * quadrant_cos(c * x + d, s);
    };
    return fn;
}

AnalyticFn make_pole(double a) {
    if (!(a > 1.0))
        throw registry_error("pole: parameter a must exceed 1");
    AnalyticFn fn;
    fn.name = "pole";
    fn.eval = [a](Complex z) { return 1.0 / (z - a); };
    const double root = std::sqrt(a * a - 1.0);
    fn.rho_max = a + root;
    fn.radius_rule = PoleRadius{a + root};
    fn.node_class = NodeClass::PoleLike;
    fn.coeff_oracle = [a, root](int n) {
        return -(2.0 / root) * pole_decay_power(a, n);
    };
    fn.deriv_oracle = [a](int s, double x) {
        const double sign = (s % 2 == 0) ? 1.0 : -1.0;
        return sign * factorial(s) * std::pow(x - a, -(s + 1));
    };
    return fn;
}

// (x+1)/(x^2 + b^2) with poles at +- i b; residue at i b is (ib + 1)/(2ib).
AnalyticFn make_rational(const std::string& name, double b) {
    AnalyticFn fn;
    fn.name = name;
    const double b2 = b * b;
    fn.eval = [b2](Complex z) { return (z + 1.0) / (z * z + b2); };
    const Complex pole(0.0, b);
    fn.rho_max = std::abs(inverse_joukowski(pole));
    fn.radius_rule = PoleRadius{fn.rho_max};
    fn.node_class = NodeClass::PoleLike;
    const Complex residue = (pole + 1.0) / (2.0 * pole);
    fn.deriv_oracle = [residue, pole](int s, double x) {
        const double sign = (s % 2 == 0) ? 1.0 : -1.0;
        return 2.0 * (residue * sign * factorial(s) *
                      std::pow(x - pole, -(s + 1)))
                         .real();
    };
    return fn;
}

AnalyticFn make_branch(double c, double phi) {
    if (!(c > 1.0))
        throw registry_error("branch: parameter c must exceed 1");
    if (!(phi > 0.0))
        throw registry_error("branch: exponent phi must be positive");
    AnalyticFn fn;
    fn.name = "branch";
    // Principal branch of (c - z)^phi, cut along [c, inf) on the real axis.
    fn.eval = [c, phi](Complex z) { return std::exp(phi * std::log(c - z)); };
    fn.rho_max = c + std::sqrt(c * c - 1.0);
    fn.radius_rule = BranchLimitRadius{fn.rho_max};
    fn.node_class = NodeClass::PoleLike;
    fn.deriv_oracle = [c, phi](int s, double x) {
        double fall = 1.0;
        for (int i = 0; i < s; ++i)
            fall *= phi - i;
        const double sign = (s % 2 == 0) ? 1.0 : -1.0;
        return sign * fall * std::pow(c - x, phi - s);
    };
    return fn;
}

AnalyticFn make_exp2cos() {
    AnalyticFn fn;
    fn.name = "exp2cos";
    fn.eval = [](Complex z) { return std::exp(2.0 * z) + std::cos(2.0 * z + 3.0); };
    fn.radius_rule = EntireRadius{1.0, 1.0, -0.5};
    fn.deriv_oracle = [](int s, double x) {
        return pow2(s) * (std::exp(2.0 * x) + quadrant_cos(2.0 * x + 3.0, s));
    };
    return fn;
}

AnalyticFn make_poly(const std::vector<double>& mono) {
    if (mono.empty())
        throw registry_error("poly: at least one coefficient is required");
    AnalyticFn fn;
    fn.name = "poly";
    fn.eval = [mono](Complex z) { return horner(mono, z); };
    fn.radius_rule = AutoRadius{};
    ChebSeries cheb = chebyshev_from_monomial(mono);
    fn.coeff_oracle = [cheb](int n) {
        return n < static_cast<int>(cheb.coeffs.size()) ? cheb.coeffs[n] : 0.0;
    };
    fn.deriv_oracle = [mono](int s, double x) {
        std::vector<double> d = mono;
        for (int pass = 0; pass < s; ++pass) {
            for (std::size_t j = 1; j < d.size(); ++j)
                d[j - 1] = static_cast<double>(j) * d[j];
            d.pop_back();
            if (d.empty())
                return 0.0;
        }
        double v = 0.0;
        for (auto it = d.rbegin(); it != d.rend(); ++it)
            v = v * x + *it;
        return v;
    };
    return fn;
}

} // namespace

AnalyticFn registry_lookup(const std::string& name, const std::vector<double>& params) {
    if (name == "exp") {
        expect_params(name, params, 0);
        return make_exp();
    }
    if (name == "cos" || name == "cos_affine") {
        if (params.empty())
            return make_cos_affine(1.0, 0.0);
        expect_params(name, params, 2);
        if (!(params[0] > 0.0))
            throw registry_error("cos_affine: frequency c must be positive");
        return make_cos_affine(params[0], params[1]);
    }
    if (name == "pole") {
        expect_params(name, params, 1);
        return make_pole(params[0]);
    }
    if (name == "rational_runge") {
        expect_params(name, params, 0);
        return make_rational(name, 1.0);
    }
    if (name == "rational4") {
        expect_params(name, params, 0);
        return make_rational(name, 2.0);
    }
    if (name == "branch") {
        expect_params(name, params, 2);
        return make_branch(params[0], params[1]);
    }
    if (name == "exp2cos") {
        expect_params(name, params, 0);
        return make_exp2cos();
    }
    if (name == "poly")
        return make_poly(params);
    throw registry_error("unknown registry function '" + name +
                         "'; known names: exp, cos, cos_affine, pole, "
                         "rational_runge, rational4, branch, exp2cos, poly");
}

double exact_coeff(const AnalyticFn& fn, int n) {
    if (n < 0)
        throw precondition_error("exact_coeff: index must be non-negative");
    if (!fn.has_coeff_oracle())
        throw no_oracle_error("function '" + fn.name +
                              "' has no exact-coefficient oracle");
    return fn.coeff_oracle(n);
}

ChebSeries chebyshev_from_monomial(const std::vector<double>& monomial) {
    if (monomial.empty())
        throw precondition_error("chebyshev_from_monomial: empty coefficient list");
    // Plain (unhalved) T-basis coefficients, accumulated power by power.
    std::vector<double> acc(monomial.size(), 0.0);
    std::vector<double> power{1.0}; // T-coefficients of x^j
    for (std::size_t j = 0; j < monomial.size(); ++j) {
        if (j > 0) {
            std::vector<double> next(power.size() + 1, 0.0);
            for (std::size_t k = 0; k < power.size(); ++k) {
                next[k + 1] += 0.5 * power[k];
                if (k == 0)
                    next[1] += 0.5 * power[0]; // x T_0 = T_1
                else
                    next[k - 1] += 0.5 * power[k];
            }
            power = std::move(next);
        }
        for (std::size_t k = 0; k < power.size(); ++k)
            acc[k] += monomial[j] * power[k];
    }
    acc[0] *= 2.0; // stored halved-first-term convention
    return ChebSeries{Kind::FirstKind, std::move(acc)};
}

} // namespace cheb
