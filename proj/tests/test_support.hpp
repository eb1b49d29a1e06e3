#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "cheb/series.hpp"

// Shared test oracles, independent of the library paths they check.
namespace test_support {

inline std::mt19937_64 make_rng(unsigned seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Direct basis-function evaluation: T_k via cos(k acos x), U_k via the sine
// quotient. Slow and simple on purpose.
inline double naive_eval(const cheb::ChebSeries& s, double x) {
    const double theta = std::acos(std::clamp(x, -1.0, 1.0));
    double sum = 0.0;
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
        double basis;
        if (s.kind == cheb::Kind::FirstKind) {
            basis = std::cos(k * theta);
            if (k == 0)
                basis = 0.5;
        } else {
            const double st = std::sin(theta);
            basis = st != 0.0 ? std::sin((k + 1) * theta) / st
                              : std::pow(x >= 0 ? 1.0 : -1.0, k) * (k + 1);
        }
        sum += s.coeffs[k] * basis;
    }
    return sum;
}

// Recursive subdivision bisection: all simple real roots of f on [lo, hi].
inline std::vector<double> bisect_roots(const std::function<double(double)>& f, double lo,
                                        double hi, int grid = 8192, double tol = 5e-16) {
    std::vector<double> roots;
    double xa = lo;
    double fa = f(xa);
    for (int i = 1; i <= grid; ++i) {
        const double xb = lo + (hi - lo) * i / grid;
        double fb = f(xb);
        if (fa == 0.0)
            roots.push_back(xa);
        else if (fa * fb < 0.0) {
            double a = xa, b = xb, va = fa;
            for (int it = 0; it < 200 && b - a > tol * std::max(1.0, std::abs(a)); ++it) {
                const double mid = 0.5 * (a + b);
                const double vm = f(mid);
                if (vm == 0.0) {
                    a = b = mid;
                    break;
                }
                if (va * vm < 0.0)
                    b = mid;
                else {
                    a = mid;
                    va = vm;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        xa = xb;
        fa = fb;
    }
    if (fa == 0.0)
        roots.push_back(xa);
    return roots;
}

inline double horner(const std::vector<double>& mono, double x) {
    double v = 0.0;
    for (auto it = mono.rbegin(); it != mono.rend(); ++it)
        v = v * x + *it;
    return v;
}

// Greedy multiset match: largest distance between paired entries, or +inf on
// size mismatch.
inline double multiset_distance(std::vector<double> a, std::vector<double> b) {
    if (a.size() != b.size())
        return std::numeric_limits<double>::infinity();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

} // namespace test_support
