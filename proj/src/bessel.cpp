#include "cheb/bessel.hpp"

#include <cmath>

#include "cheb/errors.hpp"

namespace cheb {

namespace {
constexpr int kMaxTerms = 500;
}

double bessel_i(int n, double x) {
    if (n < 0)
        throw precondition_error("bessel_i: order must be non-negative");
    if (!(x >= 0.0 && x <= 50.0))
        throw precondition_error("bessel_i: argument must lie in [0, 50]");
    if (x == 0.0)
        return n == 0 ? 1.0 : 0.0;

    const double h = 0.5 * x;
    double term = 1.0;
    for (int k = 1; k <= n; ++k)
        term *= h / k; // (x/2)^n / n!, built factor by factor to stay in range
    double sum = term;
    const double h2 = h * h;
    for (int m = 1; m < kMaxTerms; ++m) {
        term *= h2 / (static_cast<double>(m) * (n + m));
        sum += term;
        if (term < 1e-18 * sum)
            break;
    }
    return sum;
}

double bessel_j(int n, double x) {
    if (n < 0)
        throw precondition_error("bessel_j: order must be non-negative");
    if (!(std::abs(x) <= 20.0))
        throw precondition_error("bessel_j: argument must lie in [-20, 20]");
    if (x == 0.0)
        return n == 0 ? 1.0 : 0.0;

    const double h = 0.5 * x;
    double term = 1.0;
    for (int k = 1; k <= n; ++k)
        term *= h / k;
    // Alternating series; Kahan compensation keeps the summation error at a
    // couple of ulps of the largest partial sum.
    double sum = term;
    double comp = 0.0;
    const double h2 = h * h;
    for (int m = 1; m < kMaxTerms; ++m) {
        term *= -h2 / (static_cast<double>(m) * (n + m));
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (m > std::abs(h) && std::abs(term) < 1e-18 * std::abs(sum))
            break;
    }
    return sum;
}

} // namespace cheb
