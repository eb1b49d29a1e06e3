#include "cheb/roots.hpp"

#include <algorithm>
#include <cmath>

#include "cheb/errors.hpp"

namespace cheb {

DenseMatrix build_colleague(const ChebSeries& series) {
    if (series.kind != Kind::FirstKind)
        throw precondition_error("build_colleague expects a first-kind series");
    std::vector<double> c = series.coeffs;
    while (c.size() > 1 && c.back() == 0.0)
        c.pop_back();
    bool all_zero = true;
    for (double v : c)
        if (v != 0.0)
            all_zero = false;
    if (all_zero)
        throw precondition_error("build_colleague: series is identically zero");
    const int n = static_cast<int>(c.size()) - 1;
    if (n < 1)
        throw precondition_error("build_colleague: constant series has no colleague matrix");
    c[0] *= 0.5; // plain-series c_0

    DenseMatrix a = make_matrix(n);
    if (n == 1) {
        // The template's first-row 1 and last-row 1/2 coincide here; the
        // multiplication operator gives the linear root directly.
        a.at(0, 0) = -c[0] / c[1];
        return a;
    }
    a.at(0, 1) = 1.0;
    for (int j = 1; j < n - 1; ++j) {
        a.at(j, j - 1) = 0.5;
        a.at(j, j + 1) = 0.5;
    }
    a.at(n - 1, n - 2) = 0.5;
    const double inv = 1.0 / (2.0 * c[static_cast<std::size_t>(n)]);
    for (int k = 0; k < n; ++k)
        a.at(n - 1, k) -= c[static_cast<std::size_t>(k)] * inv;
    return a;
}

std::vector<std::complex<double>> eigen_roots(const DenseMatrix& matrix) {
    return dense_eigenvalues(matrix);
}

RootSet roots_in_interval(const ChebSeries& series, const RootOptions& opts) {
    if (series.kind != Kind::FirstKind)
        throw precondition_error("roots_in_interval expects a first-kind series");
    if (series.coeffs.empty())
        throw precondition_error("roots_in_interval: empty series");

    double cmax = 0.0;
    for (double v : series.coeffs)
        cmax = std::max(cmax, std::abs(v));
    RootSet out;
    if (cmax == 0.0) {
        out.everywhere_zero = true;
        return out;
    }

    std::vector<double> c = series.coeffs;
    while (c.size() > 1 && std::abs(c.back()) <= opts.trim_rel * cmax)
        c.pop_back();
    if (c.size() == 1)
        return out; // nonzero constant: no roots

    const DenseMatrix a = build_colleague(ChebSeries{Kind::FirstKind, c});
    const auto eig = dense_eigenvalues(a);
    for (const auto& lambda : eig) {
        if (std::abs(lambda.imag()) <= opts.imag_tol &&
            lambda.real() >= -1.0 - opts.interval_tol &&
            lambda.real() <= 1.0 + opts.interval_tol)
            out.roots.push_back(lambda.real());
        else
            ++out.discarded;
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.residuals.reserve(out.roots.size());
    for (double r : out.roots)
        out.residuals.push_back(std::abs(eval_series(series, r)));
    return out;
}

RootSet roots_of_derivative(const AnalyticFn& fn, int s, int N, RootStrategy strategy,
                            double fixed_rho, int threads, const RootOptions& opts) {
    if (s < 0)
        throw precondition_error("roots_of_derivative: order must be non-negative");
    if (s > N)
        throw precondition_error("roots_of_derivative: order exceeds the truncation degree");
    SweepConfig cfg;
    cfg.kind = Kind::FirstKind;
    cfg.threads = threads;
    if (strategy == RootStrategy::OptimalRadius) {
        cfg.strategy = Strategy::Optimal;
        cfg.m = 0;
    } else {
        cfg.strategy = Strategy::Fixed;
        cfg.rho = fixed_rho;
        cfg.m = std::max(2 * N + 2, 100);
    }
    const auto coeffs = coeff_sweep(fn, N, cfg);
    const ChebSeries series = to_series(coeffs, Kind::FirstKind);
    const ChebSeries deriv = differentiate(series, s);
    return roots_in_interval(deriv, opts);
}

std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi,
                               int grid, double tol) {
    if (!(hi > lo) || grid < 2)
        throw precondition_error("scan_roots: bad interval or grid");
    std::vector<double> roots;
    double x0 = lo;
    double f0 = f(x0);
    for (int i = 1; i <= grid; ++i) {
        const double x1 = lo + (hi - lo) * i / grid;
        const double f1 = f(x1);
        if (f0 == 0.0) {
            roots.push_back(x0);
        } else if (f0 * f1 < 0.0) {
            double a = x0, b = x1, fa = f0;
            while (b - a > tol) {
                const double mid = 0.5 * (a + b);
                const double fm = f(mid);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if (fa * fm < 0.0) {
                    b = mid;
                } else {
                    a = mid;
                    fa = fm;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        x0 = x1;
        f0 = f1;
    }
    if (f0 == 0.0)
        roots.push_back(x0);
    return roots;
}

} // namespace cheb
