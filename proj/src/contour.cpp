#include "cheb/contour.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cheb/errors.hpp"

namespace cheb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// w[k] = e^{-2 pi i k / m}; node angles and DFT twiddles both come from this
// table so the per-coefficient and batch paths see identical values.
std::vector<Complex> twiddles(int m) {
    std::vector<Complex> w(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
        w[static_cast<std::size_t>(k)] = std::polar(1.0, -(kTwoPi * k) / m);
    return w;
}

// Compensated sum of samples[j] * w[(j n) mod m], ascending j. Kahan on the
// real and imaginary parts keeps the accumulation error at a few ulps even
// for the 2e4-node plans the pole heuristic asks for.
Complex dft_bin(const std::vector<Complex>& samples, const std::vector<Complex>& w, int n) {
    const int m = static_cast<int>(samples.size());
    double sum_re = 0.0, sum_im = 0.0, comp_re = 0.0, comp_im = 0.0;
    int idx = 0;
    for (int j = 0; j < m; ++j) {
        const Complex t = samples[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(idx)];
        double y = t.real() - comp_re;
        double s = sum_re + y;
        comp_re = (s - sum_re) - y;
        sum_re = s;
        y = t.imag() - comp_im;
        s = sum_im + y;
        comp_im = (s - sum_im) - y;
        sum_im = s;
        idx += n;
        if (idx >= m)
            idx -= m;
    }
    return {sum_re, sum_im};
}

void check_plan(const AnalyticFn& fn, const ContourPlan& plan) {
    if (plan.m < 1)
        throw precondition_error("contour plan requires at least one node");
    if (!(plan.rho >= 1.0))
        throw precondition_error("contour plan requires rho >= 1");
    if (!(plan.rho < fn.rho_max))
        throw analyticity_error("rho = " + std::to_string(plan.rho) +
                                " reaches the singularity of '" + fn.name +
                                "' (rho_max = " + std::to_string(fn.rho_max) + ")");
}

void check_sampling(int n, int m, int slack, const char* op) {
    if (n < 0)
        throw precondition_error(std::string(op) + ": coefficient index must be non-negative");
    if (m <= n + slack)
        throw precondition_error(std::string(op) + ": sampling condition m > n" +
                                 (slack ? " + " + std::to_string(slack) : std::string()) +
                                 " violated (n = " + std::to_string(n) +
                                 ", m = " + std::to_string(m) + ")");
}

std::vector<Complex> sample_function(const AnalyticFn& fn, const ContourPlan& plan,
                                     const std::vector<Complex>& w, int threads) {
    const int m = plan.m;
    // Semiaxis form: every node lies on one consistent ellipse, so the only
    // per-node rounding is the one multiplication per component. The naive
    // (rho u + u^-1/rho)/2 form jitters each node by a few more ulps, which
    // matters when the contour passes close to a singularity.
    const double half_sum = 0.5 * (plan.rho + 1.0 / plan.rho);
    const double half_diff = 0.5 * (plan.rho - 1.0 / plan.rho);
    std::vector<Complex> g(static_cast<std::size_t>(m));
    std::exception_ptr failure;

#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1)
#endif
    for (int j = 0; j < m; ++j) {
        try {
            const Complex wj = w[static_cast<std::size_t>(j)];
            const Complex z(half_sum * wj.real(), -half_diff * wj.imag());
            const Complex v = fn.eval(z);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw evaluation_error("function '" + fn.name +
                                       "' is non-finite at node j = " + std::to_string(j) +
                                       ", z = (" + std::to_string(z.real()) + ", " +
                                       std::to_string(z.imag()) + ")");
            g[static_cast<std::size_t>(j)] = v;
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(cheb_sample_failure)
#endif
            {
                if (!failure)
                    failure = std::current_exception();
            }
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return g;
}

double rho_power(double rho, int n) {
    const double p = std::pow(rho, static_cast<double>(n));
    if (!std::isfinite(p))
        throw evaluation_error("rho^n overflows for rho = " + std::to_string(rho) +
                               ", n = " + std::to_string(n));
    return p;
}

CoeffResult make_result(int n, Complex value, const ContourPlan& plan) {
    const double diag = std::abs(value.imag()) / std::max(1.0, std::abs(value.real()));
    return CoeffResult{n, value, plan, diag};
}

// Second-kind weight, identical expression in the per-coefficient and batch
// paths: 1 - rho^{-2} e^{-4 pi i j / m} = 1 - rho^{-2} w[(2j) mod m].
std::vector<Complex> weighted_samples(const std::vector<Complex>& g,
                                      const std::vector<Complex>& w, double rho) {
    const int m = static_cast<int>(g.size());
    const double inv_rho2 = 1.0 / (rho * rho);
    std::vector<Complex> gw(static_cast<std::size_t>(m));
    int idx = 0;
    for (int j = 0; j < m; ++j) {
        gw[static_cast<std::size_t>(j)] =
            g[static_cast<std::size_t>(j)] * (1.0 - inv_rho2 * w[static_cast<std::size_t>(idx)]);
        idx += 2;
        if (idx >= m)
            idx -= m;
    }
    return gw;
}

} // namespace

Complex ellipse_point(double rho, double theta) {
    if (!(rho != 0.0) || !std::isfinite(rho))
        throw precondition_error("ellipse_point requires a finite nonzero rho");
    const double half_sum = 0.5 * (rho + 1.0 / rho);
    const double half_diff = 0.5 * (rho - 1.0 / rho);
    return {half_sum * std::cos(theta), half_diff * std::sin(theta)};
}

std::vector<Complex> contour_nodes(const ContourPlan& plan) {
    if (plan.m < 1)
        throw precondition_error("contour plan requires at least one node");
    const auto w = twiddles(plan.m);
    std::vector<Complex> z(static_cast<std::size_t>(plan.m));
    const double half_sum = 0.5 * (plan.rho + 1.0 / plan.rho);
    const double half_diff = 0.5 * (plan.rho - 1.0 / plan.rho);
    for (int j = 0; j < plan.m; ++j) {
        const Complex wj = w[static_cast<std::size_t>(j)];
        z[static_cast<std::size_t>(j)] =
            Complex(half_sum * wj.real(), -half_diff * wj.imag());
    }
    return z;
}

CoeffResult coeff_t(const AnalyticFn& fn, int n, const ContourPlan& plan) {
    check_plan(fn, plan);
    check_sampling(n, plan.m, 0, "coeff_t");
    const auto w = twiddles(plan.m);
    const auto g = sample_function(fn, plan, w, 1);
    const double scale = 2.0 / (plan.m * rho_power(plan.rho, n));
    return make_result(n, scale * dft_bin(g, w, n), plan);
}

CoeffResult coeff_u(const AnalyticFn& fn, int n, const ContourPlan& plan) {
    check_plan(fn, plan);
    check_sampling(n, plan.m, 2, "coeff_u");
    const auto w = twiddles(plan.m);
    const auto g = sample_function(fn, plan, w, 1);
    const auto gw = weighted_samples(g, w, plan.rho);
    const double scale = 1.0 / (plan.m * rho_power(plan.rho, n));
    return make_result(n, scale * dft_bin(gw, w, n), plan);
}

std::vector<CoeffResult> batch_coeffs_t(const AnalyticFn& fn, int N,
                                        const ContourPlan& plan, int threads) {
    check_plan(fn, plan);
    check_sampling(N, plan.m, 0, "batch_coeffs_t");
    const auto w = twiddles(plan.m);
    const auto g = sample_function(fn, plan, w, threads);
    std::vector<double> scale(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        scale[static_cast<std::size_t>(n)] = 2.0 / (plan.m * rho_power(plan.rho, n));
    std::vector<CoeffResult> out(static_cast<std::size_t>(N) + 1);

#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1)
#endif
    for (int n = 0; n <= N; ++n)
        out[static_cast<std::size_t>(n)] =
            make_result(n, scale[static_cast<std::size_t>(n)] * dft_bin(g, w, n), plan);
    return out;
}

std::vector<CoeffResult> batch_coeffs_u(const AnalyticFn& fn, int N,
                                        const ContourPlan& plan, int threads) {
    check_plan(fn, plan);
    check_sampling(N, plan.m, 2, "batch_coeffs_u");
    const auto w = twiddles(plan.m);
    const auto g = sample_function(fn, plan, w, threads);
    const auto gw = weighted_samples(g, w, plan.rho);
    std::vector<double> scale(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        scale[static_cast<std::size_t>(n)] = 1.0 / (plan.m * rho_power(plan.rho, n));
    std::vector<CoeffResult> out(static_cast<std::size_t>(N) + 1);

#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1)
#endif
    for (int n = 0; n <= N; ++n)
        out[static_cast<std::size_t>(n)] =
            make_result(n, scale[static_cast<std::size_t>(n)] * dft_bin(gw, w, n), plan);
    return out;
}

} // namespace cheb
