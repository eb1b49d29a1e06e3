#include "cheb/strategy.hpp"

#include <algorithm>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cheb/errors.hpp"

namespace cheb {

namespace {

std::vector<CoeffResult> per_coefficient_sweep(const AnalyticFn& fn, int N,
                                               const SweepConfig& cfg) {
    const int slack = cfg.kind == Kind::FirstKind ? 1 : 3;
    std::vector<CoeffResult> out(static_cast<std::size_t>(N) + 1);
    std::exception_ptr failure;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(cfg.threads) if (cfg.threads > 1)
#endif
    for (int n = 0; n <= N; ++n) {
        try {
            const double rho = cfg.strategy == Strategy::Auto
                                   ? radius_auto(fn, n, fn.rho_max, cfg.auto_tol)
                                   : optimal_radius(fn, n);
            const int m = std::max(cfg.m > 0 ? cfg.m : nodes_estimate(n, cfg.eps, fn.node_class),
                                   n + slack);
            const ContourPlan plan{rho, m};
            out[static_cast<std::size_t>(n)] =
                cfg.kind == Kind::FirstKind ? coeff_t(fn, n, plan) : coeff_u(fn, n, plan);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(cheb_sweep_failure)
#endif
            {
                if (!failure)
                    failure = std::current_exception();
            }
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

} // namespace

std::vector<CoeffResult> coeff_sweep(const AnalyticFn& fn, int N, const SweepConfig& cfg) {
    if (N < 0)
        throw precondition_error("coeff_sweep: N must be non-negative");
    if (cfg.strategy == Strategy::Fixed) {
        if (cfg.m <= 0)
            throw precondition_error("fixed strategy requires an explicit node count m");
        const ContourPlan plan{cfg.rho, cfg.m};
        return cfg.kind == Kind::FirstKind ? batch_coeffs_t(fn, N, plan, cfg.threads)
                                           : batch_coeffs_u(fn, N, plan, cfg.threads);
    }
    return per_coefficient_sweep(fn, N, cfg);
}

ChebSeries to_series(const std::vector<CoeffResult>& coeffs, Kind kind) {
    if (coeffs.empty())
        throw precondition_error("to_series: empty coefficient list");
    ChebSeries s{kind, {}};
    s.coeffs.reserve(coeffs.size());
    for (const auto& c : coeffs)
        s.coeffs.push_back(c.value.real());
    return s;
}

} // namespace cheb
