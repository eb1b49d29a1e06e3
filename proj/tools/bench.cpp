// Timing harness comparing the serial reference paths against the OpenMP
// kernels, and verifying that both produce identical bits.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cheb/contour.hpp"
#include "cheb/functions.hpp"
#include "cheb/strategy.hpp"

namespace {

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <typename F>
double time_best_of(F&& f, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = now_seconds();
        f();
        best = std::min(best, now_seconds() - t0);
    }
    return best;
}

double max_abs_diff(const std::vector<cheb::CoeffResult>& a,
                    const std::vector<cheb::CoeffResult>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i].value - b[i].value));
    return worst;
}

void report(const char* kernel, double serial_s, double parallel_s, double diff) {
    std::printf("%-28s %10.1f ms %10.1f ms %7.2fx   max|diff| = %g\n", kernel,
                1e3 * serial_s, 1e3 * parallel_s, serial_s / parallel_s, diff);
}

} // namespace

int main() {
    const int threads = hardware_threads();
    std::printf("threads: %d\n", threads);
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        const cheb::AnalyticFn fn = cheb::registry_lookup("exp");
        const cheb::ContourPlan plan{1.0, 8192};
        std::vector<cheb::CoeffResult> serial, parallel;
        const double ts =
            time_best_of([&] { serial = cheb::batch_coeffs_t(fn, 2000, plan, 1); }, 3);
        const double tp =
            time_best_of([&] { parallel = cheb::batch_coeffs_t(fn, 2000, plan, threads); }, 3);
        report("batch_coeffs_t exp", ts, tp, max_abs_diff(serial, parallel));
    }
    {
        const cheb::AnalyticFn fn = cheb::registry_lookup("pole", {2.0});
        const cheb::ContourPlan plan{1.0, 8192};
        std::vector<cheb::CoeffResult> serial, parallel;
        const double ts =
            time_best_of([&] { serial = cheb::batch_coeffs_u(fn, 2000, plan, 1); }, 3);
        const double tp =
            time_best_of([&] { parallel = cheb::batch_coeffs_u(fn, 2000, plan, threads); }, 3);
        report("batch_coeffs_u pole(2)", ts, tp, max_abs_diff(serial, parallel));
    }
    {
        // per-coefficient optimal-radius sweep with the pole node heuristic
        const cheb::AnalyticFn fn = cheb::registry_lookup("pole", {2.0});
        cheb::SweepConfig cfg;
        cfg.strategy = cheb::Strategy::Optimal;
        cfg.eps = 1e-14;
        std::vector<cheb::CoeffResult> serial, parallel;
        cfg.threads = 1;
        const double ts = time_best_of([&] { serial = cheb::coeff_sweep(fn, 150, cfg); }, 3);
        cfg.threads = threads;
        const double tp = time_best_of([&] { parallel = cheb::coeff_sweep(fn, 150, cfg); }, 3);
        report("optimal sweep pole(2)", ts, tp, max_abs_diff(serial, parallel));
    }
    return 0;
}
