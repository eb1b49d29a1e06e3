#pragma once

#include <vector>

#include "cheb/conditioning.hpp"
#include "cheb/contour.hpp"

namespace cheb {

enum class Strategy { Fixed, Optimal, Auto };

struct SweepConfig {
    Strategy strategy = Strategy::Fixed;
    Kind kind = Kind::FirstKind;
    double rho = 1.0;   // Fixed-strategy contour
    int m = 0;          // 0 = use the node-count heuristic (Optimal/Auto only)
    double eps = 1e-14; // accuracy target feeding the node heuristic
    double auto_tol = 1e-3;
    int threads = 1;
};

// Coefficients n = 0..N under the chosen strategy. Fixed shares a single
// contour and sample vector (batch transform); Optimal and Auto give every
// coefficient its own radius, Optimal from the function's radius rule and
// Auto from the numeric minimizer. Where the configured node count is too
// small for a coefficient, m is raised to n+1 (first kind; n+3 for second)
// so the sampling condition always holds. Results are deterministic and
// independent of the thread count.
std::vector<CoeffResult> coeff_sweep(const AnalyticFn& fn, int N, const SweepConfig& cfg);

// Real parts of sweep results as a series of the given kind.
ChebSeries to_series(const std::vector<CoeffResult>& coeffs, Kind kind);

} // namespace cheb
