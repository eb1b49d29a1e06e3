#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "cheb/eigensolver.hpp"
#include "cheb/series.hpp"
#include "cheb/strategy.hpp"

namespace cheb {

struct RootOptions {
    double imag_tol = 1e-8;     // accept eigenvalues with |Im| up to this
    double interval_tol = 1e-8; // accept Re in [-1 - tol, 1 + tol]
    double trim_rel = 1e-13;    // trailing-coefficient trim threshold, relative to max|c|
};

struct RootSet {
    std::vector<double> roots;     // ascending
    std::vector<double> residuals; // |p(root)| per root
    int discarded = 0;             // eigenvalues rejected as complex or out of interval
    bool everywhere_zero = false;  // the series was identically zero
};

// Colleague matrix of a first-kind series. Exact trailing zero coefficients
// are dropped first; the remaining degree must be at least 1. The halved
// leading coefficient is unfolded, so the matrix is built from the plain
// series c_0 + sum c_k T_k with c_0 = stored[0]/2.
DenseMatrix build_colleague(const ChebSeries& series);

std::vector<std::complex<double>> eigen_roots(const DenseMatrix& matrix);

// Real roots of a first-kind series in [-1, 1] (within the tolerances):
// relative trailing trim, colleague matrix, eigenvalue filter, sort.
RootSet roots_in_interval(const ChebSeries& series, const RootOptions& opts = {});

enum class RootStrategy { OptimalRadius, FixedRho };

// Roots of the s-th derivative of fn on [-1, 1]: coefficients a_0..a_N by the
// chosen strategy, s applications of the derivative recurrence, then
// roots_in_interval. s = 0 finds the roots of fn itself.
RootSet roots_of_derivative(const AnalyticFn& fn, int s, int N, RootStrategy strategy,
                            double fixed_rho = 1.0, int threads = 1,
                            const RootOptions& opts = {});

// Sign-change scan plus bisection on [lo, hi]; simple roots only. Used by the
// CLI to report oracle errors next to colleague-matrix roots.
std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi,
                               int grid = 4096, double tol = 1e-15);

} // namespace cheb
