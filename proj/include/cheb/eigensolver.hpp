#pragma once

#include <complex>
#include <vector>

namespace cheb {

// Dense real square matrix, row-major.
struct DenseMatrix {
    int n = 0;
    std::vector<double> a;

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

DenseMatrix make_matrix(int n);

// All eigenvalues of a dense nonsymmetric real matrix: Parlett-Reinsch
// balancing, Householder reduction to upper Hessenberg form, then Francis
// double-shift QR with exceptional shifts. Throws convergence_error with the
// stuck eigenvalue index if a window fails to deflate within the budget of
// 30 sweeps per eigenvalue (30 n overall).
std::vector<std::complex<double>> dense_eigenvalues(DenseMatrix matrix);

} // namespace cheb
