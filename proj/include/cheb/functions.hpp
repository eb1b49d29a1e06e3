#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "cheb/radius_rule.hpp"
#include "cheb/series.hpp"

namespace cheb {

using Complex = std::complex<double>;

// An analytic test function: complex evaluation plus the analyticity metadata
// the contour machinery needs. rho_max is the supremum of rho such that the
// function is analytic inside the Bernstein ellipse E_rho. Registry functions
// carry exact-coefficient and exact-derivative oracles where closed forms
// exist; both are optional.
struct AnalyticFn {
    std::string name;
    std::function<Complex(Complex)> eval;
    double rho_max = std::numeric_limits<double>::infinity();
    RadiusRule radius_rule = FixedRadius{1.0};
    NodeClass node_class = NodeClass::EntireLike;
    std::function<double(int)> coeff_oracle;         // exact a_n, or empty
    std::function<double(int, double)> deriv_oracle; // exact f^(s)(x), or empty

    bool has_coeff_oracle() const { return static_cast<bool>(coeff_oracle); }
    bool has_deriv_oracle() const { return static_cast<bool>(deriv_oracle); }
};

// Built-in test functions, looked up by name:
//   exp                      e^x
//   cos | cos_affine [c,d]   cos(c x + d), default c=1, d=0
//   pole a                   1/(x - a), a > 1
//   rational_runge           (x + 1)/(x^2 + 1)
//   rational4                (x + 1)/(x^2 + 4)
//   branch c,phi             (c - x)^phi, c > 1, phi > 0
//   exp2cos                  e^(2x) + cos(2x + 3)
//   poly c0,c1,...           polynomial with monomial coefficients c_j
// Unknown names or invalid parameters raise registry_error.
AnalyticFn registry_lookup(const std::string& name,
                           const std::vector<double>& params = {});

// Exact first-kind coefficient a_n from the function's closed form. Throws
// no_oracle_error when the function carries none; callers must then fall back
// to a high-m self-consistency reference.
double exact_coeff(const AnalyticFn& fn, int n);

// Exact conversion of monomial coefficients (ascending powers) to a stored
// first-kind series via x T_k = (T_{k+1} + T_{|k-1|})/2. Exact in floating
// point for the moderate degrees used here.
ChebSeries chebyshev_from_monomial(const std::vector<double>& monomial);

} // namespace cheb
