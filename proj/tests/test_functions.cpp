#include <doctest.h>

#include <cmath>
#include <complex>

#include "cheb/bessel.hpp"
#include "cheb/functions.hpp"
#include "test_support.hpp"

using namespace cheb;
using test_support::make_rng;
using test_support::uniform;

TEST_CASE("bessel_i values") {
    CHECK(bessel_i(0, 0.0) == 1.0);
    CHECK(bessel_i(3, 0.0) == 0.0);
    CHECK(bessel_i(0, 1.0) == doctest::Approx(1.2660658777520084).epsilon(1e-15));
    // first term dominates at order 20: (1/2)^20 / 20!
    const double lead = std::pow(0.5, 20) / 2432902008176640000.0;
    CHECK(bessel_i(20, 1.0) == doctest::Approx(lead).epsilon(2e-3));
    CHECK(bessel_i(20, 1.0) == doctest::Approx(3.9668359858190201e-25).epsilon(1e-13));
}

TEST_CASE("bessel_i domain errors") {
    CHECK_THROWS_AS(bessel_i(-1, 1.0), precondition_error);
    CHECK_THROWS_AS(bessel_i(0, -0.5), precondition_error);
    CHECK_THROWS_AS(bessel_i(0, 50.5), precondition_error);
}

TEST_CASE("bessel_i three-term recurrence") {
    for (double x : {0.5, 1.0, 2.0}) {
        for (int n = 1; n <= 10; ++n) {
            const double lhs = bessel_i(n - 1, x) - bessel_i(n + 1, x);
            const double rhs = (2.0 * n / x) * bessel_i(n, x);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("bessel_j values") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(1, 0.0) == 0.0);
    CHECK(bessel_j(0, 2.0) == doctest::Approx(0.22389077914123567).epsilon(1e-13));
    CHECK(bessel_j(1, 1.0) == doctest::Approx(0.44005058574493355).epsilon(1e-13));
    CHECK(bessel_j(0, -2.0) == doctest::Approx(bessel_j(0, 2.0)));
    CHECK_THROWS_AS(bessel_j(0, 20.5), precondition_error);
    CHECK_THROWS_AS(bessel_j(-2, 1.0), precondition_error);
}

TEST_CASE("registry analyticity metadata") {
    CHECK(registry_lookup("pole", {2.0}).rho_max ==
          doctest::Approx(3.7320508075688772).epsilon(1e-15));
    CHECK(std::isinf(registry_lookup("exp").rho_max));
    CHECK(std::isinf(registry_lookup("exp2cos").rho_max));
    CHECK(std::isinf(registry_lookup("poly", {1.0, 2.0}).rho_max));
    CHECK(registry_lookup("rational_runge").rho_max ==
          doctest::Approx(2.414213562373095).epsilon(1e-14));
    CHECK(registry_lookup("rational4").rho_max ==
          doctest::Approx(4.23606797749979).epsilon(1e-14));
    CHECK(registry_lookup("branch", {2.0, 0.5}).rho_max ==
          doctest::Approx(3.7320508075688772).epsilon(1e-14));

    const AnalyticFn r4 = registry_lookup("rational4");
    CHECK(r4.eval(Complex(0.0, 0.0)).real() == doctest::Approx(0.25));
}

TEST_CASE("registry rejects bad requests") {
    CHECK_THROWS_AS(registry_lookup("nope"), registry_error);
    CHECK_THROWS_AS(registry_lookup("pole", {1.0}), registry_error);
    CHECK_THROWS_AS(registry_lookup("pole", {}), registry_error);
    CHECK_THROWS_AS(registry_lookup("exp", {3.0}), registry_error);
    CHECK_THROWS_AS(registry_lookup("branch", {0.5, 0.5}), registry_error);
    CHECK_THROWS_AS(registry_lookup("poly", {}), registry_error);
}

TEST_CASE("exact_coeff closed forms") {
    const AnalyticFn e = registry_lookup("exp");
    CHECK(exact_coeff(e, 0) == doctest::Approx(2.5321317555040167).epsilon(1e-15));

    const AnalyticFn p = registry_lookup("pole", {2.0});
    CHECK(exact_coeff(p, 1) == doctest::Approx(-0.30940107675850306).epsilon(1e-14));
    CHECK(exact_coeff(p, 10) == doctest::Approx(-2.2028954858185529e-6).epsilon(1e-13));

    const AnalyticFn c = registry_lookup("cos_affine", {2.0, 2.0});
    CHECK(exact_coeff(c, 0) == doctest::Approx(-0.18634287894340031).epsilon(1e-13));
    CHECK(exact_coeff(c, 0) ==
          doctest::Approx(2.0 * std::cos(2.0) * bessel_j(0, 2.0)).epsilon(1e-15));

    // plain cos: odd coefficients are exactly zero
    const AnalyticFn cos1 = registry_lookup("cos");
    CHECK(exact_coeff(cos1, 1) == 0.0);
    CHECK(exact_coeff(cos1, 3) == 0.0);

    CHECK_THROWS_AS(exact_coeff(registry_lookup("rational4"), 0), no_oracle_error);
    CHECK_THROWS_AS(exact_coeff(registry_lookup("exp2cos"), 0), no_oracle_error);
}

TEST_CASE("poly oracle is the exact basis conversion") {
    // T3 = 4x^3 - 3x
    const AnalyticFn t3 = registry_lookup("poly", {0.0, -3.0, 0.0, 4.0});
    CHECK(exact_coeff(t3, 3) == doctest::Approx(1.0));
    CHECK(exact_coeff(t3, 1) == doctest::Approx(0.0));
    CHECK(exact_coeff(t3, 5) == 0.0);

    const ChebSeries conv = chebyshev_from_monomial({1.0});
    REQUIRE(conv.coeffs.size() == 1);
    CHECK(conv.coeffs[0] == 2.0); // stored halved convention
}

TEST_CASE("registry functions are exactly real on the interval") {
    const std::vector<AnalyticFn> fns = {
        registry_lookup("exp"),
        registry_lookup("cos_affine", {2.0, 2.0}),
        registry_lookup("pole", {2.0}),
        registry_lookup("rational_runge"),
        registry_lookup("rational4"),
        registry_lookup("branch", {2.0, 0.5}),
        registry_lookup("exp2cos"),
        registry_lookup("poly", {0.5, -1.0, 0.25}),
    };
    for (const auto& fn : fns) {
        for (int i = 0; i <= 100; ++i) {
            const double x = -1.0 + 0.02 * i;
            CHECK(std::abs(fn.eval(Complex(x, 0.0)).imag()) == 0.0);
        }
    }
}

TEST_CASE("registry functions have Schwarz symmetry") {
    const std::vector<AnalyticFn> fns = {
        registry_lookup("exp"),
        registry_lookup("cos_affine", {2.0, 2.0}),
        registry_lookup("pole", {2.0}),
        registry_lookup("rational_runge"),
        registry_lookup("rational4"),
        registry_lookup("branch", {2.0, 0.5}),
        registry_lookup("exp2cos"),
        registry_lookup("poly", {0.5, -1.0, 0.25}),
    };
    auto rng = make_rng(11);
    for (const auto& fn : fns) {
        for (int i = 0; i < 30; ++i) {
            const Complex z(uniform(rng, -0.9, 0.9), uniform(rng, 0.05, 0.6));
            const Complex a = fn.eval(std::conj(z));
            const Complex b = std::conj(fn.eval(z));
            CHECK(std::abs(a - b) <= 1e-14 * std::max(1.0, std::abs(b)));
        }
    }
}

TEST_CASE("oracle series reproduce the function on the interval") {
    for (const char* name : {"exp", "pole"}) {
        const AnalyticFn fn = name == std::string("pole") ? registry_lookup(name, {2.0})
                                                          : registry_lookup(name);
        ChebSeries s{Kind::FirstKind, {}};
        for (int k = 0; k <= 60; ++k)
            s.coeffs.push_back(exact_coeff(fn, k));
        auto rng = make_rng(5);
        for (int i = 0; i < 50; ++i) {
            const double x = uniform(rng, -1.0, 1.0);
            const double exact = fn.eval(Complex(x, 0.0)).real();
            CHECK(eval_series(s, x) == doctest::Approx(exact).epsilon(1e-12));
        }
    }
}

TEST_CASE("derivative oracles match finite differences") {
    const std::vector<AnalyticFn> fns = {
        registry_lookup("exp"),          registry_lookup("cos_affine", {2.0, 2.0}),
        registry_lookup("pole", {2.0}),  registry_lookup("rational_runge"),
        registry_lookup("rational4"),    registry_lookup("branch", {1.8, 0.7}),
        registry_lookup("exp2cos"),      registry_lookup("poly", {1.0, 0.0, -2.0, 0.5}),
    };
    for (const auto& fn : fns) {
        REQUIRE(fn.has_deriv_oracle());
        for (double x : {-0.7, 0.0, 0.4}) {
            const double h = 1e-5;
            const double central =
                (fn.deriv_oracle(0, x + h) - fn.deriv_oracle(0, x - h)) / (2.0 * h);
            CHECK(fn.deriv_oracle(1, x) == doctest::Approx(central).epsilon(1e-8));
            // f^(0) agrees with eval on the real axis
            CHECK(fn.deriv_oracle(0, x) ==
                  doctest::Approx(fn.eval(Complex(x, 0.0)).real()).epsilon(1e-14));
        }
    }
}
