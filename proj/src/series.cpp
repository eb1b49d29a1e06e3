#include "cheb/series.hpp"

#include <cmath>
#include <utility>

namespace cheb {

namespace {

void check_valid(const ChebSeries& s) {
    if (s.coeffs.empty())
        throw precondition_error("series has an empty coefficient vector");
    for (double c : s.coeffs)
        if (!std::isfinite(c))
            throw precondition_error("series has a non-finite coefficient");
}

void check_first_kind(const ChebSeries& s, const char* op) {
    if (s.kind != Kind::FirstKind)
        throw precondition_error(std::string(op) + " expects a first-kind series");
}

template <typename X>
X clenshaw(const ChebSeries& series, X x) {
    const auto& c = series.coeffs;
    const int n = static_cast<int>(c.size()) - 1;
    if (series.kind == Kind::FirstKind) {
        X y1{}, y2{};
        for (int k = n; k >= 1; --k) {
            X y = 2.0 * x * y1 - y2 + c[k];
            y2 = y1;
            y1 = y;
        }
        return x * y1 - y2 + 0.5 * c[0];
    }
    X y1{}, y2{};
    for (int k = n; k >= 0; --k) {
        X y = 2.0 * x * y1 - y2 + c[k];
        y2 = y1;
        y1 = y;
    }
    return y1;
}

} // namespace

double eval_series(const ChebSeries& series, double x) {
    check_valid(series);
    return clenshaw(series, x);
}

std::complex<double> eval_series(const ChebSeries& series, std::complex<double> x) {
    check_valid(series);
    return clenshaw(series, x);
}

std::complex<double> joukowski(std::complex<double> u) {
    if (u == std::complex<double>(0.0, 0.0))
        throw precondition_error("joukowski map is undefined at u = 0");
    return 0.5 * (u + 1.0 / u);
}

std::complex<double> inverse_joukowski(std::complex<double> z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw precondition_error("inverse_joukowski requires a finite argument");
    const std::complex<double> w = std::sqrt(z * z - 1.0);
    // Of the two preimages z +- w, exactly one has modulus >= 1; picking the
    // larger also avoids the cancellation-prone branch.
    const std::complex<double> u = z + w;
    if (std::abs(u) < 1.0)
        return z - w;
    return u;
}

ChebSeries t_to_u(const ChebSeries& series) {
    check_valid(series);
    check_first_kind(series, "t_to_u");
    const auto& a = series.coeffs;
    const std::size_t n = a.size();
    ChebSeries out{Kind::SecondKind, std::vector<double>(n, 0.0)};
    for (std::size_t k = 0; k < n; ++k) {
        const double high = (k + 2 < n) ? a[k + 2] : 0.0;
        out.coeffs[k] = 0.5 * (a[k] - high);
    }
    return out;
}

ChebSeries differentiate(const ChebSeries& series, int s) {
    check_valid(series);
    check_first_kind(series, "differentiate");
    if (s < 0)
        throw precondition_error("derivative order must be non-negative");
    const int n = series.degree();
    if (s == 0)
        return series;
    if (s > n)
        return ChebSeries{Kind::FirstKind, {0.0}};

    std::vector<double> prev = series.coeffs; // a^(sigma-1)
    std::vector<double> cur;
    for (int sigma = 1; sigma <= s; ++sigma) {
        const int deg = n - sigma;
        cur.assign(static_cast<std::size_t>(deg) + 1, 0.0);
        // a_{k-1} = a_{k+1} + 2k a_k^(sigma-1), k = deg+1 .. 1,
        // entries above the new degree being zero.
        for (int k = deg + 1; k >= 1; --k) {
            const double above = (k + 1 <= deg) ? cur[k + 1] : 0.0;
            cur[k - 1] = above + 2.0 * k * prev[k];
        }
        prev = std::move(cur);
    }
    return ChebSeries{Kind::FirstKind, std::move(prev)};
}

} // namespace cheb
