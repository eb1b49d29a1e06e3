#include "cheb/eigensolver.hpp"

#include <cmath>
#include <limits>

#include "cheb/errors.hpp"

namespace cheb {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double sign_like(double magnitude, double sign_source) {
    return sign_source >= 0.0 ? magnitude : -magnitude;
}

// Parlett-Reinsch balancing with radix-2 scaling; a diagonal similarity, so
// the eigenvalues are untouched.
void balance(DenseMatrix& h) {
    const int n = h.n;
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 0; i < n; ++i) {
            double row = 0.0, col = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                col += std::abs(h.at(j, i));
                row += std::abs(h.at(i, j));
            }
            if (col == 0.0 || row == 0.0)
                continue;
            const double total = col + row;
            double factor = 1.0;
            double guard = row / 2.0;
            while (col < guard) {
                factor *= 2.0;
                col *= 4.0;
            }
            guard = row * 2.0;
            while (col > guard) {
                factor /= 2.0;
                col /= 4.0;
            }
            if ((col + row) / factor < 0.95 * total) {
                done = false;
                const double inv = 1.0 / factor;
                for (int j = 0; j < n; ++j)
                    h.at(i, j) *= inv;
                for (int j = 0; j < n; ++j)
                    h.at(j, i) *= factor;
            }
        }
    }
}

// Householder reduction to upper Hessenberg form (similarity; no transform
// accumulation since only eigenvalues are wanted).
void hessenberg(DenseMatrix& h) {
    const int n = h.n;
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n - 2; ++k) {
        double scale = 0.0;
        for (int i = k + 1; i < n; ++i)
            scale += std::abs(h.at(i, k));
        if (scale == 0.0)
            continue;
        double norm2 = 0.0;
        for (int i = k + 1; i < n; ++i) {
            v[static_cast<std::size_t>(i)] = h.at(i, k) / scale;
            norm2 += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
        }
        const double f = v[static_cast<std::size_t>(k + 1)];
        const double g = f >= 0.0 ? -std::sqrt(norm2) : std::sqrt(norm2);
        double denom = norm2 - f * g; // = |v|^2/2 scaled; always positive here
        v[static_cast<std::size_t>(k + 1)] = f - g;

        for (int j = 0; j < n; ++j) { // left: A <- P A
            double s = 0.0;
            for (int i = k + 1; i < n; ++i)
                s += v[static_cast<std::size_t>(i)] * h.at(i, j);
            s /= denom;
            for (int i = k + 1; i < n; ++i)
                h.at(i, j) -= s * v[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i < n; ++i) { // right: A <- A P
            double s = 0.0;
            for (int j = k + 1; j < n; ++j)
                s += h.at(i, j) * v[static_cast<std::size_t>(j)];
            s /= denom;
            for (int j = k + 1; j < n; ++j)
                h.at(i, j) -= s * v[static_cast<std::size_t>(j)];
        }
        h.at(k + 1, k) = scale * g;
        for (int i = k + 2; i < n; ++i)
            h.at(i, k) = 0.0;
    }
}

// Francis double-shift QR on an upper Hessenberg matrix (the classic EISPACK
// hqr scheme, eigenvalues only).
std::vector<std::complex<double>> hqr(DenseMatrix& h) {
    const int n = h.n;
    std::vector<std::complex<double>> eig(static_cast<std::size_t>(n));

    double norm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j)
            norm += std::abs(h.at(i, j));
    if (norm == 0.0)
        return eig; // zero matrix

    int en = n - 1;
    double shift_total = 0.0;
    int budget = 30 * n;
    int its = 0;

    while (en >= 0) {
        // Find the active window [l, en] by scanning for a negligible
        // subdiagonal entry.
        int l = en;
        for (; l >= 1; --l) {
            double s = std::abs(h.at(l - 1, l - 1)) + std::abs(h.at(l, l));
            if (s == 0.0)
                s = norm;
            if (std::abs(h.at(l, l - 1)) <= kEps * s) {
                h.at(l, l - 1) = 0.0;
                break;
            }
        }

        const double x = h.at(en, en);
        if (l == en) { // one real eigenvalue
            eig[static_cast<std::size_t>(en)] = x + shift_total;
            --en;
            its = 0;
            continue;
        }

        const double y = h.at(en - 1, en - 1);
        const double w = h.at(en, en - 1) * h.at(en - 1, en);
        if (l == en - 1) { // a 2x2 block
            double p = 0.5 * (y - x);
            const double q = p * p + w;
            double z = std::sqrt(std::abs(q));
            const double xt = x + shift_total;
            if (q >= 0.0) {
                z = p + sign_like(z, p);
                eig[static_cast<std::size_t>(en - 1)] = xt + z;
                eig[static_cast<std::size_t>(en)] = z != 0.0 ? xt - w / z : xt + z;
            } else {
                eig[static_cast<std::size_t>(en - 1)] = {xt + p, z};
                eig[static_cast<std::size_t>(en)] = {xt + p, -z};
            }
            en -= 2;
            its = 0;
            continue;
        }

        if (its >= 30 || budget <= 0)
            throw convergence_error("QR iteration failed to deflate eigenvalue " +
                                        std::to_string(en) + " within the sweep budget",
                                    en);

        double xs = x, ys = y, ws = w;
        if (its == 10 || its == 20) { // exceptional shift
            shift_total += x;
            for (int i = 0; i <= en; ++i)
                h.at(i, i) -= x;
            const double s = std::abs(h.at(en, en - 1)) + std::abs(h.at(en - 1, en - 2));
            xs = 0.75 * s;
            ys = xs;
            ws = -0.4375 * s * s;
        }
        ++its;
        --budget;

        // Look for two consecutive small subdiagonal elements.
        int m = en - 2;
        double p = 0.0, q = 0.0, r = 0.0;
        for (; m >= l; --m) {
            const double z = h.at(m, m);
            const double rr = xs - z;
            const double ss = ys - z;
            p = (rr * ss - ws) / h.at(m + 1, m) + h.at(m, m + 1);
            q = h.at(m + 1, m + 1) - z - rr - ss;
            r = h.at(m + 2, m + 1);
            const double s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l)
                break;
            const double lhs = std::abs(h.at(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double rhs = std::abs(p) * (std::abs(h.at(m - 1, m - 1)) + std::abs(z) +
                                              std::abs(h.at(m + 1, m + 1)));
            if (lhs <= kEps * rhs)
                break;
        }
        for (int i = m + 2; i <= en; ++i) {
            h.at(i, i - 2) = 0.0;
            if (i > m + 2)
                h.at(i, i - 3) = 0.0;
        }

        // Double QR sweep on rows l..en, columns m..en (bulge chase).
        for (int k = m; k <= en - 1; ++k) {
            const bool not_last = k != en - 1;
            double xnorm = 0.0;
            if (k != m) {
                p = h.at(k, k - 1);
                q = h.at(k + 1, k - 1);
                r = not_last ? h.at(k + 2, k - 1) : 0.0;
                xnorm = std::abs(p) + std::abs(q) + std::abs(r);
                if (xnorm == 0.0)
                    continue;
                p /= xnorm;
                q /= xnorm;
                r /= xnorm;
            }
            const double s = sign_like(std::sqrt(p * p + q * q + r * r), p);
            if (k != m)
                h.at(k, k - 1) = -s * xnorm;
            else if (l != m)
                h.at(k, k - 1) = -h.at(k, k - 1);
            p += s;
            const double xx = p / s;
            const double yy = q / s;
            const double zz = r / s;
            q /= p;
            r /= p;

            for (int j = k; j <= en; ++j) { // row modification
                double pp = h.at(k, j) + q * h.at(k + 1, j);
                if (not_last)
                    pp += r * h.at(k + 2, j);
                h.at(k, j) -= pp * xx;
                h.at(k + 1, j) -= pp * yy;
                if (not_last)
                    h.at(k + 2, j) -= pp * zz;
            }
            const int top = std::min(en, k + 3);
            for (int i = l; i <= top; ++i) { // column modification
                double pp = xx * h.at(i, k) + yy * h.at(i, k + 1);
                if (not_last)
                    pp += zz * h.at(i, k + 2);
                h.at(i, k) -= pp;
                h.at(i, k + 1) -= pp * q;
                if (not_last)
                    h.at(i, k + 2) -= pp * r;
            }
        }
    }
    return eig;
}

} // namespace

DenseMatrix make_matrix(int n) {
    if (n < 1)
        throw precondition_error("make_matrix: order must be positive");
    return DenseMatrix{n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
}

std::vector<std::complex<double>> dense_eigenvalues(DenseMatrix matrix) {
    if (matrix.n < 1 || matrix.a.size() != static_cast<std::size_t>(matrix.n) * matrix.n)
        throw precondition_error("dense_eigenvalues: malformed matrix");
    for (double v : matrix.a)
        if (!std::isfinite(v))
            throw precondition_error("dense_eigenvalues: matrix has non-finite entries");
    if (matrix.n == 1)
        return {std::complex<double>(matrix.at(0, 0), 0.0)};
    balance(matrix);
    hessenberg(matrix);
    return hqr(matrix);
}

} // namespace cheb
