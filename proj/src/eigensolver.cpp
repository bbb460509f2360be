#include "inhclust/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace inhclust {

namespace {

double pythag(double a, double b) {
    double aa = std::fabs(a), ab = std::fabs(b);
    if (aa > ab) {
        double r = ab / aa;
        return aa * std::sqrt(1.0 + r * r);
    }
    if (ab == 0.0) return 0.0;
    double r = aa / ab;
    return ab * std::sqrt(1.0 + r * r);
}

// Householder reduction to tridiagonal form, accumulating the transform in z.
void tridiagonalize(std::vector<double>& z, int n, std::vector<double>& d,
                    std::vector<double>& e) {
    auto at = [&](int i, int j) -> double& { return z[static_cast<std::size_t>(i) * n + j]; };

    for (int i = n - 1; i >= 1; --i) {
        int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::fabs(at(i, k));
            if (scale == 0.0) {
                e[i] = at(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    at(i, k) /= scale;
                    h += at(i, k) * at(i, k);
                }
                double f = at(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                at(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    at(j, i) = at(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
                    for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
                    e[j] = g / h;
                    f += e[j] * at(i, j);
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = at(i, j);
                    double gg = e[j] - hh * f;
                    e[j] = gg;
                    for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + gg * at(i, k);
                }
            }
        } else {
            e[i] = at(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        int l = i - 1;
        if (d[i] != 0.0) {
            for (int j = 0; j <= l; ++j) {
                double g = 0.0;
                for (int k = 0; k <= l; ++k) g += at(i, k) * at(k, j);
                for (int k = 0; k <= l; ++k) at(k, j) -= g * at(k, i);
            }
        }
        d[i] = at(i, i);
        at(i, i) = 1.0;
        for (int j = 0; j <= l; ++j) at(j, i) = at(i, j) = 0.0;
    }
}

// Implicit-shift QL sweeps on the tridiagonal (d, e), rotating z alongside.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, int n,
                 std::vector<double>& z) {
    auto at = [&](int i, int j) -> double& { return z[static_cast<std::size_t>(i) * n + j]; };
    constexpr int kMaxIter = 100; // per eigenvalue; well above typical need

    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd)
                    break;
            }
            if (m != l) {
                if (iter++ == kMaxIter)
                    throw std::runtime_error("eigensolver failed to converge after " +
                                             std::to_string(kMaxIter) +
                                             " QL iterations at index " +
                                             std::to_string(l));
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = pythag(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = pythag(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (int k = 0; k < n; ++k) {
                        f = at(k, i + 1);
                        at(k, i + 1) = s * at(k, i) + c * f;
                        at(k, i) = c * at(k, i) - s * f;
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

} // namespace

std::vector<double> EigenDecomposition::eigenvector(int j) const {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = vectors[static_cast<std::size_t>(i) * n + j];
    return v;
}

EigenDecomposition eigen_symmetric(std::vector<double> matrix, int n) {
    if (n <= 0) throw std::invalid_argument("matrix dimension must be positive");
    if (matrix.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("matrix size does not match dimension");

    EigenDecomposition out;
    out.n = n;
    if (n == 1) {
        out.values = {matrix[0]};
        out.vectors = {1.0};
        return out;
    }

    std::vector<double> d(n, 0.0), e(n, 0.0);
    tridiagonalize(matrix, n, d, e);
    ql_implicit(d, e, n, matrix);

    // Ascending eigenvalues with the column permutation applied.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return d[a] < d[b]; });
    out.values.resize(n);
    out.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        out.values[j] = d[order[j]];
        for (int i = 0; i < n; ++i)
            out.vectors[static_cast<std::size_t>(i) * n + j] =
                matrix[static_cast<std::size_t>(i) * n + order[j]];
    }
    return out;
}

} // namespace inhclust
