#include "inhclust/kmeans.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace inhclust {

namespace {

double sq_dist(const double* a, const double* b, int dim) {
    double s = 0.0;
    for (int t = 0; t < dim; ++t) {
        double diff = a[t] - b[t];
        s += diff * diff;
    }
    return s;
}

} // namespace

KMeansResult kmeans(const std::vector<double>& points, int n, int dim, int k,
                    Rng& rng, int max_iter) {
    if (k < 1 || k > n) throw std::invalid_argument("kmeans needs 1 <= k <= n");
    if (points.size() != static_cast<std::size_t>(n) * dim)
        throw std::invalid_argument("point buffer size mismatch");
    auto point = [&](int i) { return points.data() + static_cast<std::size_t>(i) * dim; };

    // k-means++ seeding.
    std::vector<double> centers(static_cast<std::size_t>(k) * dim, 0.0);
    std::vector<char> chosen(n, 0);
    int first = static_cast<int>(rng.uniform_index(n));
    chosen[first] = 1;
    for (int t = 0; t < dim; ++t) centers[t] = point(first)[t];
    std::vector<double> d2(n, 0.0);
    for (int c = 1; c < k; ++c) {
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (int cc = 0; cc < c; ++cc)
                best = std::min(best, sq_dist(point(i), centers.data() +
                                                            static_cast<std::size_t>(cc) * dim,
                                              dim));
            d2[i] = best;
            total += best;
        }
        int pick = -1;
        if (total > 0.0) {
            double target = rng.uniform() * total;
            double run = 0.0;
            for (int i = 0; i < n; ++i) {
                run += d2[i];
                if (run >= target) {
                    pick = i;
                    break;
                }
            }
            if (pick < 0) pick = n - 1;
        } else {
            for (int i = 0; i < n; ++i)
                if (!chosen[i]) {
                    pick = i;
                    break;
                }
            if (pick < 0) pick = 0;
        }
        chosen[pick] = 1;
        for (int t = 0; t < dim; ++t)
            centers[static_cast<std::size_t>(c) * dim + t] = point(pick)[t];
    }

    std::vector<int> assignment(n, -1);
    std::vector<int> counts(k, 0);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool changed = false;
        std::fill(counts.begin(), counts.end(), 0);
        for (int i = 0; i < n; ++i) {
            int best = 0;
            double best_d = sq_dist(point(i), centers.data(), dim);
            for (int c = 1; c < k; ++c) {
                double d = sq_dist(point(i),
                                   centers.data() + static_cast<std::size_t>(c) * dim, dim);
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            if (assignment[i] != best) {
                assignment[i] = best;
                changed = true;
            }
            ++counts[best];
        }
        // Reseed empty clusters from the point farthest from its own center.
        for (int c = 0; c < k; ++c) {
            if (counts[c] > 0) continue;
            int far = -1;
            double far_d = -1.0;
            for (int i = 0; i < n; ++i) {
                if (counts[assignment[i]] <= 1) continue;
                double d = sq_dist(point(i),
                                   centers.data() +
                                       static_cast<std::size_t>(assignment[i]) * dim,
                                   dim);
                if (d > far_d) {
                    far_d = d;
                    far = i;
                }
            }
            if (far < 0) continue;
            --counts[assignment[far]];
            assignment[far] = c;
            ++counts[c];
            for (int t = 0; t < dim; ++t)
                centers[static_cast<std::size_t>(c) * dim + t] = point(far)[t];
            changed = true;
        }
        if (!changed && iter > 0) break;
        std::vector<double> sums(static_cast<std::size_t>(k) * dim, 0.0);
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < dim; ++t)
                sums[static_cast<std::size_t>(assignment[i]) * dim + t] += point(i)[t];
        for (int c = 0; c < k; ++c)
            if (counts[c] > 0)
                for (int t = 0; t < dim; ++t)
                    centers[static_cast<std::size_t>(c) * dim + t] =
                        sums[static_cast<std::size_t>(c) * dim + t] / counts[c];
    }

    KMeansResult res;
    res.assignment = std::move(assignment);
    res.inertia = 0.0;
    for (int i = 0; i < n; ++i)
        res.inertia += sq_dist(point(i),
                               centers.data() +
                                   static_cast<std::size_t>(res.assignment[i]) * dim,
                               dim);
    return res;
}

} // namespace inhclust
