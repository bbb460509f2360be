// kmeans.hpp - Lloyd iterations with k-means++ seeding
#ifndef INHCLUST_KMEANS_HPP
#define INHCLUST_KMEANS_HPP

#include <vector>

#include "inhclust/rng.hpp"

namespace inhclust {

struct KMeansResult {
    std::vector<int> assignment;
    double inertia = 0.0;
};

// One seeded run on n points of dimension dim (row-major). Ties in the
// assignment step go to the smallest center index; empty clusters are
// reseeded from the farthest point, so all k clusters end up nonempty for
// k <= n distinct-point configurations.
KMeansResult kmeans(const std::vector<double>& points, int n, int dim, int k,
                    Rng& rng, int max_iter = 100);

} // namespace inhclust

#endif // INHCLUST_KMEANS_HPP
