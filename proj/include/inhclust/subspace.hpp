// subspace.hpp - subspace segmentation via inhomogeneous deviations
#ifndef INHCLUST_SUBSPACE_HPP
#define INHCLUST_SUBSPACE_HPP

#include <vector>

#include "inhclust/rng.hpp"
#include "inhclust/spectral.hpp"

namespace inhclust {

struct PointCloud {
    int dim = 0;
    std::vector<std::vector<double>> points;
    std::vector<int> labels; // optional ground truth; empty when absent
};

struct SubspaceConfig {
    int p = 1;            // intrinsic affine dimension
    int psi = 0;          // hyperedge size; 0 means p + 2
    double theta = 0.0;   // scale; 0 means the median of sampled deviations
    int sample_count = 0; // hyperedges to draw
    std::uint64_t seed = 0;
};

// Distance from point v to the best-fit p-dimensional affine subspace of the
// remaining points. A rank-deficient spanning set degrades gracefully to the
// lower-dimensional hull.
double inh_deviation(const std::vector<std::vector<double>>& pts, int v, int p);

struct SubspaceHypergraph {
    Hypergraph hypergraph;
    std::vector<std::vector<VertexId>> samples; // sorted psi-subsets per edge
    std::vector<double> mean_deviation;         // per-edge average deviation
    double theta_used = 0.0;
};

// Uniformly sampled distinct psi-subsets; each becomes a singleton-cost
// hyperedge with w({v}) = exp(-deviation^2 / theta^2).
SubspaceHypergraph build_subspace_hypergraph(const PointCloud& pc,
                                             const SubspaceConfig& cfg);

// k lines through the origin in 3-D with fixed direction tables for
// k = 2, 3, 4; per_line points uniform on the unit segment plus isotropic
// Gaussian noise. Labels are recorded.
PointCloud generate_klines(int k, int per_line, double noise_sigma,
                           std::uint64_t seed);

// Percentage of misclassified points, minimized over label bijections.
double misclassification_rate(const Partition& predicted,
                              const std::vector<int>& truth);

struct SubspaceResult {
    Partition partition;
    double theta_used = 0.0;
    double error_percent = -1.0; // -1 when no ground truth is present
};

// Full pipeline: sampled hypergraph, singleton projection with clipping,
// k-way spectral clustering.
SubspaceResult segment_subspaces(const PointCloud& pc, int k,
                                 const SubspaceConfig& cfg);

} // namespace inhclust

#endif // INHCLUST_SUBSPACE_HPP
