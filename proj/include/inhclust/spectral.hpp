// spectral.hpp - normalized-Laplacian partitioning of the projected graph
#ifndef INHCLUST_SPECTRAL_HPP
#define INHCLUST_SPECTRAL_HPP

#include <optional>
#include <vector>

#include "inhclust/projection.hpp"

namespace inhclust {

// Normalized Laplacian restricted to the positive-degree vertices.
struct LaplacianSystem {
    int n = 0;                      // active vertex count
    std::vector<double> degree;     // active order
    std::vector<double> lap;        // dense n x n, I - D^-1/2 A D^-1/2
    std::vector<VertexId> active;   // active index -> original id
    std::vector<VertexId> excluded; // zero-degree vertices
};

struct Partition {
    int k = 0;
    std::vector<int> assignment; // per original vertex; -1 for excluded
    double ncut = 0.0;
    std::optional<double> beta_star;
    std::vector<VertexId> excluded;

    std::vector<CutSelection> clusters() const;
};

struct PartitionOptions {
    ProjectionMethod method = ProjectionMethod::Auto;
    bool clip = false;
    bool lp_nonneg = false;
};

LaplacianSystem build_laplacian(const ProjectedGraph& g);

// Second-smallest eigenpair of the normalized Laplacian. The vector is unit
// norm, orthogonal to the trivial direction D^1/2 1, with a deterministic
// sign (first coordinate of significant magnitude is positive).
std::pair<double, std::vector<double>> second_eigenpair(const LaplacianSystem& ls);

// Sorts active vertices by D^-1/2 u (ties by vertex id) and takes the best
// prefix by graph NCut; the smaller side is cluster 0. The reported ncut is
// the graph value.
Partition sweep_cut(const ProjectedGraph& g, const LaplacianSystem& ls,
                    const std::vector<double>& u);

// Full 2-way pipeline: project, merge (clip per options), Laplacian, sweep.
// The reported ncut is the hypergraph value of the returned split.
Partition partition2(const Hypergraph& h, const PartitionOptions& options = {});

// k smallest eigenvectors, row-normalized embedding, k-means++ with 100
// restarts; the restart with the best k-way hypergraph cut wins.
Partition kway_partition(const Hypergraph& h, int k, std::uint64_t seed,
                         const PartitionOptions& options = {});

// NCut of a vertex set measured on the projected graph.
double graph_ncut(const ProjectedGraph& g, const CutSelection& s);

} // namespace inhclust

#endif // INHCLUST_SPECTRAL_HPP
