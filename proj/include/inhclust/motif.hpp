// motif.hpp - fan-motif hypergraphs over directed graphs and hierarchical cuts
#ifndef INHCLUST_MOTIF_HPP
#define INHCLUST_MOTIF_HPP

#include <array>
#include <unordered_set>
#include <vector>

#include "inhclust/spectral.hpp"

namespace inhclust {

class DiGraph {
public:
    // Self-loops are dropped and duplicate edges collapsed.
    DiGraph(int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges);

    int vertex_count() const { return n_; }
    bool has_edge(VertexId u, VertexId v) const;
    const std::vector<VertexId>& out_neighbors(VertexId u) const { return out_[u]; }
    std::size_t edge_count() const { return keys_.size(); }

    DiGraph induced(const std::vector<VertexId>& vertices,
                    std::vector<VertexId>* local_to_global) const;
    DiGraph reversed() const;

private:
    int n_;
    std::vector<std::vector<VertexId>> out_; // sorted
    std::unordered_set<std::uint64_t> keys_;
};

// Two sources {v1 < v2} both pointing at two sinks {v3 < v4}.
struct FanMotif {
    std::array<VertexId, 4> vertices; // v1, v2, v3, v4
};

struct MotifCostSpec {
    double singleton = 1.0;
    double same_layer_pair = 0.0; // w({v1,v2}) = w({v3,v4})
    double cross_layer_pair = 2.0;
};

struct MotifOptions {
    // Quadruples with any sink-to-source edge are skipped by default; relax
    // to allow bidirectional cross pairs.
    bool exclude_reverse_cross = true;
    ProjectionMethod method = ProjectionMethod::Lp;
    bool lp_nonneg = true;
};

// All quadruples with the four cross edges present (and, unless relaxed, no
// reverse cross edge). Edges inside the source pair or the sink pair are
// unrestricted. Deduplicated by vertex set; output sorted.
std::vector<FanMotif> enumerate_fan_motifs(const DiGraph& g,
                                           bool exclude_reverse_cross = true);

struct MotifHypergraph {
    Hypergraph hypergraph;
    std::vector<FanMotif> motifs;
    std::vector<VertexId> uncovered; // vertices in no motif
};

MotifHypergraph build_motif_hypergraph(const DiGraph& g, const MotifCostSpec& spec,
                                       bool exclude_reverse_cross = true);

struct ClusterNode {
    std::vector<VertexId> cluster;   // vertices at this node (original ids)
    std::vector<VertexId> uncovered; // motif-free vertices, leaf singletons
    std::vector<ClusterNode> children;
};

// Iterated 2-way partitioning: at every node the motifs are re-enumerated in
// the induced subgraph. Recursion stops at max_depth, below
// min_cluster_size, when no motif exists, or when a split makes no progress.
ClusterNode hierarchical_partition(const DiGraph& g, const MotifCostSpec& spec,
                                   int max_depth, int min_cluster_size,
                                   const MotifOptions& options = {});

} // namespace inhclust

#endif // INHCLUST_MOTIF_HPP
