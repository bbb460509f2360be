// hypergraph.hpp - hypergraph data model and set-volume / cut quantities
#ifndef INHCLUST_HYPERGRAPH_HPP
#define INHCLUST_HYPERGRAPH_HPP

#include <vector>

#include "inhclust/common.hpp"
#include "inhclust/cost.hpp"

namespace inhclust {

struct Hyperedge {
    std::vector<VertexId> vertices; // distinct, position order defines the cost's indices
    CutCost cost;
};

// A canonical (sorted, deduplicated) vertex subset: one side of a cut.
struct CutSelection {
    std::vector<VertexId> vertices;

    static CutSelection of(std::vector<VertexId> v);
    bool contains(VertexId v) const;
    std::size_t size() const { return vertices.size(); }
};

class Hypergraph {
public:
    Hypergraph(int vertex_count, std::vector<Hyperedge> edges);

    int vertex_count() const { return n_; }
    const std::vector<Hyperedge>& edges() const { return edges_; }
    const std::vector<int>& incident_edges(VertexId v) const;

    // d_v = sum of w_e({v}) over incident hyperedges.
    double degree(VertexId v) const;
    // vol(S) = sum of degrees over S.
    double volume(const CutSelection& s) const;
    // vol(boundary S) = sum over hyperedges of w_e(e intersect S).
    double boundary_volume(const CutSelection& s) const;
    // Normalized cut of a nondegenerate 2-way split.
    double ncut(const CutSelection& s) const;
    // k-way normalized cut: sum of boundary/volume per part. Parts must be
    // disjoint, cover every positive-degree vertex, and each have positive
    // volume.
    double kway_ncut(const std::vector<CutSelection>& parts) const;
    // boundary / min side volume; at least half the normalized cut.
    double conductance(const CutSelection& s) const;

    CutSelection complement(const CutSelection& s) const;
    double total_volume() const;

    // Mask of e intersect S over the edge's positions.
    std::uint64_t edge_intersection_mask(int edge_index, const CutSelection& s) const;

private:
    int n_;
    std::vector<Hyperedge> edges_;
    std::vector<std::vector<int>> incident_;
};

} // namespace inhclust

#endif // INHCLUST_HYPERGRAPH_HPP
