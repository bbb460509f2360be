// projection.hpp - hyperedge-to-subgraph projection and merging
#ifndef INHCLUST_PROJECTION_HPP
#define INHCLUST_PROJECTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "inhclust/hypergraph.hpp"

namespace inhclust {

// Weighted clique on the vertices of one hyperedge, approximating its cut
// cost within a factor beta (nullopt when no certificate is available).
struct EdgeProjection {
    int arity = 0;
    std::vector<double> pair_weights; // arity x arity, symmetric, zero diagonal
    std::optional<double> beta;

    double at(int i, int j) const { return pair_weights[i * arity + j]; }
    void set(int i, int j, double w) {
        pair_weights[i * arity + j] = w;
        pair_weights[j * arity + i] = w;
    }
    int negative_count() const;
    // Crossing-pair weight sum for a subset of positions.
    double cut_value(std::uint64_t mask) const;
};

struct GraphEdge {
    VertexId u, v; // u < v
    double weight;
};

// Merged projection of all hyperedges.
struct ProjectedGraph {
    int n = 0;
    std::vector<GraphEdge> edges;                             // sorted by (u, v)
    std::vector<std::vector<std::pair<VertexId, double>>> adj;
    std::vector<double> degree;
    std::optional<double> beta_star; // voided by clipping or unknown edge betas
    int clipped = 0;                 // entries zeroed by post-merge clipping
    int negative_count = 0;          // negative entries kept (clip = false)
};

enum class ProjectionMethod { Auto, Singleton, Submodular, Lp };

// Perfect projection from singleton costs; beta = 1, entries may be negative.
// Arity-2 edges reduce to the identity projection.
EdgeProjection project_singleton(const Hyperedge& e);

// Fixed linear map for full submodular tables. Guaranteed entrywise
// nonnegative (tiny negatives are clamped); beta certified for arity <= 7
// as 1, 1, 3/2, 2, 4, 6 and unknown above that.
EdgeProjection project_submodular(const Hyperedge& e);

// Exact best approximation by LP; nullopt when the program is infeasible.
std::optional<EdgeProjection> project_lp(const Hyperedge& e, bool require_nonneg);

// Certified beta for the fixed linear map at a given arity (2..7).
std::optional<double> submodular_beta(int arity);

// Picks the route for one hyperedge: SingletonOnly -> singleton form, fully
// specified submodular costs -> fixed linear map, anything else -> LP.
EdgeProjection project_edge(const Hyperedge& e, ProjectionMethod method,
                            bool lp_nonneg = false);

// Sum of per-edge projections (accumulated in hyperedge list order). With
// clip, negative merged entries are zeroed after summation, which voids the
// beta certificate.
ProjectedGraph merge(const Hypergraph& h, const std::vector<EdgeProjection>& projections,
                     bool clip);

// Builds a ProjectedGraph directly from a weighted edge list.
ProjectedGraph graph_from_edges(int n, std::vector<GraphEdge> edges);

struct EdgeReport {
    int index = 0;
    std::string method;
    std::optional<double> beta;
    int negatives = 0;
};

struct ProjectionOutcome {
    ProjectedGraph graph;
    std::vector<EdgeReport> reports;
    std::vector<int> infeasible; // edge indices whose LP had no solution
};

// Projects every hyperedge and merges. Infeasible LP edges are collected
// rather than thrown.
ProjectionOutcome project_all(const Hypergraph& h, ProjectionMethod method, bool clip,
                              bool lp_nonneg = false);

} // namespace inhclust

#endif // INHCLUST_PROJECTION_HPP
