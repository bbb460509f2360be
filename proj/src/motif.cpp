#include "inhclust/motif.hpp"

#include <algorithm>
#include <stdexcept>

#include "inhclust/parallel.hpp"

namespace inhclust {

namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

} // namespace

DiGraph::DiGraph(int vertex_count,
                 const std::vector<std::pair<VertexId, VertexId>>& edges)
    : n_(vertex_count), out_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    for (const auto& [u, v] : edges) {
        if (u >= static_cast<VertexId>(n_) || v >= static_cast<VertexId>(n_))
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) continue;
        if (keys_.insert(edge_key(u, v)).second) out_[u].push_back(v);
    }
    for (auto& nb : out_) std::sort(nb.begin(), nb.end());
}

bool DiGraph::has_edge(VertexId u, VertexId v) const {
    return keys_.count(edge_key(u, v)) > 0;
}

DiGraph DiGraph::induced(const std::vector<VertexId>& vertices,
                         std::vector<VertexId>* local_to_global) const {
    std::vector<int> local(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u : vertices)
        for (VertexId v : out_[u])
            if (local[v] >= 0)
                edges.emplace_back(static_cast<VertexId>(local[u]),
                                   static_cast<VertexId>(local[v]));
    if (local_to_global) *local_to_global = vertices;
    return DiGraph(static_cast<int>(vertices.size()), edges);
}

DiGraph DiGraph::reversed() const {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < static_cast<VertexId>(n_); ++u)
        for (VertexId v : out_[u]) edges.emplace_back(v, u);
    return DiGraph(n_, edges);
}

std::vector<FanMotif> enumerate_fan_motifs(const DiGraph& g,
                                           bool exclude_reverse_cross) {
    int n = g.vertex_count();
    std::vector<std::pair<VertexId, VertexId>> source_pairs;
    for (VertexId a = 0; a + 1 < static_cast<VertexId>(n); ++a)
        for (VertexId b = a + 1; b < static_cast<VertexId>(n); ++b)
            source_pairs.emplace_back(a, b);

    std::vector<std::vector<FanMotif>> found(source_pairs.size());
    parallel_for(source_pairs.size(), [&](std::size_t idx) {
        auto [v1, v2] = source_pairs[idx];
        // Common sinks of the source pair.
        std::vector<VertexId> sinks;
        const auto& n1 = g.out_neighbors(v1);
        const auto& n2 = g.out_neighbors(v2);
        std::set_intersection(n1.begin(), n1.end(), n2.begin(), n2.end(),
                              std::back_inserter(sinks));
        sinks.erase(std::remove_if(sinks.begin(), sinks.end(),
                                   [&](VertexId t) {
                                       if (t == v1 || t == v2) return true;
                                       if (exclude_reverse_cross &&
                                           (g.has_edge(t, v1) || g.has_edge(t, v2)))
                                           return true;
                                       return false;
                                   }),
                    sinks.end());
        for (std::size_t i = 0; i < sinks.size(); ++i)
            for (std::size_t j = i + 1; j < sinks.size(); ++j)
                found[idx].push_back(FanMotif{{v1, v2, sinks[i], sinks[j]}});
    });

    // Concatenate in pair order, deduplicate by vertex set keeping the first
    // role assignment, then sort for a stable output order.
    std::vector<FanMotif> motifs;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& bucket : found) {
        for (const FanMotif& m : bucket) {
            std::array<VertexId, 4> key = m.vertices;
            std::sort(key.begin(), key.end());
            std::uint64_t h = 0;
            for (VertexId v : key) h = h * 1000003ULL + v;
            if (seen.insert(h).second) motifs.push_back(m);
        }
    }
    std::sort(motifs.begin(), motifs.end(), [](const FanMotif& a, const FanMotif& b) {
        return a.vertices < b.vertices;
    });
    return motifs;
}

MotifHypergraph build_motif_hypergraph(const DiGraph& g, const MotifCostSpec& spec,
                                       bool exclude_reverse_cross) {
    if (spec.singleton < 0.0 || spec.same_layer_pair < 0.0 || spec.cross_layer_pair < 0.0)
        throw std::invalid_argument("motif cost values must be nonnegative");
    std::vector<FanMotif> motifs = enumerate_fan_motifs(g, exclude_reverse_cross);

    // delta = 4 table over positions (v1, v2, v3, v4): the source pair and
    // the sink pair form one cut class, the four cross pairs the other two.
    std::vector<std::pair<std::uint64_t, double>> entries;
    for (int v = 0; v < 4; ++v)
        entries.emplace_back(std::uint64_t{1} << v, spec.singleton);
    entries.emplace_back(0b0011, spec.same_layer_pair);
    entries.emplace_back(0b0101, spec.cross_layer_pair);
    entries.emplace_back(0b1001, spec.cross_layer_pair);
    CutCost cost = CutCost::table(4, entries);

    std::vector<Hyperedge> edges;
    edges.reserve(motifs.size());
    std::vector<char> covered(g.vertex_count(), 0);
    for (const FanMotif& m : motifs) {
        edges.push_back(Hyperedge{{m.vertices[0], m.vertices[1], m.vertices[2],
                                   m.vertices[3]},
                                  cost});
        for (VertexId v : m.vertices) covered[v] = 1;
    }
    MotifHypergraph out{Hypergraph(g.vertex_count(), std::move(edges)),
                        std::move(motifs),
                        {}};
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!covered[v]) out.uncovered.push_back(static_cast<VertexId>(v));
    return out;
}

namespace {

ClusterNode partition_node(const DiGraph& g, const std::vector<VertexId>& vertices,
                           const MotifCostSpec& spec, int depth, int max_depth,
                           int min_cluster_size, const MotifOptions& options) {
    ClusterNode node;
    node.cluster = vertices;
    if (depth >= max_depth || static_cast<int>(vertices.size()) < min_cluster_size ||
        vertices.size() < 4)
        return node;

    std::vector<VertexId> to_global;
    DiGraph sub = g.induced(vertices, &to_global);
    MotifHypergraph mh = build_motif_hypergraph(sub, spec,
                                                options.exclude_reverse_cross);
    for (VertexId local : mh.uncovered) node.uncovered.push_back(to_global[local]);
    if (mh.motifs.empty()) {
        node.uncovered = vertices;
        return node;
    }

    PartitionOptions popt;
    popt.method = options.method;
    popt.lp_nonneg = options.lp_nonneg;
    popt.clip = true;
    Partition p = partition2(mh.hypergraph, popt);

    std::vector<VertexId> left, right;
    for (std::size_t v = 0; v < p.assignment.size(); ++v) {
        if (p.assignment[v] == 0) left.push_back(to_global[v]);
        if (p.assignment[v] == 1) right.push_back(to_global[v]);
    }
    // A split that moved nothing cannot refine the tree further.
    if (left.empty() || right.empty()) return node;
    node.children.push_back(partition_node(g, left, spec, depth + 1, max_depth,
                                           min_cluster_size, options));
    node.children.push_back(partition_node(g, right, spec, depth + 1, max_depth,
                                           min_cluster_size, options));
    return node;
}

} // namespace

ClusterNode hierarchical_partition(const DiGraph& g, const MotifCostSpec& spec,
                                   int max_depth, int min_cluster_size,
                                   const MotifOptions& options) {
    if (max_depth < 1) throw std::invalid_argument("max_depth must be at least 1");
    std::vector<VertexId> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = static_cast<VertexId>(v);
    return partition_node(g, all, spec, 0, max_depth, min_cluster_size, options);
}

} // namespace inhclust
