#include "inhclust/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace inhclust {

CutSelection CutSelection::of(std::vector<VertexId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return CutSelection{std::move(v)};
}

bool CutSelection::contains(VertexId v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

Hypergraph::Hypergraph(int vertex_count, std::vector<Hyperedge> edges)
    : n_(vertex_count), edges_(std::move(edges)), incident_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    for (std::size_t idx = 0; idx < edges_.size(); ++idx) {
        const Hyperedge& e = edges_[idx];
        int arity = static_cast<int>(e.vertices.size());
        if (arity < 2 || arity > kMaxArity)
            throw std::invalid_argument("hyperedge " + std::to_string(idx) +
                                        " has invalid arity " + std::to_string(arity));
        if (arity != e.cost.arity())
            throw std::invalid_argument("hyperedge " + std::to_string(idx) +
                                        " arity does not match its cost");
        std::vector<VertexId> sorted = e.vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("hyperedge " + std::to_string(idx) +
                                        " has duplicate vertices");
        for (VertexId v : e.vertices) {
            if (v >= static_cast<VertexId>(n_))
                throw std::invalid_argument("hyperedge " + std::to_string(idx) +
                                            " references vertex " + std::to_string(v) +
                                            " outside [0, n)");
            incident_[v].push_back(static_cast<int>(idx));
        }
    }
}

const std::vector<int>& Hypergraph::incident_edges(VertexId v) const {
    if (v >= static_cast<VertexId>(n_))
        throw std::invalid_argument("vertex id out of range");
    return incident_[v];
}

double Hypergraph::degree(VertexId v) const {
    double d = 0.0;
    for (int idx : incident_edges(v)) {
        const Hyperedge& e = edges_[idx];
        int pos = static_cast<int>(
            std::find(e.vertices.begin(), e.vertices.end(), v) - e.vertices.begin());
        auto w = e.cost.value(std::uint64_t{1} << pos);
        if (!w)
            throw std::runtime_error("hyperedge " + std::to_string(idx) +
                                     " has no singleton cost for vertex " +
                                     std::to_string(v));
        d += *w;
    }
    return d;
}

double Hypergraph::volume(const CutSelection& s) const {
    double vol = 0.0;
    for (VertexId v : s.vertices) vol += degree(v);
    return vol;
}

std::uint64_t Hypergraph::edge_intersection_mask(int edge_index,
                                                 const CutSelection& s) const {
    const Hyperedge& e = edges_[edge_index];
    std::uint64_t mask = 0;
    for (std::size_t pos = 0; pos < e.vertices.size(); ++pos)
        if (s.contains(e.vertices[pos])) mask |= std::uint64_t{1} << pos;
    return mask;
}

double Hypergraph::boundary_volume(const CutSelection& s) const {
    double total = 0.0;
    for (std::size_t idx = 0; idx < edges_.size(); ++idx) {
        std::uint64_t mask = edge_intersection_mask(static_cast<int>(idx), s);
        auto w = edges_[idx].cost.value(mask);
        if (!w)
            throw std::runtime_error("hyperedge " + std::to_string(idx) +
                                     " cost undefined on intersection mask " +
                                     std::to_string(mask));
        total += *w;
    }
    return total;
}

double Hypergraph::ncut(const CutSelection& s) const {
    double vol_s = volume(s);
    double vol_c = total_volume() - vol_s;
    if (vol_s <= 0.0 || vol_c <= 0.0)
        throw std::invalid_argument("degenerate cut: one side has zero volume");
    return boundary_volume(s) * (1.0 / vol_s + 1.0 / vol_c);
}

double Hypergraph::kway_ncut(const std::vector<CutSelection>& parts) const {
    std::vector<std::uint8_t> seen(n_, 0);
    for (const CutSelection& p : parts) {
        for (VertexId v : p.vertices) {
            if (v >= static_cast<VertexId>(n_))
                throw std::invalid_argument("part vertex out of range");
            if (seen[v]) throw std::invalid_argument("parts overlap at vertex " +
                                                     std::to_string(v));
            seen[v] = 1;
        }
    }
    for (int v = 0; v < n_; ++v)
        if (!seen[v] && degree(static_cast<VertexId>(v)) > 0.0)
            throw std::invalid_argument("parts do not cover vertex " + std::to_string(v));

    double total = 0.0;
    for (const CutSelection& p : parts) {
        double vol = volume(p);
        if (vol <= 0.0)
            throw std::invalid_argument("part with zero volume in k-way cut");
        total += boundary_volume(p) / vol;
    }
    return total;
}

double Hypergraph::conductance(const CutSelection& s) const {
    double vol_s = volume(s);
    double vol_c = total_volume() - vol_s;
    if (vol_s <= 0.0 || vol_c <= 0.0)
        throw std::invalid_argument("degenerate cut: one side has zero volume");
    return boundary_volume(s) / std::min(vol_s, vol_c);
}

CutSelection Hypergraph::complement(const CutSelection& s) const {
    std::vector<VertexId> rest;
    rest.reserve(n_ - s.vertices.size());
    for (int v = 0; v < n_; ++v)
        if (!s.contains(static_cast<VertexId>(v))) rest.push_back(static_cast<VertexId>(v));
    return CutSelection{std::move(rest)};
}

double Hypergraph::total_volume() const {
    double vol = 0.0;
    for (int v = 0; v < n_; ++v) vol += degree(static_cast<VertexId>(v));
    return vol;
}

} // namespace inhclust
