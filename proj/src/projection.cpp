#include "inhclust/projection.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "inhclust/minimax.hpp"
#include "inhclust/parallel.hpp"

namespace inhclust {

namespace {

constexpr int kMaxProjectionArity = 20;

void check_projection_arity(int arity) {
    if (arity > kMaxProjectionArity)
        throw std::invalid_argument("projection supports arity <= 20, got " +
                                    std::to_string(arity));
}

// Coefficients of the fixed linear map, by |S| and |{v,v~} cap S|. Generated
// per arity instead of transcribing the expanded per-arity formulas.
struct MapCoefficients {
    // coef[s][r], s = subset size (1..arity-1), r = 0, 1, 2
    std::vector<std::array<double, 3>> coef;
};

const MapCoefficients& map_coefficients(int arity) {
    static std::map<int, MapCoefficients> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(arity);
    if (it != cache.end()) return it->second;

    MapCoefficients mc;
    mc.coef.assign(arity, {0.0, 0.0, 0.0});
    double d = arity;
    for (int s = 1; s <= arity - 1; ++s) {
        double sz = s;
        mc.coef[s][1] = 1.0 / (2.0 * sz * (d - sz));
        if (s <= arity - 2) mc.coef[s][0] = -1.0 / (2.0 * (sz + 1.0) * (d - sz - 1.0));
        if (s >= 2) mc.coef[s][2] = -1.0 / (2.0 * (sz - 1.0) * (d - sz + 1.0));
    }
    return cache.emplace(arity, std::move(mc)).first->second;
}

} // namespace

int EdgeProjection::negative_count() const {
    int count = 0;
    for (int i = 0; i < arity; ++i)
        for (int j = i + 1; j < arity; ++j)
            if (at(i, j) < 0.0) ++count;
    return count;
}

double EdgeProjection::cut_value(std::uint64_t mask) const {
    double total = 0.0;
    for (int i = 0; i < arity; ++i) {
        if (!(mask & (std::uint64_t{1} << i))) continue;
        for (int j = 0; j < arity; ++j) {
            if (mask & (std::uint64_t{1} << j)) continue;
            total += at(i, j);
        }
    }
    return total;
}

std::optional<double> submodular_beta(int arity) {
    switch (arity) {
    case 2:
    case 3: return 1.0;
    case 4: return 1.5;
    case 5: return 2.0;
    case 6: return 4.0;
    case 7: return 6.0;
    default: return std::nullopt;
    }
}

EdgeProjection project_singleton(const Hyperedge& e) {
    int arity = e.cost.arity();
    check_projection_arity(arity);
    if (!e.cost.singletons_defined())
        throw std::invalid_argument("singleton projection needs all singleton values");
    std::vector<double> w = e.cost.singletons();

    EdgeProjection p;
    p.arity = arity;
    p.pair_weights.assign(arity * arity, 0.0);
    p.beta = 1.0;
    if (arity == 2) {
        p.set(0, 1, w[0]); // w({0}) = w({1}) by symmetry
        return p;
    }
    double total = 0.0;
    for (double x : w) total += x;
    double d = arity;
    for (int i = 0; i < arity; ++i)
        for (int j = i + 1; j < arity; ++j)
            p.set(i, j, (w[i] + w[j]) / (d - 2.0) - total / ((d - 1.0) * (d - 2.0)));
    return p;
}

EdgeProjection project_submodular(const Hyperedge& e) {
    int arity = e.cost.arity();
    check_projection_arity(arity);
    CutCost full = e.cost.materialized();
    if (!is_submodular(full))
        throw std::invalid_argument(
            "cost is not submodular; use the LP projection instead");

    const MapCoefficients& mc = map_coefficients(arity);
    std::uint64_t fm = full_mask(arity);
    std::vector<double> values(fm + 1, 0.0);
    for (std::uint64_t m = 1; m < fm; ++m) values[m] = full.value_or_throw(m);

    EdgeProjection p;
    p.arity = arity;
    p.pair_weights.assign(arity * arity, 0.0);
    p.beta = submodular_beta(arity);
    for (int i = 0; i < arity; ++i) {
        for (int j = i + 1; j < arity; ++j) {
            std::uint64_t pair_mask = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
            double acc = 0.0;
            for (std::uint64_t m = 1; m < fm; ++m) {
                double wv = values[m];
                if (wv == 0.0) continue;
                acc += wv * mc.coef[subset_size(m)][subset_size(m & pair_mask)];
            }
            // Theory guarantees acc >= 0 for submodular input; only float
            // noise below -1e-12 in magnitude is clamped.
            if (acc < 0.0) acc = 0.0;
            p.set(i, j, acc);
        }
    }
    return p;
}

std::optional<EdgeProjection> project_lp(const Hyperedge& e, bool require_nonneg) {
    int arity = e.cost.arity();
    check_projection_arity(arity);
    LpInstance lp = build_projection_lp(e, require_nonneg);
    LpResult res = solve_lp(lp);
    if (res.status == LpStatus::Infeasible) return std::nullopt;
    if (res.status != LpStatus::Optimal)
        throw std::runtime_error("projection LP unbounded; malformed cost");

    EdgeProjection p;
    p.arity = arity;
    p.pair_weights.assign(arity * arity, 0.0);
    int idx = 0;
    for (int i = 0; i < arity; ++i)
        for (int j = i + 1; j < arity; ++j) p.set(i, j, res.x[idx++]);
    p.beta = res.x[idx];
    return p;
}

EdgeProjection project_edge(const Hyperedge& e, ProjectionMethod method,
                            bool lp_nonneg) {
    switch (method) {
    case ProjectionMethod::Singleton: return project_singleton(e);
    case ProjectionMethod::Submodular: return project_submodular(e);
    case ProjectionMethod::Lp: {
        auto p = project_lp(e, lp_nonneg);
        if (!p) throw std::runtime_error("projection LP infeasible");
        return *p;
    }
    case ProjectionMethod::Auto: break;
    }
    if (e.cost.arity() == 2 || e.cost.kind() == CostKind::SingletonOnly)
        return project_singleton(e);
    if (e.cost.fully_defined() && is_submodular(e.cost.materialized()))
        return project_submodular(e);
    auto p = project_lp(e, lp_nonneg);
    if (!p) throw std::runtime_error("projection LP infeasible");
    return *p;
}

ProjectedGraph merge(const Hypergraph& h, const std::vector<EdgeProjection>& projections,
                     bool clip) {
    if (projections.size() != h.edges().size())
        throw std::invalid_argument("one projection per hyperedge required");

    std::map<std::pair<VertexId, VertexId>, double> acc;
    std::optional<double> beta_star = 0.0;
    for (std::size_t idx = 0; idx < projections.size(); ++idx) {
        const Hyperedge& e = h.edges()[idx];
        const EdgeProjection& p = projections[idx];
        if (p.arity != static_cast<int>(e.vertices.size()))
            throw std::invalid_argument("projection arity mismatch at hyperedge " +
                                        std::to_string(idx));
        if (beta_star) {
            if (p.beta)
                beta_star = std::max(*beta_star, *p.beta);
            else
                beta_star = std::nullopt; // an uncertified edge voids the bound
        }
        for (int i = 0; i < p.arity; ++i) {
            for (int j = i + 1; j < p.arity; ++j) {
                double w = p.at(i, j);
                if (w == 0.0) continue;
                VertexId u = e.vertices[i], v = e.vertices[j];
                if (u > v) std::swap(u, v);
                acc[{u, v}] += w;
            }
        }
    }

    ProjectedGraph g;
    g.n = h.vertex_count();
    g.beta_star = beta_star;
    for (auto& [key, w] : acc) {
        if (clip && w < 0.0) {
            ++g.clipped;
            continue;
        }
        if (w == 0.0) continue;
        if (w < 0.0) ++g.negative_count;
        g.edges.push_back({key.first, key.second, w});
    }
    if (g.clipped > 0) g.beta_star = std::nullopt;

    g.adj.assign(g.n, {});
    g.degree.assign(g.n, 0.0);
    for (const GraphEdge& ge : g.edges) {
        g.adj[ge.u].emplace_back(ge.v, ge.weight);
        g.adj[ge.v].emplace_back(ge.u, ge.weight);
        g.degree[ge.u] += ge.weight;
        g.degree[ge.v] += ge.weight;
    }
    return g;
}

ProjectedGraph graph_from_edges(int n, std::vector<GraphEdge> edges) {
    std::map<std::pair<VertexId, VertexId>, double> acc;
    for (GraphEdge e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u >= static_cast<VertexId>(n) || e.v >= static_cast<VertexId>(n))
            throw std::invalid_argument("edge endpoint out of range");
        acc[{e.u, e.v}] += e.weight;
    }
    ProjectedGraph g;
    g.n = n;
    g.beta_star = 1.0;
    for (auto& [key, w] : acc) {
        if (w == 0.0) continue;
        if (w < 0.0) ++g.negative_count;
        g.edges.push_back({key.first, key.second, w});
    }
    g.adj.assign(n, {});
    g.degree.assign(n, 0.0);
    for (const GraphEdge& ge : g.edges) {
        g.adj[ge.u].emplace_back(ge.v, ge.weight);
        g.adj[ge.v].emplace_back(ge.u, ge.weight);
        g.degree[ge.u] += ge.weight;
        g.degree[ge.v] += ge.weight;
    }
    return g;
}

ProjectionOutcome project_all(const Hypergraph& h, ProjectionMethod method, bool clip,
                              bool lp_nonneg) {
    std::size_t count = h.edges().size();
    std::vector<std::optional<EdgeProjection>> slots(count);
    std::vector<std::string> methods(count);

    parallel_for(count, [&](std::size_t idx) {
        const Hyperedge& e = h.edges()[idx];
        ProjectionMethod route = method;
        if (route == ProjectionMethod::Auto) {
            if (e.cost.arity() == 2 || e.cost.kind() == CostKind::SingletonOnly)
                route = ProjectionMethod::Singleton;
            else if (e.cost.fully_defined() && is_submodular(e.cost.materialized()))
                route = ProjectionMethod::Submodular;
            else
                route = ProjectionMethod::Lp;
        }
        switch (route) {
        case ProjectionMethod::Singleton:
            slots[idx] = project_singleton(e);
            methods[idx] = "singleton";
            break;
        case ProjectionMethod::Submodular:
            slots[idx] = project_submodular(e);
            methods[idx] = "submodular";
            break;
        default:
            slots[idx] = project_lp(e, lp_nonneg);
            methods[idx] = "lp";
            break;
        }
    });

    ProjectionOutcome out;
    std::vector<EdgeProjection> projections;
    projections.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        if (!slots[idx]) {
            out.infeasible.push_back(static_cast<int>(idx));
            // placeholder so merging still lines up; contributes nothing
            EdgeProjection zero;
            zero.arity = static_cast<int>(h.edges()[idx].vertices.size());
            zero.pair_weights.assign(zero.arity * zero.arity, 0.0);
            zero.beta = std::nullopt;
            projections.push_back(std::move(zero));
        } else {
            projections.push_back(*slots[idx]);
        }
        EdgeReport r;
        r.index = static_cast<int>(idx);
        r.method = methods[idx];
        r.beta = projections.back().beta;
        r.negatives = projections.back().negative_count();
        out.reports.push_back(std::move(r));
    }
    out.graph = merge(h, projections, clip);
    if (!out.infeasible.empty()) out.graph.beta_star = std::nullopt;
    return out;
}

} // namespace inhclust
