#include "inhclust/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "inhclust/eigensolver.hpp"
#include "inhclust/kmeans.hpp"

namespace inhclust {

namespace {

// Eq.-3 value of a split with the boundary-zero limit: a zero-volume side is
// tolerated only when nothing is cut.
double hypergraph_cut_value(const Hypergraph& h, const CutSelection& s) {
    double bvol = h.boundary_volume(s);
    double vol_s = h.volume(s);
    double vol_c = h.total_volume() - vol_s;
    if (vol_s > 0.0 && vol_c > 0.0) return bvol * (1.0 / vol_s + 1.0 / vol_c);
    return bvol == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

double part_score(const Hypergraph& h, const CutSelection& s) {
    double bvol = h.boundary_volume(s);
    double vol = h.volume(s);
    if (vol > 0.0) return bvol / vol;
    return bvol == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

} // namespace

std::vector<CutSelection> Partition::clusters() const {
    std::vector<std::vector<VertexId>> buckets(k);
    for (std::size_t v = 0; v < assignment.size(); ++v)
        if (assignment[v] >= 0) buckets[assignment[v]].push_back(static_cast<VertexId>(v));
    std::vector<CutSelection> out;
    out.reserve(k);
    for (auto& b : buckets) out.push_back(CutSelection::of(std::move(b)));
    return out;
}

LaplacianSystem build_laplacian(const ProjectedGraph& g) {
    if (g.negative_count > 0)
        throw std::invalid_argument(
            "graph has negative weights; clip before building the Laplacian");
    LaplacianSystem ls;
    std::vector<int> active_index(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        if (g.degree[v] > 0.0) {
            active_index[v] = ls.n++;
            ls.active.push_back(static_cast<VertexId>(v));
            ls.degree.push_back(g.degree[v]);
        } else {
            ls.excluded.push_back(static_cast<VertexId>(v));
        }
    }
    if (ls.n == 0) throw std::invalid_argument("all vertices have zero degree");

    ls.lap.assign(static_cast<std::size_t>(ls.n) * ls.n, 0.0);
    for (int i = 0; i < ls.n; ++i) ls.lap[static_cast<std::size_t>(i) * ls.n + i] = 1.0;
    for (const GraphEdge& e : g.edges) {
        int i = active_index[e.u], j = active_index[e.v];
        double val = -e.weight / std::sqrt(ls.degree[i] * ls.degree[j]);
        ls.lap[static_cast<std::size_t>(i) * ls.n + j] = val;
        ls.lap[static_cast<std::size_t>(j) * ls.n + i] = val;
    }
    return ls;
}

std::pair<double, std::vector<double>> second_eigenpair(const LaplacianSystem& ls) {
    int n = ls.n;
    if (n < 2) throw std::invalid_argument("need at least two active vertices");
    EigenDecomposition eig = eigen_symmetric(ls.lap, n);
    double lambda2 = eig.values[1];

    // Trivial direction D^1/2 1.
    std::vector<double> trivial(n);
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
        trivial[i] = std::sqrt(ls.degree[i]);
        norm += trivial[i] * trivial[i];
    }
    norm = std::sqrt(norm);
    for (double& t : trivial) t /= norm;

    // Deflate the trivial direction out of the lambda2 eigenspace. When
    // lambda2 is simple this is a numerical no-op; with a repeated zero
    // eigenvalue it selects the component orthogonal to D^1/2 1.
    double tol_eig = 1e-9 * std::max(1.0, std::fabs(lambda2));
    std::vector<double> u;
    for (int j = 0; j < n; ++j) {
        if (std::fabs(eig.values[j] - lambda2) > tol_eig) continue;
        std::vector<double> v = eig.eigenvector(j);
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += v[i] * trivial[i];
        double vn = 0.0;
        for (int i = 0; i < n; ++i) {
            v[i] -= dot * trivial[i];
            vn += v[i] * v[i];
        }
        vn = std::sqrt(vn);
        if (vn > 1e-6) {
            for (double& x : v) x /= vn;
            u = std::move(v);
            break;
        }
    }
    if (u.empty())
        throw std::runtime_error("no eigenvector orthogonal to the trivial direction");

    for (int i = 0; i < n; ++i) {
        if (std::fabs(u[i]) > 1e-12) {
            if (u[i] < 0.0)
                for (double& x : u) x = -x;
            break;
        }
    }

    // Residual check on the returned pair.
    double resid = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j)
            row += ls.lap[static_cast<std::size_t>(i) * n + j] * u[j];
        resid = std::max(resid, std::fabs(row - lambda2 * u[i]));
    }
    if (resid > 1e-8)
        throw std::runtime_error("eigenpair residual " + std::to_string(resid) +
                                 " exceeds tolerance");
    return {lambda2, std::move(u)};
}

Partition sweep_cut(const ProjectedGraph& g, const LaplacianSystem& ls,
                    const std::vector<double>& u) {
    int n = ls.n;
    if (static_cast<int>(u.size()) != n)
        throw std::invalid_argument("eigenvector length mismatch");

    // Order by D^-1/2 u, ties by ascending original vertex id.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> score(n);
    for (int i = 0; i < n; ++i) score[i] = u[i] / std::sqrt(ls.degree[i]);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (score[a] != score[b]) return score[a] < score[b];
        return ls.active[a] < ls.active[b];
    });

    double total_vol = 0.0;
    for (int i = 0; i < n; ++i) total_vol += ls.degree[i];

    std::vector<char> in_prefix(g.n, 0);
    double cut = 0.0, vol = 0.0;
    double best_value = std::numeric_limits<double>::infinity();
    int best_prefix = 0;
    for (int i = 0; i < n - 1; ++i) {
        VertexId v = ls.active[order[i]];
        double links = 0.0;
        for (const auto& [nb, w] : g.adj[v])
            if (in_prefix[nb]) links += w;
        cut += g.degree[v] - 2.0 * links;
        if (cut < 0.0) cut = 0.0; // float cancellation guard
        vol += g.degree[v];
        in_prefix[v] = 1;
        double value = cut * (1.0 / vol + 1.0 / (total_vol - vol));
        if (value < best_value - 1e-15) {
            best_value = value;
            best_prefix = i + 1;
        }
    }

    // Output the smaller side (the complement on ties), per the sweep rule.
    bool prefix_is_output = best_prefix < n - best_prefix;
    Partition p;
    p.k = 2;
    p.assignment.assign(g.n, -1);
    for (int i = 0; i < n; ++i) {
        bool in_pref = i < best_prefix;
        bool cluster0 = prefix_is_output ? in_pref : !in_pref;
        p.assignment[ls.active[order[i]]] = cluster0 ? 0 : 1;
    }
    p.ncut = best_value;
    p.beta_star = g.beta_star;
    p.excluded = ls.excluded;
    return p;
}

double graph_ncut(const ProjectedGraph& g, const CutSelection& s) {
    double cut = 0.0, vol_s = 0.0, total = 0.0;
    for (int v = 0; v < g.n; ++v) total += g.degree[v];
    for (VertexId v : s.vertices) vol_s += g.degree[v];
    for (const GraphEdge& e : g.edges)
        if (s.contains(e.u) != s.contains(e.v)) cut += e.weight;
    double vol_c = total - vol_s;
    if (vol_s <= 0.0 || vol_c <= 0.0)
        throw std::invalid_argument("degenerate graph cut");
    return cut * (1.0 / vol_s + 1.0 / vol_c);
}

Partition partition2(const Hypergraph& h, const PartitionOptions& options) {
    ProjectionOutcome out = project_all(h, options.method, options.clip,
                                        options.lp_nonneg);
    if (!out.infeasible.empty())
        throw std::runtime_error("projection LP infeasible for hyperedge " +
                                 std::to_string(out.infeasible.front()));
    if (out.graph.negative_count > 0)
        throw std::runtime_error(
            "merged graph has negative weights; enable clipping");

    LaplacianSystem ls = build_laplacian(out.graph);
    auto [lambda2, u] = second_eigenpair(ls);
    (void)lambda2;
    Partition p = sweep_cut(out.graph, ls, u);

    // Report the hypergraph objective of the produced split.
    std::vector<VertexId> side0;
    for (std::size_t v = 0; v < p.assignment.size(); ++v)
        if (p.assignment[v] == 0) side0.push_back(static_cast<VertexId>(v));
    p.ncut = hypergraph_cut_value(h, CutSelection::of(std::move(side0)));
    return p;
}

Partition kway_partition(const Hypergraph& h, int k, std::uint64_t seed,
                         const PartitionOptions& options) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    ProjectionOutcome out = project_all(h, options.method, options.clip,
                                        options.lp_nonneg);
    if (!out.infeasible.empty())
        throw std::runtime_error("projection LP infeasible for hyperedge " +
                                 std::to_string(out.infeasible.front()));
    if (out.graph.negative_count > 0)
        throw std::runtime_error(
            "merged graph has negative weights; enable clipping");

    LaplacianSystem ls = build_laplacian(out.graph);
    if (k > ls.n)
        throw std::invalid_argument("k exceeds the number of active vertices");

    EigenDecomposition eig = eigen_symmetric(ls.lap, ls.n);
    // Spectral embedding: rows from the k smallest eigenvectors, each row
    // scaled to unit length (zero rows stay zero).
    std::vector<double> embed(static_cast<std::size_t>(ls.n) * k, 0.0);
    for (int i = 0; i < ls.n; ++i) {
        double norm = 0.0;
        for (int j = 0; j < k; ++j) {
            double x = eig.vectors[static_cast<std::size_t>(i) * ls.n + j];
            embed[static_cast<std::size_t>(i) * k + j] = x;
            norm += x * x;
        }
        norm = std::sqrt(norm);
        if (norm > 1e-300)
            for (int j = 0; j < k; ++j)
                embed[static_cast<std::size_t>(i) * k + j] /= norm;
    }

    Rng rng(seed);
    constexpr int kRestarts = 100;
    std::vector<int> best_assign;
    double best_value = std::numeric_limits<double>::infinity();
    double best_inertia = std::numeric_limits<double>::infinity();
    for (int r = 0; r < kRestarts; ++r) {
        KMeansResult km = kmeans(embed, ls.n, k, k, rng);
        std::vector<std::vector<VertexId>> parts(k);
        for (int i = 0; i < ls.n; ++i)
            parts[km.assignment[i]].push_back(ls.active[i]);
        double value = 0.0;
        for (int c = 0; c < k; ++c) {
            if (parts[c].empty()) {
                value = std::numeric_limits<double>::infinity();
                break;
            }
            value += part_score(h, CutSelection::of(parts[c]));
        }
        if (value < best_value ||
            (value == best_value && km.inertia < best_inertia)) {
            best_value = value;
            best_inertia = km.inertia;
            best_assign = km.assignment;
        }
    }
    if (best_assign.empty())
        throw std::runtime_error("k-means produced no usable clustering");

    Partition p;
    p.k = k;
    p.assignment.assign(h.vertex_count(), -1);
    for (int i = 0; i < ls.n; ++i) p.assignment[ls.active[i]] = best_assign[i];
    p.ncut = best_value;
    p.beta_star = out.graph.beta_star;
    p.excluded = ls.excluded;
    return p;
}

} // namespace inhclust
