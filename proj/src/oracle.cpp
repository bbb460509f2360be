#include "inhclust/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace inhclust {

BruteForceCut brute_force_ncut(const Hypergraph& h) {
    int n = h.vertex_count();
    std::vector<VertexId> active;
    for (int v = 0; v < n; ++v)
        if (h.degree(static_cast<VertexId>(v)) > 0.0)
            active.push_back(static_cast<VertexId>(v));
    if (static_cast<int>(active.size()) > 20)
        throw std::invalid_argument("brute force supports at most 20 active vertices");
    if (active.size() < 2)
        throw std::invalid_argument("need at least two active vertices");

    // Fix the first active vertex inside S to enumerate each class once.
    int m = static_cast<int>(active.size());
    BruteForceCut best;
    best.value = std::numeric_limits<double>::infinity();
    std::uint64_t limit = std::uint64_t{1} << (m - 1);
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        std::vector<VertexId> side{active[0]};
        for (int i = 1; i < m; ++i)
            if (bits & (std::uint64_t{1} << (i - 1))) side.push_back(active[i]);
        if (static_cast<int>(side.size()) == m) continue;
        CutSelection s = CutSelection::of(side);
        double value = h.ncut(s);
        if (value < best.value - 1e-15 ||
            (std::fabs(value - best.value) <= 1e-15 &&
             s.vertices < best.best.vertices)) {
            best.value = value;
            best.best = s;
        }
    }
    return best;
}

FeasibilityRatio feasibility_ratio(const Hyperedge& e, const EdgeProjection& proj) {
    int arity = e.cost.arity();
    if (arity > 12)
        throw std::invalid_argument("feasibility audit supports arity <= 12");
    if (proj.arity != arity)
        throw std::invalid_argument("projection arity mismatch");

    FeasibilityRatio out;
    out.min_ratio = std::numeric_limits<double>::infinity();
    out.max_ratio = -std::numeric_limits<double>::infinity();
    bool any = false;
    for_each_cut_class(arity, [&](std::uint64_t mask) {
        double w = e.cost.value_or_throw(mask);
        double cut = proj.cut_value(mask);
        if (w > 0.0) {
            any = true;
            double ratio = cut / w;
            out.min_ratio = std::min(out.min_ratio, ratio);
            out.max_ratio = std::max(out.max_ratio, ratio);
        } else if (std::fabs(cut) > 1e-9) {
            ++out.zero_violations;
        }
    });
    if (!any) {
        out.min_ratio = 1.0;
        out.max_ratio = 1.0;
    }
    return out;
}

SubmodularGenerator::SubmodularGenerator(int arity, std::uint64_t seed,
                                         double graph_mix, double concave_mix)
    : arity_(arity), graph_mix_(graph_mix), concave_mix_(concave_mix), rng_(seed) {
    if (arity < 2 || arity > 8)
        throw std::invalid_argument("submodular generator supports arity in [2, 8]");
}

CutCost SubmodularGenerator::from_latent_and_concave(
    const std::vector<double>& latent, const std::vector<double>& concave) {
    std::vector<std::pair<std::uint64_t, double>> entries;
    for_each_cut_class(arity_, [&](std::uint64_t mask) {
        double w = 0.0;
        for (int i = 0; i < arity_; ++i) {
            if (!(mask & (std::uint64_t{1} << i))) continue;
            for (int j = 0; j < arity_; ++j) {
                if (mask & (std::uint64_t{1} << j)) continue;
                w += latent[i * arity_ + j];
            }
        }
        int s = subset_size(mask);
        for (std::size_t t = 0; t < concave.size(); ++t) {
            int cap = static_cast<int>(t) + 1;
            w += concave[t] * std::min({s, cap, arity_ - s});
        }
        entries.emplace_back(mask, w);
    });
    CutCost cost = CutCost::table(arity_, entries);
    if (!is_submodular(cost))
        throw std::logic_error("generator produced a non-submodular sample");
    return cost;
}

CutCost SubmodularGenerator::next() {
    std::vector<double> latent(arity_ * arity_, 0.0);
    for (int i = 0; i < arity_; ++i) {
        for (int j = i + 1; j < arity_; ++j) {
            double w = rng_.uniform() < 0.25 ? 0.0 : rng_.uniform() * graph_mix_;
            latent[i * arity_ + j] = latent[j * arity_ + i] = w;
        }
    }
    std::vector<double> concave(arity_ / 2);
    for (double& c : concave)
        c = rng_.uniform() < 0.5 ? 0.0 : rng_.uniform() * concave_mix_;
    return from_latent_and_concave(latent, concave);
}

CutCost SubmodularGenerator::next_latent(std::vector<double>* latent_out) {
    std::vector<double> latent(arity_ * arity_, 0.0);
    for (int i = 0; i < arity_; ++i) {
        for (int j = i + 1; j < arity_; ++j) {
            double w = rng_.uniform() * graph_mix_;
            latent[i * arity_ + j] = latent[j * arity_ + i] = w;
        }
    }
    if (latent_out) *latent_out = latent;
    return from_latent_and_concave(latent, std::vector<double>());
}

Theorem1Report theorem1_audit(const Hypergraph& h, const PartitionOptions& options) {
    ProjectionOutcome out = project_all(h, options.method, /*clip=*/false,
                                        options.lp_nonneg);
    if (!out.infeasible.empty())
        throw std::runtime_error("audit refused: infeasible projection");
    if (out.graph.negative_count > 0)
        throw std::runtime_error("audit refused: negative merged weights");
    if (!out.graph.beta_star)
        throw std::runtime_error("audit refused: no beta certificate");

    LaplacianSystem ls = build_laplacian(out.graph);
    auto [lambda2, u] = second_eigenpair(ls);
    Partition sweep = sweep_cut(out.graph, ls, u);

    std::vector<VertexId> side0;
    for (std::size_t v = 0; v < sweep.assignment.size(); ++v)
        if (sweep.assignment[v] == 0) side0.push_back(static_cast<VertexId>(v));
    CutSelection s0 = CutSelection::of(std::move(side0));

    Theorem1Report rep;
    rep.lambda2 = lambda2;
    rep.alpha_graph = sweep.ncut;
    rep.alpha_star = h.ncut(s0);
    rep.beta_star = *out.graph.beta_star;
    rep.alpha_h = brute_force_ncut(h).value;

    constexpr double tol = 1e-9;
    double b3 = rep.beta_star * rep.beta_star * rep.beta_star;
    rep.chain_ok = rep.alpha_star >= rep.alpha_h - tol &&
                   b3 * rep.alpha_h >= rep.alpha_star * rep.alpha_star / 8.0 - tol;
    rep.cheeger_ok = rep.lambda2 <= rep.alpha_graph + tol &&
                     rep.lambda2 >= rep.alpha_graph * rep.alpha_graph / 8.0 - tol;
    return rep;
}

} // namespace inhclust
