#include "inhclust/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "inhclust/parallel.hpp"

namespace inhclust {

RankingDataset::RankingDataset(int candidates,
                               const std::vector<std::vector<int>>& orders)
    : n_(candidates) {
    if (candidates < 1) throw std::invalid_argument("need at least one candidate");
    positions_.reserve(orders.size());
    for (const auto& order : orders) {
        if (static_cast<int>(order.size()) != n_)
            throw std::invalid_argument("ranking length does not match candidate count");
        std::vector<int> pos(n_, -1);
        for (int p = 0; p < n_; ++p) {
            int a = order[p];
            if (a < 0 || a >= n_ || pos[a] != -1)
                throw std::invalid_argument("ranking is not a permutation");
            pos[a] = p;
        }
        positions_.push_back(std::move(pos));
    }
}

std::vector<int> RankingDataset::rank_order(int ranking) const {
    std::vector<int> order(n_);
    for (int a = 0; a < n_; ++a) order[positions_[ranking][a]] = a;
    return order;
}

double estimate_triple_mi(const RankingDataset& d, int i, int j, int k) {
    int n = d.candidates();
    if (i == j || i == k || j == k || i < 0 || j < 0 || k < 0 || i >= n || j >= n ||
        k >= n)
        throw std::invalid_argument("triple indices must be distinct and in range");
    int m = d.size();
    if (m < 1) throw std::invalid_argument("empty ranking dataset");

    // Empirical joint of (position of i, 1[pos(j) < pos(k)]).
    std::vector<std::array<double, 2>> joint(n, {0.0, 0.0});
    std::array<double, 2> indicator{0.0, 0.0};
    std::vector<double> marginal(n, 0.0);
    double inc = 1.0 / m;
    for (int r = 0; r < m; ++r) {
        int p = d.position(r, i);
        int b = d.position(r, j) < d.position(r, k) ? 1 : 0;
        joint[p][b] += inc;
        marginal[p] += inc;
        indicator[b] += inc;
    }
    double mi = 0.0;
    for (int p = 0; p < n; ++p) {
        for (int b = 0; b < 2; ++b) {
            double pj = joint[p][b];
            if (pj <= 0.0) continue; // 0 log 0 = 0
            mi += pj * std::log2(pj / (marginal[p] * indicator[b]));
        }
    }
    return std::max(mi, 0.0);
}

RankingHypergraph build_ranking_hypergraph(const RankingDataset& d, double rate,
                                           std::uint64_t seed) {
    if (rate <= 0.0 || rate > 1.0)
        throw std::invalid_argument("triple rate must be in (0, 1]");
    int n = d.candidates();
    if (n < 3) throw std::invalid_argument("need at least three candidates");

    std::vector<std::array<int, 3>> triples;
    std::uint64_t index = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k, ++index) {
                if (rate >= 1.0) {
                    triples.push_back({i, j, k});
                    continue;
                }
                Rng triple_rng(derive_seed(seed, index));
                if (triple_rng.uniform() < rate) triples.push_back({i, j, k});
            }
        }
    }

    std::vector<Hyperedge> edges(triples.size(),
                                 Hyperedge{{}, CutCost::singleton_only({0, 0, 0})});
    parallel_for(triples.size(), [&](std::size_t t) {
        auto [i, j, k] = triples[t];
        double wi = estimate_triple_mi(d, i, j, k);
        double wj = estimate_triple_mi(d, j, i, k);
        double wk = estimate_triple_mi(d, k, i, j);
        edges[t] = Hyperedge{{static_cast<VertexId>(i), static_cast<VertexId>(j),
                              static_cast<VertexId>(k)},
                             CutCost::singleton_only({wi, wj, wk})};
    });
    return RankingHypergraph{Hypergraph(n, std::move(edges)), std::move(triples)};
}

RiffleSplit learn_riffled_partition(const RankingDataset& d, double rate,
                                    std::uint64_t seed) {
    RankingHypergraph rh = build_ranking_hypergraph(d, rate, seed);

    RiffleSplit out;
    double total_volume = rh.hypergraph.total_volume();
    if (total_volume <= 1e-12) {
        // Degenerate mutual informations: every cut has zero boundary.
        out.low_confidence = true;
        out.partition.k = 1;
        out.partition.assignment.assign(d.candidates(), 0);
        out.partition.ncut = 0.0;
        return out;
    }

    PartitionOptions opt;
    opt.method = ProjectionMethod::Singleton;
    opt.clip = true;
    out.partition = partition2(rh.hypergraph, opt);

    std::vector<VertexId> side0;
    for (std::size_t v = 0; v < out.partition.assignment.size(); ++v)
        if (out.partition.assignment[v] == 0) side0.push_back(static_cast<VertexId>(v));
    out.boundary_volume = rh.hypergraph.boundary_volume(CutSelection::of(side0));
    return out;
}

std::vector<int> sample_plackett_luce(const std::vector<double>& scores, Rng& rng) {
    int n = static_cast<int>(scores.size());
    if (n < 1) throw std::invalid_argument("need at least one score");
    for (double s : scores)
        if (!(s > 0.0)) throw std::invalid_argument("scores must be positive");

    std::vector<int> remaining(n);
    for (int i = 0; i < n; ++i) remaining[i] = i;
    std::vector<double> weight(scores);
    std::vector<int> order;
    order.reserve(n);
    while (!remaining.empty()) {
        double total = 0.0;
        for (int i : remaining) total += weight[i];
        double target = rng.uniform() * total;
        double run = 0.0;
        std::size_t pick = remaining.size() - 1;
        for (std::size_t t = 0; t < remaining.size(); ++t) {
            run += weight[remaining[t]];
            if (run >= target) {
                pick = t;
                break;
            }
        }
        order.push_back(remaining[pick]);
        remaining.erase(remaining.begin() + pick);
    }
    return order;
}

std::vector<int> riffle_interleave(const std::vector<int>& order_a,
                                   const std::vector<int>& order_b, int n, Rng& rng) {
    if (static_cast<int>(order_a.size() + order_b.size()) != n)
        throw std::invalid_argument("interleave sizes must add up to n");
    std::vector<char> seen(n, 0);
    for (int a : order_a) {
        if (a < 0 || a >= n || seen[a])
            throw std::invalid_argument("invalid or overlapping candidate sets");
        seen[a] = 1;
    }
    for (int b : order_b) {
        if (b < 0 || b >= n || seen[b])
            throw std::invalid_argument("invalid or overlapping candidate sets");
        seen[b] = 1;
    }

    // Uniform position subset for A via a partial Fisher-Yates shuffle.
    std::vector<int> slots(n);
    for (int i = 0; i < n; ++i) slots[i] = i;
    int na = static_cast<int>(order_a.size());
    for (int i = 0; i < na; ++i) {
        std::size_t j = i + rng.uniform_index(n - i);
        std::swap(slots[i], slots[j]);
    }
    std::vector<int> positions_a(slots.begin(), slots.begin() + na);
    std::sort(positions_a.begin(), positions_a.end());

    std::vector<int> order(n, -1);
    std::size_t ai = 0;
    for (int p : positions_a) order[p] = order_a[ai++];
    std::size_t bi = 0;
    for (int p = 0; p < n; ++p)
        if (order[p] < 0) order[p] = order_b[bi++];
    return order;
}

} // namespace inhclust
