// ranking.hpp - riffled-independence structure learning from rankings
#ifndef INHCLUST_RANKING_HPP
#define INHCLUST_RANKING_HPP

#include <array>
#include <vector>

#include "inhclust/rng.hpp"
#include "inhclust/spectral.hpp"

namespace inhclust {

// Full rankings of n candidates; position(r, a) is the 0-based rank of
// candidate a in ranking r.
class RankingDataset {
public:
    // orders[r][p] = candidate at position p.
    RankingDataset(int candidates, const std::vector<std::vector<int>>& orders);

    int candidates() const { return n_; }
    int size() const { return static_cast<int>(positions_.size()); }
    int position(int ranking, int candidate) const {
        return positions_[ranking][candidate];
    }
    std::vector<int> rank_order(int ranking) const;

private:
    int n_;
    std::vector<std::vector<int>> positions_;
};

// Plug-in mutual information (bits) between the position of candidate i and
// the order indicator of candidates j, k. Always finite and >= 0.
double estimate_triple_mi(const RankingDataset& d, int i, int j, int k);

struct RankingHypergraph {
    Hypergraph hypergraph;
    std::vector<std::array<int, 3>> triples; // i < j < k per hyperedge
};

// One arity-3 hyperedge per sampled triple {i,j,k}, each triple kept
// independently with probability `rate` (per-triple seeded, so the result
// does not depend on evaluation order).
RankingHypergraph build_ranking_hypergraph(const RankingDataset& d, double rate,
                                           std::uint64_t seed);

struct RiffleSplit {
    Partition partition;
    double boundary_volume = 0.0; // the learning objective at the split
    bool low_confidence = false;  // all mutual informations degenerate
};

// Builds the triple-MI hypergraph and runs the 2-way pipeline with the
// singleton projection and post-merge clipping.
RiffleSplit learn_riffled_partition(const RankingDataset& d, double rate,
                                    std::uint64_t seed);

// Sequential choice by score: position p goes to a remaining item with
// probability proportional to its score. Returns the rank order.
std::vector<int> sample_plackett_luce(const std::vector<double>& scores, Rng& rng);

// Interleaves two rank orders over disjoint candidate sets by a uniformly
// random position subset, preserving both relative orders.
std::vector<int> riffle_interleave(const std::vector<int>& order_a,
                                   const std::vector<int>& order_b, int n, Rng& rng);

} // namespace inhclust

#endif // INHCLUST_RANKING_HPP
