// cost.hpp - cut-cost functions w_e over the subsets of a hyperedge
#ifndef INHCLUST_COST_HPP
#define INHCLUST_COST_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "inhclust/common.hpp"

namespace inhclust {

enum class CostKind { Table, SingletonOnly, Zhou, Benson };

// A symmetric cut cost: w(S) = w(e\S), w(empty) = w(e) = 0, values >= 0.
// Table costs may be partially specified; unspecified subsets evaluate to
// "undefined" (std::nullopt), never to an implicit zero.
class CutCost {
public:
    // entries: (subset mask over positions, weight), one per cut class;
    // both sides of a class may be given as long as the values agree.
    static CutCost table(int arity,
                         const std::vector<std::pair<std::uint64_t, double>>& entries);
    static CutCost singleton_only(std::vector<double> values);
    static CutCost zhou(int arity, double homogeneous_weight);
    static CutCost benson(int arity, double homogeneous_weight);

    int arity() const { return arity_; }
    CostKind kind() const { return kind_; }
    double scalar() const { return scalar_; }

    // w(S) for the subset mask, or nullopt when unspecified.
    std::optional<double> value(std::uint64_t mask) const;
    double value_or_throw(std::uint64_t mask) const;
    bool defined(std::uint64_t mask) const { return value(mask).has_value(); }
    bool fully_defined() const;

    bool singletons_defined() const;
    std::vector<double> singletons() const;

    // Expands to an explicit full table; throws when some class is undefined.
    CutCost materialized() const;

    // Number of proper nonempty cut classes with a defined value.
    int defined_class_count() const;

private:
    CutCost(CostKind kind, int arity) : kind_(kind), arity_(arity) {}

    CostKind kind_;
    int arity_;
    double scalar_ = 0.0;
    std::vector<double> values_;      // per mask (Table) or per position (SingletonOnly)
    std::vector<std::uint8_t> known_; // per mask, Table variant only
};

// Exhaustive check of w(S1) + w(S2) >= w(S1 cap S2) + w(S1 cup S2) over all
// subset pairs, with slack tolerance -1e-12. Throws when the cost is not
// fully specified (e.g. SingletonOnly with arity > 3).
bool is_submodular(const CutCost& cost);

// Fills unspecified classes by an LP that maximizes the minimum submodularity
// slack, subject to symmetry, nonnegativity and an upper bound of twice the
// largest specified value. Returns nullopt when no submodular completion
// exists. Requires all singletons specified and arity <= 8.
std::optional<CutCost> complete_to_submodular(const CutCost& cost);

// Position pairs {v, v~} with w({v}) + w({v~}) < sum_v' w({v'}) / (arity-1).
// An empty result predicts an entrywise nonnegative singleton projection.
std::vector<std::pair<int, int>> singleton_balance_check(const CutCost& cost);

} // namespace inhclust

#endif // INHCLUST_COST_HPP
