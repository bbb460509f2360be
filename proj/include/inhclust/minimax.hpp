// minimax.hpp - small dense LP solver and the minimax projection programs
#ifndef INHCLUST_MINIMAX_HPP
#define INHCLUST_MINIMAX_HPP

#include <optional>
#include <vector>

#include "inhclust/hypergraph.hpp"

namespace inhclust {

enum class Relation { LessEq, GreaterEq, Equal };

struct LpConstraint {
    std::vector<double> coeffs;
    Relation rel;
    double rhs;
};

// Minimize objective . x subject to the constraints. Variables with a lower
// bound are shifted; variables without one are free.
struct LpInstance {
    int num_vars = 0;
    std::vector<double> objective;
    std::vector<LpConstraint> constraints;
    std::vector<std::optional<double>> lower_bound; // empty means all free
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double objective = 0.0;
};

// Two-phase dense simplex with Bland's anticycling rule.
LpResult solve_lp(const LpInstance& lp);

// The best-approximation program for one hyperedge: variables are the
// C(arity,2) pair weights (lexicographic order) followed by beta; one
// constraint pair per defined cut class. Classes with zero cost collapse to
// the equality "crossing sum = 0".
LpInstance build_projection_lp(const Hyperedge& e, bool require_nonneg);

// Optimal beta over all linear projection maps, restricted to the symmetric
// coefficient classes and certified against the finite family `families`.
// The result lower-bounds the worst-case beta of any linear map on
// submodular costs of this arity. Every family member must be symmetric
// submodular (checked).
double beta_lower_bound(int arity, const std::vector<CutCost>& families);

// Curated submodular cost families for arity 4, 5 and 6 whose optimal linear
// approximation ratios are 3/2, 2 and 4 respectively.
std::vector<CutCost> bound_families(int arity);

} // namespace inhclust

#endif // INHCLUST_MINIMAX_HPP
