#include "inhclust/cost.hpp"

#include <algorithm>
#include <cmath>

#include "inhclust/minimax.hpp"

namespace inhclust {

namespace {

void check_arity(int arity) {
    if (arity < 2 || arity > kMaxArity)
        throw std::invalid_argument("cut cost arity must be in [2, 63], got " +
                                    std::to_string(arity));
}

} // namespace

CutCost CutCost::table(int arity,
                       const std::vector<std::pair<std::uint64_t, double>>& entries) {
    check_arity(arity);
    CutCost c(CostKind::Table, arity);
    std::uint64_t full = full_mask(arity);
    c.values_.assign(full + 1, 0.0);
    c.known_.assign(full + 1, 0);
    c.known_[0] = 1;
    c.known_[full] = 1;
    for (const auto& [mask, w] : entries) {
        if (mask == 0 || mask >= full) {
            if (mask == 0 || mask == full) {
                if (w != 0.0) throw std::invalid_argument("w(empty) and w(e) must be 0");
                continue;
            }
            throw std::invalid_argument("subset mask out of range");
        }
        if (w < 0.0) throw std::invalid_argument("cut-cost weights must be nonnegative");
        std::uint64_t comp = full & ~mask;
        for (std::uint64_t m : {mask, comp}) {
            if (c.known_[m] && c.values_[m] != w)
                throw std::invalid_argument("conflicting values for one cut class");
            c.known_[m] = 1;
            c.values_[m] = w;
        }
    }
    return c;
}

CutCost CutCost::singleton_only(std::vector<double> values) {
    int arity = static_cast<int>(values.size());
    check_arity(arity);
    for (double w : values)
        if (w < 0.0) throw std::invalid_argument("cut-cost weights must be nonnegative");
    CutCost c(CostKind::SingletonOnly, arity);
    c.values_ = std::move(values);
    return c;
}

CutCost CutCost::zhou(int arity, double homogeneous_weight) {
    check_arity(arity);
    if (homogeneous_weight < 0.0)
        throw std::invalid_argument("homogeneous weight must be nonnegative");
    CutCost c(CostKind::Zhou, arity);
    c.scalar_ = homogeneous_weight;
    return c;
}

CutCost CutCost::benson(int arity, double homogeneous_weight) {
    check_arity(arity);
    if (homogeneous_weight < 0.0)
        throw std::invalid_argument("homogeneous weight must be nonnegative");
    CutCost c(CostKind::Benson, arity);
    c.scalar_ = homogeneous_weight;
    return c;
}

std::optional<double> CutCost::value(std::uint64_t mask) const {
    std::uint64_t full = full_mask(arity_);
    if (mask > full) throw std::invalid_argument("subset mask exceeds hyperedge");
    if (mask == 0 || mask == full) return 0.0;
    int s = subset_size(mask);
    switch (kind_) {
    case CostKind::Table:
        if (!known_[mask]) return std::nullopt;
        return values_[mask];
    case CostKind::SingletonOnly:
        if (s == 1) return values_[std::countr_zero(mask)];
        if (s == arity_ - 1) return values_[std::countr_zero(full & ~mask)];
        return std::nullopt;
    case CostKind::Zhou:
        return scalar_ * static_cast<double>(s) * static_cast<double>(arity_ - s) /
               static_cast<double>(arity_);
    case CostKind::Benson:
        return scalar_;
    }
    return std::nullopt;
}

double CutCost::value_or_throw(std::uint64_t mask) const {
    auto v = value(mask);
    if (!v)
        throw std::runtime_error("cut cost undefined on subset mask " +
                                 std::to_string(mask));
    return *v;
}

bool CutCost::fully_defined() const {
    if (kind_ != CostKind::Table && kind_ != CostKind::SingletonOnly) return true;
    bool ok = true;
    for_each_cut_class(arity_, [&](std::uint64_t m) { ok = ok && defined(m); });
    return ok;
}

bool CutCost::singletons_defined() const {
    for (int v = 0; v < arity_; ++v)
        if (!defined(std::uint64_t{1} << v)) return false;
    return true;
}

std::vector<double> CutCost::singletons() const {
    std::vector<double> out(arity_);
    for (int v = 0; v < arity_; ++v)
        out[v] = value_or_throw(std::uint64_t{1} << v);
    return out;
}

CutCost CutCost::materialized() const {
    std::vector<std::pair<std::uint64_t, double>> entries;
    for_each_cut_class(arity_, [&](std::uint64_t m) {
        entries.emplace_back(m, value_or_throw(m));
    });
    return table(arity_, entries);
}

int CutCost::defined_class_count() const {
    int count = 0;
    for_each_cut_class(arity_, [&](std::uint64_t m) { count += defined(m) ? 1 : 0; });
    return count;
}

bool is_submodular(const CutCost& cost) {
    if (!cost.fully_defined())
        throw std::invalid_argument(
            "submodularity check needs a fully specified cost (arity " +
            std::to_string(cost.arity()) + ")");
    int arity = cost.arity();
    std::uint64_t full = full_mask(arity);
    std::vector<double> w(full + 1);
    for (std::uint64_t m = 0; m <= full; ++m) w[m] = cost.value_or_throw(m);

    constexpr double slack = -1e-12;
    for (std::uint64_t a = 0; a <= full; ++a) {
        for (std::uint64_t b = a; b <= full; ++b) {
            if (w[a] + w[b] - w[a & b] - w[a | b] < slack) return false;
        }
    }
    return true;
}

std::optional<CutCost> complete_to_submodular(const CutCost& cost) {
    int arity = cost.arity();
    if (arity > 8)
        throw std::invalid_argument("submodular completion supports arity <= 8");
    if (!cost.singletons_defined())
        throw std::invalid_argument("submodular completion needs all singleton values");

    std::uint64_t full = full_mask(arity);

    // LP variables: one value per unspecified cut class, plus the slack t that
    // we maximize. Specified classes stay fixed.
    std::vector<std::uint64_t> free_reps;
    double max_specified = 0.0;
    for_each_cut_class(arity, [&](std::uint64_t m) {
        if (cost.defined(m))
            max_specified = std::max(max_specified, cost.value_or_throw(m));
        else
            free_reps.push_back(m);
    });
    std::vector<int> var_of_mask(full + 1, -1);
    for (std::size_t i = 0; i < free_reps.size(); ++i) {
        var_of_mask[free_reps[i]] = static_cast<int>(i);
        var_of_mask[full & ~free_reps[i]] = static_cast<int>(i);
    }
    int num_free = static_cast<int>(free_reps.size());
    int slack_var = num_free;

    LpInstance lp;
    lp.num_vars = num_free + 1;
    lp.objective.assign(lp.num_vars, 0.0);
    lp.objective[slack_var] = -1.0; // maximize t
    lp.lower_bound.assign(lp.num_vars, 0.0);
    lp.lower_bound[slack_var] = std::nullopt;

    auto term = [&](std::vector<double>& row, double& constant, std::uint64_t m,
                    double sign) {
        if (m == 0 || m == full) return;
        int var = var_of_mask[m];
        if (var >= 0)
            row[var] += sign;
        else
            constant += sign * cost.value_or_throw(m);
    };

    // Local-exchange form of submodularity, equivalent to the all-pairs
    // definition: w(S+a) + w(S+b) >= w(S) + w(S+a+b).
    for (std::uint64_t base = 0; base < full; ++base) {
        for (int a = 0; a < arity; ++a) {
            if (base & (std::uint64_t{1} << a)) continue;
            for (int b = a + 1; b < arity; ++b) {
                if (base & (std::uint64_t{1} << b)) continue;
                std::uint64_t ma = base | (std::uint64_t{1} << a);
                std::uint64_t mb = base | (std::uint64_t{1} << b);
                std::uint64_t mab = ma | mb;
                std::vector<double> row(lp.num_vars, 0.0);
                double constant = 0.0;
                term(row, constant, ma, 1.0);
                term(row, constant, mb, 1.0);
                term(row, constant, base, -1.0);
                term(row, constant, mab, -1.0);
                row[slack_var] -= 1.0;
                lp.constraints.push_back({std::move(row), Relation::GreaterEq, -constant});
            }
        }
    }
    // Free values bounded above so the max-slack objective stays finite.
    double upper = 2.0 * std::max(max_specified, 1e-12);
    for (int i = 0; i < num_free; ++i) {
        std::vector<double> row(lp.num_vars, 0.0);
        row[i] = 1.0;
        lp.constraints.push_back({std::move(row), Relation::LessEq, upper});
    }

    LpResult res = solve_lp(lp);
    if (res.status != LpStatus::Optimal)
        throw std::runtime_error("submodular completion LP did not solve");
    double best_slack = res.x[slack_var];
    if (best_slack < -1e-12) return std::nullopt;

    std::vector<std::pair<std::uint64_t, double>> entries;
    for_each_cut_class(arity, [&](std::uint64_t m) {
        int var = var_of_mask[m];
        double v = var >= 0 ? std::max(0.0, res.x[var]) : cost.value_or_throw(m);
        entries.emplace_back(m, v);
    });
    return CutCost::table(arity, entries);
}

std::vector<std::pair<int, int>> singleton_balance_check(const CutCost& cost) {
    if (!cost.singletons_defined())
        throw std::invalid_argument("balance check needs all singleton values");
    int arity = cost.arity();
    std::vector<double> w = cost.singletons();
    double total = 0.0;
    for (double x : w) total += x;

    std::vector<std::pair<int, int>> violations;
    if (arity == 2) return violations; // both sides equal, never violated
    double threshold = total / static_cast<double>(arity - 1);
    // Scaled so that "violating" coincides with a projected pair weight
    // below -1e-12.
    double tol = 1e-12 * static_cast<double>(arity - 2);
    for (int v = 0; v < arity; ++v) {
        for (int u = v + 1; u < arity; ++u) {
            if (w[v] + w[u] - threshold < -tol) violations.emplace_back(v, u);
        }
    }
    return violations;
}

} // namespace inhclust
