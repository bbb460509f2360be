#include "inhclust/minimax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace inhclust {

namespace {

constexpr double kPivotTol = 1e-9;

// Dense simplex tableau. Columns: structural vars, then slack/surplus, then
// artificials, then the right-hand side.
struct Tableau {
    int rows = 0;
    int cols = 0; // including rhs
    std::vector<double> data;
    std::vector<int> basis;

    double& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const {
        return data[static_cast<std::size_t>(i) * cols + j];
    }
};

void pivot(Tableau& tab, std::vector<double>& obj, double& obj_value, int row,
           int col) {
    double piv = tab.at(row, col);
    for (int j = 0; j < tab.cols; ++j) tab.at(row, j) /= piv;
    for (int i = 0; i < tab.rows; ++i) {
        if (i == row) continue;
        double factor = tab.at(i, col);
        if (factor == 0.0) continue;
        for (int j = 0; j < tab.cols; ++j) tab.at(i, j) -= factor * tab.at(row, j);
    }
    double ofac = obj[col];
    if (ofac != 0.0) {
        for (int j = 0; j < tab.cols; ++j) obj[j] -= ofac * tab.at(row, j);
        obj_value -= ofac * tab.at(row, tab.cols - 1);
    }
    obj[col] = 0.0;
    tab.basis[row] = col;
}

// Bland's rule keeps the iteration finite: smallest eligible entering column,
// ties in the ratio test broken by the smallest basic variable index.
// Returns false when no entering column remains (optimal), throws on
// unboundedness in phase 2.
enum class StepResult { Optimal, Pivoted, Unbounded };

StepResult simplex_step(Tableau& tab, std::vector<double>& obj, double& obj_value,
                        int usable_cols) {
    int entering = -1;
    for (int j = 0; j < usable_cols; ++j) {
        if (obj[j] < -kPivotTol) {
            entering = j;
            break;
        }
    }
    if (entering < 0) return StepResult::Optimal;

    int leaving = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < tab.rows; ++i) {
        double a = tab.at(i, entering);
        if (a > kPivotTol) {
            double ratio = tab.at(i, tab.cols - 1) / a;
            if (ratio < best_ratio - kPivotTol ||
                (ratio < best_ratio + kPivotTol && leaving >= 0 &&
                 tab.basis[i] < tab.basis[leaving])) {
                best_ratio = ratio;
                leaving = i;
            }
        }
    }
    if (leaving < 0) return StepResult::Unbounded;
    pivot(tab, obj, obj_value, leaving, entering);
    return StepResult::Pivoted;
}

} // namespace

LpResult solve_lp(const LpInstance& lp) {
    int n = lp.num_vars;
    if (static_cast<int>(lp.objective.size()) != n)
        throw std::invalid_argument("objective length does not match num_vars");
    for (const LpConstraint& c : lp.constraints)
        if (static_cast<int>(c.coeffs.size()) != n)
            throw std::invalid_argument("constraint length does not match num_vars");
    std::vector<std::optional<double>> lower = lp.lower_bound;
    if (lower.empty()) lower.assign(n, std::nullopt);
    if (static_cast<int>(lower.size()) != n)
        throw std::invalid_argument("lower bound list does not match num_vars");

    // Shift bounded variables to y >= 0, split free variables as y+ - y-.
    std::vector<int> col_plus(n), col_minus(n, -1);
    int ns = 0;
    for (int j = 0; j < n; ++j) {
        col_plus[j] = ns++;
        if (!lower[j]) col_minus[j] = ns++;
    }

    int m = static_cast<int>(lp.constraints.size());
    std::vector<std::vector<double>> rows(m, std::vector<double>(ns, 0.0));
    std::vector<double> rhs(m, 0.0);
    std::vector<Relation> rel(m);
    for (int i = 0; i < m; ++i) {
        const LpConstraint& c = lp.constraints[i];
        rel[i] = c.rel;
        double b = c.rhs;
        for (int j = 0; j < n; ++j) {
            double a = c.coeffs[j];
            if (a == 0.0) continue;
            rows[i][col_plus[j]] += a;
            if (col_minus[j] >= 0)
                rows[i][col_minus[j]] -= a;
            else
                b -= a * *lower[j];
        }
        rhs[i] = b;
        if (rhs[i] < 0.0) {
            for (double& a : rows[i]) a = -a;
            rhs[i] = -rhs[i];
            rel[i] = rel[i] == Relation::LessEq      ? Relation::GreaterEq
                     : rel[i] == Relation::GreaterEq ? Relation::LessEq
                                                     : Relation::Equal;
        }
    }

    int num_slack = 0, num_art = 0;
    for (Relation r : rel) {
        if (r != Relation::Equal) ++num_slack;
        if (r != Relation::LessEq) ++num_art;
    }
    Tableau tab;
    tab.rows = m;
    tab.cols = ns + num_slack + num_art + 1;
    tab.data.assign(static_cast<std::size_t>(tab.rows) * tab.cols, 0.0);
    tab.basis.assign(m, -1);

    int art_begin = ns + num_slack;
    int slack_at = ns, art_at = art_begin;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < ns; ++j) tab.at(i, j) = rows[i][j];
        tab.at(i, tab.cols - 1) = rhs[i];
        if (rel[i] == Relation::LessEq) {
            tab.at(i, slack_at) = 1.0;
            tab.basis[i] = slack_at++;
        } else if (rel[i] == Relation::GreaterEq) {
            tab.at(i, slack_at) = -1.0;
            ++slack_at;
            tab.at(i, art_at) = 1.0;
            tab.basis[i] = art_at++;
        } else {
            tab.at(i, art_at) = 1.0;
            tab.basis[i] = art_at++;
        }
    }

    // Phase 1: drive the artificial variables to zero.
    if (num_art > 0) {
        std::vector<double> obj(tab.cols, 0.0);
        double obj_value = 0.0;
        for (int i = 0; i < m; ++i) {
            if (tab.basis[i] >= art_begin) {
                for (int j = 0; j < tab.cols; ++j) obj[j] -= tab.at(i, j);
                obj_value -= tab.at(i, tab.cols - 1);
            }
        }
        for (int j = art_begin; j < tab.cols - 1; ++j) obj[j] = 0.0;
        while (true) {
            StepResult r = simplex_step(tab, obj, obj_value, tab.cols - 1);
            if (r == StepResult::Optimal) break;
            if (r == StepResult::Unbounded)
                throw std::runtime_error("phase-1 simplex reported unbounded");
        }
        if (-obj_value > 1e-7) return {LpStatus::Infeasible, {}, 0.0};
        // Pivot residual artificials out of the basis where possible.
        for (int i = 0; i < m; ++i) {
            if (tab.basis[i] < art_begin) continue;
            int col = -1;
            for (int j = 0; j < art_begin; ++j) {
                if (std::fabs(tab.at(i, j)) > kPivotTol) {
                    col = j;
                    break;
                }
            }
            if (col >= 0) {
                std::vector<double> dummy(tab.cols, 0.0);
                double dv = 0.0;
                pivot(tab, dummy, dv, i, col);
            }
        }
    }

    // Phase 2: original objective over structural columns.
    std::vector<double> cost(tab.cols, 0.0);
    for (int j = 0; j < n; ++j) {
        cost[col_plus[j]] += lp.objective[j];
        if (col_minus[j] >= 0) cost[col_minus[j]] -= lp.objective[j];
    }
    std::vector<double> obj = cost;
    double obj_value = 0.0;
    for (int i = 0; i < m; ++i) {
        double cb = cost[tab.basis[i]];
        if (cb == 0.0) continue;
        for (int j = 0; j < tab.cols; ++j) obj[j] -= cb * tab.at(i, j);
        obj_value -= cb * tab.at(i, tab.cols - 1);
    }
    // Artificials may not re-enter.
    for (int j = art_begin; j < tab.cols - 1; ++j)
        obj[j] = std::max(obj[j], 0.0);
    while (true) {
        StepResult r = simplex_step(tab, obj, obj_value, art_begin);
        if (r == StepResult::Optimal) break;
        if (r == StepResult::Unbounded) return {LpStatus::Unbounded, {}, 0.0};
    }

    std::vector<double> y(ns, 0.0);
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] < ns) y[tab.basis[i]] = tab.at(i, tab.cols - 1);
    LpResult res;
    res.status = LpStatus::Optimal;
    res.x.resize(n);
    for (int j = 0; j < n; ++j) {
        double v = y[col_plus[j]];
        if (col_minus[j] >= 0)
            v -= y[col_minus[j]];
        else
            v += *lower[j];
        res.x[j] = v;
    }
    res.objective = 0.0;
    for (int j = 0; j < n; ++j) res.objective += lp.objective[j] * res.x[j];
    return res;
}

LpInstance build_projection_lp(const Hyperedge& e, bool require_nonneg) {
    int arity = e.cost.arity();
    if (static_cast<int>(e.vertices.size()) != arity)
        throw std::invalid_argument("hyperedge size does not match cost arity");
    int num_pairs = arity * (arity - 1) / 2;

    // Pair (i, j), i < j, at lexicographic index; beta is the last variable.
    std::vector<std::vector<int>> pair_index(arity, std::vector<int>(arity, -1));
    int idx = 0;
    for (int i = 0; i < arity; ++i)
        for (int j = i + 1; j < arity; ++j) pair_index[i][j] = idx++;

    LpInstance lp;
    lp.num_vars = num_pairs + 1;
    int beta = num_pairs;
    lp.objective.assign(lp.num_vars, 0.0);
    lp.objective[beta] = 1.0;
    lp.lower_bound.assign(lp.num_vars, std::nullopt);
    lp.lower_bound[beta] = 1.0;
    if (require_nonneg)
        for (int p = 0; p < num_pairs; ++p) lp.lower_bound[p] = 0.0;

    int defined = 0;
    for_each_cut_class(arity, [&](std::uint64_t mask) {
        auto w = e.cost.value(mask);
        if (!w) return;
        ++defined;
        std::vector<double> crossing(lp.num_vars, 0.0);
        for (int i = 0; i < arity; ++i) {
            if (!(mask & (std::uint64_t{1} << i))) continue;
            for (int j = 0; j < arity; ++j) {
                if (mask & (std::uint64_t{1} << j)) continue;
                crossing[pair_index[std::min(i, j)][std::max(i, j)]] = 1.0;
            }
        }
        // w(S) <= crossing sum; when w(S) = 0 the pair collapses to equality.
        lp.constraints.push_back({crossing, Relation::GreaterEq, *w});
        std::vector<double> upper = crossing;
        upper[beta] = -*w;
        lp.constraints.push_back({std::move(upper), Relation::LessEq, 0.0});
    });
    if (defined == 0)
        throw std::invalid_argument("cost defines no proper nonempty cut class");
    return lp;
}

double beta_lower_bound(int arity, const std::vector<CutCost>& families) {
    if (arity < 2 || arity > 12)
        throw std::invalid_argument("beta_lower_bound supports arity in [2, 12]");
    if (families.empty()) throw std::invalid_argument("empty cost family");
    std::vector<CutCost> tables;
    tables.reserve(families.size());
    for (const CutCost& c : families) {
        if (c.arity() != arity)
            throw std::invalid_argument("family member arity mismatch");
        CutCost full = c.materialized();
        if (!is_submodular(full))
            throw std::invalid_argument("family member is not submodular");
        tables.push_back(std::move(full));
    }

    // Coefficient classes phi(r, s), r = |{v,v~} cap S'|, folded by the
    // symmetries phi(0,s) = phi(2, arity-s) and phi(1,s) = phi(1, arity-s).
    // The impossible combinations (2,1) and (0, arity-1) are excluded.
    auto canonical = [arity](int r, int s) -> std::pair<int, int> {
        std::pair<int, int> a{r, s};
        std::pair<int, int> b = r == 1 ? std::pair<int, int>{1, arity - s}
                                       : std::pair<int, int>{2 - r, arity - s};
        return std::min(a, b);
    };
    std::vector<std::pair<int, int>> classes;
    for (int r = 0; r <= 2; ++r) {
        for (int s = 1; s <= arity - 1; ++s) {
            if (r == 2 && s == 1) continue;
            if (r == 0 && s == arity - 1) continue;
            auto c = canonical(r, s);
            if (std::find(classes.begin(), classes.end(), c) == classes.end())
                classes.push_back(c);
        }
    }
    std::sort(classes.begin(), classes.end());
    auto class_of = [&](int r, int s) {
        auto c = canonical(r, s);
        return static_cast<int>(std::find(classes.begin(), classes.end(), c) -
                                classes.begin());
    };

    int num_classes = static_cast<int>(classes.size());
    LpInstance lp;
    lp.num_vars = num_classes + 1;
    int beta = num_classes;
    lp.objective.assign(lp.num_vars, 0.0);
    lp.objective[beta] = 1.0;
    lp.lower_bound.assign(lp.num_vars, std::nullopt);
    lp.lower_bound[beta] = 0.0;

    std::uint64_t full = full_mask(arity);
    for (const CutCost& w : tables) {
        for_each_cut_class(arity, [&](std::uint64_t cut_mask) {
            // Crossing sum of the linear map, expanded in the phi classes:
            // for every crossing pair and every subset S', the coefficient of
            // phi(class) accumulates w(S').
            std::vector<double> row(lp.num_vars, 0.0);
            for (int i = 0; i < arity; ++i) {
                if (!(cut_mask & (std::uint64_t{1} << i))) continue;
                for (int j = 0; j < arity; ++j) {
                    if (cut_mask & (std::uint64_t{1} << j)) continue;
                    std::uint64_t pair_mask =
                        (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
                    for (std::uint64_t sp = 1; sp < full; ++sp) {
                        int r = subset_size(sp & pair_mask);
                        int s = subset_size(sp);
                        row[class_of(r, s)] += w.value_or_throw(sp);
                    }
                }
            }
            double ws = w.value_or_throw(cut_mask);
            lp.constraints.push_back({row, Relation::GreaterEq, ws});
            row[beta] = -ws;
            lp.constraints.push_back({std::move(row), Relation::LessEq, 0.0});
        });
    }

    LpResult res = solve_lp(lp);
    if (res.status != LpStatus::Optimal)
        throw std::runtime_error("beta lower-bound LP did not reach an optimum");
    return res.objective;
}

std::vector<CutCost> bound_families(int arity) {
    // Subset values keyed by position masks; each row fully specifies a
    // symmetric submodular cost of the given arity.
    auto mk = [arity](std::vector<std::pair<std::uint64_t, double>> entries) {
        return CutCost::table(arity, entries);
    };
    if (arity == 4) {
        auto row = [&](double w1, double w2, double w3, double w4, double w12,
                       double w13, double w14) {
            return mk({{1, w1}, {2, w2}, {4, w3}, {8, w4}, {3, w12}, {5, w13}, {9, w14}});
        };
        return {row(0, 1, 1, 1, 1, 1, 1), row(0, 0, 1, 1, 0, 1, 1),
                row(1, 1, 1, 1, 1, 1, 1), row(1, 1, 1, 1, 2, 2, 2)};
    }
    if (arity == 5) {
        auto row = [&](std::vector<double> v) {
            return mk({{1, v[0]},  {2, v[1]},  {4, v[2]},  {8, v[3]},  {16, v[4]},
                       {3, v[5]},  {5, v[6]},  {9, v[7]},  {17, v[8]}, {6, v[9]},
                       {10, v[10]}, {18, v[11]}, {12, v[12]}, {20, v[13]}, {24, v[14]}});
        };
        return {row({0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}),
                row({0, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2}),
                row({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}),
                row({1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 1, 1, 1}),
                row({1, 1, 1, 1, 1, 0, 2, 2, 2, 2, 2, 2, 1, 1, 1}),
                row({1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2})};
    }
    if (arity == 6) {
        // Order: singletons 1..6; pairs 12,13,14,15,16,23,24,25,26,
        // 34,35,36,45,46,56; triples 123,124,125,126,134,135,136,145,146,156.
        const std::uint64_t masks[] = {1,  2,  4,  8,  16, 32, 3,  5,  9,  17, 33,
                                       6,  10, 18, 34, 12, 20, 36, 24, 40, 48, 7,
                                       11, 19, 35, 13, 21, 37, 25, 41, 49};
        auto row = [&](std::vector<double> v) {
            std::vector<std::pair<std::uint64_t, double>> entries;
            for (std::size_t i = 0; i < 31; ++i) entries.emplace_back(masks[i], v[i]);
            return mk(entries);
        };
        return {
            row({0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
                 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}),
            row({0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2,
                 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}),
            row({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
                 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}),
            row({1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2,
                 3, 3, 3, 3, 3, 3, 3, 3, 3, 3}),
            row({1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1,
                 1, 1, 1, 1, 2, 2, 2, 2, 2, 2}),
            row({1, 1, 1, 1, 1, 1, 0, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1,
                 1, 1, 1, 1, 2, 2, 2, 2, 2, 2}),
            row({1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2, 1, 1, 1,
                 1, 2, 2, 2, 2, 2, 2, 2, 2, 2}),
            row({1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2,
                 1, 3, 3, 3, 3, 3, 3, 3, 3, 3}),
            row({1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2, 1, 1, 1,
                 0, 2, 2, 2, 2, 2, 2, 2, 2, 2})};
    }
    throw std::invalid_argument("bound families available for arity 4, 5 and 6");
}

} // namespace inhclust
