#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "inhclust/minimax.hpp"
#include "inhclust/rng.hpp"
#include "support/test_util.hpp"

using namespace inhclust;
using namespace inhclust::testing;

namespace {

bool satisfies(const LpInstance& lp, const std::vector<double>& x, double tol) {
    for (const LpConstraint& c : lp.constraints) {
        double lhs = 0.0;
        for (int j = 0; j < lp.num_vars; ++j) lhs += c.coeffs[j] * x[j];
        switch (c.rel) {
        case Relation::LessEq:
            if (lhs > c.rhs + tol) return false;
            break;
        case Relation::GreaterEq:
            if (lhs < c.rhs - tol) return false;
            break;
        case Relation::Equal:
            if (std::fabs(lhs - c.rhs) > tol) return false;
            break;
        }
    }
    if (!lp.lower_bound.empty())
        for (int j = 0; j < lp.num_vars; ++j)
            if (lp.lower_bound[j] && x[j] < *lp.lower_bound[j] - tol) return false;
    return true;
}

// Vertex enumeration: solve every square subsystem of active constraints and
// keep the best feasible solution. Valid for bounded polytopes.
std::optional<double> brute_force_lp(const LpInstance& lp) {
    int n = lp.num_vars;
    struct Row {
        std::vector<double> a;
        double b;
    };
    std::vector<Row> rows;
    for (const LpConstraint& c : lp.constraints) rows.push_back({c.coeffs, c.rhs});
    if (!lp.lower_bound.empty()) {
        for (int j = 0; j < n; ++j) {
            if (!lp.lower_bound[j]) continue;
            std::vector<double> a(n, 0.0);
            a[j] = 1.0;
            rows.push_back({a, *lp.lower_bound[j]});
        }
    }
    int m = static_cast<int>(rows.size());
    std::vector<int> pick(n, 0);
    std::optional<double> best;

    // Iterate all n-subsets of rows.
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        // Solve rows[idx] * x = rhs by Gaussian elimination.
        std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) a[i][j] = rows[idx[i]].a[j];
            a[i][n] = rows[idx[i]].b;
        }
        bool singular = false;
        for (int col = 0; col < n && !singular; ++col) {
            int piv = -1;
            double mag = 1e-9;
            for (int r = col; r < n; ++r)
                if (std::fabs(a[r][col]) > mag) {
                    mag = std::fabs(a[r][col]);
                    piv = r;
                }
            if (piv < 0) {
                singular = true;
                break;
            }
            std::swap(a[col], a[piv]);
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                double f = a[r][col] / a[col][col];
                for (int j = col; j <= n; ++j) a[r][j] -= f * a[col][j];
            }
        }
        if (!singular) {
            std::vector<double> x(n);
            for (int i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
            if (satisfies(lp, x, 1e-7)) {
                double obj = 0.0;
                for (int j = 0; j < n; ++j) obj += lp.objective[j] * x[j];
                if (!best || obj < *best) best = obj;
            }
        }
        int pos = n - 1;
        while (pos >= 0 && idx[pos] == m - n + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int t = pos + 1; t < n; ++t) idx[t] = idx[t - 1] + 1;
    }
    (void)pick;
    return best;
}

} // namespace

TEST_CASE("trivial solves") {
    LpInstance lp;
    lp.num_vars = 1;
    lp.objective = {1.0};
    lp.constraints.push_back({{1.0}, Relation::GreaterEq, 3.0});
    LpResult r = solve_lp(lp);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(near(r.x[0], 3.0, 1e-8));
    CHECK(near(r.objective, 3.0, 1e-8));
}

TEST_CASE("infeasible detection") {
    LpInstance lp;
    lp.num_vars = 1;
    lp.objective = {0.0};
    lp.lower_bound = {0.0};
    lp.constraints.push_back({{1.0}, Relation::LessEq, -1.0});
    CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded detection") {
    LpInstance lp;
    lp.num_vars = 1;
    lp.objective = {-1.0};
    lp.lower_bound = {0.0};
    CHECK(solve_lp(lp).status == LpStatus::Unbounded);
}

TEST_CASE("free variables and equalities") {
    // min x + y subject to x + y = 2, x - y >= -4 with both free.
    LpInstance lp;
    lp.num_vars = 2;
    lp.objective = {1.0, 1.0};
    lp.constraints.push_back({{1.0, 1.0}, Relation::Equal, 2.0});
    lp.constraints.push_back({{1.0, -1.0}, Relation::GreaterEq, -4.0});
    LpResult r = solve_lp(lp);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(near(r.objective, 2.0, 1e-8));
}

TEST_CASE("projection LP shapes") {
    Hyperedge singleton3{{0, 1, 2}, CutCost::singleton_only({1.0, 1.0, 1.0})};
    LpInstance lp3 = build_projection_lp(singleton3, false);
    CHECK(lp3.num_vars == 4);
    CHECK(lp3.constraints.size() == 6);

    Hyperedge full4{{0, 1, 2, 3}, fan_motif_cost()};
    LpInstance lp4 = build_projection_lp(full4, false);
    CHECK(lp4.num_vars == 7);
    CHECK(lp4.constraints.size() == 14);

    Hyperedge pair{{0, 1}, CutCost::singleton_only({2.0, 2.0})};
    LpInstance lp2 = build_projection_lp(pair, false);
    CHECK(lp2.num_vars == 2);
    CHECK(lp2.constraints.size() == 2);
    LpResult r2 = solve_lp(lp2);
    REQUIRE(r2.status == LpStatus::Optimal);
    CHECK(near(r2.objective, 1.0, 1e-8)); // beta = 1, self-projection
    CHECK(near(r2.x[0], 2.0, 1e-8));
}

TEST_CASE("fan-motif projection program reaches beta 1") {
    Hyperedge fan{{0, 1, 2, 3}, fan_motif_cost()};
    LpInstance lp = build_projection_lp(fan, true);
    LpResult r = solve_lp(lp);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(near(r.objective, 1.0, 1e-8));
    CHECK(satisfies(lp, r.x, 1e-8));
}

TEST_CASE("optimal solutions satisfy their constraints") {
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform_index(3));
        LpInstance lp;
        lp.num_vars = n;
        lp.objective.resize(n);
        for (double& c : lp.objective) c = rng.uniform(-1.0, 1.0);
        lp.lower_bound.assign(n, std::nullopt);
        for (int j = 0; j < n; ++j)
            if (rng.uniform() < 0.5) lp.lower_bound[j] = rng.uniform(-1.0, 0.0);
        // Box constraints keep everything bounded.
        for (int j = 0; j < n; ++j) {
            std::vector<double> a(n, 0.0);
            a[j] = 1.0;
            lp.constraints.push_back({a, Relation::LessEq, rng.uniform(1.0, 5.0)});
            a[j] = -1.0;
            lp.constraints.push_back({a, Relation::LessEq, rng.uniform(1.0, 5.0)});
        }
        for (int extra = 0; extra < n; ++extra) {
            std::vector<double> a(n);
            for (double& x : a) x = rng.uniform(-1.0, 1.0);
            lp.constraints.push_back(
                {a, rng.uniform() < 0.5 ? Relation::LessEq : Relation::GreaterEq,
                 rng.uniform(-2.0, 2.0)});
        }
        LpResult r = solve_lp(lp);
        if (r.status == LpStatus::Optimal) {
            CHECK(satisfies(lp, r.x, 1e-8));
            double obj = 0.0;
            for (int j = 0; j < n; ++j) obj += lp.objective[j] * r.x[j];
            CHECK(near(obj, r.objective, 1e-8));
        }
    }
}

TEST_CASE("simplex agrees with vertex enumeration") {
    Rng rng(99);
    int optimal_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform_index(3)); // up to 4
        LpInstance lp;
        lp.num_vars = n;
        lp.objective.resize(n);
        for (double& c : lp.objective) c = rng.uniform(-1.0, 1.0);
        lp.lower_bound.assign(n, std::nullopt);
        for (int j = 0; j < n; ++j) {
            std::vector<double> a(n, 0.0);
            a[j] = 1.0;
            lp.constraints.push_back({a, Relation::LessEq, rng.uniform(0.5, 4.0)});
            a[j] = -1.0;
            lp.constraints.push_back({a, Relation::LessEq, rng.uniform(0.5, 4.0)});
        }
        for (int extra = 0; extra < 2; ++extra) {
            std::vector<double> a(n);
            for (double& x : a) x = rng.uniform(-1.0, 1.0);
            lp.constraints.push_back(
                {a, rng.uniform() < 0.5 ? Relation::LessEq : Relation::GreaterEq,
                 rng.uniform(-1.0, 1.0)});
        }
        LpResult r = solve_lp(lp);
        auto brute = brute_force_lp(lp);
        if (r.status == LpStatus::Optimal) {
            ++optimal_seen;
            REQUIRE(brute.has_value());
            CHECK(near(r.objective, *brute, 1e-6));
        } else if (r.status == LpStatus::Infeasible) {
            CHECK_FALSE(brute.has_value());
        }
    }
    CHECK(optimal_seen > 20);
}

TEST_CASE("beta lower bound for curated families") {
    CHECK(near(beta_lower_bound(4, bound_families(4)), 1.5, 1e-6));
    CHECK(near(beta_lower_bound(5, bound_families(5)), 2.0, 1e-6));
}

TEST_CASE("beta lower bound rejects non-submodular members") {
    CHECK_THROWS(beta_lower_bound(3, {example1_table()}));
}

TEST_CASE("beta lower bound is 1 for a single balanced arity-3 cost") {
    CutCost uniform = CutCost::singleton_only({1.0, 1.0, 1.0}).materialized();
    CHECK(near(beta_lower_bound(3, {uniform}), 1.0, 1e-6));
}

TEST_CASE("bound families are all symmetric submodular") {
    for (int arity : {4, 5, 6})
        for (const CutCost& c : bound_families(arity)) {
            CHECK(c.fully_defined());
            CHECK(is_submodular(c));
        }
}
