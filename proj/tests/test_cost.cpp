#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "inhclust/cost.hpp"
#include "inhclust/oracle.hpp"
#include "support/test_util.hpp"

using namespace inhclust;
using namespace inhclust::testing;

TEST_CASE("table evaluation and symmetry") {
    CutCost c = example1_table();
    CHECK(c.value_or_throw(0b100) == 1.0);      // {2}
    CHECK(c.value_or_throw(0b011) == 1.0);      // {0,1}, the complement class
    CHECK(c.value_or_throw(0) == 0.0);
    CHECK(c.value_or_throw(0b111) == 0.0);
    CHECK(c.value_or_throw(0b001) == 0.0);

    // Symmetry holds exactly on every variant.
    for (const CutCost& cost :
         {example1_table(), fan_motif_cost(), CutCost::zhou(5, 0.7),
          CutCost::benson(6, 1.3)}) {
        std::uint64_t full = full_mask(cost.arity());
        for (std::uint64_t m = 0; m <= full; ++m) {
            auto a = cost.value(m);
            auto b = cost.value(full & ~m);
            CHECK(a.has_value() == b.has_value());
            if (a) CHECK(*a == *b);
        }
    }
}

TEST_CASE("zhou and benson closed forms") {
    CutCost z = CutCost::zhou(3, 1.0);
    CHECK(near(z.value_or_throw(0b001), 2.0 / 3.0));
    CHECK(near(z.value_or_throw(0b011), 2.0 / 3.0));

    CutCost b = CutCost::benson(4, 2.5);
    CHECK(b.value_or_throw(0b0001) == 2.5);
    CHECK(b.value_or_throw(0b0111) == 2.5);
    CHECK(b.value_or_throw(0b1111) == 0.0);
}

TEST_CASE("singleton-only definedness") {
    CutCost c = CutCost::singleton_only({0.2, 0.3, 0.4, 0.5});
    CHECK(c.value_or_throw(0b0001) == 0.2);
    CHECK(c.value_or_throw(0b1110) == 0.2); // co-singleton
    CHECK_FALSE(c.value(0b0011).has_value());
    CHECK_FALSE(c.fully_defined());
    // Arity 3 singleton costs determine the whole table.
    CHECK(CutCost::singleton_only({1.0, 2.0, 2.5}).fully_defined());
}

TEST_CASE("input validation") {
    CHECK_THROWS(CutCost::singleton_only({1.0, -0.1, 1.0}));
    CHECK_THROWS(CutCost::table(3, {{1, 1.0}, {0b110, 2.0}})); // class conflict
    CHECK_THROWS(CutCost::zhou(3, -1.0));
    CHECK_THROWS(CutCost::table(1, {}));
}

TEST_CASE("submodularity detection") {
    // Cut functions of latent graphs are submodular.
    SubmodularGenerator gen(4, 71);
    for (int t = 0; t < 20; ++t) {
        std::vector<double> latent;
        CHECK(is_submodular(gen.next_latent(&latent)));
    }
    CHECK_FALSE(is_submodular(example2_table()));
    CHECK(is_submodular(CutCost::benson(4, 1.0).materialized()));
    CHECK_FALSE(is_submodular(example1_table()));
    CHECK_THROWS(is_submodular(CutCost::singleton_only({1, 1, 1, 1})));
}

TEST_CASE("zhou and benson are submodular up to arity 7") {
    for (int arity = 2; arity <= 7; ++arity) {
        CHECK(is_submodular(CutCost::zhou(arity, 1.0).materialized()));
        CHECK(is_submodular(CutCost::benson(arity, 1.0).materialized()));
    }
}

TEST_CASE("submodular completion of partial costs") {
    // Singletons (1/3, 1/3, 1, 1) admit a submodular completion.
    CutCost partial = CutCost::singleton_only({1.0 / 3, 1.0 / 3, 1.0, 1.0});
    auto completed = complete_to_submodular(partial);
    REQUIRE(completed.has_value());
    CHECK(is_submodular(*completed));
    for (int v = 0; v < 4; ++v)
        CHECK(near(completed->value_or_throw(std::uint64_t{1} << v),
                   partial.value_or_throw(std::uint64_t{1} << v), 1e-9));

    // The reference completion (2/3, 1, 1) is itself submodular-feasible.
    CutCost reference = CutCost::table(4, {{1, 1.0 / 3},
                                           {2, 1.0 / 3},
                                           {4, 1.0},
                                           {8, 1.0},
                                           {0b0011, 2.0 / 3},
                                           {0b0101, 1.0},
                                           {0b1001, 1.0}});
    CHECK(is_submodular(reference));
}

TEST_CASE("completion is the identity when nothing is free") {
    CutCost forced = CutCost::singleton_only({1.0, 2.0, 2.5});
    auto completed = complete_to_submodular(forced);
    REQUIRE(completed.has_value());
    std::uint64_t full = full_mask(3);
    for (std::uint64_t m = 1; m < full; ++m)
        CHECK(near(completed->value_or_throw(m), forced.value_or_throw(m), 1e-9));

    // Fully specified and non-submodular: no completion exists.
    CHECK_FALSE(complete_to_submodular(example2_table()).has_value());
}

TEST_CASE("completion rejects oversized or underspecified inputs") {
    CHECK_THROWS(complete_to_submodular(
        CutCost::table(4, {{0b0011, 1.0}}))); // singletons missing
    CHECK_THROWS(complete_to_submodular(CutCost::benson(9, 1.0)));
}

TEST_CASE("singleton balance condition") {
    auto v1 = singleton_balance_check(CutCost::singleton_only({0.0, 0.0, 1.0}));
    REQUIRE(v1.size() == 1);
    CHECK(v1[0] == std::pair<int, int>{0, 1});

    CHECK(singleton_balance_check(CutCost::singleton_only({1.0, 1.0, 1.0})).empty());

    auto v3 = singleton_balance_check(
        CutCost::singleton_only({1.0 / 3, 1.0 / 3, 1.0, 1.0}));
    REQUIRE(v3.size() == 1);
    CHECK(v3[0] == std::pair<int, int>{0, 1});
}
