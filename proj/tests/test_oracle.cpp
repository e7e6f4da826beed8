#include <catch2/catch_amalgamated.hpp>

#include "fibtree/oracle.hpp"
#include "fibtree/pair_chain.hpp"

using namespace fibtree;

TEST_CASE("oracle counts of known small values")
{
    Oracle o;
    CHECK(o.count({1, 1}, 1) == 5);
    CHECK(o.count({1, 2}, 1) == 6);
    CHECK(o.count({1, 1}, 4) == 879);
    CHECK(o.count({1, 1}, 0) == 1);
    CHECK(o.count({2, 1}, 1) == 7);
    CHECK(o.count({1, 4}, 1) == 1);
    CHECK(o.count({3, 5}, 2) == 8);
}

TEST_CASE("constrained oracle counts")
{
    Oracle o;
    CHECK(o.count_constrained(1, Constraint::Primitive) == 5);
    CHECK(o.count_constrained(2, Constraint::Primitive) == 2);
    CHECK(o.count_constrained(2, Constraint::ZeroAvoiding) == 3);
    CHECK(o.count_constrained(1, Constraint::ZeroAvoiding) == 1);
    CHECK(o.count_constrained(0, Constraint::ZeroAvoiding) == 1);
    CHECK(o.count_constrained(0, Constraint::Primitive) == 0);
    CHECK(o.count_constrained(3, Constraint::Unconstrained) == 152);
}

TEST_CASE("oracle rejects bad targets and deep requests")
{
    Oracle o(12);
    CHECK_THROWS_AS(o.count({2, 4}, 1), std::invalid_argument);
    CHECK_THROWS_AS(o.count({1, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(o.count({1, 1}, 5), DepthCapExceeded);
    CHECK_THROWS_AS(o.count_constrained(5, Constraint::Primitive), DepthCapExceeded);
    CHECK_THROWS_AS(o.tally(13, 10), DepthCapExceeded);
    CHECK_NOTHROW(o.count({1, 1}, 4));
}

TEST_CASE("tally agrees with per-target counting")
{
    Oracle o;
    OccurrenceTable t = o.tally(12, 20);
    for (Pair p : {Pair{1, 1}, Pair{1, 2}, Pair{2, 1}, Pair{3, 5}, Pair{1, 4}, Pair{4, 7}}) {
        for (unsigned d = 0; d <= 12; ++d) {
            REQUIRE(t.at(p, d) == o.count_at_depth(p, d));
        }
    }
    CHECK_THROWS_AS(t.at({21, 1}, 0), std::out_of_range);
}

TEST_CASE("property: constrained counts are ordered")
{
    Oracle o;
    for (unsigned n = 2; n <= 7; ++n) {
        const auto s = o.count_constrained(n, Constraint::Primitive);
        const auto b = o.count_constrained(n, Constraint::ZeroAvoiding);
        const auto a = o.count_constrained(n, Constraint::Unconstrained);
        REQUIRE(s <= b);
        REQUIRE(b <= a);
    }
}

TEST_CASE("property: occurrences sit exactly at depths SW + 3N")
{
    Oracle o;
    const unsigned cap = 21;
    std::vector<Occurrence> pairs = restricted_tree(6);
    Value bound = 1;
    for (const Occurrence& occ : pairs) {
        bound = std::max({bound, occ.pair.a, occ.pair.b});
    }
    OccurrenceTable t = o.tally(cap, bound);
    for (const Occurrence& occ : pairs) {
        if (occ.pair.a == 0 || occ.pair.b == 0) {
            continue;
        }
        for (unsigned d = 0; d <= cap; ++d) {
            const bool expected = d >= occ.depth && (d - occ.depth) % 3 == 0;
            INFO(occ.pair.a << "," << occ.pair.b << " depth " << d);
            REQUIRE((t.at(occ.pair, d) > 0) == expected);
        }
    }
}

TEST_CASE("property: shortest walk length is the first oracle depth")
{
    Oracle o;
    const unsigned cap = 16;
    std::vector<Occurrence> pairs = restricted_tree(12);
    for (const Occurrence& occ : pairs) {
        if (occ.pair.a == 0 || occ.pair.b == 0 || occ.depth > cap) {
            continue;
        }
        unsigned first = 0;
        while (o.count_at_depth(occ.pair, first) == 0) {
            ++first;
        }
        REQUIRE(first == shortest_walk_length(occ.pair));
    }
}
