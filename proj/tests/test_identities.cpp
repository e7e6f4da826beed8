#include <catch2/catch_amalgamated.hpp>

#include "fibtree/counting.hpp"

using namespace fibtree;

TEST_CASE("identity spot values")
{
    Sequences q;
    CHECK(check_identity(q, "lemma61", 0));
    CHECK(q.A11(2) - 16 * q.A11(1) + 64 * q.A11(0) == 11);
    CHECK(check_identity(q, "lemma60", 1));
    CHECK(check_identity(q, "abformula", 2));
    CHECK(check_identity(q, "bformula", 3));
}

TEST_CASE("identity registry")
{
    Sequences q;
    std::vector<std::string> names = identity_names();
    CHECK(names.size() == 14);
    CHECK_THROWS_AS(check_identity(q, "nope", 3), std::invalid_argument);
    CHECK_THROWS_AS(check_identity(q, "eqn3", 1), std::out_of_range);
    CHECK_THROWS_AS(identity_min_index("nope"), std::invalid_argument);
    CHECK_THROWS_AS(check_coprimepair3(q, 0, 3), std::invalid_argument);
}

TEST_CASE("every identity holds over a prefix")
{
    Sequences q;
    for (const std::string& name : identity_names()) {
        for (std::size_t n = identity_min_index(name); n <= 60; ++n) {
            INFO(name << " n=" << n);
            REQUIRE(check_identity(q, name, n));
        }
    }
}

TEST_CASE("convolution over the parent pair, both parities")
{
    Sequences q;
    for (unsigned k = 1; k <= 8; ++k) {
        for (std::size_t n = k / 3; n <= 40; ++n) {
            INFO("k=" << k << " n=" << n);
            REQUIRE(check_coprimepair3(q, k, n));
        }
    }
}
