#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fibtree/interval.hpp"

using namespace fibtree;

TEST_CASE("exact inputs are point or tight intervals")
{
    Interval a = Interval::from_long(7);
    CHECK(a.lower_double() == 7.0);
    CHECK(a.upper_double() == 7.0);
    CHECK(a.width() == 0.0);

    Interval third = Interval::from_rational(mpq_class(1, 3));
    CHECK(third.lower_double() <= 1.0 / 3.0);
    CHECK(third.upper_double() >= 1.0 / 3.0);
    CHECK(third.width() > 0.0);
    CHECK(third.width() < 1e-35);

    mpz_class big("123456789012345678901234567890123456789012345678901234567890");
    Interval b = Interval::from_integer(big, 64);
    CHECK(b.contains(big));
    CHECK_FALSE(b.contains(mpz_class(big * 2)));
}

TEST_CASE("pi encloses the constant")
{
    Interval p = Interval::pi(200);
    CHECK(p.lower_string(30).substr(0, 21) == "3.1415926535897932384");
    CHECK(p.width() < 1e-55);
}

TEST_CASE("arithmetic rounds outward")
{
    Interval three = Interval::from_long(3);
    Interval one = Interval::from_long(1);
    Interval q = one / three;
    Interval back = q * three;
    CHECK(back.contains(mpz_class(1)));
    Interval r = sqrt(Interval::from_long(2));
    Interval sq = r * r;
    CHECK(sq.contains(mpz_class(2)));
    CHECK((Interval::from_long(5) - Interval::from_long(8)).contains(mpz_class(-3)));
    CHECK((-Interval::from_long(4)).is_negative());
    CHECK(exp(Interval::from_long(0)).contains(mpz_class(1)));
    CHECK(pow(Interval::from_rational(mpq_class(27, 4)), 3).contains(Interval::from_rational(mpq_class(19683, 64))));
}

TEST_CASE("domain errors")
{
    Interval straddle = Interval::hull(mpq_class(-1), mpq_class(1));
    CHECK_THROWS_AS(Interval::from_long(1) / straddle, std::domain_error);
    CHECK_THROWS_AS(sqrt(straddle), std::domain_error);
    CHECK_THROWS_AS(pow(straddle, 2), std::domain_error);
}

TEST_CASE("sign-mixed products take all corners")
{
    Interval a = Interval::hull(mpq_class(-2), mpq_class(3));
    Interval b = Interval::hull(mpq_class(-5), mpq_class(4));
    Interval p = a * b;
    CHECK(p.lower_double() == -15.0);
    CHECK(p.upper_double() == 12.0);
}

TEST_CASE("comparison needs disjoint enclosures")
{
    Interval a = Interval::hull(mpq_class(1), mpq_class(2));
    Interval b = Interval::hull(mpq_class(2), mpq_class(3));
    Interval c = Interval::hull(mpq_class(5, 2), mpq_class(4));
    CHECK_FALSE(a.certainly_below(b));
    CHECK(a.certainly_below(c));
    CHECK_FALSE(c.certainly_below(a));
}

TEST_CASE("property: random rational expressions stay enclosed")
{
    std::mt19937_64 rng(314);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int trial = 0; trial < 1000; ++trial) {
        mpq_class x(num(rng), den(rng));
        mpq_class y(num(rng), den(rng));
        mpq_class z(num(rng), den(rng));
        x.canonicalize();
        y.canonicalize();
        z.canonicalize();
        if (z == 0) {
            continue;
        }
        const mpfr_prec_t prec = 24 + static_cast<mpfr_prec_t>(rng() % 100);
        Interval ix = Interval::from_rational(x, prec);
        Interval iy = Interval::from_rational(y, prec);
        Interval iz = Interval::from_rational(z, prec);
        Interval result = (ix * iy - ix) / iz + iy;
        mpq_class exact = (x * y - x) / z + y;
        // exact lies inside iff lo <= exact <= hi
        mpq_class lo;
        mpq_class hi;
        mpfr_get_q(lo.get_mpq_t(), result.lower());
        mpfr_get_q(hi.get_mpq_t(), result.upper());
        REQUIRE(lo <= exact);
        REQUIRE(exact <= hi);
    }
}

TEST_CASE("copies keep precision")
{
    Interval a = Interval::pi(300);
    Interval b = a;
    CHECK(b.precision() == 300);
    Interval c(64);
    c = a;
    CHECK(c.precision() == 300);
    Interval d = std::move(b);
    CHECK(d.precision() == 300);
    CHECK(d.contains(a));
}
