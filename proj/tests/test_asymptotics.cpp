#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fibtree/asymptotics.hpp"

using namespace fibtree;

namespace {

double mid(const Interval& x) { return 0.5 * (x.lower_double() + x.upper_double()); }

bool all_hold(const std::vector<BoundCertificate>& certs)
{
    for (const auto& c : certs) {
        if (c.verdict != Verdict::Holds) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("Robbins bounds bracket factorials")
{
    auto [lo1, hi1] = robbins_bounds(1);
    CHECK(lo1.upper_double() < 1.0);
    CHECK(hi1.lower_double() > 1.0);

    auto [lo, hi] = robbins_bounds(10);
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), 10);
    CHECK(lo.certainly_below(Interval::from_integer(f)));
    CHECK(Interval::from_integer(f).certainly_below(hi));

    Sequences q;
    auto certs = certify(q, "robbins", 500, 500);
    REQUIRE(certs.size() == 2);
    CHECK(all_hold(certs));
    CHECK_THROWS_AS(robbins_bounds(0), std::out_of_range);
}

TEST_CASE("certificate registry")
{
    Sequences q;
    CHECK(certificate_ids().size() == 11);
    CHECK(certificate_min_index("thmA") == 100);
    CHECK(certificate_min_index("ainequality") == 0);
    CHECK_THROWS_AS(certify(q, "nope", 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(certify(q, "dineq", 99, 120), std::out_of_range);
    CHECK_THROWS_AS(certify(q, "binom3n", 5, 4), std::invalid_argument);
    auto certs = certify(q, "ainequality", 0, 3);
    CHECK(certs.size() == 4);
    CHECK(certs[0].id == "ainequality");
    auto two = certify(q, "binom3n", 1, 1);
    CHECK(two[0].id == "binom3n.lower");
    CHECK(two[1].id == "binom3n.upper");
}

TEST_CASE("bound families over short ranges")
{
    Sequences q;
    CHECK(all_hold(certify(q, "binom3n", 1, 300)));
    CHECK(all_hold(certify(q, "cor31S", 100, 300)));
    CHECK(all_hold(certify(q, "cor31B", 100, 300)));
    CHECK(all_hold(certify(q, "thmA", 100, 300)));
    CHECK(all_hold(certify(q, "dineq", 100, 300)));
    CHECK(all_hold(certify(q, "a21", 100, 300)));
    CHECK(all_hold(certify(q, "a12", 100, 300)));
    CHECK(all_hold(certify(q, "cor41", 1, 300)));
    CHECK(all_hold(certify(q, "cn10000", 0, 0)));
}

TEST_CASE("the A_(1,2) upper envelope is crossed for large n")
{
    // The exact count overtakes the upper envelope from n = 1311 on.
    Sequences q;
    auto certs = certify(q, "a12", 1310, 1311);
    REQUIRE(certs.size() == 4);
    CHECK(certs[1].id == "a12.upper");
    CHECK(certs[1].verdict == Verdict::Holds);
    CHECK(certs[3].verdict == Verdict::Fails);
    CHECK(certs[2].verdict == Verdict::Holds);
}

TEST_CASE("verdicts do not depend on precision once decided")
{
    Sequences q;
    CertifyOptions lowp;
    lowp.start_precision = 64;
    CertifyOptions highp;
    highp.start_precision = 1024;
    for (const char* id : {"thmA", "a12", "dineq"}) {
        auto a = certify(q, id, 1300, 1320, lowp);
        auto b = certify(q, id, 1300, 1320, highp);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            REQUIRE(a[i].verdict == b[i].verdict);
            REQUIRE(b[i].precision == 1024);
        }
    }
}

TEST_CASE("C_n ratio")
{
    Sequences q;
    Interval c1 = ratio_Cn(q, 1);
    CHECK(std::abs(mid(c1) - 5.0 / 6.75) < 1e-15);
    CHECK_THROWS_AS(ratio_Cn(q, 0), std::out_of_range);

    Interval c = ratio_Cn(q, 10000, 1e-12);
    CHECK(c.width() < 1e-12);
    CHECK(c.lower_double() > 19.7502);
    CHECK(c.upper_double() < 19.7505);
}

TEST_CASE("C_n stays inside the A11 envelope")
{
    Sequences q;
    const Interval lead = leading_constant_for_class(0, 256);
    for (unsigned long n = 100; n <= 5000; n += 7) {
        Interval c = ratio_Cn(q, n, 1e-20);
        const mpq_class nn(static_cast<long>(n));
        mpq_class lo = 1 - mpq_class(1387, 72) / nn;
        mpq_class hi = lo + mpq_class(5548, 9) / (nn * nn);
        lo.canonicalize();
        hi.canonicalize();
        REQUIRE((lead * Interval::from_rational(lo, 256)).certainly_below(c));
        REQUIRE(c.certainly_below(lead * Interval::from_rational(hi, 256)));
    }
}

TEST_CASE("t constants")
{
    CHECK(t_constant(0).value == 1);
    CHECK(t_constant(1).value == mpq_class(5, 3));
    CHECK(t_constant(2).value == mpq_class(11, 4));
    CHECK(t_constant(3).value == mpq_class(2, 3));
    CHECK(t_constant(5).value == mpq_class(7, 4));
    CHECK(t_constant(5).family == ConstantFamily::T);
    for (unsigned k = 0; k <= 100; ++k) {
        REQUIRE(t_constant(k).value == t_by_recurrence(k).value);
    }
    for (unsigned k = 90; k <= 150; ++k) {
        REQUIRE(abs(t_constant(k).value) < mpq_class(1, 1000000));
    }
}

TEST_CASE("s constants")
{
    CHECK(s_constant(0).value == mpq_class(-1387, 72));
    CHECK(s_constant(1).value == mpq_class(-60877, 2880));
    CHECK(s_constant(2).value == mpq_class(-18173, 792));
    CHECK(s_constant(2).family == ConstantFamily::S);
    mpq_class s3 = (t_constant(1).value * s_constant(1).value - s_constant(0).value * t_constant(0).value)
                   / t_constant(3).value;
    CHECK(s_constant(3).value == s3);
    CHECK(s_constant_derived(1).value == mpq_class(-7559, 360));
    CHECK(s_constant_derived(0).value == s_constant(0).value);
    CHECK(s_constant_derived(2).value == s_constant(2).value);
}

TEST_CASE("leading constants")
{
    // 19.78840173 is the constant rounded to 8 decimals: the enclosure must
    // sit inside that rounding cell.
    Interval c11 = leading_constant({1, 1});
    CHECK(Interval::from_rational(mpq_class(1978840172, 100000000) + mpq_class(1, 200000000)).certainly_below(c11));
    CHECK(c11.certainly_below(Interval::from_rational(mpq_class(1978840173, 100000000) + mpq_class(1, 200000000))));
    CHECK(c11.width() < 1e-30);

    const double root = std::sqrt(3.0 * M_PI);
    CHECK(std::abs(mid(leading_constant({1, 2})) - 405.0 / (4.0 * root)) < 1e-12);
    CHECK(std::abs(mid(leading_constant({2, 1})) - 2673.0 / (16.0 * root)) < 1e-12);
    CHECK(std::abs(mid(leading_constant({2, 3})) - 2673.0 / (16.0 * root)) < 1e-12);
    CHECK(leading_constant({3, 5}).contains(leading_constant_for_class(3)));
}

TEST_CASE("second-order estimates approach the s constants")
{
    Sequences q;
    for (unsigned k = 0; k <= 2; ++k) {
        const double est = mid(empirical_second_order(q, k, 5000));
        const double s = s_constant(k).value.get_d();
        INFO("k=" << k << " estimate " << est << " constant " << s);
        REQUIRE(std::abs(est - s) < 0.05 * std::abs(s));
    }
    CHECK_THROWS_AS(empirical_second_order(q, 0, 0), std::out_of_range);
}

TEST_CASE("extrapolated second-order estimates match the re-derived s family")
{
    // 2 E(2n) - E(n) removes the 1/n term of the estimate.
    Sequences q;
    for (unsigned k = 0; k <= 8; ++k) {
        const double e1 = mid(empirical_second_order(q, k, 2500));
        const double e2 = mid(empirical_second_order(q, k, 5000));
        const double extrapolated = 2 * e2 - e1;
        const double derived = s_constant_derived(k).value.get_d();
        INFO("k=" << k << " extrapolated " << extrapolated << " derived " << derived);
        REQUIRE(std::abs(extrapolated - derived) < 2e-3 * std::abs(derived));
    }
}

TEST_CASE("s recurrence without the 27/8 factor departs from the counts at k = 5")
{
    Sequences q;
    const double est = mid(empirical_second_order(q, 5, 5000));
    CHECK(est < 0);
    CHECK(s_constant(5).value > 0);
    CHECK(s_constant_derived(5).value < 0);
}
