#include "fibtree/asymptotics.hpp"

#include <stdexcept>
#include <vector>

#include "fibtree/pair_chain.hpp"
#include "growth.hpp"

namespace fibtree {

std::string_view to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::Holds:
        return "holds";
    case Verdict::Fails:
        return "fails";
    case Verdict::Undecided:
        return "undecided";
    }
    return "undecided";
}

namespace detail {

Interval growth(unsigned long n, mpfr_prec_t prec)
{
    // 6.75 is a dyadic rational, so one directed pow per endpoint is exact-then-rounded.
    Interval base = Interval::from_rational(mpq_class(27, 4), prec);
    Interval nn = Interval::from_long(static_cast<long>(n), prec);
    return pow(base, n) / (nn * sqrt(nn));
}

Interval sqrt_pi(mpfr_prec_t prec) { return sqrt(Interval::pi(prec)); }

Interval sqrt3(mpfr_prec_t prec) { return sqrt(Interval::from_long(3, prec)); }

}  // namespace detail

std::pair<Interval, Interval> robbins_bounds(unsigned long n, mpfr_prec_t prec)
{
    if (n == 0) {
        throw std::out_of_range("robbins_bounds requires n >= 1");
    }
    mpz_class nn = n;
    mpz_class npow;
    mpz_pow_ui(npow.get_mpz_t(), nn.get_mpz_t(), n);
    Interval in = Interval::from_long(static_cast<long>(n), prec);
    Interval common = sqrt(Interval::from_long(2, prec) * Interval::pi(prec)) * Interval::from_integer(npow, prec)
                      * sqrt(in) * exp(-in);
    Interval lo = common * exp(Interval::from_rational(mpq_class(1, 12 * nn + 1), prec));
    Interval hi = common * exp(Interval::from_rational(mpq_class(1, 12 * nn), prec));
    return {lo, hi};
}

Interval ratio_Cn(Sequences& seqs, unsigned long n, double tolerance, mpfr_prec_t precision_cap)
{
    if (n == 0) {
        throw std::out_of_range("ratio_Cn requires n >= 1");
    }
    const BigInt& a = seqs.A11(n);
    for (mpfr_prec_t prec = Interval::kDefaultPrecision;; prec *= 2) {
        Interval r = Interval::from_integer(a, prec) / detail::growth(n, prec);
        if (r.width() < tolerance) {
            return r;
        }
        if (prec * 2 > precision_cap) {
            throw std::range_error("ratio_Cn: precision cap reached before tolerance");
        }
    }
}

RationalConstant t_constant(unsigned k)
{
    const unsigned j = k / 3;
    mpq_class half(1);
    half /= mpq_class(mpz_class(1) << j);
    mpq_class v;
    switch (k % 3) {
    case 0:
        v = 1 + mpq_class(j, 3);
        break;
    case 1:
        v = mpq_class(5, 3) + mpq_class(j, 2);
        break;
    default:
        v = mpq_class(11, 4) + mpq_class(3 * j, 4);
        break;
    }
    v *= half;
    v.canonicalize();
    return {v, k, ConstantFamily::T};
}

namespace {

std::vector<mpq_class> t_table(unsigned k)
{
    std::vector<mpq_class> t{mpq_class(1), mpq_class(5, 3), mpq_class(11, 4)};
    for (unsigned i = 3; i <= k; ++i) {
        mpq_class v = (i + 1) % 3 == 0 ? mpq_class(mpq_class(27, 4) * t[i - 2] - t[i - 3]) : mpq_class(t[i - 2] - t[i - 3]);
        v.canonicalize();
        t.push_back(v);
    }
    return t;
}

// Shared driver for the two s families; `boost` multiplies the 3 | k+1 term.
RationalConstant s_family(unsigned k, const mpq_class& s1, const mpq_class& boost)
{
    std::vector<mpq_class> t = t_table(k);
    std::vector<mpq_class> s{mpq_class(-1387, 72), s1, mpq_class(-18173, 792)};
    for (unsigned i = 3; i <= k; ++i) {
        mpq_class num = (i + 1) % 3 == 0 ? mpq_class(boost * t[i - 2] * (2 * s[i - 2] - 3)) : mpq_class(t[i - 2] * s[i - 2]);
        num -= s[i - 3] * t[i - 3];
        mpq_class v = num / t[i];
        v.canonicalize();
        s.push_back(v);
    }
    s[k].canonicalize();
    return {s[k], k, ConstantFamily::S};
}

}  // namespace

RationalConstant t_by_recurrence(unsigned k) { return {t_table(k)[k], k, ConstantFamily::T}; }

RationalConstant s_constant(unsigned k) { return s_family(k, mpq_class(-60877, 2880), mpq_class(1)); }

RationalConstant s_constant_derived(unsigned k) { return s_family(k, mpq_class(-7559, 360), mpq_class(27, 8)); }

Interval leading_constant_for_class(unsigned k, mpfr_prec_t prec)
{
    Interval num = Interval::from_rational(mpq_class(243) * t_constant(k).value, prec);
    return num / (Interval::from_long(4, prec) * detail::sqrt3(prec) * detail::sqrt_pi(prec));
}

Interval leading_constant(Pair p, mpfr_prec_t prec) { return leading_constant_for_class(shortest_walk_length(p), prec); }

Interval empirical_second_order(Sequences& seqs, unsigned k, unsigned long n, mpfr_prec_t prec)
{
    if (n == 0) {
        throw std::out_of_range("empirical_second_order requires n >= 1");
    }
    Interval ratio = Interval::from_integer(seqs.Ak(k, n), prec)
                     / (leading_constant_for_class(k, prec) * detail::growth(n, prec));
    return Interval::from_long(static_cast<long>(n), prec) * (ratio - Interval::from_long(1, prec));
}

}  // namespace fibtree
