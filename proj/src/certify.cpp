#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "fibtree/asymptotics.hpp"
#include "growth.hpp"

namespace fibtree {

namespace {

struct Side {
    const char* suffix;  // "lower", "upper" or "" for one-sided families
    Interval lhs;
    Interval rhs;
};

using Evaluator = std::function<std::vector<Side>(Sequences&, unsigned long, mpfr_prec_t)>;

struct Family {
    long min_index;
    Evaluator eval;
};

// 1 + c1/n + c2/n^2 as an exact rational.
Interval poly(unsigned long n, const mpq_class& c1, const mpq_class& c2, mpfr_prec_t prec)
{
    mpq_class nn(static_cast<long>(n));
    mpq_class v = 1 + c1 / nn + c2 / (nn * nn);
    v.canonicalize();
    return Interval::from_rational(v, prec);
}

Interval lit(long v, mpfr_prec_t prec) { return Interval::from_long(v, prec); }

Interval exact(const BigInt& v, mpfr_prec_t prec) { return Interval::from_integer(v, prec); }

// Two-sided envelope env*lo_poly < value < env*hi_poly.
std::vector<Side> sandwich(const Interval& value, const Interval& env, const Interval& lo_poly,
                           const Interval& hi_poly)
{
    return {{"lower", env * lo_poly, value}, {"upper", value, env * hi_poly}};
}

const std::map<std::string, Family, std::less<>>& registry()
{
    static const std::map<std::string, Family, std::less<>> families{
        {"robbins",
         {1,
          [](Sequences&, unsigned long n, mpfr_prec_t prec) {
              auto [lo, hi] = robbins_bounds(n, prec);
              mpz_class f;
              mpz_fac_ui(f.get_mpz_t(), n);
              Interval fact = exact(f, prec);
              return std::vector<Side>{{"lower", lo, fact}, {"upper", fact, hi}};
          }}},
        {"binom3n",
         {1,
          [](Sequences& s, unsigned long n, mpfr_prec_t prec) {
              Interval env = detail::sqrt3(prec) * pow(Interval::from_rational(mpq_class(27, 4), prec), n)
                             / (lit(2, prec) * detail::sqrt_pi(prec) * sqrt(lit(static_cast<long>(n), prec)));
              return sandwich(exact(s.binom3n(n), prec), env, poly(n, mpq_class(-7, 72), 0, prec),
                              poly(n, mpq_class(-7, 72), mpq_class(1, 50), prec));
          }}},
        {"cor31S",
         {100,
          [](Sequences& s, unsigned long n, mpfr_prec_t prec) {
              Interval env = detail::growth(n, prec) / (lit(3, prec) * detail::sqrt3(prec) * detail::sqrt_pi(prec));
              return sandwich(exact(s.S(n), prec), env, poly(n, mpq_class(17, 72), mpq_class(3, 40), prec),
                              poly(n, mpq_class(17, 72), mpq_class(1, 10), prec));
          }}},
        {"cor31B",
         {100,
          [](Sequences& s, unsigned long n, mpfr_prec_t prec) {
              Interval env = detail::sqrt3(prec) * detail::growth(n, prec) / (lit(4, prec) * detail::sqrt_pi(prec));
              return sandwich(exact(s.B(n), prec), env, poly(n, mpq_class(-43, 72), mpq_class(1, 4), prec),
                              poly(n, mpq_class(-43, 72), mpq_class(1, 3), prec));
          }}},
        {"thmA",
         {100,
          [](Sequences& s, unsigned long n, mpfr_prec_t prec) {
              Interval env = leading_constant_for_class(0, prec) * detail::growth(n, prec);
              return sandwich(exact(s.A11(n), prec), env, poly(n, mpq_class(-1387, 72), 0, prec),
                              poly(n, mpq_class(-1387, 72), mpq_class(5548, 9), prec));
          }}},
        {"dineq",
         {100,
          [](Sequences& s, unsigned long n, mpfr_prec_t prec) {
              // d < 0, so the polynomial with the larger value gives the lower side.
              Interval d = -(lit(405, prec) * detail::sqrt3(prec) * detail::growth(n, prec)
                             / (lit(16, prec) * detail::sqrt_pi(prec)));
              return sandwich(exact(s.D(n), prec), d, poly(n, mpq_class(-4019, 360), 207, prec),
                              poly(n, mpq_class(-4019, 360), 0, prec));
          }}},
        {"a12",
         {100,
          [](Sequences& s, unsigned long n, mpfr_prec_t prec) {
              Interval env = leading_constant_for_class(1, prec) * detail::growth(n, prec);
              return sandwich(exact(s.Ak(1, n), prec), env, poly(n, mpq_class(-60877, 2880), 29, prec),
                              poly(n, mpq_class(-60877, 2880), 669, prec));
          }}},
        {"a21",
         {100,
          [](Sequences& s, unsigned long n, mpfr_prec_t prec) {
              Interval env = leading_constant_for_class(2, prec) * detail::growth(n, prec);
              return sandwich(exact(s.Ak(2, n), prec), env,
                              poly(n, mpq_class(-18173, 792), mpq_class(-16072, 99), prec),
                              poly(n, mpq_class(-18173, 792), mpq_class(88768, 99), prec));
          }}},
        {"ainequality",
         {0,
          [](Sequences& s, unsigned long n, mpfr_prec_t prec) {
              BigInt twice = 2 * s.binom3n(n);
              return std::vector<Side>{{"", exact(s.A11(n), prec), exact(twice, prec)}};
          }}},
        {"cor41",
         {1,
          [](Sequences& s, unsigned long n, mpfr_prec_t prec) {
              Interval env = detail::sqrt3(prec) * pow(Interval::from_rational(mpq_class(27, 4), prec), n)
                             / (detail::sqrt_pi(prec) * sqrt(lit(static_cast<long>(n), prec)));
              Interval rhs = env * poly(n, mpq_class(-7, 72), mpq_class(1, 50), prec);
              return std::vector<Side>{{"", exact(s.A11(n), prec), rhs}};
          }}},
        {"cn10000",
         {10000,
          [](Sequences& s, unsigned long n, mpfr_prec_t prec) {
              Interval c = exact(s.A11(n), prec) / detail::growth(n, prec);
              return std::vector<Side>{{"lower", Interval::from_rational(mpq_class(197502, 10000), prec), c},
                                       {"upper", c, Interval::from_rational(mpq_class(197505, 10000), prec)}};
          }}},
    };
    return families;
}

const Family& lookup(std::string_view id)
{
    auto it = registry().find(id);
    if (it == registry().end()) {
        throw std::invalid_argument("unknown certificate id: " + std::string(id));
    }
    return it->second;
}

Verdict decide(const Interval& lhs, const Interval& rhs)
{
    if (lhs.certainly_below(rhs)) {
        return Verdict::Holds;
    }
    if (mpfr_lessequal_p(rhs.upper(), lhs.lower())) {
        return Verdict::Fails;
    }
    return Verdict::Undecided;
}

}  // namespace

std::vector<std::string> certificate_ids()
{
    return {"robbins", "binom3n", "cor31S", "cor31B", "thmA", "dineq", "a12", "a21", "ainequality", "cor41", "cn10000"};
}

long certificate_min_index(std::string_view id) { return lookup(id).min_index; }

std::vector<BoundCertificate> certify(Sequences& seqs, std::string_view id, long from, long to,
                                      const CertifyOptions& options)
{
    const Family& family = lookup(id);
    if (id == "cn10000") {
        from = to = 10000;
    }
    if (from < family.min_index) {
        throw std::out_of_range("certify " + std::string(id) + ": index below " + std::to_string(family.min_index));
    }
    if (to < from) {
        throw std::invalid_argument("certify: empty range");
    }
    if (id != "cn10000" && id != "robbins") {
        seqs.reserve(static_cast<std::size_t>(to));
    }
    std::vector<BoundCertificate> out;
    for (long n = from; n <= to; ++n) {
        const auto un = static_cast<unsigned long>(n);
        mpfr_prec_t prec = options.start_precision;
        std::vector<Side> sides = family.eval(seqs, un, prec);
        const std::size_t first = out.size();
        for (const Side& side : sides) {
            BoundCertificate c;
            c.id = *side.suffix ? std::string(id) + "." + side.suffix : std::string(id);
            c.n = n;
            c.verdict = decide(side.lhs, side.rhs);
            c.precision = prec;
            c.lhs = side.lhs;
            c.rhs = side.rhs;
            out.push_back(std::move(c));
        }
        auto pending = [&] {
            return std::any_of(out.begin() + static_cast<long>(first), out.end(),
                               [](const BoundCertificate& c) { return c.verdict == Verdict::Undecided; });
        };
        while (pending() && prec * 2 <= options.precision_cap) {
            prec *= 2;
            sides = family.eval(seqs, un, prec);
            for (std::size_t i = 0; i < sides.size(); ++i) {
                BoundCertificate& c = out[first + i];
                if (c.verdict != Verdict::Undecided) {
                    continue;
                }
                c.verdict = decide(sides[i].lhs, sides[i].rhs);
                c.precision = prec;
                c.lhs = sides[i].lhs;
                c.rhs = sides[i].rhs;
            }
        }
    }
    return out;
}

}  // namespace fibtree
