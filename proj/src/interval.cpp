#include "fibtree/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace fibtree {

namespace {

mpfr_prec_t joint(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

std::string render(mpfr_srcptr x, int digits, mpfr_rnd_t rnd)
{
    char* buf = nullptr;
    const char* fmt = rnd == MPFR_RNDD ? "%.*RDe" : "%.*RUe";
    if (mpfr_asprintf(&buf, fmt, digits - 1, x) < 0) {
        throw std::runtime_error("mpfr_asprintf failed");
    }
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

}  // namespace

Interval::Interval(mpfr_prec_t prec)
{
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other)
{
    mpfr_init2(lo_, other.precision());
    mpfr_init2(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.precision())
{
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other)
{
    if (this != &other) {
        mpfr_set_prec(lo_, other.precision());
        mpfr_set_prec(hi_, other.precision());
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept
{
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

Interval::~Interval()
{
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_integer(const mpz_class& v, mpfr_prec_t prec)
{
    Interval out(prec);
    mpfr_set_z(out.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(out.hi_, v.get_mpz_t(), MPFR_RNDU);
    return out;
}

Interval Interval::from_long(long v, mpfr_prec_t prec)
{
    Interval out(prec);
    mpfr_set_si(out.lo_, v, MPFR_RNDD);
    mpfr_set_si(out.hi_, v, MPFR_RNDU);
    return out;
}

Interval Interval::from_rational(const mpq_class& v, mpfr_prec_t prec) { return hull(v, v, prec); }

Interval Interval::hull(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec)
{
    if (lo > hi) {
        throw std::invalid_argument("Interval::hull: lo > hi");
    }
    Interval out(prec);
    mpfr_set_q(out.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return out;
}

Interval Interval::pi(mpfr_prec_t prec)
{
    Interval out(prec);
    mpfr_const_pi(out.lo_, MPFR_RNDD);
    mpfr_const_pi(out.hi_, MPFR_RNDU);
    return out;
}

double Interval::width() const
{
    mpfr_t w;
    mpfr_init2(w, precision());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    const double out = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return out;
}

std::string Interval::lower_string(int digits) const { return render(lo_, digits, MPFR_RNDD); }

std::string Interval::upper_string(int digits) const { return render(hi_, digits, MPFR_RNDU); }

bool Interval::contains(const mpz_class& v) const
{
    return mpfr_cmp_z(lo_, v.get_mpz_t()) <= 0 && mpfr_cmp_z(hi_, v.get_mpz_t()) >= 0;
}

bool Interval::contains(const Interval& inner) const
{
    return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_greaterequal_p(hi_, inner.hi_);
}

bool Interval::certainly_below(const Interval& other) const { return mpfr_less_p(hi_, other.lo_); }

Interval operator+(const Interval& a, const Interval& b)
{
    Interval out(joint(a, b));
    mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
}

Interval operator-(const Interval& a, const Interval& b)
{
    Interval out(joint(a, b));
    mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return out;
}

Interval operator-(const Interval& a)
{
    Interval out(a.precision());
    mpfr_neg(out.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(out.hi_, a.lo_, MPFR_RNDU);
    return out;
}

namespace {

// Endpoint combination for * and /: lower is the min of the four products
// rounded down, upper the max of the four rounded up.
template <typename Op>
void combine(mpfr_ptr lo, mpfr_ptr hi, const Interval& a, const Interval& b, Op op)
{
    const mpfr_prec_t prec = mpfr_get_prec(lo);
    mpfr_srcptr xs[2] = {a.lower(), a.upper()};
    mpfr_srcptr ys[2] = {b.lower(), b.upper()};
    mpfr_t t;
    mpfr_init2(t, prec);
    bool first = true;
    for (auto x : xs) {
        for (auto y : ys) {
            op(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, lo)) {
                mpfr_set(lo, t, MPFR_RNDD);
            }
            op(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, hi)) {
                mpfr_set(hi, t, MPFR_RNDU);
            }
            first = false;
        }
    }
    mpfr_clear(t);
}

}  // namespace

Interval operator*(const Interval& a, const Interval& b)
{
    Interval out(joint(a, b));
    combine(out.lo_, out.hi_, a, b, mpfr_mul);
    return out;
}

Interval operator/(const Interval& a, const Interval& b)
{
    if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) {
        throw std::domain_error("Interval division by an interval containing 0");
    }
    Interval out(joint(a, b));
    combine(out.lo_, out.hi_, a, b, mpfr_div);
    return out;
}

Interval sqrt(const Interval& a)
{
    if (mpfr_sgn(a.lo_) < 0) {
        throw std::domain_error("Interval sqrt of a negative lower endpoint");
    }
    Interval out(a.precision());
    mpfr_sqrt(out.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(out.hi_, a.hi_, MPFR_RNDU);
    return out;
}

Interval exp(const Interval& a)
{
    Interval out(a.precision());
    mpfr_exp(out.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(out.hi_, a.hi_, MPFR_RNDU);
    return out;
}

Interval pow(const Interval& a, unsigned long k)
{
    if (mpfr_sgn(a.lo_) < 0) {
        throw std::domain_error("Interval pow requires a non-negative base");
    }
    Interval out(a.precision());
    mpfr_pow_ui(out.lo_, a.lo_, k, MPFR_RNDD);
    mpfr_pow_ui(out.hi_, a.hi_, k, MPFR_RNDU);
    return out;
}

}  // namespace fibtree
