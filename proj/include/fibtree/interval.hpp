#pragma once

// Closed real intervals with MPFR endpoints. Every operation rounds the lower
// endpoint toward -inf and the upper endpoint toward +inf, so the exact result
// of the real operation on any points of the operands lies inside.

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace fibtree {

class Interval {
public:
    static constexpr mpfr_prec_t kDefaultPrecision = 128;

    explicit Interval(mpfr_prec_t prec = kDefaultPrecision);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(const Interval& other);
    Interval& operator=(Interval&& other) noexcept;
    ~Interval();

    static Interval from_integer(const mpz_class& v, mpfr_prec_t prec = kDefaultPrecision);
    static Interval from_long(long v, mpfr_prec_t prec = kDefaultPrecision);
    static Interval from_rational(const mpq_class& v, mpfr_prec_t prec = kDefaultPrecision);
    /// [lo, hi] for exact rational endpoints, lo <= hi.
    static Interval hull(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec = kDefaultPrecision);
    static Interval pi(mpfr_prec_t prec = kDefaultPrecision);

    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(lo_); }
    mpfr_srcptr lower() const noexcept { return lo_; }
    mpfr_srcptr upper() const noexcept { return hi_; }

    double lower_double() const noexcept { return mpfr_get_d(lo_, MPFR_RNDD); }
    double upper_double() const noexcept { return mpfr_get_d(hi_, MPFR_RNDU); }
    /// Upper bound on hi - lo.
    double width() const;

    /// Decimal renderings rounded outward, `digits` significant digits.
    std::string lower_string(int digits = 20) const;
    std::string upper_string(int digits = 20) const;

    bool contains(const mpz_class& v) const;
    bool contains(const Interval& inner) const;
    /// Every point of *this is strictly less than every point of other.
    bool certainly_below(const Interval& other) const;
    bool is_positive() const noexcept { return mpfr_sgn(lo_) > 0; }
    bool is_negative() const noexcept { return mpfr_sgn(hi_) < 0; }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    /// Throws std::domain_error if b contains 0.
    friend Interval operator/(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a);

    /// Throws std::domain_error for negative lower endpoints.
    friend Interval sqrt(const Interval& a);
    friend Interval exp(const Interval& a);
    /// Requires a non-negative interval.
    friend Interval pow(const Interval& a, unsigned long k);

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace fibtree
