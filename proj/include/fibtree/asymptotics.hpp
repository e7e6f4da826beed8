#pragma once

// Certified evaluation of the asymptotic bounds on S, B, C(3n,n), A11, D,
// A_(1,2) and A_(2,1), and the constant families t_k, s_k behind the leading
// and second-order terms of A_(a,b)(n).
//
// Irrational factors are enclosed with MPFR interval arithmetic; exact
// integers enter as (possibly rounded-outward) point intervals. A certificate
// is decided only when its two sides are disjoint.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fibtree/counting.hpp"
#include "fibtree/interval.hpp"
#include "fibtree/tree.hpp"

namespace fibtree {

enum class Verdict { Holds, Fails, Undecided };

std::string_view to_string(Verdict v) noexcept;

/// Outcome of checking lhs < rhs at one index.
struct BoundCertificate {
    std::string id;  // e.g. "thmA.lower"
    long n = 0;
    Verdict verdict = Verdict::Undecided;
    mpfr_prec_t precision = 0;
    Interval lhs;
    Interval rhs;
};

struct CertifyOptions {
    mpfr_prec_t start_precision = 128;
    mpfr_prec_t precision_cap = 4096;
};

/// Registered inequality families: robbins, binom3n, cor31S, cor31B, thmA,
/// dineq, a12, a21, ainequality, cor41, cn10000.
std::vector<std::string> certificate_ids();

/// Smallest index each family is stated for.
long certificate_min_index(std::string_view id);

/// Certificates for every n in [from, to] and every side of the family (two
/// for two-sided bounds). Undecided results are retried at doubled precision
/// up to the cap and reported, never dropped. Throws std::invalid_argument for
/// unknown ids and std::out_of_range for indices below the family's domain.
/// cn10000 ignores the range and certifies 19.7502 < C_10000 < 19.7505.
std::vector<BoundCertificate> certify(Sequences& seqs, std::string_view id, long from, long to,
                                      const CertifyOptions& options = {});

/// Enclosures of Robbins' lower and upper bounds
/// sqrt(2 pi) n^(n+1/2) e^-n e^(1/(12n+1)) and ... e^(1/(12n)) for n!.
std::pair<Interval, Interval> robbins_bounds(unsigned long n, mpfr_prec_t prec = Interval::kDefaultPrecision);

/// C_n = A11(n) n^(3/2) / 6.75^n, refined until narrower than `tolerance`.
Interval ratio_Cn(Sequences& seqs, unsigned long n, double tolerance = 1e-12,
                  mpfr_prec_t precision_cap = 4096);

enum class ConstantFamily { T, S };

struct RationalConstant {
    mpq_class value;
    unsigned k = 0;
    ConstantFamily family = ConstantFamily::T;
};

/// t_k by its closed form in k mod 3.
RationalConstant t_constant(unsigned k);
/// t_k from t_0, t_1, t_2 and the three-term recurrence.
RationalConstant t_by_recurrence(unsigned k);
/// s_k from s_0 = -1387/72, s_1 = -60877/2880, s_2 = -18173/792 and
/// s_k = (t_{k-2}(2 s_{k-2} - 3 if 3 | k+1, else s_{k-2}) - s_{k-3} t_{k-3}) / t_k.
RationalConstant s_constant(unsigned k);
/// s_k re-derived from the A_k reduction: s_1 = -7559/360, and the 3 | k+1
/// step carries a factor 27/8 on t_{k-2}(2 s_{k-2} - 3). These are the values
/// the exact counts converge to.
RationalConstant s_constant_derived(unsigned k);

/// C_k = 243 t_k / (4 sqrt(3 pi)).
Interval leading_constant_for_class(unsigned k, mpfr_prec_t prec = Interval::kDefaultPrecision);
/// C_(a,b) with k = SW_(1,1)(a,b).
Interval leading_constant(Pair p, mpfr_prec_t prec = Interval::kDefaultPrecision);

/// n (A_k(n) n^(3/2) / (C_k 6.75^n) - 1) at n: an empirical estimate of s_k.
/// Diagnostic only; the O(1/n) remainder has no certified constant.
Interval empirical_second_order(Sequences& seqs, unsigned k, unsigned long n,
                                mpfr_prec_t prec = Interval::kDefaultPrecision);

}  // namespace fibtree
