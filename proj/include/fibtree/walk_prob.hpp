#pragma once

// A p-biased random walk down T_(1,1): each branch is Right with probability
// p. Escape means the walk never meets the pair (1,1) again after the root.
//
// Distance to (1,1) along a walk moves +2 on Right and -1 on Left once the
// first branch is Right, so simulation runs on that integer chain started at 2.

#include <cstdint>
#include <string>
#include <vector>

namespace fibtree {

struct WalkProbParams {
    double p = 0.5;
    std::uint64_t trials = 1;
    std::uint64_t horizon = 3;  // branches, counting the first one
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument unless 0 <= p <= 1, trials >= 1, horizon >= 3.
    void validate() const;
};

struct EscapeEstimate {
    double estimate = 0;
    double half_width = 0;  // 95% normal approximation
    std::uint64_t trials = 0;
    std::uint64_t horizon = 0;
    std::uint64_t seed = 0;
    std::string rng;
};

inline constexpr const char* kRngName = "mt19937_64/splitmix64-per-trial";

/// Throws std::invalid_argument for p outside [0, 1] (NaN included).
double escape_probability(double p);
/// r_1 = (-1 + sqrt(4/p - 3)) / 2, the root of p r^3 - r + (1 - p) = 0 in (0, 1]
/// for p > 1/3; 1 otherwise.
double hitting_root(double p);
/// Probability that the chain started at n ever reaches 0.
double absorption_P(unsigned long n, double p);

EscapeEstimate simulate_escape(const WalkProbParams& params);

/// histogram[j] = trials with exactly j returns to (1,1) within the horizon.
std::vector<std::uint64_t> simulate_occurrences(const WalkProbParams& params);

/// Exact probability that no (1,1) appears at depths 1..horizon, by
/// enumerating every branch string of that length on the tree itself.
/// horizon <= 24.
double escape_within_horizon_tree(double p, unsigned horizon);
/// The same probability by dynamic programming on the +2/-1 chain.
double escape_within_horizon_chain(double p, unsigned long horizon);

struct SeriesResiduals {
    double arcsin_residual = 0;   // sum C(3r+1,r) p^r (1-p)^(2r+1)/(3r+1) vs arcsin form
    double product_residual = 0;  // sum C(3r+n,r) p^r (1-p)^(2r+n) vs factored form
    double root_residual = 0;     // arcsin form vs hitting_root(p)
    unsigned terms = 0;           // largest number of terms any series needed
    bool converged = false;       // every tail bound fell below 1e-14 of its sum
};

/// Requires 1/3 < p < 1, else std::invalid_argument.
SeriesResiduals series_identity_check(double p, unsigned n, unsigned max_terms = 20000);

}  // namespace fibtree
