#include "fibtree/walk_prob.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "fibtree/tree.hpp"

namespace fibtree {

namespace {

void check_p(double p)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("probability must lie in [0, 1]");
    }
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial)
{
    return std::mt19937_64(splitmix64(seed ^ splitmix64(trial)));
}

// Right iff the next 64-bit draw falls below p * 2^64.
class Coin {
public:
    explicit Coin(double p) : always_(p >= 1.0), threshold_(always_ ? 0 : static_cast<std::uint64_t>(std::ldexp(p, 64))) {}
    bool right(std::mt19937_64& g) const { return always_ || g() < threshold_; }

private:
    bool always_;
    std::uint64_t threshold_;
};

}  // namespace

void WalkProbParams::validate() const
{
    check_p(p);
    if (trials == 0) {
        throw std::invalid_argument("trials must be positive");
    }
    if (horizon < 3) {
        throw std::invalid_argument("horizon must be at least 3");
    }
}

double escape_probability(double p)
{
    check_p(p);
    if (p <= 1.0 / 3.0) {
        return 0.0;
    }
    return (3.0 * p - 2.0 + std::sqrt(4.0 * p - 3.0 * p * p)) / 2.0;
}

double hitting_root(double p)
{
    check_p(p);
    if (p <= 1.0 / 3.0) {
        return 1.0;
    }
    return (-1.0 + std::sqrt(4.0 / p - 3.0)) / 2.0;
}

double absorption_P(unsigned long n, double p)
{
    const double r = hitting_root(p);
    return n == 0 ? 1.0 : std::pow(r, static_cast<double>(n));
}

EscapeEstimate simulate_escape(const WalkProbParams& params)
{
    params.validate();
    const Coin coin(params.p);
    std::uint64_t escaped = 0;
    for (std::uint64_t t = 0; t < params.trials; ++t) {
        auto g = trial_stream(params.seed, t);
        if (!coin.right(g)) {
            continue;
        }
        std::uint64_t pos = 2;
        std::uint64_t left = params.horizon - 1;
        // pos > left means 0 is out of reach; stopping there changes nothing.
        while (left > 0 && pos <= left) {
            pos = coin.right(g) ? pos + 2 : pos - 1;
            --left;
            if (pos == 0) {
                break;
            }
        }
        if (pos != 0) {
            ++escaped;
        }
    }
    EscapeEstimate e;
    const double n = static_cast<double>(params.trials);
    e.estimate = static_cast<double>(escaped) / n;
    e.half_width = 1.96 * std::sqrt(e.estimate * (1.0 - e.estimate) / n);
    e.trials = params.trials;
    e.horizon = params.horizon;
    e.seed = params.seed;
    e.rng = kRngName;
    return e;
}

std::vector<std::uint64_t> simulate_occurrences(const WalkProbParams& params)
{
    params.validate();
    const Coin coin(params.p);
    std::vector<std::uint64_t> hist(1, 0);
    for (std::uint64_t t = 0; t < params.trials; ++t) {
        auto g = trial_stream(params.seed, t);
        std::uint64_t visits = 0;
        std::uint64_t pos = 0;
        std::uint64_t left = params.horizon;
        while (left > 0 && pos <= left) {
            if (pos == 0) {
                if (coin.right(g)) {
                    pos = 2;
                    --left;
                } else {
                    // (1,1) -> (1,0) -> (0,1) -> (1,1) whatever the next two branches are.
                    if (left < 3) {
                        break;
                    }
                    left -= 3;
                    ++visits;
                }
                continue;
            }
            pos = coin.right(g) ? pos + 2 : pos - 1;
            --left;
            if (pos == 0) {
                ++visits;
            }
        }
        if (visits >= hist.size()) {
            hist.resize(visits + 1, 0);
        }
        ++hist[visits];
    }
    return hist;
}

double escape_within_horizon_tree(double p, unsigned horizon)
{
    check_p(p);
    if (horizon > 24) {
        throw std::out_of_range("tree enumeration is limited to 24 branches");
    }
    std::function<double(Pair, unsigned)> go = [&](Pair at, unsigned remaining) -> double {
        if (remaining == 0) {
            return 1.0;
        }
        double total = 0.0;
        for (Branch b : {Branch::Left, Branch::Right}) {
            Pair next = step(at, b);
            if (next == kRoot) {
                continue;
            }
            total += (b == Branch::Right ? p : 1.0 - p) * go(next, remaining - 1);
        }
        return total;
    };
    return go(kRoot, horizon);
}

double escape_within_horizon_chain(double p, unsigned long horizon)
{
    check_p(p);
    if (horizon == 0) {
        return 1.0;
    }
    // mass[x]: probability of sitting at distance x without having hit 0.
    std::vector<double> mass(2 * horizon + 3, 0.0);
    mass[2] = p;
    for (unsigned long s = 1; s < horizon; ++s) {
        std::vector<double> next(mass.size(), 0.0);
        for (std::size_t x = 1; x + 2 < mass.size(); ++x) {
            if (mass[x] == 0.0) {
                continue;
            }
            next[x + 2] += p * mass[x];
            if (x > 1) {
                next[x - 1] += (1.0 - p) * mass[x];
            }
        }
        mass.swap(next);
    }
    double total = 0.0;
    for (double m : mass) {
        total += m;
    }
    return total;
}

namespace {

struct SeriesSum {
    long double value = 0;
    unsigned terms = 0;
    bool converged = false;
};

// Sums term_0 = first, term_{r+1} = term_r * ratio(r). The ratios are monotone
// in r with limit q < 1, so max(next ratio, q) bounds every later ratio and the
// remaining tail is at most term * rho / (1 - rho).
SeriesSum sum_series(long double first, const std::function<long double(unsigned)>& ratio, long double q,
                     unsigned max_terms)
{
    SeriesSum s;
    long double term = first;
    for (unsigned r = 0; r < max_terms; ++r) {
        s.value += term;
        s.terms = r + 1;
        const long double rho = std::max(ratio(r), q);
        if (rho < 1.0L && term * rho / (1.0L - rho) < 1e-14L * std::fabs(s.value)) {
            s.converged = true;
            break;
        }
        term *= ratio(r);
    }
    return s;
}

}  // namespace

SeriesResiduals series_identity_check(double p, unsigned n, unsigned max_terms)
{
    if (!(p > 1.0 / 3.0 && p < 1.0)) {
        throw std::invalid_argument("series identities are checked for 1/3 < p < 1");
    }
    const long double lp = p;
    const long double x = lp * (1.0L - lp) * (1.0L - lp);
    const long double q = 6.75L * x;

    // C(3r+1,r)/(3r+1) x^r and C(3r,r) x^r
    SeriesSum fuss = sum_series(
        1.0L,
        [&](unsigned r) {
            const long double rr = r;
            return (3 * rr + 3) * (3 * rr + 2) * (3 * rr + 1) / ((rr + 1) * (2 * rr + 3) * (2 * rr + 2)) * x;
        },
        q, max_terms);
    SeriesSum central = sum_series(
        1.0L,
        [&](unsigned r) {
            const long double rr = r;
            return (3 * rr + 3) * (3 * rr + 2) * (3 * rr + 1) / ((rr + 1) * (2 * rr + 2) * (2 * rr + 1)) * x;
        },
        q, max_terms);
    // C(3r+n,r) x^r
    const long double nn = n;
    SeriesSum direct = sum_series(
        1.0L,
        [&](unsigned r) {
            const long double rr = r;
            return (3 * rr + nn + 3) * (3 * rr + nn + 2) * (3 * rr + nn + 1)
                   / ((rr + 1) * (2 * rr + nn + 2) * (2 * rr + nn + 1)) * x;
        },
        q, max_terms);

    const long double arg = 3.0L * std::sqrt(3.0L) * (1.0L - lp) * std::sqrt(lp) / 2.0L;
    const long double closed = 2.0L * std::sin(std::asin(std::min(arg, 1.0L)) / 3.0L) / std::sqrt(3.0L * lp);
    const long double series_i = (1.0L - lp) * fuss.value;

    const long double scale = std::pow(1.0L - lp, nn);
    const long double product = scale * central.value * std::pow(fuss.value, nn);

    SeriesResiduals out;
    out.arcsin_residual = static_cast<double>(std::fabs(series_i - closed));
    out.product_residual = static_cast<double>(std::fabs(scale * direct.value - product));
    out.root_residual = static_cast<double>(std::fabs(closed - static_cast<long double>(hitting_root(p))));
    out.terms = std::max({fuss.terms, central.terms, direct.terms});
    out.converged = fuss.converged && central.converged && direct.converged;
    return out;
}

}  // namespace fibtree
