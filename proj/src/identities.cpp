#include <array>
#include <functional>
#include <stdexcept>
#include <string>

#include "fibtree/counting.hpp"

namespace fibtree {

namespace {

using Check = bool (*)(Sequences&, std::size_t);

struct Identity {
    std::string_view name;
    std::size_t min_index;
    Check check;
};

// sum_{i=lo}^{hi} f(i) g(total - i), empty when lo > hi.
template <typename F, typename G>
BigInt convolve(std::size_t lo, std::size_t hi, std::size_t total, F&& f, G&& g)
{
    BigInt sum = 0;
    for (std::size_t i = lo; i <= hi; ++i) {
        sum += f(i) * g(total - i);
    }
    return sum;
}

bool aformula(Sequences& q, std::size_t n)
{
    const BigInt rhs = convolve(0, n - 1, n, [&](std::size_t i) -> const BigInt& { return q.A11(i); },
                                [&](std::size_t j) -> const BigInt& { return q.S(j); });
    return q.A11(n) == rhs;
}

bool bformula(Sequences& q, std::size_t n)
{
    BigInt rhs = q.B(n - 1);
    if (n >= 2) {
        rhs += convolve(0, n - 2, n, [&](std::size_t i) -> const BigInt& { return q.B(i); },
                        [&](std::size_t j) -> const BigInt& { return q.S(j); });
    }
    return q.B(n) == rhs;
}

bool abformula(Sequences& q, std::size_t n)
{
    BigInt rhs = q.B(n);
    if (n >= 1) {
        rhs += 4 * convolve(0, n - 1, n - 1, [&](std::size_t i) -> const BigInt& { return q.A11(i); },
                            [&](std::size_t j) -> const BigInt& { return q.B(j); });
    }
    return q.A11(n) == rhs;
}

bool lemma60(Sequences& q, std::size_t n)
{
    const BigInt lhs = convolve(0, n, n, [&](std::size_t i) -> const BigInt& { return q.B(i); },
                                [&](std::size_t j) -> const BigInt& { return q.B(j); });
    return lhs == q.S(n + 1);
}

bool lemma61(Sequences& q, std::size_t n)
{
    const BigInt lhs = q.A11(n + 2) - 16 * q.A11(n + 1) + 64 * q.A11(n);
    return lhs == q.B(n + 2) + 4 * q.S(n + 2);
}

bool eqn11(Sequences& q, std::size_t n) { return q.D(n) == q.A11(n + 1) - 8 * q.A11(n); }

// A_(1,2)(n) = sum_{i=0}^{n} A11(i) B(n-i) and 4 A_(1,2)(n) = A11(n+1) - B(n+1).
bool cor52(Sequences& q, std::size_t n)
{
    const BigInt a12 = convolve(0, n, n, [&](std::size_t i) -> const BigInt& { return q.A11(i); },
                                [&](std::size_t j) -> const BigInt& { return q.B(j); });
    return 4 * a12 == q.A11(n + 1) - q.B(n + 1) && q.Ak(1, n) == a12;
}

// A_(2,1)(n) = sum_{i=0}^{n} A_(1,2)(i) B(n-i) = A11(n+1) - 4 A11(n).
bool cor54(Sequences& q, std::size_t n)
{
    const BigInt a21 = convolve(0, n, n, [&](std::size_t i) -> const BigInt& { return q.Ak(1, i); },
                                [&](std::size_t j) -> const BigInt& { return q.B(j); });
    return a21 == q.A11(n + 1) - 4 * q.A11(n) && q.Ak(2, n) == a21;
}

constexpr unsigned kCoprimePairMaxK = 8;

bool coprimepair3(Sequences& q, std::size_t n)
{
    for (unsigned k = 1; k <= kCoprimePairMaxK; ++k) {
        if (n >= k / 3 && !check_coprimepair3(q, k, n)) {
            return false;
        }
    }
    return true;
}

bool eqn3(Sequences& q, std::size_t n) { return q.S(n) <= q.B(n) && q.B(n) <= q.A11(n); }

bool ainequality(Sequences& q, std::size_t n) { return q.A11(n) < 2 * q.binom3n(n); }

// S(n) = C(3n-1,n-1) - C(3n-3,n-1) - sum_{k=2}^{n-1} C(3n-3k,n-k) S(k)
bool srecurrence(Sequences& q, std::size_t n)
{
    BigInt rhs = q.binom3n(n) / 3 - q.binom3n(n - 1);
    for (std::size_t k = 2; k + 1 <= n; ++k) {
        rhs -= q.binom3n(n - k) * q.S(k);
    }
    return q.S(n) == rhs;
}

bool lemma41(Sequences& q, std::size_t n) { return q.S(n + 1) * q.S(n + 1) < q.S(n) * q.S(n + 2); }

bool lemma42(Sequences& q, std::size_t n)
{
    return q.A11(n + 1) * q.A11(n + 1) < q.A11(n) * q.A11(n + 2);
}

constexpr std::array kIdentities{
    Identity{"aformula", 1, aformula},       Identity{"bformula", 1, bformula},
    Identity{"abformula", 0, abformula},     Identity{"lemma60", 1, lemma60},
    Identity{"lemma61", 0, lemma61},         Identity{"eqn11", 0, eqn11},
    Identity{"cor52", 0, cor52},             Identity{"cor54", 0, cor54},
    Identity{"coprimepair3", 0, coprimepair3}, Identity{"eqn3", 2, eqn3},
    Identity{"ainequality", 0, ainequality}, Identity{"srecurrence", 2, srecurrence},
    Identity{"lemma41", 2, lemma41},         Identity{"lemma42", 1, lemma42},
};

const Identity& find_identity(std::string_view name)
{
    for (const auto& id : kIdentities) {
        if (id.name == name) {
            return id;
        }
    }
    throw std::invalid_argument("unknown identity: " + std::string(name));
}

}  // namespace

std::vector<std::string> identity_names()
{
    std::vector<std::string> out;
    for (const auto& id : kIdentities) {
        out.emplace_back(id.name);
    }
    return out;
}

std::size_t identity_min_index(std::string_view name) { return find_identity(name).min_index; }

bool check_identity(Sequences& seqs, std::string_view name, std::size_t n)
{
    const auto& id = find_identity(name);
    if (n < id.min_index) {
        throw std::out_of_range(std::string(name) + " is stated for n >= " + std::to_string(id.min_index));
    }
    return id.check(seqs, n);
}

bool check_coprimepair3(Sequences& seqs, unsigned k, std::size_t n)
{
    if (k == 0) {
        throw std::invalid_argument("check_coprimepair3: k must be >= 1");
    }
    // Canonical pair on the Fibonacci spine: both coordinates odd iff 3 | k.
    const bool both_odd = k % 3 == 0;
    const std::size_t lo = (k - 1) / 3;
    BigInt sum = 0;
    if (both_odd) {
        if (n >= 1) {
            sum = convolve(lo, n - 1, n - 1, [&](std::size_t i) -> const BigInt& { return seqs.Ak(k - 1, i); },
                           [&](std::size_t j) -> const BigInt& { return seqs.B(j); });
        }
    } else {
        sum = convolve(lo, n, n, [&](std::size_t i) -> const BigInt& { return seqs.Ak(k - 1, i); },
                       [&](std::size_t j) -> const BigInt& { return seqs.B(j); });
    }
    return seqs.Ak(k, n) == sum;
}

}  // namespace fibtree
