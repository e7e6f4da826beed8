#pragma once

// Exact occurrence counts in T_(1,1):
//   S(n)    primitive (1,1) pairs at depth 3n
//   B(n)    zero-avoiding (1,1) pairs at depth 3n (Fuss-Catalan numbers)
//   A11(n)  all (1,1) pairs at depth 3n
//   D(n)    A11(n+1) - 8 A11(n)
//   A_k(n)  pairs whose shortest walk has k branches, at depth 3n + (k mod 3)
//
// Sequences are extended lazily and stored in deques, so references returned
// by the accessors stay valid while the table grows. A Sequences object is not
// safe to extend concurrently; call reserve() first and share it read-only.

#include <cstddef>
#include <deque>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "fibtree/tree.hpp"

namespace fibtree {

using BigInt = mpz_class;

enum class Provenance { ClosedForm, Recurrence, Reduction };

std::string_view to_string(Provenance p) noexcept;

/// Snapshot of one computed sequence prefix.
struct CountSeq {
    std::string name;  // S, B, A11, D or A<k>
    Provenance provenance = Provenance::ClosedForm;
    std::vector<BigInt> values;
};

class Sequences {
public:
    Sequences();

    const BigInt& S(std::size_t n);
    const BigInt& B(std::size_t n);
    const BigInt& A11(std::size_t n);
    const BigInt& D(std::size_t n);
    /// A_k(n); 0 below the first occurrence (3n + (k mod 3) < k).
    const BigInt& Ak(unsigned k, std::size_t n);
    /// C(3n, n), maintained incrementally.
    const BigInt& binom3n(std::size_t n);

    /// Makes A11 and D available up to n (and S, B up to n + 2).
    void reserve(std::size_t n);

    std::size_t computed_A11() const noexcept { return a_.size(); }
    std::size_t computed_SB() const noexcept { return s_.size(); }

    /// name in {S, B, A11, D, A<k>}; count values from index 0.
    CountSeq snapshot(std::string_view name, std::size_t count);

    /// Binary cache: see seq_cache.cpp for the layout. load() rejects files
    /// whose checksum or spot-recomputed tail values do not match.
    void save(std::ostream& os) const;
    static Sequences load(std::istream& is);

private:
    void grow_binomials(std::size_t n);
    void grow_counts(std::size_t n);
    BigInt compute_ak(unsigned k, std::size_t n);

    std::deque<BigInt> binom_;  // C(3n, n)
    std::deque<BigInt> s_;
    std::deque<BigInt> b_;
    std::deque<BigInt> a_;
    std::deque<BigInt> d_;
    std::vector<std::deque<BigInt>> ak_;
};

/// A11(0..n) computed only from S by first-return decomposition
/// A11(n) = sum_{i<n} A11(i) S(n-i); O(n^2). Independent of the D recurrence.
std::vector<BigInt> a11_convolution_prefix(Sequences& seqs, std::size_t n);
BigInt seq_A11_convolution(Sequences& seqs, std::size_t n);

/// A_(a,b)(n) = A_k(n) with k = SW_(1,1)(a,b). Throws std::invalid_argument
/// for non-coprime or degenerate pairs.
const BigInt& count_pair(Sequences& seqs, Pair p, std::size_t n);

/// Exact identities and inequalities between the sequences, by name.
std::vector<std::string> identity_names();
/// Smallest index at which the named identity is asserted.
std::size_t identity_min_index(std::string_view name);
/// Throws std::invalid_argument for unknown names, std::out_of_range for n
/// below the identity's domain.
bool check_identity(Sequences& seqs, std::string_view name, std::size_t n);

/// A_k(n) via convolution of A_{k-1} with B (last occurrence of the parent
/// pair), compared against the recurrence-based Ak. Requires k >= 1.
bool check_coprimepair3(Sequences& seqs, unsigned k, std::size_t n);

}  // namespace fibtree
