#pragma once

// Semantics of the random Fibonacci tree T_(1,1): the branch step, parity
// classes and walk predicates. Node values are 64-bit; walks long enough to
// overflow are rejected by step().

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fibtree {

using Value = std::uint64_t;

/// Parent/child state (a, b) of a walk.
struct Pair {
    Value a = 1;
    Value b = 1;

    friend constexpr bool operator==(const Pair&, const Pair&) = default;
    friend constexpr auto operator<=>(const Pair&, const Pair&) = default;
};

inline constexpr Pair kRoot{1, 1};

enum class Branch : std::uint8_t { Left = 0, Right = 1 };

/// Residue mod 3 of every depth at which a coprime pair occurs.
/// 0: both odd, 1: a odd and b even, 2: a even and b odd.
struct ParityClass {
    int m = 0;

    friend constexpr bool operator==(const ParityClass&, const ParityClass&) = default;
};

Value gcd(Pair p) noexcept;
bool is_coprime(Pair p) noexcept;

/// (a,b) -> (b, |a-b|) on Left, (b, a+b) on Right. Throws std::overflow_error
/// if a+b does not fit in 64 bits.
Pair step(Pair state, Branch branch);

/// Throws std::invalid_argument unless gcd(a,b) = 1.
ParityClass parity_class(Pair p);

/// A finite sequence of branch choices from a root pair.
class Walk {
public:
    Walk() = default;
    explicit Walk(Pair root, std::vector<Branch> branches = {});

    /// Parses "RLL"-style strings (case-insensitive L/R) rooted at `root`.
    static Walk parse(std::string_view branches, Pair root = kRoot);

    Pair root() const noexcept { return root_; }
    std::span<const Branch> branches() const noexcept { return branches_; }
    std::size_t depth() const noexcept { return branches_.size(); }

    void push(Branch b) { branches_.push_back(b); }

    /// root.a, root.b, then one value per branch.
    std::vector<Value> nodes() const;
    /// Pair reached after every branch has been taken.
    Pair terminal() const;

    std::string to_string() const;

    friend bool operator==(const Walk&, const Walk&) = default;

private:
    Pair root_ = kRoot;
    std::vector<Branch> branches_;
};

/// Walk to a primitive (1,1): for more than 3 branches, every proper prefix
/// has #Left < 2 #Right and the whole walk has #Left = 2 #Right. At exactly 3
/// branches the five walks ending at (1,1) (one via R,L,L and four through 0)
/// are all primitive, which is the S(1) = 5 convention. Throws
/// std::invalid_argument if the walk is not rooted at (1,1).
bool is_primitive_walk(const Walk& w);

/// True iff no node after the root pair is 0.
bool avoids_zero(const Walk& w);

/// True iff no two Lefts occur without a Right between them.
bool is_restricted_walk(const Walk& w) noexcept;

/// Given a walk from (a,b) to (c,d), the walk from (d,c) to (b,a) that visits
/// the same nodes in reverse order. Where a node triple is ambiguous (a 0 makes
/// |x-y| equal to x+y) the Left branch is recorded.
Walk reverse_walk(const Walk& w);

}  // namespace fibtree
