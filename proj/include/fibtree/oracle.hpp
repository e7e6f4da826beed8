#pragma once

// Brute-force enumeration of every walk of a given length from the root
// (1,1). Independent of the counting formulas; used to cross-check them.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fibtree/tree.hpp"

namespace fibtree {

enum class Constraint { Unconstrained, ZeroAvoiding, Primitive };

class DepthCapExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Number of occurrences of every pair with a, b <= bound at each depth
/// 0..max_depth.
class OccurrenceTable {
public:
    OccurrenceTable(unsigned max_depth, Value bound);

    unsigned max_depth() const noexcept { return max_depth_; }
    Value bound() const noexcept { return bound_; }

    std::uint64_t at(Pair p, unsigned depth) const;
    void add(Pair p, unsigned depth) noexcept { ++counts_[index(p, depth)]; }

private:
    std::size_t index(Pair p, unsigned depth) const noexcept
    {
        const std::size_t side = bound_ + 1;
        return (static_cast<std::size_t>(depth) * side + p.a) * side + p.b;
    }

    unsigned max_depth_;
    Value bound_;
    std::vector<std::uint64_t> counts_;
};

class Oracle {
public:
    static constexpr unsigned kDefaultDepthCap = 24;

    explicit Oracle(unsigned depth_cap = kDefaultDepthCap) : depth_cap_(depth_cap) {}

    unsigned depth_cap() const noexcept { return depth_cap_; }

    /// Walks of exactly `depth` branches ending at `target`.
    std::uint64_t count_at_depth(Pair target, unsigned depth) const;

    /// A_(a,b)(n) by enumeration: walks of length 3n + m ending at target.
    /// Throws std::invalid_argument for non-coprime or degenerate targets.
    std::uint64_t count(Pair target, unsigned n) const;

    /// A_(1,1)(n), B(n) or S(n) by enumeration over walks of length 3n.
    std::uint64_t count_constrained(unsigned n, Constraint constraint) const;

    /// One sweep over all walks of length <= max_depth.
    OccurrenceTable tally(unsigned max_depth, Value bound) const;

private:
    void check_depth(unsigned depth) const;

    unsigned depth_cap_;
};

}  // namespace fibtree
