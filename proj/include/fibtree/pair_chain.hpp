#pragma once

// Shortest walks SW_(1,1)(a,b) by backward reduction, and the restricted tree
// in which every coprime pair occurs exactly once.

#include <array>
#include <vector>

#include "fibtree/tree.hpp"

namespace fibtree {

/// Pairs from (a,b) back to (1,1); each entry's predecessor is (|x-y|, x).
struct ReductionChain {
    std::vector<Pair> pairs;
    unsigned length = 0;  // branches in the shortest walk

    /// Node values of the shortest walk read forward: 1, 1, ..., a, b.
    std::vector<Value> forward_nodes() const;
    /// The shortest walk itself, rooted at (1,1).
    Walk forward_walk() const;
};

/// Throws std::invalid_argument for non-coprime pairs and for (1,0), (0,1).
ReductionChain reduction_chain(Pair p);

unsigned shortest_walk_length(Pair p);

/// Last five node values of the shortest walk; requires SW >= 3
/// (std::invalid_argument otherwise).
std::array<Value, 5> last_five(Pair p);

struct Occurrence {
    Pair pair;
    unsigned depth = 0;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

inline constexpr unsigned kRestrictedTreeCap = 40;

/// Terminal pairs of all restricted walks of length <= depth, sorted by
/// (depth, a, b). Walks are not continued through a 0 node, so (1,0) shows up
/// once at depth 1 and nothing below it. Throws std::out_of_range above `cap`.
std::vector<Occurrence> restricted_tree(unsigned depth, unsigned cap = kRestrictedTreeCap);

}  // namespace fibtree
