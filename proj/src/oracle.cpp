#include "fibtree/oracle.hpp"

#include <string>

namespace fibtree {

namespace {

// Visits every walk of length `depth` with shared prefixes. `visit` sees each
// intermediate state and returns false to prune the subtree below it.
template <typename Visit, typename Leaf>
void sweep(Pair state, unsigned level, unsigned depth, Visit& visit, Leaf& leaf)
{
    if (level == depth) {
        leaf(state);
        return;
    }
    for (Branch b : {Branch::Left, Branch::Right}) {
        const Pair next = step(state, b);
        if (visit(next, level + 1)) {
            sweep(next, level + 1, depth, visit, leaf);
        }
    }
}

}  // namespace

OccurrenceTable::OccurrenceTable(unsigned max_depth, Value bound)
    : max_depth_(max_depth), bound_(bound),
      counts_(static_cast<std::size_t>(max_depth + 1) * (bound + 1) * (bound + 1), 0)
{
}

std::uint64_t OccurrenceTable::at(Pair p, unsigned depth) const
{
    if (depth > max_depth_ || p.a > bound_ || p.b > bound_) {
        throw std::out_of_range("OccurrenceTable::at: outside tallied range");
    }
    return counts_[index(p, depth)];
}

void Oracle::check_depth(unsigned depth) const
{
    if (depth > depth_cap_) {
        throw DepthCapExceeded("oracle depth " + std::to_string(depth) + " exceeds cap "
                               + std::to_string(depth_cap_));
    }
}

std::uint64_t Oracle::count_at_depth(Pair target, unsigned depth) const
{
    check_depth(depth);
    std::uint64_t hits = 0;
    auto visit = [](Pair, unsigned) { return true; };
    auto leaf = [&](Pair p) { hits += (p == target); };
    sweep(kRoot, 0, depth, visit, leaf);
    return hits;
}

std::uint64_t Oracle::count(Pair target, unsigned n) const
{
    if (!is_coprime(target) || target.a == 0 || target.b == 0) {
        throw std::invalid_argument("oracle count: target must be a coprime pair of positive integers");
    }
    const unsigned depth = 3 * n + static_cast<unsigned>(parity_class(target).m);
    return count_at_depth(target, depth);
}

std::uint64_t Oracle::count_constrained(unsigned n, Constraint constraint) const
{
    const unsigned depth = 3 * n;
    check_depth(depth);
    std::uint64_t hits = 0;
    auto leaf = [&](Pair p) { hits += (p == kRoot); };
    switch (constraint) {
    case Constraint::Unconstrained: {
        auto visit = [](Pair, unsigned) { return true; };
        sweep(kRoot, 0, depth, visit, leaf);
        break;
    }
    case Constraint::ZeroAvoiding: {
        auto visit = [](Pair p, unsigned) { return p.b != 0; };
        sweep(kRoot, 0, depth, visit, leaf);
        break;
    }
    case Constraint::Primitive: {
        if (n == 0) {
            return 0;
        }
        auto visit = [depth](Pair p, unsigned level) { return level == depth || p != kRoot; };
        sweep(kRoot, 0, depth, visit, leaf);
        break;
    }
    }
    return hits;
}

OccurrenceTable Oracle::tally(unsigned max_depth, Value bound) const
{
    check_depth(max_depth);
    OccurrenceTable table(max_depth, bound);
    auto record = [&](Pair p, unsigned level) {
        if (p.a <= bound && p.b <= bound) {
            table.add(p, level);
        }
        return true;
    };
    auto leaf = [](Pair) {};
    record(kRoot, 0);
    sweep(kRoot, 0, max_depth, record, leaf);
    return table;
}

}  // namespace fibtree
