#include "fibtree/pair_chain.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace fibtree {

std::vector<Value> ReductionChain::forward_nodes() const
{
    std::vector<Value> nodes{1, 1};
    for (auto it = pairs.rbegin() + 1; it != pairs.rend(); ++it) {
        nodes.push_back(it->b);
    }
    return nodes;
}

Walk ReductionChain::forward_walk() const
{
    Walk w;
    const auto nodes = forward_nodes();
    for (std::size_t i = 2; i < nodes.size(); ++i) {
        const Value x = nodes[i - 2];
        const Value y = nodes[i - 1];
        w.push(nodes[i] == x + y ? Branch::Right : Branch::Left);
    }
    return w;
}

ReductionChain reduction_chain(Pair p)
{
    if (!is_coprime(p)) {
        throw std::invalid_argument("reduction_chain: pair is not coprime");
    }
    if (p.a == 0 || p.b == 0) {
        throw std::invalid_argument("reduction_chain: degenerate pair with a 0");
    }
    // Two consecutive backward steps strictly decrease a+b.
    const Value budget = 3 * (p.a + p.b) + 3;
    ReductionChain chain;
    chain.pairs.push_back(p);
    Pair cur = p;
    while (cur != kRoot) {
        if (chain.length >= budget) {
            throw std::logic_error("reduction_chain: step budget exhausted");
        }
        cur = {cur.a > cur.b ? cur.a - cur.b : cur.b - cur.a, cur.a};
        chain.pairs.push_back(cur);
        ++chain.length;
    }
    return chain;
}

unsigned shortest_walk_length(Pair p) { return reduction_chain(p).length; }

std::array<Value, 5> last_five(Pair p)
{
    const auto chain = reduction_chain(p);
    if (chain.length < 3) {
        throw std::invalid_argument("last_five: shortest walk has fewer than 3 branches");
    }
    const auto nodes = chain.forward_nodes();
    std::array<Value, 5> out{};
    std::copy(nodes.end() - 5, nodes.end(), out.begin());
    return out;
}

std::vector<Occurrence> restricted_tree(unsigned depth, unsigned cap)
{
    if (depth > cap) {
        throw std::out_of_range("restricted_tree: depth exceeds cap");
    }
    struct Frontier {
        Pair pair;
        bool last_left;
    };
    std::vector<Occurrence> out{{kRoot, 0}};
    std::vector<Frontier> level{{kRoot, false}};
    for (unsigned d = 1; d <= depth; ++d) {
        std::vector<Frontier> next;
        next.reserve(level.size() * 2);
        for (const auto& f : level) {
            if (!f.last_left) {
                next.push_back({step(f.pair, Branch::Left), true});
            }
            next.push_back({step(f.pair, Branch::Right), false});
        }
        for (const auto& f : next) {
            out.push_back({f.pair, d});
        }
        std::erase_if(next, [](const Frontier& f) { return f.pair.a == 0 || f.pair.b == 0; });
        level = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Occurrence& x, const Occurrence& y) {
        return std::tie(x.depth, x.pair) < std::tie(y.depth, y.pair);
    });
    return out;
}

}  // namespace fibtree
