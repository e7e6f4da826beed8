#include "fibtree/tree.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fibtree {

Value gcd(Pair p) noexcept { return std::gcd(p.a, p.b); }

bool is_coprime(Pair p) noexcept { return gcd(p) == 1; }

Pair step(Pair state, Branch branch)
{
    if (branch == Branch::Left) {
        return {state.b, state.a > state.b ? state.a - state.b : state.b - state.a};
    }
    if (state.a > std::numeric_limits<Value>::max() - state.b) {
        throw std::overflow_error("fibtree::step: node value exceeds 64 bits");
    }
    return {state.b, state.a + state.b};
}

ParityClass parity_class(Pair p)
{
    if (!is_coprime(p)) {
        throw std::invalid_argument("parity_class: pair is not coprime");
    }
    const bool a_odd = (p.a & 1U) != 0;
    const bool b_odd = (p.b & 1U) != 0;
    if (a_odd && b_odd) {
        return {0};
    }
    return a_odd ? ParityClass{1} : ParityClass{2};
}

Walk::Walk(Pair root, std::vector<Branch> branches) : root_(root), branches_(std::move(branches)) {}

Walk Walk::parse(std::string_view branches, Pair root)
{
    std::vector<Branch> out;
    out.reserve(branches.size());
    for (char c : branches) {
        switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'L':
            out.push_back(Branch::Left);
            break;
        case 'R':
            out.push_back(Branch::Right);
            break;
        case ',':
        case ' ':
            break;
        default:
            throw std::invalid_argument("Walk::parse: expected L or R");
        }
    }
    return Walk(root, std::move(out));
}

std::vector<Value> Walk::nodes() const
{
    std::vector<Value> out;
    out.reserve(branches_.size() + 2);
    out.push_back(root_.a);
    out.push_back(root_.b);
    Pair state = root_;
    for (Branch b : branches_) {
        state = step(state, b);
        out.push_back(state.b);
    }
    return out;
}

Pair Walk::terminal() const
{
    Pair state = root_;
    for (Branch b : branches_) {
        state = step(state, b);
    }
    return state;
}

std::string Walk::to_string() const
{
    std::string s;
    s.reserve(branches_.size());
    for (Branch b : branches_) {
        s.push_back(b == Branch::Left ? 'L' : 'R');
    }
    return s;
}

bool is_primitive_walk(const Walk& w)
{
    if (w.root() != kRoot) {
        throw std::invalid_argument("is_primitive_walk: walk must be rooted at (1,1)");
    }
    const auto branches = w.branches();
    if (branches.size() == 3) {
        return w.terminal() == kRoot;
    }
    if (branches.size() < 3) {
        return false;
    }
    std::size_t lefts = 0;
    std::size_t rights = 0;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        (branches[i] == Branch::Left ? lefts : rights) += 1;
        if (i + 1 < branches.size() && lefts >= 2 * rights) {
            return false;
        }
    }
    return lefts == 2 * rights;
}

bool avoids_zero(const Walk& w)
{
    Pair state = w.root();
    for (Branch b : w.branches()) {
        state = step(state, b);
        if (state.b == 0) {
            return false;
        }
    }
    return true;
}

bool is_restricted_walk(const Walk& w) noexcept
{
    bool previous_left = false;
    for (Branch b : w.branches()) {
        const bool left = b == Branch::Left;
        if (left && previous_left) {
            return false;
        }
        previous_left = left;
    }
    return true;
}

Walk reverse_walk(const Walk& w)
{
    auto nodes = w.nodes();
    std::reverse(nodes.begin(), nodes.end());
    std::vector<Branch> branches;
    branches.reserve(w.depth());
    for (std::size_t i = 0; i + 2 < nodes.size(); ++i) {
        const Value x = nodes[i];
        const Value y = nodes[i + 1];
        const Value z = nodes[i + 2];
        const Value diff = x > y ? x - y : y - x;
        if (z == diff) {
            branches.push_back(Branch::Left);
        } else if (z == x + y) {
            branches.push_back(Branch::Right);
        } else {
            throw std::logic_error("reverse_walk: node triple is not a tree step");
        }
    }
    return Walk({nodes[0], nodes[1]}, std::move(branches));
}

}  // namespace fibtree
