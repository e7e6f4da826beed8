#include "fibtree/counting.hpp"

#include <stdexcept>
#include <string>

#include "fibtree/pair_chain.hpp"

namespace fibtree {

namespace {

void divide_exact(BigInt& value, unsigned long divisor, const char* what)
{
    if (!mpz_divisible_ui_p(value.get_mpz_t(), divisor)) {
        throw std::logic_error(std::string("inexact division computing ") + what);
    }
    mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), divisor);
}

const BigInt& zero()
{
    static const BigInt z{0};
    return z;
}

}  // namespace

std::string_view to_string(Provenance p) noexcept
{
    switch (p) {
    case Provenance::ClosedForm:
        return "closed-form";
    case Provenance::Recurrence:
        return "recurrence";
    case Provenance::Reduction:
        return "reduction";
    }
    return "unknown";
}

Sequences::Sequences()
{
    binom_.emplace_back(1);
    s_.emplace_back(0);
    b_.emplace_back(1);
    a_.emplace_back(1);
    d_.emplace_back(-3);
}

void Sequences::grow_binomials(std::size_t n)
{
    while (binom_.size() <= n) {
        const unsigned long m = binom_.size();
        // C(3m, m) = C(3m-3, m-1) * 3m(3m-1)(3m-2) / (m * 2m * (2m-1))
        BigInt c = binom_.back();
        c *= 3 * m;
        c *= 3 * m - 1;
        c *= 3 * m - 2;
        divide_exact(c, m, "C(3n,n)");
        divide_exact(c, 2 * m, "C(3n,n)");
        divide_exact(c, 2 * m - 1, "C(3n,n)");

        BigInt b = c;
        divide_exact(b, 2 * m + 1, "B(n)");

        BigInt s;
        if (m == 1) {
            s = 5;
        } else {
            // C(3m-1, m-1) = C(3m, m) / 3
            s = c;
            divide_exact(s, 3, "C(3n-1,n-1)");
            s *= 2;
            divide_exact(s, 3 * m - 1, "S(n)");
        }
        binom_.push_back(std::move(c));
        b_.push_back(std::move(b));
        s_.push_back(std::move(s));
    }
}

void Sequences::grow_counts(std::size_t n)
{
    while (a_.size() <= n) {
        const std::size_t m = a_.size() - 1;
        grow_binomials(m + 2);
        BigInt next_a = 8 * a_[m] + d_[m];
        BigInt next_d = 8 * d_[m] + b_[m + 2] + 4 * s_[m + 2];
        a_.push_back(std::move(next_a));
        d_.push_back(std::move(next_d));
    }
}

void Sequences::reserve(std::size_t n)
{
    grow_binomials(n + 2);
    grow_counts(n);
}

const BigInt& Sequences::binom3n(std::size_t n)
{
    grow_binomials(n);
    return binom_[n];
}

const BigInt& Sequences::S(std::size_t n)
{
    grow_binomials(n);
    return s_[n];
}

const BigInt& Sequences::B(std::size_t n)
{
    grow_binomials(n);
    return b_[n];
}

const BigInt& Sequences::A11(std::size_t n)
{
    grow_counts(n);
    return a_[n];
}

const BigInt& Sequences::D(std::size_t n)
{
    grow_counts(n);
    return d_[n];
}

BigInt Sequences::compute_ak(unsigned k, std::size_t n)
{
    if (k == 1) {
        BigInt v = A11(n + 1) - B(n + 1);
        if (mpz_divisible_ui_p(v.get_mpz_t(), 4) == 0) {
            throw std::logic_error("A_1(n): A11(n+1) - B(n+1) not divisible by 4");
        }
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 4);
        return v;
    }
    if (k == 2) {
        return A11(n + 1) - 4 * A11(n);
    }
    // Lemma-5.7 style reduction over the last five nodes of the shortest walk.
    if ((k + 1) % 3 == 0) {
        return Ak(k - 2, n + 1) - Ak(k - 3, n);
    }
    return Ak(k - 2, n) - Ak(k - 3, n);
}

const BigInt& Sequences::Ak(unsigned k, std::size_t n)
{
    if (k == 0) {
        return A11(n);
    }
    if (3 * n + k % 3 < k) {
        return zero();
    }
    if (ak_.size() <= k) {
        ak_.resize(k + 1);
    }
    // Row k is stored from index 0; entries below first occurrence are 0.
    while (ak_[k].size() <= n) {
        const std::size_t m = ak_[k].size();
        BigInt v = (3 * m + k % 3 < k) ? BigInt(0) : compute_ak(k, m);
        ak_[k].push_back(std::move(v));
    }
    return ak_[k][n];
}

CountSeq Sequences::snapshot(std::string_view name, std::size_t count)
{
    CountSeq out;
    out.name = std::string(name);
    out.values.reserve(count);
    auto fill = [&](auto&& get) {
        for (std::size_t i = 0; i < count; ++i) {
            out.values.push_back(get(i));
        }
    };
    if (name == "S") {
        out.provenance = Provenance::ClosedForm;
        fill([&](std::size_t i) { return S(i); });
    } else if (name == "B") {
        out.provenance = Provenance::ClosedForm;
        fill([&](std::size_t i) { return B(i); });
    } else if (name == "A11") {
        out.provenance = Provenance::Recurrence;
        fill([&](std::size_t i) { return A11(i); });
    } else if (name == "D") {
        out.provenance = Provenance::Recurrence;
        fill([&](std::size_t i) { return D(i); });
    } else if (name.size() > 1 && name[0] == 'A') {
        std::size_t pos = 0;
        const unsigned long k = std::stoul(std::string(name.substr(1)), &pos);
        if (pos + 1 != name.size()) {
            throw std::invalid_argument("snapshot: bad sequence name");
        }
        out.provenance = Provenance::Reduction;
        fill([&](std::size_t i) { return Ak(static_cast<unsigned>(k), i); });
    } else {
        throw std::invalid_argument("snapshot: unknown sequence " + out.name);
    }
    return out;
}

std::vector<BigInt> a11_convolution_prefix(Sequences& seqs, std::size_t n)
{
    std::vector<BigInt> a{BigInt(1)};
    a.reserve(n + 1);
    for (std::size_t m = 1; m <= n; ++m) {
        BigInt sum = 0;
        for (std::size_t i = 0; i < m; ++i) {
            sum += a[i] * seqs.S(m - i);
        }
        a.push_back(std::move(sum));
    }
    return a;
}

BigInt seq_A11_convolution(Sequences& seqs, std::size_t n)
{
    return a11_convolution_prefix(seqs, n).back();
}

const BigInt& count_pair(Sequences& seqs, Pair p, std::size_t n)
{
    return seqs.Ak(shortest_walk_length(p), n);
}

}  // namespace fibtree
