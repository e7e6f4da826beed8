// Binary cache of sequence prefixes.
//
//   "FIBSEQ" u8(version=1) u8(block count)
//   per block: u8(name length) name u64be(count)
//              per value: u8(sign: 0 non-negative, 1 negative)
//                         u32be(byte length) magnitude bytes, big-endian
//   u32be crc32 of every preceding byte
//
// Blocks are S, B, A11, D in that order.

#include <cstdint>
#include <iterator>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <zlib.h>

#include "fibtree/counting.hpp"

namespace fibtree {

namespace {

constexpr char kMagic[] = "FIBSEQ";
constexpr std::uint8_t kVersion = 1;

class Writer {
public:
    void u8(std::uint8_t v) { bytes_.push_back(v); }
    void be(std::uint64_t v, int width)
    {
        for (int shift = 8 * (width - 1); shift >= 0; shift -= 8) {
            bytes_.push_back(static_cast<std::uint8_t>(v >> shift));
        }
    }
    void raw(const void* p, std::size_t n)
    {
        const auto* c = static_cast<const std::uint8_t*>(p);
        bytes_.insert(bytes_.end(), c, c + n);
    }
    void big(const BigInt& v)
    {
        u8(sgn(v) < 0 ? 1 : 0);
        std::size_t count = 0;
        void* data = mpz_export(nullptr, &count, 1, 1, 1, 0, v.get_mpz_t());
        be(count, 4);
        if (data != nullptr) {
            raw(data, count);
            void (*free_fn)(void*, std::size_t) = nullptr;
            mp_get_memory_functions(nullptr, nullptr, &free_fn);
            free_fn(data, count);
        }
    }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

private:
    std::vector<std::uint8_t> bytes_;
};

class Reader {
public:
    explicit Reader(const std::vector<std::uint8_t>& bytes, std::size_t end) : bytes_(bytes), end_(end) {}

    std::uint8_t u8()
    {
        need(1);
        return bytes_[pos_++];
    }
    std::uint64_t be(int width)
    {
        need(width);
        std::uint64_t v = 0;
        for (int i = 0; i < width; ++i) {
            v = (v << 8) | bytes_[pos_++];
        }
        return v;
    }
    std::string str(std::size_t n)
    {
        need(n);
        std::string s(bytes_.begin() + pos_, bytes_.begin() + pos_ + n);
        pos_ += n;
        return s;
    }
    BigInt big()
    {
        const auto sign = u8();
        const auto len = be(4);
        need(len);
        BigInt v;
        mpz_import(v.get_mpz_t(), len, 1, 1, 1, 0, bytes_.data() + pos_);
        pos_ += len;
        if (sign == 1) {
            v = -v;
        } else if (sign != 0) {
            throw std::runtime_error("sequence cache: bad sign byte");
        }
        return v;
    }
    bool done() const { return pos_ == end_; }

private:
    void need(std::size_t n) const
    {
        if (end_ - pos_ < n) {
            throw std::runtime_error("sequence cache: truncated");
        }
    }

    const std::vector<std::uint8_t>& bytes_;
    std::size_t end_;
    std::size_t pos_ = 0;
};

std::uint32_t checksum(const std::uint8_t* data, std::size_t n)
{
    return static_cast<std::uint32_t>(crc32(crc32(0L, Z_NULL, 0), data, static_cast<uInt>(n)));
}

void write_block(Writer& w, std::string_view name, const std::deque<BigInt>& values)
{
    w.u8(static_cast<std::uint8_t>(name.size()));
    w.raw(name.data(), name.size());
    w.be(values.size(), 8);
    for (const auto& v : values) {
        w.big(v);
    }
}

std::deque<BigInt> read_block(Reader& r, std::string_view expected)
{
    const auto name = r.str(r.u8());
    if (name != expected) {
        throw std::runtime_error("sequence cache: expected block " + std::string(expected) + ", found " + name);
    }
    const auto count = r.be(8);
    std::deque<BigInt> values;
    for (std::uint64_t i = 0; i < count; ++i) {
        values.push_back(r.big());
    }
    return values;
}

void verify(bool ok, const char* what)
{
    if (!ok) {
        throw std::runtime_error(std::string("sequence cache: verification failed for ") + what);
    }
}

}  // namespace

void Sequences::save(std::ostream& os) const
{
    Writer w;
    w.raw(kMagic, 6);
    w.u8(kVersion);
    w.u8(4);
    write_block(w, "S", s_);
    write_block(w, "B", b_);
    write_block(w, "A11", a_);
    write_block(w, "D", d_);
    const auto crc = checksum(w.bytes().data(), w.bytes().size());
    w.be(crc, 4);
    os.write(reinterpret_cast<const char*>(w.bytes().data()), static_cast<std::streamsize>(w.bytes().size()));
    if (!os) {
        throw std::runtime_error("sequence cache: write failed");
    }
}

Sequences Sequences::load(std::istream& is)
{
    std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
    if (bytes.size() < 12) {
        throw std::runtime_error("sequence cache: truncated");
    }
    const std::size_t body = bytes.size() - 4;
    std::uint32_t stored = 0;
    for (std::size_t i = body; i < bytes.size(); ++i) {
        stored = (stored << 8) | bytes[i];
    }
    if (stored != checksum(bytes.data(), body)) {
        throw std::runtime_error("sequence cache: checksum mismatch");
    }

    Reader r(bytes, body);
    if (r.str(6) != kMagic || r.u8() != kVersion || r.u8() != 4) {
        throw std::runtime_error("sequence cache: bad header");
    }
    Sequences q;
    q.s_ = read_block(r, "S");
    q.b_ = read_block(r, "B");
    q.a_ = read_block(r, "A11");
    q.d_ = read_block(r, "D");
    verify(r.done(), "trailing bytes");

    verify(!q.s_.empty() && q.s_.size() == q.b_.size(), "S/B lengths");
    verify(!q.a_.empty() && q.a_.size() == q.d_.size(), "A11/D lengths");
    verify(q.s_.size() >= q.a_.size() + 1, "S/B prefix shorter than A11 needs");
    verify(q.s_[0] == 0 && q.b_[0] == 1 && q.a_[0] == 1 && q.d_[0] == -3, "initial values");

    // Tail values are recomputed by an independent route.
    const unsigned long ns = q.s_.size() - 1;
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), 3 * ns, ns);
    verify(q.b_[ns] * (2 * ns + 1) == c, "B");
    if (ns >= 2) {
        BigInt c1;
        mpz_bin_uiui(c1.get_mpz_t(), 3 * ns - 1, ns - 1);
        verify(q.s_[ns] * (3 * ns - 1) == 2 * c1, "S");
    }
    const std::size_t na = q.a_.size() - 1;
    if (na >= 1) {
        verify(q.a_[na] == 8 * q.a_[na - 1] + q.d_[na - 1], "A11");
        verify(q.d_[na] == 8 * q.d_[na - 1] + q.b_[na + 1] + 4 * q.s_[na + 1], "D");
    }

    q.binom_.clear();
    for (std::size_t n = 0; n < q.b_.size(); ++n) {
        q.binom_.push_back(q.b_[n] * static_cast<unsigned long>(2 * n + 1));
    }
    return q;
}

}  // namespace fibtree
