#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lcsk/match_index.hpp"
#include "lcsk/problem.hpp"

namespace lcsk::tab {

/// Packed bits for columns 1..n (bit j = column j; bit 0 is always clear).
/// One extra trailing word lets unaligned window reads skip bounds checks.
class BitRow {
  public:
    BitRow() = default;
    explicit BitRow(int n) : n_(n), words_(static_cast<std::size_t>(n + 1 + 63) / 64 + 1, 0) {}

    int columns() const noexcept { return n_; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::uint64_t *data() noexcept { return words_.data(); }
    const std::uint64_t *data() const noexcept { return words_.data(); }

    bool test(int j) const noexcept { return (words_[j >> 6] >> (j & 63)) & 1u; }
    void set(int j) noexcept { words_[j >> 6] |= std::uint64_t{1} << (j & 63); }
    void reset(int j) noexcept { words_[j >> 6] &= ~(std::uint64_t{1} << (j & 63)); }
    void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

    /// Bits [pos, pos + width); positions below 0 read as 0. width <= 32.
    std::uint32_t window(int pos, int width) const noexcept {
        const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
        if (pos < 0) {
            return -pos >= width ? 0u : static_cast<std::uint32_t>((read(0) << -pos) & mask);
        }
        return static_cast<std::uint32_t>(read(pos) & mask);
    }

    /// ORs `bits` into [pos, pos + 32); pos >= 0.
    void or_bits(int pos, std::uint32_t bits) noexcept {
        const auto w = static_cast<std::size_t>(pos) >> 6;
        const int off = pos & 63;
        words_[w] |= std::uint64_t{bits} << off;
        words_[w + 1] |= (std::uint64_t{bits} >> 1) >> (63 - off);
    }

    /// Number of set bits among columns 1..j.
    std::size_t count_prefix(int j) const noexcept {
        if (j <= 0) {
            return 0;
        }
        const auto last = static_cast<std::size_t>(j) >> 6;
        std::size_t total = 0;
        for (std::size_t w = 0; w < last; ++w) {
            total += static_cast<std::size_t>(std::popcount(words_[w]));
        }
        const int bits = (j & 63) + 1;
        const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
        return total + static_cast<std::size_t>(std::popcount(words_[last] & mask));
    }
    std::size_t count() const noexcept { return count_prefix(n_); }

    /// Largest set column <= j.
    std::optional<int> last_set_at_or_before(int j) const noexcept;

    friend bool operator==(const BitRow &, const BitRow &) = default;

  private:
    std::uint64_t read(int pos) const noexcept {
        const auto w = static_cast<std::size_t>(pos) >> 6;
        const int off = pos & 63;
        return (words_[w] >> off) | ((words_[w + 1] << 1) << (63 - off));
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Snippet transition table. A key packs, from the low bits up: the b
/// increment bits of row i-1, the b increment bits of row i-k (shifted k
/// columns left), the b match bits, then d1 = M(i,j)-M(i-1,j) and
/// d2 = M(i,j)-M(i-k,j-k). An entry packs the b output increment bits of row
/// i followed by d1' and d2' at the right edge of the snippet.
class BlockTable {
  public:
    static constexpr int kMinWidth = 4;
    static constexpr int kMaxWidth = 8;
    static constexpr int kDefaultWidth = 6;

    explicit BlockTable(int b = kDefaultWidth);

    int width() const noexcept { return b_; }
    std::size_t size() const noexcept { return std::size_t{1} << (3 * b_ + 2); }
    std::size_t memory_bytes() const noexcept { return narrow_.size() + wide_.size() * sizeof(std::uint16_t); }

    std::uint32_t key(std::uint32_t prev, std::uint32_t kback, std::uint32_t match, unsigned d1,
                      unsigned d2) const noexcept {
        return prev | (kback << b_) | (match << (2 * b_)) | (d1 << (3 * b_)) | (d2 << (3 * b_ + 1));
    }
    std::uint32_t entry(std::uint32_t key) const noexcept { return b_ <= 6 ? narrow_[key] : wide_[key]; }

    std::uint32_t out_bits(std::uint32_t entry) const noexcept { return entry & ((1u << b_) - 1); }
    unsigned d1(std::uint32_t entry) const noexcept { return (entry >> b_) & 1u; }
    unsigned d2(std::uint32_t entry) const noexcept { return (entry >> (b_ + 1)) & 1u; }

    const std::uint8_t *narrow() const noexcept { return narrow_.data(); }
    const std::uint16_t *wide() const noexcept { return wide_.data(); }

  private:
    int b_;
    std::vector<std::uint8_t> narrow_;
    std::vector<std::uint16_t> wide_;
};

inline BlockTable build_block_table(int b) { return BlockTable(b); }

struct Stats {
    std::size_t rows = 0;
    /// Rows whose match bit row was taken from (or stored into) the group cache.
    std::size_t dense_rows = 0;
    std::size_t cache_hits = 0;
    std::size_t distinct_dense_groups = 0;
    std::size_t peak_bytes = 0;
};

/// Rows with at least n / kDenseDivisor matches keep their match bit row in a
/// cache keyed by k-string group; others are built and cleared on the fly.
inline constexpr int kDenseDivisor = 64;

LcskResult solve(const Problem &p, const MatchIndex &idx, const BlockTable &table, bool extract,
                 Stats *stats = nullptr);

/// Increment bit rows of every row 0..m.
std::vector<BitRow> bit_rows(const Problem &p, const MatchIndex &idx, const BlockTable &table,
                             Stats *stats = nullptr);

/// Match bit row of row i, built straight from the index (test helper).
BitRow match_row(const MatchIndex &idx, int i);

} // namespace lcsk::tab
