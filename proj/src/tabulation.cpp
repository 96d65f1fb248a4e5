#include "lcsk/tabulation.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace lcsk::tab {

std::optional<int> BitRow::last_set_at_or_before(int j) const noexcept {
    if (j <= 0) {
        return std::nullopt;
    }
    j = std::min(j, n_);
    auto w = static_cast<std::ptrdiff_t>(j >> 6);
    const int bits = (j & 63) + 1;
    std::uint64_t word = words_[w] & (bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1);
    while (true) {
        if (word != 0) {
            return static_cast<int>(w * 64 + 63 - std::countl_zero(word));
        }
        if (--w < 0) {
            return std::nullopt;
        }
        word = words_[w];
    }
}

namespace {

// One snippet of the recurrence from relative values: M(i, j) is taken as 0.
std::uint32_t transition(int b, std::uint32_t key) {
    const std::uint32_t mask = (1u << b) - 1;
    const std::uint32_t prev = key & mask;
    const std::uint32_t kback = (key >> b) & mask;
    const std::uint32_t match = (key >> (2 * b)) & mask;
    const int d1 = static_cast<int>((key >> (3 * b)) & 1u);
    const int d2 = static_cast<int>((key >> (3 * b + 1)) & 1u);

    int up = -d1;   // M(i-1, j+t)
    int diag = -d2; // M(i-k, j+t-k)
    int cur = 0;    // M(i, j+t)
    std::uint32_t out = 0;
    for (int t = 0; t < b; ++t) {
        up += static_cast<int>((prev >> t) & 1u);
        diag += static_cast<int>((kback >> t) & 1u);
        int next = std::max(cur, up);
        if ((match >> t) & 1u) {
            next = std::max(next, diag + 1);
        }
        if (next > cur) {
            out |= 1u << t;
        }
        cur = next;
    }
    const auto clamp01 = [](int v) { return static_cast<std::uint32_t>(std::clamp(v, 0, 1)); };
    return out | (clamp01(cur - up) << b) | (clamp01(cur - diag) << (b + 1));
}

inline std::uint64_t read_bits(const std::uint64_t *words, int pos) noexcept {
    const auto w = static_cast<std::size_t>(pos) >> 6;
    const int off = pos & 63;
    return (words[w] >> off) | ((words[w + 1] << 1) << (63 - off));
}

template <int B, typename Entry>
void process_row(const Entry *table, int k, int n, BitRow &cur, const BitRow &prev, const BitRow &back,
                 const BitRow &ml) {
    constexpr std::uint32_t mask = (1u << B) - 1;
    cur.clear();
    const std::uint64_t *up = prev.data();
    const std::uint64_t *diag = back.data();
    const std::uint64_t *match = ml.data();
    std::uint32_t d1 = 0;
    std::uint32_t d2 = 0;
    auto step = [&](int j, std::uint32_t kback) {
        const std::uint32_t key = (static_cast<std::uint32_t>(read_bits(up, j + 1)) & mask) | (kback << B) |
                                  ((static_cast<std::uint32_t>(read_bits(match, j + 1)) & mask) << (2 * B)) |
                                  (d1 << (3 * B)) | (d2 << (3 * B + 1));
        const std::uint32_t entry = table[key];
        d1 = (entry >> B) & 1u;
        d2 = (entry >> (B + 1)) & 1u;
        return entry & mask;
    };
    int j = 0;
    // Snippets whose k-back window starts left of column 0.
    for (; j < n && j + 1 - k < 0; j += B) {
        cur.or_bits(j + 1, step(j, back.window(j + 1 - k, B)));
    }
    for (; j + B <= n; j += B) {
        cur.or_bits(j + 1, step(j, static_cast<std::uint32_t>(read_bits(diag, j + 1 - k)) & mask));
    }
    if (j < n) {
        const std::uint32_t out = step(j, static_cast<std::uint32_t>(read_bits(diag, j + 1 - k)) & mask);
        cur.or_bits(j + 1, out & ((1u << (n - j)) - 1));
    }
}

using RowKernel = void (*)(const BlockTable &, int, int, BitRow &, const BitRow &, const BitRow &, const BitRow &);

template <int B>
void kernel(const BlockTable &table, int k, int n, BitRow &cur, const BitRow &prev, const BitRow &back,
            const BitRow &ml) {
    if constexpr (B <= 6) {
        process_row<B>(table.narrow(), k, n, cur, prev, back, ml);
    } else {
        process_row<B>(table.wide(), k, n, cur, prev, back, ml);
    }
}

RowKernel select_kernel(int b) {
    switch (b) {
    case 4:
        return kernel<4>;
    case 5:
        return kernel<5>;
    case 6:
        return kernel<6>;
    case 7:
        return kernel<7>;
    default:
        return kernel<8>;
    }
}

// Supplies the match bit row of each row, caching rows of dense groups.
class MatchRows {
  public:
    MatchRows(const MatchIndex &idx, Stats &stats) : idx_(idx), stats_(stats), zero_(idx.n()), scratch_(idx.n()) {}

    const BitRow &acquire(int i) {
        const auto count = idx_.row_match_count(i);
        if (count == 0) {
            return zero_;
        }
        if (count * kDenseDivisor >= static_cast<std::size_t>(idx_.n())) {
            ++stats_.dense_rows;
            const auto group = idx_.row_group_id(i);
            if (const auto it = slot_.find(group); it != slot_.end()) {
                ++stats_.cache_hits;
                return cache_[it->second];
            }
            slot_.emplace(group, cache_.size());
            cache_.push_back(match_row(idx_, i));
            stats_.distinct_dense_groups = cache_.size();
            return cache_.back();
        }
        for (const int j : idx_.matches_in_row(i)) {
            scratch_.set(j);
        }
        scratch_row_ = i;
        return scratch_;
    }

    void release() {
        if (scratch_row_ >= 0) {
            for (const int j : idx_.matches_in_row(scratch_row_)) {
                scratch_.reset(j);
            }
            scratch_row_ = -1;
        }
    }

    std::size_t memory_bytes() const noexcept {
        return (cache_.size() + 2) * zero_.words().size() * sizeof(std::uint64_t);
    }

  private:
    const MatchIndex &idx_;
    Stats &stats_;
    BitRow zero_;
    BitRow scratch_;
    int scratch_row_ = -1;
    std::unordered_map<std::int32_t, std::size_t> slot_;
    std::vector<BitRow> cache_;
};

// Runs all rows. With keep_all the result holds rows 0..m, otherwise a ring
// of k+1 rows where row i sits at i % (k+1).
std::vector<BitRow> sweep(const Problem &p, const MatchIndex &idx, const BlockTable &table, bool keep_all,
                          Stats &stats) {
    const int m = p.m();
    const int n = p.n();
    const auto k = static_cast<int>(p.k());
    const RowKernel row_kernel = select_kernel(table.width());

    if (k > m || k > n) {
        return std::vector<BitRow>(keep_all ? m + 1 : 1, BitRow(n));
    }
    const int slots = keep_all ? m + 1 : k + 1;
    std::vector<BitRow> rows(slots, BitRow(n));
    auto at = [&](int i) -> BitRow & { return rows[i % slots]; };

    MatchRows matches(idx, stats);
    for (int i = k; i <= m; ++i) {
        const BitRow &ml = matches.acquire(i);
        row_kernel(table, k, n, at(i), at(i - 1), at(i - k), ml);
        matches.release();
        ++stats.rows;
    }
    stats.peak_bytes = static_cast<std::size_t>(slots) * rows.front().words().size() * sizeof(std::uint64_t) +
                       matches.memory_bytes() + table.memory_bytes();
    return rows;
}

} // namespace

BlockTable::BlockTable(int b) : b_(b) {
    if (b < kMinWidth || b > kMaxWidth) {
        throw std::invalid_argument("block width must be in [4, 8], got " + std::to_string(b));
    }
    const std::size_t entries = size();
    if (b <= 6) {
        narrow_.resize(entries);
        for (std::size_t key = 0; key < entries; ++key) {
            narrow_[key] = static_cast<std::uint8_t>(transition(b, static_cast<std::uint32_t>(key)));
        }
    } else {
        wide_.resize(entries);
        for (std::size_t key = 0; key < entries; ++key) {
            wide_[key] = static_cast<std::uint16_t>(transition(b, static_cast<std::uint32_t>(key)));
        }
    }
}

BitRow match_row(const MatchIndex &idx, int i) {
    BitRow row(idx.n());
    for (const int j : idx.matches_in_row(i)) {
        row.set(j);
    }
    return row;
}

LcskResult solve(const Problem &p, const MatchIndex &idx, const BlockTable &table, bool extract, Stats *stats) {
    const auto start = std::chrono::steady_clock::now();
    Stats local;
    Stats &st = stats ? *stats : local;
    st = {};

    const int m = p.m();
    const auto k = static_cast<int>(p.k());
    const auto rows = sweep(p, idx, table, extract, st);

    LcskResult r;
    r.algorithm = Algorithm::tabulation;
    r.length = rows[m % rows.size()].count();
    r.working_bytes = st.peak_bytes;

    if (extract) {
        std::vector<MatchPair> pairs;
        pairs.reserve(r.length);
        // Invariant: M(row, col) == e. The nearest set bit at or left of col is
        // the leftmost column reaching e; the lowest row still reaching e there
        // is a match cell whose diagonal predecessor holds e - 1.
        int row = m;
        int col = p.n();
        for (auto e = r.length; e > 0; --e) {
            const int j = *rows[row].last_set_at_or_before(col);
            int i = row;
            while (i - 1 >= k && rows[i - 1].count_prefix(j) >= e) {
                --i;
            }
            pairs.push_back({i, j});
            row = i - k;
            col = j - k;
        }
        std::reverse(pairs.begin(), pairs.end());
        r.pairs = std::move(pairs);
    }
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

std::vector<BitRow> bit_rows(const Problem &p, const MatchIndex &idx, const BlockTable &table, Stats *stats) {
    Stats local;
    Stats &st = stats ? *stats : local;
    st = {};
    return sweep(p, idx, table, true, st);
}

} // namespace lcsk::tab
