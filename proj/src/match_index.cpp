#include "lcsk/match_index.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "lcsk/suffix_array.hpp"

namespace lcsk {

MatchIndex::MatchIndex(const Problem &p) : k_(p.k()), m_(p.m()), n_(p.n()) {
    const std::size_t total = p.a().size() + p.b().size() + 1;
    if (total > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
        throw std::length_error("sequences too long for 32-bit positions");
    }
    const auto N = static_cast<std::int32_t>(total);

    auto &concat = text_.concat;
    concat.reserve(total);
    for (unsigned char c : p.b()) {
        concat.push_back(static_cast<std::int32_t>(c) + 1);
    }
    concat.push_back(0);
    for (unsigned char c : p.a()) {
        concat.push_back(static_cast<std::int32_t>(c) + 1);
    }

    text_.sa = build_suffix_array(concat, 256);
    text_.lcp = build_lcp(concat, text_.sa);

    // Group ids by position: a new group starts wherever the LCP with the
    // previous suffix drops below k.
    const auto k = static_cast<std::int32_t>(k_);
    std::vector<std::int32_t> group_at(N);
    std::int32_t group = 0;
    for (std::int32_t t = 0; t < N; ++t) {
        if (t == 0 || text_.lcp[t] < k) {
            ++group;
        }
        group_at[text_.sa[t]] = group;
    }
    group_count_ = static_cast<std::size_t>(group);

    // Two stable counting-sort passes over (group_id, start_pos) pairs. Start
    // positions are a permutation of 0..N-1, so the first pass is the identity
    // enumeration; the second pass buckets by group id.
    std::vector<std::int32_t> by_start(N);
    for (std::int32_t pos = 0; pos < N; ++pos) {
        by_start[pos] = pos;
    }
    std::vector<std::int32_t> bucket(static_cast<std::size_t>(group) + 2, 0);
    for (auto pos : by_start) {
        ++bucket[group_at[pos] + 1];
    }
    for (std::size_t g = 1; g < bucket.size(); ++g) {
        bucket[g] += bucket[g - 1];
    }
    s_group_.resize(N);
    s_start_.resize(N);
    for (auto pos : by_start) {
        const auto slot = bucket[group_at[pos]]++;
        s_group_[slot] = group_at[pos];
        s_start_[slot] = pos;
    }
    by_start = {};
    group_at = {};

    x_.resize(N);
    for (std::int32_t lo = 0; lo < N;) {
        std::int32_t hi = lo;
        while (hi < N && s_group_[hi] == s_group_[lo]) {
            ++hi;
        }
        std::int32_t fa = lo;
        while (fa < hi && s_start_[fa] < n_) {
            ++fa;
        }
        const GroupSpan span{fa, lo, hi};
        for (std::int32_t t = lo; t < hi; ++t) {
            x_[s_start_[t]] = span;
        }
        lo = hi;
    }

    for (int i = k; i <= m_; ++i) {
        total_matches_ += row_match_count(i);
    }
}

MatchRow MatchIndex::matches_in_row(int i) const {
    if (i < static_cast<int>(k_) || i > m_) {
        throw std::out_of_range("row outside [k, m]");
    }
    const auto &g = x_[a_offset(i)];
    return MatchRow(std::span<const std::int32_t>(s_start_).subspan(g.fb_pos, g.fa_pos - g.fb_pos),
                    static_cast<std::int32_t>(k_));
}

std::optional<int> MatchIndex::successor_in_row(int i, int jmin) const {
    const auto row = matches_in_row(i);
    const auto it = std::lower_bound(row.begin(), row.end(), jmin);
    if (it == row.end()) {
        return std::nullopt;
    }
    return *it;
}

std::int32_t MatchIndex::row_group_id(int i) const {
    if (i < static_cast<int>(k_) || i > m_) {
        throw std::out_of_range("row outside [k, m]");
    }
    return s_group_[x_[a_offset(i)].fb_pos];
}

std::int32_t MatchIndex::column_group_id(int j) const {
    if (j < static_cast<int>(k_) || j > n_) {
        throw std::out_of_range("column outside [k, n]");
    }
    return s_group_[x_[j - static_cast<int>(k_)].fb_pos];
}

std::size_t MatchIndex::row_match_count(int i) const {
    const auto &g = x_[a_offset(i)];
    return static_cast<std::size_t>(g.fa_pos - g.fb_pos);
}

std::size_t MatchIndex::memory_bytes() const noexcept {
    const auto ints = text_.concat.capacity() + text_.sa.capacity() + text_.lcp.capacity() + s_group_.capacity() +
                      s_start_.capacity();
    return ints * sizeof(std::int32_t) + x_.capacity() * sizeof(GroupSpan);
}

} // namespace lcsk
