#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include "lcsk/problem.hpp"

namespace lcsk {

/// Suffix array and LCP table over the concatenation B . sep . A.
/// Symbols are stored as byte + 1; the separator is 0.
struct TextIndex {
    std::vector<std::int32_t> concat;
    std::vector<std::int32_t> sa;
    std::vector<std::int32_t> lcp;
};

/// Positions into the grouped suffix array S for one k-string group.
/// B entries occupy [fb_pos, fa_pos), A entries [fa_pos, ng_pos).
struct GroupSpan {
    std::int32_t fa_pos = 0;
    std::int32_t fb_pos = 0;
    std::int32_t ng_pos = 0;
};

/// Ascending end columns in B matching one row's k-string. A view into the
/// index; valid while the owning MatchIndex lives.
class MatchRow {
  public:
    class iterator {
      public:
        using iterator_category = std::random_access_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = int;

        iterator() = default;
        iterator(const std::int32_t *p, std::int32_t offset) : p_(p), offset_(offset) {}

        int operator*() const { return *p_ + offset_; }
        int operator[](difference_type d) const { return p_[d] + offset_; }
        iterator &operator++() {
            ++p_;
            return *this;
        }
        iterator operator++(int) {
            auto t = *this;
            ++p_;
            return t;
        }
        iterator &operator--() {
            --p_;
            return *this;
        }
        iterator operator--(int) {
            auto t = *this;
            --p_;
            return t;
        }
        iterator &operator+=(difference_type d) {
            p_ += d;
            return *this;
        }
        iterator &operator-=(difference_type d) {
            p_ -= d;
            return *this;
        }
        friend iterator operator+(iterator it, difference_type d) { return it += d; }
        friend iterator operator+(difference_type d, iterator it) { return it += d; }
        friend iterator operator-(iterator it, difference_type d) { return it -= d; }
        friend difference_type operator-(const iterator &a, const iterator &b) { return a.p_ - b.p_; }
        friend bool operator==(const iterator &a, const iterator &b) { return a.p_ == b.p_; }
        friend auto operator<=>(const iterator &a, const iterator &b) { return a.p_ <=> b.p_; }

      private:
        const std::int32_t *p_ = nullptr;
        std::int32_t offset_ = 0;
    };

    MatchRow() = default;
    MatchRow(std::span<const std::int32_t> starts, std::int32_t offset) : starts_(starts), offset_(offset) {}

    std::size_t size() const noexcept { return starts_.size(); }
    bool empty() const noexcept { return starts_.empty(); }
    int operator[](std::size_t t) const { return starts_[t] + offset_; }
    iterator begin() const { return {starts_.data(), offset_}; }
    iterator end() const { return {starts_.data() + starts_.size(), offset_}; }

    std::vector<int> to_vector() const { return {begin(), end()}; }

  private:
    std::span<const std::int32_t> starts_;
    std::int32_t offset_ = 0;
};

/// Linear-time match preprocessing: every k-string of A is mapped to the
/// ascending list of B end columns holding the same k-string.
class MatchIndex {
  public:
    explicit MatchIndex(const Problem &p);

    std::size_t k() const noexcept { return k_; }
    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }

    /// Columns j with B_{j-k+1..j} == A_{i-k+1..i}; requires k <= i <= m.
    MatchRow matches_in_row(int i) const;

    /// Smallest match column >= jmin in row i.
    std::optional<int> successor_in_row(int i, int jmin) const;

    /// Rows share an id iff their k-strings are equal.
    std::int32_t row_group_id(int i) const;
    /// Group id of B's k-string ending at column j (k <= j <= n).
    std::int32_t column_group_id(int j) const;

    std::size_t row_match_count(int i) const;
    /// Total number of match cells r over all rows.
    std::size_t total_matches() const noexcept { return total_matches_; }
    std::size_t group_count() const noexcept { return group_count_; }
    std::size_t memory_bytes() const noexcept;

    const TextIndex &text() const noexcept { return text_; }
    std::span<const std::int32_t> s_group() const noexcept { return s_group_; }
    std::span<const std::int32_t> s_start() const noexcept { return s_start_; }
    std::span<const GroupSpan> x() const noexcept { return x_; }

  private:
    std::int32_t a_offset(int i) const noexcept { return n_ + 1 + (i - static_cast<int>(k_)); }

    std::size_t k_;
    int m_;
    int n_;
    TextIndex text_;
    std::vector<std::int32_t> s_group_;
    std::vector<std::int32_t> s_start_;
    std::vector<GroupSpan> x_;
    std::size_t group_count_ = 0;
    std::size_t total_matches_ = 0;
};

inline MatchIndex build_match_index(const Problem &p) { return MatchIndex(p); }

} // namespace lcsk
