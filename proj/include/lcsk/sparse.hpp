#pragma once

#include <cstdint>
#include <vector>

#include "lcsk/match_index.hpp"
#include "lcsk/persistent_tree.hpp"
#include "lcsk/problem.hpp"

namespace lcsk::sparse {

/// One accepted threshold update: the match (row, column) reached `rank`
/// through the record `prev` (-1 for rank 1).
struct Backlink {
    int row = 0;
    int column = 0;
    int rank = 0;
    std::int32_t prev = -1;
};

/// Threshold versions THR[0..m], one persistent tree root per row. Key 0 and
/// key n+1 are the -inf / +inf sentinels; select(root(i), h) for h >= 1 is
/// the leftmost column where the prefix LCSk of row i reaches h.
class ThresholdHistory {
  public:
    ThresholdHistory(const Problem &p, const MatchIndex &idx);

    pstree::Version root(int i) const { return roots_.at(static_cast<std::size_t>(i)); }
    const pstree::Forest &forest() const noexcept { return forest_; }
    const std::vector<Backlink> &backlinks() const noexcept { return backlinks_; }
    int rows() const noexcept { return static_cast<int>(roots_.size()) - 1; }

    /// Non-sentinel keys of row i, ascending.
    std::vector<int> thresholds(int i) const;
    std::size_t length() const { return forest_.size(roots_.back()) - 2; }
    std::size_t memory_bytes() const noexcept;

  private:
    pstree::Forest forest_;
    std::vector<pstree::Version> roots_;
    std::vector<Backlink> backlinks_;
};

LcskResult solve(const Problem &p, const MatchIndex &idx, bool extract);

} // namespace lcsk::sparse
