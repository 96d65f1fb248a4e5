#pragma once

#include <cstddef>
#include <vector>

#include "lcsk/match_index.hpp"
#include "lcsk/problem.hpp"

namespace lcsk::dense {

struct Stats {
    /// Largest number of column slots held by the k+1 row window at once.
    std::size_t peak_window_slots = 0;
};

/// Threshold arrays kept as plain vectors, one per row over a k+1 ring;
/// successor queries into the row's match list by binary search.
LcskResult solve(const Problem &p, const MatchIndex &idx, bool extract, Stats *stats = nullptr);

/// Non-sentinel threshold columns of every row 0..m.
std::vector<std::vector<int>> threshold_rows(const Problem &p, const MatchIndex &idx);

} // namespace lcsk::dense
