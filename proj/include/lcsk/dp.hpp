#pragma once

#include "lcsk/match_index.hpp"
#include "lcsk/problem.hpp"

namespace lcsk::dp {

/// Rowwise evaluation of the LCSk recurrence, match columns streamed from
/// the index. Length-only mode keeps k+1 rows; extraction stores a 2-bit
/// move code per cell.
LcskResult solve(const Problem &p, const MatchIndex &idx, bool extract);

/// Full matrix, same kernel as solve().
DpMatrix matrix(const Problem &p, const MatchIndex &idx);

} // namespace lcsk::dp
