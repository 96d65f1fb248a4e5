#pragma once

#include <cstddef>

#include "lcsk/problem.hpp"

namespace lcsk::oracle {

/// Full matrix of the LCSk recurrence with naive O(k) k-string comparison.
DpMatrix matrix(const Problem &p);

/// O(k*m*n) reference solver; pairs via backtracking (match, then up, then left).
LcskResult solve_dp(const Problem &p);

inline constexpr int kExhaustiveLimit = 20;

/// Maximal chain length over all sets of ordered, non-overlapping equal
/// k-string pairs, by memoized enumeration of chains from their start
/// positions. Rejects m or n above kExhaustiveLimit.
std::size_t solve_exhaustive(const Problem &p);

/// Classic LCS length (k = 1 reference), textbook two-row DP.
std::size_t classic_lcs(std::string_view a, std::string_view b);

} // namespace lcsk::oracle
