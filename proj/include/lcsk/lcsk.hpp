#pragma once

#include "lcsk/dense.hpp"
#include "lcsk/dp.hpp"
#include "lcsk/match_index.hpp"
#include "lcsk/oracle.hpp"
#include "lcsk/problem.hpp"
#include "lcsk/sparse.hpp"
#include "lcsk/tabulation.hpp"

namespace lcsk {

struct SolveOptions {
    int block_width = tab::BlockTable::kDefaultWidth;
};

/// Process-wide table for width b, built on first use.
const tab::BlockTable &shared_block_table(int b);

/// Sparse when r * log2(n/k + 2) < m * n / 32, tabulation otherwise.
Algorithm choose_algorithm(const Problem &p, const MatchIndex &idx);

/// Solves with the requested algorithm. The result's elapsed time covers
/// match preprocessing and the solver; `algorithm` names the solver that ran.
LcskResult solve(const Problem &p, Algorithm algo, bool extract, const SolveOptions &options = {});

/// Same, reusing a prebuilt index.
LcskResult solve(const Problem &p, const MatchIndex &idx, Algorithm algo, bool extract,
                 const SolveOptions &options = {});

} // namespace lcsk
