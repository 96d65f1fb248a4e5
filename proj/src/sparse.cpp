#include "lcsk/sparse.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>

namespace lcsk::sparse {

ThresholdHistory::ThresholdHistory(const Problem &p, const MatchIndex &idx) {
    const int m = p.m();
    const int n = p.n();
    const auto k = static_cast<int>(p.k());
    const int inf = n + 1;

    const auto sentinels = forest_.insert(forest_.insert({}, 0), inf);
    roots_.assign(static_cast<std::size_t>(m) + 1, sentinels);
    if (k > m || k > n) {
        return;
    }

    for (int i = k; i <= m; ++i) {
        auto cur = roots_[i - 1];
        const auto back = roots_[i - k];
        // Ascending columns; queries go k rows back, so an update made
        // earlier in this row never feeds a later one.
        for (const int x : idx.matches_in_row(i)) {
            const auto j1 = forest_.pred(back, x - k + 1);
            const auto h = j1->rank;
            const auto j2 = forest_.select(cur, h + 1);
            if (x >= j2.key) {
                continue;
            }
            assert(forest_.select(cur, h).key < x);
            const auto id = static_cast<std::int32_t>(backlinks_.size());
            backlinks_.push_back({i, x, static_cast<int>(h) + 1, j1->payload});
            if (j2.key != inf) {
                cur = forest_.erase(cur, j2.key);
            }
            cur = forest_.insert(cur, x, id);
        }
        roots_[i] = cur;
    }
}

std::vector<int> ThresholdHistory::thresholds(int i) const {
    auto keys = forest_.keys(root(i));
    return {keys.begin() + 1, keys.end() - 1};
}

std::size_t ThresholdHistory::memory_bytes() const noexcept {
    return forest_.memory_bytes() + roots_.capacity() * sizeof(pstree::Version) +
           backlinks_.capacity() * sizeof(Backlink);
}

LcskResult solve(const Problem &p, const MatchIndex &idx, bool extract) {
    const auto start = std::chrono::steady_clock::now();
    const ThresholdHistory history(p, idx);

    LcskResult r;
    r.algorithm = Algorithm::sparse;
    r.length = history.length();
    r.working_bytes = history.memory_bytes();
    if (extract) {
        std::vector<MatchPair> pairs;
        pairs.reserve(r.length);
        if (r.length > 0) {
            const auto &links = history.backlinks();
            auto id = history.forest().select(history.root(history.rows()), r.length).payload;
            for (; id >= 0; id = links[id].prev) {
                pairs.push_back({links[id].row, links[id].column});
            }
            std::reverse(pairs.begin(), pairs.end());
        }
        r.pairs = std::move(pairs);
    }
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

} // namespace lcsk::sparse
