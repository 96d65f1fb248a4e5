#include "lcsk/dense.hpp"

#include <algorithm>
#include <chrono>

namespace lcsk::dense {

namespace {

struct Row {
    std::vector<int> column;
    // Row in which each entry was last set; -1 for sentinels. Only filled
    // when extracting.
    std::vector<int> origin;
};

// Runs the threshold sweep; `archive` (if given) receives a copy of every row.
std::size_t sweep(const Problem &p, const MatchIndex &idx, std::vector<Row> *archive, Stats *stats) {
    const int m = p.m();
    const int n = p.n();
    const auto k = static_cast<int>(p.k());
    const int inf = n + 1;
    const bool track = archive != nullptr;

    const Row initial{{0, inf}, track ? std::vector<int>{-1, -1} : std::vector<int>{}};
    if (archive) {
        archive->assign(static_cast<std::size_t>(m) + 1, initial);
    }
    if (k > m || k > n) {
        if (stats) {
            stats->peak_window_slots = 2;
        }
        return 0;
    }

    const int slots = k + 1;
    std::vector<Row> ring(slots, initial);
    std::size_t window = 2 * static_cast<std::size_t>(slots);
    std::size_t peak = window;

    for (int i = k; i <= m; ++i) {
        Row &cur = ring[i % slots];
        const Row &prev = ring[(i - 1) % slots];
        const Row &back = ring[(i - k) % slots];

        window -= cur.column.size();
        cur.column.assign(prev.column.begin(), prev.column.end());
        if (track) {
            cur.origin.assign(prev.origin.begin(), prev.origin.end());
        }

        const auto matches = idx.matches_in_row(i);
        auto from = matches.begin();
        const std::size_t len = prev.column.size();
        const std::size_t back_last = back.column.size() - 1;
        for (std::size_t h = 1; h < len && h - 1 < back_last; ++h) {
            const int jmin = back.column[h - 1] + k;
            from = std::lower_bound(from, matches.end(), jmin);
            if (from == matches.end()) {
                break;
            }
            const int x = *from;
            if (x < cur.column[h]) {
                const bool grows = cur.column[h] == inf;
                cur.column[h] = x;
                if (track) {
                    cur.origin[h] = i;
                }
                if (grows) {
                    cur.column.push_back(inf);
                    if (track) {
                        cur.origin.push_back(-1);
                    }
                }
            }
        }

        window += cur.column.size();
        peak = std::max(peak, window);
        if (archive) {
            (*archive)[i] = cur;
        }
    }
    if (stats) {
        stats->peak_window_slots = peak;
    }
    return ring[m % slots].column.size() - 2;
}

} // namespace

LcskResult solve(const Problem &p, const MatchIndex &idx, bool extract, Stats *stats) {
    const auto start = std::chrono::steady_clock::now();
    Stats local;
    if (!stats) {
        stats = &local;
    }
    LcskResult r;
    r.algorithm = Algorithm::dense;
    if (!extract) {
        r.length = sweep(p, idx, nullptr, stats);
    } else {
        std::vector<Row> rows;
        r.length = sweep(p, idx, &rows, stats);
        const auto k = static_cast<int>(p.k());
        std::vector<MatchPair> pairs;
        pairs.reserve(r.length);
        int row = p.m();
        for (auto h = r.length; h > 0; --h) {
            const int column = rows[row].column[h];
            const int origin = rows[row].origin[h];
            pairs.push_back({origin, column});
            row = origin - k;
        }
        std::reverse(pairs.begin(), pairs.end());
        r.pairs = std::move(pairs);
        std::size_t archived = 0;
        for (const auto &row : rows) {
            archived += row.column.size() + row.origin.size();
        }
        r.working_bytes = archived * sizeof(int);
    }
    r.working_bytes = std::max(r.working_bytes, stats->peak_window_slots * sizeof(int));
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

std::vector<std::vector<int>> threshold_rows(const Problem &p, const MatchIndex &idx) {
    std::vector<Row> rows;
    sweep(p, idx, &rows, nullptr);
    std::vector<std::vector<int>> out;
    out.reserve(rows.size());
    for (const auto &row : rows) {
        out.emplace_back(row.column.begin() + 1, row.column.end() - 1);
    }
    return out;
}

} // namespace lcsk::dense
