#include "lcsk/dp.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <vector>

namespace lcsk::dp {

namespace {

// Fills cur[k..n] of row i from its predecessor row and the row k above.
void fill_row(int *cur, const int *prev, const int *back, MatchRow matches, int k, int n) {
    auto it = matches.begin();
    const auto end = matches.end();
    int next = it != end ? *it : std::numeric_limits<int>::max();
    for (int j = k; j <= n; ++j) {
        if (j == next) {
            cur[j] = back[j - k] + 1;
            ++it;
            next = it != end ? *it : std::numeric_limits<int>::max();
        } else {
            cur[j] = std::max(cur[j - 1], prev[j]);
        }
    }
}

enum Move : std::uint8_t { kStop = 0, kDiag = 1, kUp = 2, kLeft = 3 };

class MoveGrid {
  public:
    MoveGrid(int m, int n) : stride_(static_cast<std::size_t>(n) + 1), bits_((stride_ * (m + 1) + 3) / 4, 0) {}

    void set(int i, int j, Move mv) {
        const auto cell = static_cast<std::size_t>(i) * stride_ + j;
        bits_[cell / 4] |= static_cast<std::uint8_t>(mv << (2 * (cell % 4)));
    }
    Move get(int i, int j) const {
        const auto cell = static_cast<std::size_t>(i) * stride_ + j;
        return static_cast<Move>((bits_[cell / 4] >> (2 * (cell % 4))) & 3u);
    }

  private:
    std::size_t stride_;
    std::vector<std::uint8_t> bits_;
};

} // namespace

LcskResult solve(const Problem &p, const MatchIndex &idx, bool extract) {
    const auto start = std::chrono::steady_clock::now();
    const int m = p.m();
    const int n = p.n();
    const auto k = static_cast<int>(p.k());

    LcskResult r;
    r.algorithm = Algorithm::dp;
    if (extract) {
        r.pairs.emplace();
    }
    if (k > m || k > n) {
        r.elapsed = std::chrono::steady_clock::now() - start;
        return r;
    }

    const auto width = static_cast<std::size_t>(n) + 1;
    const int slots = k + 1;
    std::vector<int> ring(width * slots, 0);
    auto row_ptr = [&](int i) { return ring.data() + static_cast<std::size_t>(i % slots) * width; };

    std::optional<MoveGrid> moves;
    if (extract) {
        moves.emplace(m, n);
    }

    for (int i = k; i <= m; ++i) {
        int *cur = row_ptr(i);
        const int *prev = row_ptr(i - 1);
        const int *back = row_ptr(i - k);
        const auto matches = idx.matches_in_row(i);
        fill_row(cur, prev, back, matches, k, n);

        if (moves) {
            auto it = matches.begin();
            for (int j = k; j <= n; ++j) {
                if (cur[j] == 0) {
                    continue;
                }
                while (it != matches.end() && *it < j) {
                    ++it;
                }
                if (it != matches.end() && *it == j) {
                    moves->set(i, j, kDiag);
                } else if (prev[j] == cur[j]) {
                    moves->set(i, j, kUp);
                } else {
                    moves->set(i, j, kLeft);
                }
            }
        }
    }
    r.length = static_cast<std::size_t>(row_ptr(m)[n]);
    r.working_bytes = ring.size() * sizeof(int) + (extract ? (width * (m + 1) + 3) / 4 : 0);

    if (moves) {
        auto &pairs = *r.pairs;
        int i = m;
        int j = n;
        for (Move mv = moves->get(i, j); mv != kStop; mv = moves->get(i, j)) {
            if (mv == kDiag) {
                pairs.push_back({i, j});
                i -= k;
                j -= k;
            } else if (mv == kUp) {
                --i;
            } else {
                --j;
            }
        }
        std::reverse(pairs.begin(), pairs.end());
    }
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

DpMatrix matrix(const Problem &p, const MatchIndex &idx) {
    const int m = p.m();
    const int n = p.n();
    const auto k = static_cast<int>(p.k());
    DpMatrix M(m, n);
    if (k > m || k > n) {
        return M;
    }
    for (int i = k; i <= m; ++i) {
        fill_row(&M.at(i, 0), &M.at(i - 1, 0), &M.at(i - k, 0), idx.matches_in_row(i), k, n);
    }
    return M;
}

} // namespace lcsk::dp
