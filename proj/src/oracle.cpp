#include "lcsk/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <vector>

namespace lcsk::oracle {

DpMatrix matrix(const Problem &p) {
    const int m = p.m();
    const int n = p.n();
    const auto k = static_cast<int>(p.k());
    DpMatrix M(m, n);
    for (int i = k; i <= m; ++i) {
        for (int j = k; j <= n; ++j) {
            if (p.is_match(i, j)) {
                M.at(i, j) = M.at(i - k, j - k) + 1;
            } else {
                M.at(i, j) = std::max(M.at(i, j - 1), M.at(i - 1, j));
            }
        }
    }
    return M;
}

LcskResult solve_dp(const Problem &p) {
    const auto start = std::chrono::steady_clock::now();
    const auto M = matrix(p);
    const auto k = static_cast<int>(p.k());

    std::vector<MatchPair> pairs;
    int i = p.m();
    int j = p.n();
    while (i >= k && j >= k && M.at(i, j) > 0) {
        if (p.is_match(i, j)) {
            pairs.push_back({i, j});
            i -= k;
            j -= k;
        } else if (M.at(i - 1, j) == M.at(i, j)) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(pairs.begin(), pairs.end());

    LcskResult r;
    r.length = static_cast<std::size_t>(M.at(p.m(), p.n()));
    r.pairs = std::move(pairs);
    r.algorithm = Algorithm::oracle;
    r.working_bytes = static_cast<std::size_t>(p.m() + 1) * (p.n() + 1) * sizeof(int);
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

std::size_t solve_exhaustive(const Problem &p) {
    if (p.m() > kExhaustiveLimit || p.n() > kExhaustiveLimit) {
        throw std::invalid_argument("exhaustive oracle limited to sequences of length <= 20");
    }
    const int m = p.m();
    const int n = p.n();
    const auto k = static_cast<int>(p.k());
    const std::string_view a = p.a();
    const std::string_view b = p.b();

    // best[s][t]: longest chain using only A starts >= s and B starts >= t (0-based).
    std::vector<int> best(static_cast<std::size_t>(m + 1) * (n + 1), -1);
    std::function<int(int, int)> search = [&](int s, int t) -> int {
        int &memo = best[static_cast<std::size_t>(s) * (n + 1) + t];
        if (memo >= 0) {
            return memo;
        }
        int result = 0;
        for (int sa = s; sa + k <= m; ++sa) {
            for (int sb = t; sb + k <= n; ++sb) {
                if (a.substr(sa, k) == b.substr(sb, k)) {
                    result = std::max(result, 1 + search(sa + k, sb + k));
                }
            }
        }
        memo = result;
        return result;
    };
    return static_cast<std::size_t>(search(0, 0));
}

std::size_t classic_lcs(std::string_view a, std::string_view b) {
    std::vector<std::size_t> prev(b.size() + 1, 0);
    std::vector<std::size_t> cur(b.size() + 1, 0);
    for (char ca : a) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            cur[j] = ca == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

} // namespace lcsk::oracle
