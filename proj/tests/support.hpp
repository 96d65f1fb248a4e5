#pragma once

// Test-only helpers: seeded instance generation and reference computations
// that share no code with the solvers.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lcsk/problem.hpp"

namespace lcsk::testing {

inline std::string random_string(std::mt19937_64 &rng, int length, int sigma) {
    std::string s(static_cast<std::size_t>(length), 'a');
    for (auto &c : s) {
        c = static_cast<char>('a' + rng() % static_cast<std::uint64_t>(sigma));
    }
    return s;
}

inline int uniform_int(std::mt19937_64 &rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Random instance with lengths in [0, max_n], sigma from {2, 4, 20}, k in [k_min, k_max].
inline Problem random_problem(std::mt19937_64 &rng, int max_n, int k_min = 1, int k_max = 8) {
    static constexpr int kSigmas[] = {2, 4, 20};
    const int sigma = kSigmas[rng() % 3];
    const int m = uniform_int(rng, 0, max_n);
    const int n = uniform_int(rng, 0, max_n);
    const int k = uniform_int(rng, k_min, k_max);
    return Problem(random_string(rng, m, sigma), random_string(rng, n, sigma), static_cast<std::size_t>(k));
}

/// Direct enumeration of B end columns whose k-string equals A's ending at i.
inline std::vector<int> direct_matches(const Problem &p, int i) {
    const auto k = static_cast<int>(p.k());
    std::vector<int> cols;
    for (int j = k; j <= p.n(); ++j) {
        if (std::string_view(p.a()).substr(i - k, k) == std::string_view(p.b()).substr(j - k, k)) {
            cols.push_back(j);
        }
    }
    return cols;
}

/// LCSk of every prefix pair by chain maximisation: value(i, j) is the best
/// chain whose last pair ends at some match (i', j') with i' <= i, j' <= j.
/// Quadratic in the number of cells; independent of the row recurrence.
inline std::vector<std::vector<int>> prefix_chain_table(const Problem &p) {
    const int m = p.m();
    const int n = p.n();
    const auto k = static_cast<int>(p.k());
    std::vector<std::vector<int>> ending(m + 1, std::vector<int>(n + 1, 0));
    std::vector<std::vector<int>> best(m + 1, std::vector<int>(n + 1, 0));
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= n; ++j) {
            if (i >= k && j >= k &&
                std::string_view(p.a()).substr(i - k, k) == std::string_view(p.b()).substr(j - k, k)) {
                int before = 0;
                for (int i2 = 0; i2 <= i - k; ++i2) {
                    for (int j2 = 0; j2 <= j - k; ++j2) {
                        before = std::max(before, ending[i2][j2]);
                    }
                }
                ending[i][j] = before + 1;
            }
            int v = 0;
            for (int i2 = 0; i2 <= i; ++i2) {
                for (int j2 = 0; j2 <= j; ++j2) {
                    v = std::max(v, ending[i2][j2]);
                }
            }
            best[i][j] = v;
        }
    }
    return best;
}

/// Column thresholds of row i of a value matrix: for h = 1.., the smallest
/// column whose value reaches h.
template <typename Matrix>
std::vector<int> column_thresholds(const Matrix &M, int i) {
    std::vector<int> out;
    for (int j = 1; j <= M.cols(); ++j) {
        if (M.at(i, j) > M.at(i, j - 1)) {
            out.push_back(j);
        }
    }
    return out;
}

// Re-simulates one snippet from absolute values: row i-1 and row i-k are
// rebuilt as prefix sums from their increment bits, with the left-edge values
// chosen so that d1 and d2 hold at the left boundary of the snippet.
inline std::uint32_t simulate_snippet(int b, std::uint32_t prev, std::uint32_t kback, std::uint32_t match, int d1,
                                      int d2) {
    std::vector<int> up(b + 1);
    std::vector<int> diag(b + 1);
    std::vector<int> cur(b + 1);
    const int base = 10;
    cur[0] = base;
    up[0] = base - d1;
    diag[0] = base - d2;
    for (int t = 1; t <= b; ++t) {
        up[t] = up[t - 1] + ((prev >> (t - 1)) & 1);
        diag[t] = diag[t - 1] + ((kback >> (t - 1)) & 1);
        const int via_match = (match >> (t - 1)) & 1 ? diag[t] + 1 : 0;
        cur[t] = std::max({cur[t - 1], up[t], via_match});
    }
    std::uint32_t out = 0;
    for (int t = 1; t <= b; ++t) {
        if (cur[t] != cur[t - 1]) {
            out |= 1u << (t - 1);
        }
    }
    const auto clamp01 = [](int v) { return static_cast<std::uint32_t>(std::min(std::max(v, 0), 1)); };
    return out | clamp01(cur[b] - up[b]) << b | clamp01(cur[b] - diag[b]) << (b + 1);
}

/// Violations of increment separation in M: for a rank-h increment at (i, j),
/// no rank-(h+1) increment may occur in rows i..i+k at a column below j+k.
template <typename Matrix>
std::size_t separation_violations(const Matrix &M, int k) {
    std::size_t bad = 0;
    for (int i = 0; i <= M.rows(); ++i) {
        for (int j = 1; j <= M.cols(); ++j) {
            if (M.at(i, j) == M.at(i, j - 1)) {
                continue;
            }
            const int h = M.at(i, j);
            for (int i2 = i; i2 <= std::min(i + k, M.rows()); ++i2) {
                for (int j2 = 1; j2 < std::min(j + k, M.cols() + 1); ++j2) {
                    if (M.at(i2, j2) == h + 1 && M.at(i2, j2 - 1) == h) {
                        ++bad;
                    }
                }
            }
        }
    }
    return bad;
}

} // namespace lcsk::testing
