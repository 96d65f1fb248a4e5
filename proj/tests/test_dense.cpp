#include <doctest.h>

#include <random>

#include "lcsk/dense.hpp"
#include "lcsk/oracle.hpp"
#include "lcsk/sparse.hpp"
#include "support.hpp"

using namespace lcsk;

TEST_CASE("dense examples") {
    const Problem p("abab", "abab", 2);
    const MatchIndex idx(p);
    const auto r = dense::solve(p, idx, true);
    CHECK(r.length == 2);
    CHECK(*r.pairs == std::vector<MatchPair>{{2, 2}, {4, 4}});
    const auto rows = dense::threshold_rows(p, idx);
    REQUIRE(rows.size() == 5);
    CHECK(rows[1].empty());
    CHECK(rows[2] == std::vector<int>{2});
    CHECK(rows[4] == std::vector<int>{2, 4});

    const Problem none("abc", "xyz", 1);
    CHECK(dense::solve(none, MatchIndex(none), false).length == 0);
}

TEST_CASE("dense threshold rows equal the persistent history") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = testing::random_problem(rng, 48);
        const MatchIndex idx(p);
        const sparse::ThresholdHistory h(p, idx);
        const auto rows = dense::threshold_rows(p, idx);
        REQUIRE(rows.size() == static_cast<std::size_t>(p.m()) + 1);
        for (int i = 0; i <= p.m(); ++i) {
            REQUIRE(rows[i] == h.thresholds(i));
            for (std::size_t t = 1; t < rows[i].size(); ++t) {
                REQUIRE(rows[i][t - 1] < rows[i][t]);
            }
        }
    }
}

TEST_CASE("dense window stays within k + 1 rows of length plus sentinels") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = testing::random_problem(rng, 64);
        const MatchIndex idx(p);
        dense::Stats stats;
        const auto r = dense::solve(p, idx, false, &stats);
        CHECK(stats.peak_window_slots <= (p.k() + 1) * (r.length + 2));
    }
}

TEST_CASE("dense solutions agree with the reference and verify") {
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 600; ++trial) {
        const auto p = testing::random_problem(rng, 64);
        const MatchIndex idx(p);
        const auto r = dense::solve(p, idx, true);
        REQUIRE(r.length == oracle::solve_dp(p).length);
        REQUIRE(verify_solution(p, r));
        REQUIRE(dense::solve(p, idx, false).length == r.length);
    }
}
