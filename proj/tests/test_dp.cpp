#include <doctest.h>

#include <random>

#include "lcsk/dp.hpp"
#include "lcsk/oracle.hpp"
#include "support.hpp"

using namespace lcsk;

TEST_CASE("dp examples") {
    {
        const Problem p("xy", "yx", 2);
        const auto r = dp::solve(p, MatchIndex(p), true);
        CHECK(r.length == 0);
        REQUIRE(r.pairs.has_value());
        CHECK(r.pairs->empty());
    }
    {
        const Problem p("abab", "abab", 2);
        const auto r = dp::solve(p, MatchIndex(p), true);
        CHECK(r.length == 2);
        CHECK(*r.pairs == std::vector<MatchPair>{{2, 2}, {4, 4}});
    }
    {
        const Problem p("abab", "ab", 3);
        CHECK(dp::solve(p, MatchIndex(p), false).length == 0);
        CHECK(dp::matrix(p, MatchIndex(p)) == oracle::matrix(p));
    }
}

TEST_CASE("dp matrix equals the naive matrix") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 400; ++trial) {
        const auto p = testing::random_problem(rng, 64);
        REQUIRE(dp::matrix(p, MatchIndex(p)) == oracle::matrix(p));
    }
}

TEST_CASE("every cell is bounded by its k-diagonal predecessor plus one") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = testing::random_problem(rng, 64);
        const auto M = dp::matrix(p, MatchIndex(p));
        const auto k = static_cast<int>(p.k());
        for (int i = k; i <= p.m(); ++i) {
            for (int j = k; j <= p.n(); ++j) {
                const int d2 = M.at(i, j) - M.at(i - k, j - k);
                REQUIRE(d2 >= 0);
                REQUIRE(d2 <= 1);
            }
        }
    }
}

TEST_CASE("adjacent cells differ by zero or one") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = testing::random_problem(rng, 64);
        const auto M = dp::matrix(p, MatchIndex(p));
        for (int i = 0; i <= p.m(); ++i) {
            for (int j = 0; j <= p.n(); ++j) {
                if (i > 0) {
                    const int d = M.at(i, j) - M.at(i - 1, j);
                    REQUIRE((d == 0 || d == 1));
                }
                if (j > 0) {
                    const int d = M.at(i, j) - M.at(i, j - 1);
                    REQUIRE((d == 0 || d == 1));
                }
            }
        }
    }
}

TEST_CASE("dp extraction matches the reference backtrack") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 400; ++trial) {
        const auto p = testing::random_problem(rng, 64);
        const auto r = dp::solve(p, MatchIndex(p), true);
        const auto ref = oracle::solve_dp(p);
        REQUIRE(r.length == ref.length);
        REQUIRE(verify_solution(p, r));
        REQUIRE(*r.pairs == *ref.pairs);
        CHECK_FALSE(dp::solve(p, MatchIndex(p), false).pairs.has_value());
    }
}

TEST_CASE("increments of consecutive rank are at least k columns apart") {
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = testing::random_problem(rng, 64);
        REQUIRE(testing::separation_violations(dp::matrix(p, MatchIndex(p)), static_cast<int>(p.k())) == 0);
    }
    // A matrix built by hand with two increments one column apart is caught.
    DpMatrix bad(1, 3);
    bad.at(1, 1) = 1;
    bad.at(1, 2) = 2;
    bad.at(1, 3) = 2;
    CHECK(testing::separation_violations(bad, 2) == 1);
}
