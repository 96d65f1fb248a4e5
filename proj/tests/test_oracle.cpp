#include <doctest.h>

#include <random>

#include "lcsk/oracle.hpp"
#include "support.hpp"

using namespace lcsk;

TEST_CASE("oracle examples") {
    CHECK(oracle::solve_dp(Problem("aab", "aab", 2)).length == 1);
    CHECK(oracle::solve_dp(Problem("abcabc", "abc", 3)).length == 1);
    CHECK(oracle::solve_dp(Problem("ABCBDAB", "BDCABA", 1)).length == 4);
    CHECK(oracle::solve_exhaustive(Problem("aaaa", "aaaa", 1)) == 4);
    CHECK(oracle::solve_exhaustive(Problem("aaaa", "aaaa", 2)) == 2);
    CHECK(oracle::solve_exhaustive(Problem("aaaa", "aaaa", 3)) == 1);
    CHECK(oracle::solve_exhaustive(Problem("aaaa", "aaaa", 5)) == 0);
    CHECK(oracle::classic_lcs("ABCBDAB", "BDCABA") == 4);
    CHECK(oracle::classic_lcs("", "abc") == 0);
}

TEST_CASE("exhaustive oracle refuses large inputs") {
    const std::string big(oracle::kExhaustiveLimit + 1, 'a');
    CHECK_THROWS_AS(oracle::solve_exhaustive(Problem(big, "a", 1)), std::invalid_argument);
    CHECK_THROWS_AS(oracle::solve_exhaustive(Problem("a", big, 1)), std::invalid_argument);
    const std::string edge(oracle::kExhaustiveLimit, 'a');
    CHECK(oracle::solve_exhaustive(Problem(edge, edge, 3)) == oracle::kExhaustiveLimit / 3);
}

TEST_CASE("reference DP agrees with exhaustive enumeration") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 500; ++trial) {
        const auto p = testing::random_problem(rng, 14, 1, 5);
        const auto r = oracle::solve_dp(p);
        REQUIRE(r.length == oracle::solve_exhaustive(p));
        REQUIRE(verify_solution(p, r));
    }
}

TEST_CASE("matrix entries equal prefix chain maxima") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = testing::random_problem(rng, 32, 1, 4);
        const auto M = oracle::matrix(p);
        const auto chains = testing::prefix_chain_table(p);
        for (int i = 0; i <= p.m(); ++i) {
            for (int j = 0; j <= p.n(); ++j) {
                REQUIRE(M.at(i, j) == chains[i][j]);
            }
        }
    }
}

TEST_CASE("the match branch dominates on every binary instance up to length 5") {
    for (int k = 1; k <= 3; ++k) {
        for (int m = 0; m <= 5; ++m) {
            for (int n = 0; n <= 5; ++n) {
                for (int ma = 0; ma < (1 << m); ++ma) {
                    for (int mb = 0; mb < (1 << n); ++mb) {
                        std::string a(static_cast<std::size_t>(m), 'a');
                        std::string b(static_cast<std::size_t>(n), 'a');
                        for (int t = 0; t < m; ++t) {
                            a[t] = (ma >> t) & 1 ? 'b' : 'a';
                        }
                        for (int t = 0; t < n; ++t) {
                            b[t] = (mb >> t) & 1 ? 'b' : 'a';
                        }
                        const Problem p(a, b, static_cast<std::size_t>(k));
                        const auto M = oracle::matrix(p);
                        for (int i = k; i <= m; ++i) {
                            for (int j = k; j <= n; ++j) {
                                const int diag = M.at(i - k, j - k) + 1;
                                REQUIRE(M.at(i, j) <= diag);
                                if (p.is_match(i, j)) {
                                    REQUIRE(M.at(i, j) == diag);
                                    REQUIRE(diag >= std::max(M.at(i - 1, j), M.at(i, j - 1)));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("k = 1 reduces to classic LCS") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = testing::random_problem(rng, 64, 1, 1);
        REQUIRE(oracle::solve_dp(p).length == oracle::classic_lcs(p.a(), p.b()));
    }
}
