#include <doctest.h>

#include <random>

#include "lcsk/lcsk.hpp"
#include "support.hpp"

using namespace lcsk;

TEST_CASE("validate accepts degenerate inputs and rejects k = 0") {
    CHECK_NOTHROW(validate("abc", "abc", 2));
    CHECK_THROWS_WITH_AS(validate("abc", "abc", 0), "k must be >= 1", InvalidProblem);
    CHECK_THROWS_AS(validate("abc", "abc", -3), InvalidProblem);

    const auto empty = validate("", "x", 1);
    CHECK(empty.m() == 0);
    for (auto algo : {Algorithm::dp, Algorithm::sparse, Algorithm::dense, Algorithm::tabulation, Algorithm::oracle}) {
        CHECK(solve(empty, algo, true).length == 0);
    }
}

TEST_CASE("validate over code points rejects symbols outside the byte alphabet") {
    const std::vector<std::int64_t> ok{97, 98, 255};
    const std::vector<std::int64_t> bad{97, 256};
    const std::vector<std::int64_t> negative{-1};
    CHECK(validate(ok, ok, 1).a() == std::string("ab\xff"));
    CHECK_THROWS_AS(validate(ok, bad, 1), InvalidProblem);
    CHECK_THROWS_AS(validate(negative, ok, 1), InvalidProblem);
}

TEST_CASE("verify_solution") {
    const auto p = validate("abab", "abab", 2);
    LcskResult r;
    r.length = 2;
    r.pairs = std::vector<MatchPair>{{2, 2}, {4, 4}};
    CHECK(verify_solution(p, r));

    r.pairs = std::vector<MatchPair>{{2, 2}, {3, 3}};
    CHECK_FALSE(verify_solution(p, r)); // overlap: 2 + 2 > 3

    // A_{1..2} = "ab" = B_{3..4}
    r.length = 1;
    r.pairs = std::vector<MatchPair>{{2, 4}};
    CHECK(verify_solution(p, r));

    SUBCASE("count must equal the length") {
        r.length = 2;
        CHECK_FALSE(verify_solution(p, r));
    }
    SUBCASE("overlap in B alone is rejected") {
        const auto q = validate("aaaa", "aaaaa", 2);
        const std::vector<MatchPair> shifted{{2, 2}, {4, 3}};
        const std::vector<MatchPair> apart{{2, 2}, {4, 5}};
        CHECK_FALSE(verify_pairs(q, shifted));
        CHECK(verify_pairs(q, apart));
    }
    SUBCASE("missing pairs") {
        LcskResult s;
        CHECK_FALSE(verify_solution(p, s));
    }
    SUBCASE("unequal k-strings") {
        LcskResult s;
        s.length = 1;
        s.pairs = std::vector<MatchPair>{{2, 3}}; // "ab" vs "ba"
        CHECK_FALSE(verify_solution(p, s));
    }
}

TEST_CASE("solve dispatch examples") {
    const auto all = {Algorithm::dp,         Algorithm::sparse, Algorithm::dense,
                      Algorithm::tabulation, Algorithm::oracle, Algorithm::automatic};
    for (auto algo : all) {
        CAPTURE(to_string(algo));
        CHECK(solve(validate("abab", "abab", 2), algo, false).length == 2);
        CHECK(solve(validate("aaaaa", "aaaaa", 2), algo, false).length == 2);
        CHECK(solve(validate("ABCBDAB", "BDCABA", 1), algo, false).length == 4);
        CHECK(solve(validate("abcde", "vwxyz", 2), algo, false).length == 0);

        const auto p = validate("ABCBDAB", "BDCABA", 1);
        const auto r = solve(p, algo, true);
        CHECK(verify_solution(p, r));
    }
}

TEST_CASE("length-zero extraction carries an empty pair list") {
    const auto p = validate("abcde", "vwxyz", 2);
    for (auto algo : {Algorithm::dp, Algorithm::sparse, Algorithm::dense, Algorithm::tabulation, Algorithm::oracle}) {
        const auto r = solve(p, algo, true);
        REQUIRE(r.pairs.has_value());
        CHECK(r.pairs->empty());
        CHECK_FALSE(solve(p, algo, false).pairs.has_value());
    }
}

TEST_CASE("auto selects sparse for few matches and tabulation for many") {
    std::mt19937_64 rng(5);
    const Problem sparse_case(testing::random_string(rng, 2000, 20), testing::random_string(rng, 2000, 20), 4);
    const Problem dense_case(std::string(500, 'a'), std::string(500, 'a'), 1);
    CHECK(choose_algorithm(sparse_case, MatchIndex(sparse_case)) == Algorithm::sparse);
    CHECK(choose_algorithm(dense_case, MatchIndex(dense_case)) == Algorithm::tabulation);
    CHECK(solve(dense_case, Algorithm::automatic, false).algorithm == Algorithm::tabulation);
}

TEST_CASE("algorithm names round-trip") {
    for (auto algo : {Algorithm::dp, Algorithm::sparse, Algorithm::dense, Algorithm::tabulation, Algorithm::oracle,
                      Algorithm::automatic}) {
        CHECK(parse_algorithm(to_string(algo)) == algo);
    }
    CHECK(parse_algorithm("tabulation") == Algorithm::tabulation);
    CHECK_FALSE(parse_algorithm("nope").has_value());
}

TEST_CASE("unequal lengths and k beyond the shorter sequence") {
    const auto p = validate("abcabcabc", "abc", 3);
    CHECK(solve(p, Algorithm::sparse, false).length == 1);
    const auto q = validate("ab", "abababab", 3);
    for (auto algo : {Algorithm::dp, Algorithm::sparse, Algorithm::dense, Algorithm::tabulation}) {
        CHECK(solve(q, algo, true).length == 0);
    }
}
