#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lcsk {

/// Thrown for malformed problem instances (k = 0, symbols outside the byte alphabet).
class InvalidProblem : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Two byte sequences and the k-string length. Positions in all public
/// contracts are 1-based; a k-string is identified by its END position.
class Problem {
  public:
    Problem(std::string a, std::string b, std::size_t k);

    const std::string &a() const noexcept { return a_; }
    const std::string &b() const noexcept { return b_; }
    std::size_t k() const noexcept { return k_; }
    int m() const noexcept { return static_cast<int>(a_.size()); }
    int n() const noexcept { return static_cast<int>(b_.size()); }

    /// True iff A_{i-k+1..i} == B_{j-k+1..j} (direct O(k) comparison).
    bool is_match(int i, int j) const noexcept;

    /// Upper bound min(floor(m/k), floor(n/k)) on any solution length.
    std::size_t length_bound() const noexcept;

  private:
    std::string a_;
    std::string b_;
    std::size_t k_;
};

Problem validate(std::string_view a, std::string_view b, std::int64_t k);

/// Code-point input; symbols must fit the byte alphabet.
Problem validate(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::int64_t k);

/// One k-string pair, given by its 1-based end positions in A and B.
struct MatchPair {
    int i = 0;
    int j = 0;
    friend bool operator==(const MatchPair &, const MatchPair &) = default;
};

enum class Algorithm { dp, sparse, dense, tabulation, oracle, automatic };

std::string_view to_string(Algorithm algo) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

struct LcskResult {
    std::size_t length = 0;
    std::optional<std::vector<MatchPair>> pairs;
    Algorithm algorithm = Algorithm::dp;
    std::chrono::duration<double, std::milli> elapsed{0};
    /// Solver working-set estimate, excluding the match index.
    std::size_t working_bytes = 0;
};

/// Checks count, in-order non-overlap in both sequences, and k-string equality.
bool verify_solution(const Problem &p, const LcskResult &r);
bool verify_pairs(const Problem &p, std::span<const MatchPair> pairs);

/// Dense (m+1) x (n+1) table of M(i, j) values, row-major.
class DpMatrix {
  public:
    DpMatrix() = default;
    DpMatrix(int m, int n) : m_(m), n_(n), values_(static_cast<std::size_t>(m + 1) * (n + 1), 0) {}

    int rows() const noexcept { return m_; }
    int cols() const noexcept { return n_; }
    int &at(int i, int j) { return values_[static_cast<std::size_t>(i) * (n_ + 1) + j]; }
    int at(int i, int j) const { return values_[static_cast<std::size_t>(i) * (n_ + 1) + j]; }

    friend bool operator==(const DpMatrix &, const DpMatrix &) = default;

  private:
    int m_ = 0;
    int n_ = 0;
    std::vector<int> values_;
};

} // namespace lcsk
