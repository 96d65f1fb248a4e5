#include "lcsk/problem.hpp"

#include <algorithm>
#include <array>

namespace lcsk {

Problem::Problem(std::string a, std::string b, std::size_t k) : a_(std::move(a)), b_(std::move(b)), k_(k) {
    if (k_ == 0) {
        throw InvalidProblem("k must be >= 1");
    }
}

bool Problem::is_match(int i, int j) const noexcept {
    const auto k = static_cast<int>(k_);
    if (i < k || j < k || i > m() || j > n()) {
        return false;
    }
    return std::string_view(a_).substr(i - k, k_) == std::string_view(b_).substr(j - k, k_);
}

std::size_t Problem::length_bound() const noexcept { return std::min(a_.size(), b_.size()) / k_; }

Problem validate(std::string_view a, std::string_view b, std::int64_t k) {
    if (k < 1) {
        throw InvalidProblem("k must be >= 1");
    }
    return Problem(std::string(a), std::string(b), static_cast<std::size_t>(k));
}

namespace {

std::string to_bytes(std::span<const std::int64_t> symbols, const char *which) {
    std::string out;
    out.reserve(symbols.size());
    for (auto s : symbols) {
        if (s < 0 || s > 255) {
            throw InvalidProblem(std::string("symbol outside the byte alphabet in sequence ") + which + ": " +
                                 std::to_string(s));
        }
        out.push_back(static_cast<char>(static_cast<unsigned char>(s)));
    }
    return out;
}

} // namespace

Problem validate(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::int64_t k) {
    if (k < 1) {
        throw InvalidProblem("k must be >= 1");
    }
    return Problem(to_bytes(a, "a"), to_bytes(b, "b"), static_cast<std::size_t>(k));
}

namespace {
constexpr std::array<std::pair<Algorithm, std::string_view>, 6> kAlgorithmNames{{
    {Algorithm::dp, "dp"},
    {Algorithm::sparse, "sparse"},
    {Algorithm::dense, "dense"},
    {Algorithm::tabulation, "tab"},
    {Algorithm::oracle, "oracle"},
    {Algorithm::automatic, "auto"},
}};
}

std::string_view to_string(Algorithm algo) noexcept {
    for (const auto &[a, name] : kAlgorithmNames) {
        if (a == algo) {
            return name;
        }
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    if (name == "tabulation") {
        return Algorithm::tabulation;
    }
    for (const auto &[a, n] : kAlgorithmNames) {
        if (n == name) {
            return a;
        }
    }
    return std::nullopt;
}

bool verify_pairs(const Problem &p, std::span<const MatchPair> pairs) {
    const auto k = static_cast<int>(p.k());
    for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (!p.is_match(pairs[e].i, pairs[e].j)) {
            return false;
        }
        if (e > 0 && (pairs[e - 1].i + k > pairs[e].i || pairs[e - 1].j + k > pairs[e].j)) {
            return false;
        }
    }
    return true;
}

bool verify_solution(const Problem &p, const LcskResult &r) {
    if (!r.pairs || r.pairs->size() != r.length || r.length > p.length_bound()) {
        return false;
    }
    return verify_pairs(p, *r.pairs);
}

} // namespace lcsk
