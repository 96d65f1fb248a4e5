#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lcsk/match_index.hpp"
#include "lcsk/problem.hpp"

namespace lcsk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitDisagreement = 3;

/// Entry point for the `lcsk` tool; args excludes the program name.
int main(std::span<const std::string> args, std::istream &in, std::ostream &out, std::ostream &err);

struct Instance {
    std::string a;
    std::string b;
    std::size_t k = 1;
};

/// Seeded instance stream. Uses std::mt19937_64 with modulo reduction, so a
/// seed yields the same instances on every platform.
class InstanceGenerator {
  public:
    explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

    Instance next(int max_n, std::span<const int> alphabet_sizes, int k_min, int k_max);
    std::string sequence(int length, int sigma);
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) { return lo + rng_() % (hi - lo + 1); }

  private:
    std::mt19937_64 rng_;
};

using SolverFn = std::function<LcskResult(const Problem &, const MatchIndex &)>;

struct NamedSolver {
    std::string name;
    SolverFn solve;
};

/// dp, sparse, dense and tabulation at b = 4, 6, 8, all extracting.
std::vector<NamedSolver> default_solvers();

struct SelftestConfig {
    std::size_t cases = 1000;
    std::uint64_t seed = 42;
    int max_n = 64;
    std::vector<int> alphabet_sizes{2, 4, 20};
    int k_min = 1;
    int k_max = 8;
};

inline constexpr int kSelftestMaxN = 512;

/// Compares every solver against the reference DP on seeded instances and
/// verifies every extraction. Returns kExitDisagreement with a reproducer on
/// the first failure.
int selftest(const SelftestConfig &config, std::span<const NamedSolver> solvers, std::ostream &out,
             std::ostream &err);

struct BenchConfig {
    std::vector<int> sizes{1024, 2048, 4096, 8192};
    int sigma = 4;
    std::size_t k = 3;
    std::vector<Algorithm> algorithms{Algorithm::dp, Algorithm::sparse, Algorithm::dense, Algorithm::tabulation};
    int repeat = 3;
    std::uint64_t seed = 1;
    int block_width = 6;
};

struct BenchRow {
    Algorithm algorithm;
    int m;
    int n;
    std::size_t k;
    int sigma;
    std::size_t r;
    std::size_t length;
    double mean_ms;
    double stddev_ms;
    std::size_t peak_mem_estimate;
};

std::vector<BenchRow> bench(const BenchConfig &config);
void write_csv(std::span<const BenchRow> rows, std::ostream &out);

/// JSON document for one solve: m, n, k, algorithm, length, pairs (when
/// extracted) and elapsed_ms.
std::string to_json(const Problem &p, const LcskResult &r);

/// Parses "1024,2048" or a doubling range "1024..8192".
std::vector<int> parse_sizes(const std::string &text);

} // namespace lcsk::cli
