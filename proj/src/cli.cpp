#include "lcsk/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcsk/lcsk.hpp"

namespace lcsk::cli {

namespace {

// Unreadable files or malformed sequence input (exit code 2).
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Inconsistent flags that CLI11 cannot express (exit code 1).
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

constexpr std::string_view kAlnum = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

std::string strip_one_newline(std::string s) {
    if (!s.empty() && s.back() == '\n') {
        s.pop_back();
        if (!s.empty() && s.back() == '\r') {
            s.pop_back();
        }
    }
    return s;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::pair<std::string, std::string> read_fasta(const std::string &path) {
    std::istringstream in(read_file(path));
    std::vector<std::string> records;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty() && line.front() == '>') {
            records.emplace_back();
        } else if (!records.empty()) {
            records.back() += line;
        } else if (!line.empty()) {
            throw InputError(path + ": sequence data before the first FASTA header");
        }
    }
    if (records.size() < 2) {
        throw InputError(path + ": expected two FASTA records, found " + std::to_string(records.size()));
    }
    return {records[0], records[1]};
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(s);
    while (std::getline(in, part, sep)) {
        if (!part.empty()) {
            parts.push_back(part);
        }
    }
    return parts;
}

std::vector<Algorithm> parse_algorithms(const std::string &list) {
    std::vector<Algorithm> algos;
    for (const auto &name : split(list, ',')) {
        const auto algo = parse_algorithm(name);
        if (!algo) {
            throw UsageError("unknown algorithm '" + name + "'");
        }
        algos.push_back(*algo);
    }
    return algos;
}

struct RunOptions {
    std::string a;
    std::string b;
    std::string file_a;
    std::string file_b;
    std::string fasta;
    long long k = 0;
    std::string algorithm = "auto";
    bool extract = false;
    bool json = false;
    std::string format = "text";
    int block_width = 0;
};

int do_run(const RunOptions &o, bool a_given, bool b_given, std::istream &in, std::ostream &out) {
    if (o.k < 1) {
        throw UsageError("k must be >= 1");
    }
    const auto algo = parse_algorithm(o.algorithm);
    if (!algo) {
        throw UsageError("unknown algorithm '" + o.algorithm + "'");
    }
    if (o.block_width != 0 && *algo != Algorithm::tabulation && *algo != Algorithm::automatic) {
        throw UsageError("--block-width applies only to tab or auto");
    }
    const bool stdin_mode = a_given && o.a == "-";
    const int sources = (a_given || b_given ? 1 : 0) + (!o.file_a.empty() || !o.file_b.empty() ? 1 : 0) +
                        (!o.fasta.empty() ? 1 : 0);
    if (sources != 1) {
        throw UsageError("give exactly one input source: --a/--b, --file-a/--file-b, or --fasta");
    }
    if (stdin_mode ? b_given : (a_given != b_given)) {
        throw UsageError(stdin_mode ? "--a - reads both sequences from standard input; drop --b"
                                    : "--a and --b must be given together");
    }
    if (o.file_a.empty() != o.file_b.empty()) {
        throw UsageError("--file-a and --file-b must be given together");
    }

    std::string a;
    std::string b;
    if (stdin_mode) {
        if (!std::getline(in, a) || !std::getline(in, b)) {
            throw InputError("standard input must hold two lines (A, then B)");
        }
        a = strip_one_newline(a + "\n");
        b = strip_one_newline(b + "\n");
    } else if (a_given) {
        a = o.a;
        b = o.b;
    } else if (!o.file_a.empty()) {
        a = strip_one_newline(read_file(o.file_a));
        b = strip_one_newline(read_file(o.file_b));
    } else {
        std::tie(a, b) = read_fasta(o.fasta);
    }

    const Problem p = validate(a, b, o.k);
    SolveOptions options;
    if (o.block_width != 0) {
        options.block_width = o.block_width;
    }
    const auto result = solve(p, *algo, o.extract, options);

    if (o.json || o.format == "json") {
        out << to_json(p, result) << '\n';
    } else {
        out << "algorithm " << to_string(result.algorithm) << '\n'
            << "m " << p.m() << " n " << p.n() << " k " << p.k() << '\n'
            << "length " << result.length << '\n';
        if (result.pairs) {
            for (const auto &pr : *result.pairs) {
                out << pr.i << ' ' << pr.j << '\n';
            }
        }
        out << "elapsed_ms " << std::fixed << std::setprecision(3) << result.elapsed.count() << '\n';
    }
    return kExitOk;
}

} // namespace

Instance InstanceGenerator::next(int max_n, std::span<const int> alphabet_sizes, int k_min, int k_max) {
    const int sigma = alphabet_sizes[uniform(0, alphabet_sizes.size() - 1)];
    const auto m = static_cast<int>(uniform(0, static_cast<std::uint64_t>(max_n)));
    const auto n = static_cast<int>(uniform(0, static_cast<std::uint64_t>(max_n)));
    const auto k = static_cast<std::size_t>(uniform(static_cast<std::uint64_t>(k_min), static_cast<std::uint64_t>(k_max)));
    Instance inst;
    inst.a = sequence(m, sigma);
    inst.b = sequence(n, sigma);
    inst.k = k;
    return inst;
}

std::string InstanceGenerator::sequence(int length, int sigma) {
    std::string s(static_cast<std::size_t>(length), '\0');
    for (auto &c : s) {
        const auto sym = uniform(0, static_cast<std::uint64_t>(sigma - 1));
        c = sigma <= static_cast<int>(kAlnum.size()) ? kAlnum[sym] : static_cast<char>(sym);
    }
    return s;
}

std::vector<NamedSolver> default_solvers() {
    std::vector<NamedSolver> solvers{
        {"dp", [](const Problem &p, const MatchIndex &idx) { return dp::solve(p, idx, true); }},
        {"sparse", [](const Problem &p, const MatchIndex &idx) { return sparse::solve(p, idx, true); }},
        {"dense", [](const Problem &p, const MatchIndex &idx) { return dense::solve(p, idx, true); }},
    };
    for (const int b : {4, 6, 8}) {
        solvers.push_back({"tab" + std::to_string(b), [b](const Problem &p, const MatchIndex &idx) {
                               return tab::solve(p, idx, shared_block_table(b), true);
                           }});
    }
    return solvers;
}

int selftest(const SelftestConfig &config, std::span<const NamedSolver> solvers, std::ostream &out,
             std::ostream &err) {
    if (config.max_n > kSelftestMaxN || config.max_n < 0) {
        err << "selftest: max_n must be in [0, " << kSelftestMaxN << "]\n";
        return kExitUsage;
    }
    if (config.alphabet_sizes.empty() || config.k_min < 1 || config.k_max < config.k_min) {
        err << "selftest: need at least one alphabet size and 1 <= k_min <= k_max\n";
        return kExitUsage;
    }
    InstanceGenerator gen(config.seed);
    for (std::size_t c = 0; c < config.cases; ++c) {
        const auto inst = gen.next(config.max_n, config.alphabet_sizes, config.k_min, config.k_max);
        const Problem p(inst.a, inst.b, inst.k);
        const MatchIndex idx(p);
        const auto expected = oracle::solve_dp(p).length;
        for (const auto &solver : solvers) {
            const auto got = solver.solve(p, idx);
            const bool length_ok = got.length == expected;
            const bool pairs_ok = !got.pairs || verify_solution(p, got);
            if (!length_ok || !pairs_ok) {
                err << "selftest: solver " << solver.name << " failed on case " << c << " (seed " << config.seed
                    << ")\n"
                    << "  a=\"" << p.a() << "\"\n"
                    << "  b=\"" << p.b() << "\"\n"
                    << "  k=" << p.k() << "\n"
                    << "  expected length " << expected << ", got " << got.length
                    << (pairs_ok ? "" : " (extracted pairs invalid)") << '\n';
                return kExitDisagreement;
            }
        }
    }
    out << "selftest: " << config.cases << " cases, " << solvers.size() << " solvers agree with the reference\n";
    return kExitOk;
}

std::vector<BenchRow> bench(const BenchConfig &config) {
    std::vector<BenchRow> rows;
    InstanceGenerator gen(config.seed);
    SolveOptions options;
    options.block_width = config.block_width;
    for (const int size : config.sizes) {
        const Problem p(gen.sequence(size, config.sigma), gen.sequence(size, config.sigma), config.k);
        const MatchIndex idx(p);
        for (const auto algo : config.algorithms) {
            std::vector<double> times;
            LcskResult last;
            for (int rep = 0; rep < std::max(config.repeat, 1); ++rep) {
                last = solve(p, algo, false, options);
                times.push_back(last.elapsed.count());
            }
            const double mean = std::accumulate(times.begin(), times.end(), 0.0) / static_cast<double>(times.size());
            double var = 0;
            for (const double t : times) {
                var += (t - mean) * (t - mean);
            }
            const double stddev = times.size() > 1 ? std::sqrt(var / static_cast<double>(times.size() - 1)) : 0.0;
            const std::size_t index_bytes = algo == Algorithm::oracle ? 0 : idx.memory_bytes();
            rows.push_back({algo, p.m(), p.n(), p.k(), config.sigma, idx.total_matches(), last.length, mean, stddev,
                            index_bytes + last.working_bytes});
        }
    }
    return rows;
}

void write_csv(std::span<const BenchRow> rows, std::ostream &out) {
    out << "algo,m,n,k,sigma,r,length,mean_ms,stddev_ms,peak_mem_estimate\n";
    for (const auto &r : rows) {
        out << to_string(r.algorithm) << ',' << r.m << ',' << r.n << ',' << r.k << ',' << r.sigma << ',' << r.r << ','
            << r.length << ',' << std::fixed << std::setprecision(3) << r.mean_ms << ',' << r.stddev_ms << ','
            << r.peak_mem_estimate << '\n';
        out.unsetf(std::ios::fixed);
    }
}

std::string to_json(const Problem &p, const LcskResult &r) {
    nlohmann::ordered_json doc;
    doc["m"] = p.m();
    doc["n"] = p.n();
    doc["k"] = p.k();
    doc["algorithm"] = std::string(to_string(r.algorithm));
    doc["length"] = r.length;
    if (r.pairs) {
        auto pairs = nlohmann::ordered_json::array();
        for (const auto &pr : *r.pairs) {
            pairs.push_back({pr.i, pr.j});
        }
        doc["pairs"] = std::move(pairs);
    }
    doc["elapsed_ms"] = r.elapsed.count();
    return doc.dump();
}

std::vector<int> parse_sizes(const std::string &text) {
    std::vector<int> sizes;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo < 1 || hi < lo) {
            throw UsageError("bad size range '" + text + "'");
        }
        for (long long s = lo; s <= hi; s *= 2) {
            sizes.push_back(static_cast<int>(s));
        }
        return sizes;
    }
    for (const auto &part : split(text, ',')) {
        const int s = std::stoi(part);
        if (s < 0) {
            throw UsageError("negative size in '" + text + "'");
        }
        sizes.push_back(s);
    }
    return sizes;
}

int main(std::span<const std::string> args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Longest common subsequence in k-length substrings"};
    app.name("lcsk");
    app.require_subcommand(1);

    RunOptions run;
    auto *run_cmd = app.add_subcommand("run", "Solve one instance");
    auto *a_opt = run_cmd->add_option("--a", run.a, "Sequence A inline, or '-' to read A and B as two stdin lines");
    auto *b_opt = run_cmd->add_option("--b", run.b, "Sequence B inline");
    run_cmd->add_option("--file-a", run.file_a, "File holding sequence A");
    run_cmd->add_option("--file-b", run.file_b, "File holding sequence B");
    run_cmd->add_option("--fasta", run.fasta, "FASTA file; the first two records are A and B");
    run_cmd->add_option("-k,--k", run.k, "k-string length")->required();
    run_cmd->add_option("--algo", run.algorithm, "dp | sparse | dense | tab | oracle | auto");
    run_cmd->add_flag("--extract", run.extract, "Report the matched k-string pairs");
    run_cmd->add_flag("--json", run.json, "Shorthand for --format json");
    run_cmd->add_option("--format", run.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    run_cmd->add_option("--block-width", run.block_width, "Tabulation snippet width (4..8)")
        ->check(CLI::Range(4, 8));

    SelftestConfig st;
    auto *st_cmd = app.add_subcommand("selftest", "Cross-check all solvers on seeded random instances");
    st_cmd->add_option("--cases", st.cases, "Number of instances");
    st_cmd->add_option("--seed", st.seed, "Generator seed");
    st_cmd->add_option("--max-n", st.max_n, "Maximal sequence length (<= 512)");
    st_cmd->add_option("--alphabets", st.alphabet_sizes, "Alphabet sizes")->delimiter(',');
    st_cmd->add_option("--k-min", st.k_min, "Smallest k");
    st_cmd->add_option("--k-max", st.k_max, "Largest k");

    BenchConfig bc;
    std::string sizes = "1024..8192";
    std::string algos = "dp,sparse,dense,tab";
    auto *bench_cmd = app.add_subcommand("bench", "Time solvers on random instances, CSV to stdout");
    bench_cmd->add_option("--sizes", sizes, "Comma list or doubling range lo..hi");
    bench_cmd->add_option("--sigma", bc.sigma, "Alphabet size")->check(CLI::Range(1, 256));
    bench_cmd->add_option("-k,--k", bc.k, "k-string length")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--algos", algos, "Comma list of algorithms");
    bench_cmd->add_option("--repeat", bc.repeat, "Repetitions per measurement")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bc.seed, "Generator seed");
    bench_cmd->add_option("--block-width", bc.block_width, "Tabulation snippet width")->check(CLI::Range(4, 8));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "lcsk: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (run_cmd->parsed()) {
            return do_run(run, a_opt->count() > 0, b_opt->count() > 0, in, out);
        }
        if (st_cmd->parsed()) {
            return selftest(st, default_solvers(), out, err);
        }
        bc.sizes = parse_sizes(sizes);
        bc.algorithms = parse_algorithms(algos);
        write_csv(bench(bc), out);
        return kExitOk;
    } catch (const UsageError &e) {
        err << "lcsk: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidProblem &e) {
        err << "lcsk: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InputError &e) {
        err << "lcsk: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument &e) {
        err << "lcsk: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        err << "lcsk: number out of range\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        // Oversized inputs (length_error, bad_alloc).
        err << "lcsk: " << e.what() << '\n';
        return kExitInput;
    }
}

} // namespace lcsk::cli
