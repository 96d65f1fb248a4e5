#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lcsk/cli.hpp"
#include "lcsk/lcsk.hpp"

namespace py = pybind11;
using namespace lcsk;

namespace {

// str is taken by code point (must be < 256); bytes are taken as is.
std::vector<std::int64_t> symbols(const py::handle &seq) {
    std::vector<std::int64_t> out;
    if (py::isinstance<py::bytes>(seq)) {
        for (unsigned char c : seq.cast<std::string>()) {
            out.push_back(c);
        }
        return out;
    }
    if (!py::isinstance<py::str>(seq)) {
        throw py::type_error("sequences must be str or bytes");
    }
    const Py_ssize_t len = PyUnicode_GetLength(seq.ptr());
    out.reserve(static_cast<std::size_t>(len));
    for (Py_ssize_t t = 0; t < len; ++t) {
        out.push_back(static_cast<std::int64_t>(PyUnicode_ReadChar(seq.ptr(), t)));
    }
    return out;
}

Problem make_problem(const py::handle &a, const py::handle &b, std::int64_t k) {
    return validate(symbols(a), symbols(b), k);
}

Algorithm algorithm_from(const std::string &name) {
    const auto algo = parse_algorithm(name);
    if (!algo) {
        throw py::value_error("unknown algorithm '" + name + "'");
    }
    return *algo;
}

std::vector<MatchPair> pairs_from(const std::vector<std::pair<int, int>> &pairs) {
    std::vector<MatchPair> out;
    out.reserve(pairs.size());
    for (const auto &[i, j] : pairs) {
        out.push_back({i, j});
    }
    return out;
}

struct PyIndex {
    Problem problem;
    MatchIndex index;

    explicit PyIndex(Problem p) : problem(std::move(p)), index(problem) {}
};

} // namespace

PYBIND11_MODULE(lcsk, m) {
    m.doc() = "Longest common subsequence in k-length substrings";

    py::register_exception<InvalidProblem>(m, "InvalidProblem", PyExc_ValueError);

    py::class_<LcskResult>(m, "Result")
        .def_readonly("length", &LcskResult::length)
        .def_property_readonly("pairs",
                               [](const LcskResult &r) -> std::optional<std::vector<std::pair<int, int>>> {
                                   if (!r.pairs) {
                                       return std::nullopt;
                                   }
                                   std::vector<std::pair<int, int>> out;
                                   for (const auto &pr : *r.pairs) {
                                       out.emplace_back(pr.i, pr.j);
                                   }
                                   return out;
                               })
        .def_property_readonly("algorithm", [](const LcskResult &r) { return std::string(to_string(r.algorithm)); })
        .def_property_readonly("elapsed_ms", [](const LcskResult &r) { return r.elapsed.count(); })
        .def_readonly("working_bytes", &LcskResult::working_bytes)
        .def("__repr__", [](const LcskResult &r) {
            std::ostringstream s;
            s << "Result(length=" << r.length << ", algorithm='" << to_string(r.algorithm) << "')";
            return s.str();
        });

    m.def(
        "solve",
        [](const py::object &a, const py::object &b, std::int64_t k, const std::string &algorithm, bool extract,
           int block_width) {
            const auto p = make_problem(a, b, k);
            const auto algo = algorithm_from(algorithm);
            if (block_width < tab::BlockTable::kMinWidth || block_width > tab::BlockTable::kMaxWidth) {
                throw py::value_error("block_width must be in [4, 8]");
            }
            py::gil_scoped_release release;
            return solve(p, algo, extract, SolveOptions{block_width});
        },
        py::arg("a"), py::arg("b"), py::arg("k"), py::arg("algorithm") = "auto", py::arg("extract") = false,
        py::arg("block_width") = tab::BlockTable::kDefaultWidth,
        "Solves one instance. algorithm is one of dp, sparse, dense, tab, oracle, auto.");

    m.def(
        "lcsk_length",
        [](const py::object &a, const py::object &b, std::int64_t k) {
            const auto p = make_problem(a, b, k);
            py::gil_scoped_release release;
            return solve(p, Algorithm::automatic, false).length;
        },
        py::arg("a"), py::arg("b"), py::arg("k"));

    m.def(
        "verify_solution",
        [](const py::object &a, const py::object &b, std::int64_t k, std::size_t length,
           const std::vector<std::pair<int, int>> &pairs) {
            const auto p = make_problem(a, b, k);
            LcskResult r;
            r.length = length;
            r.pairs = pairs_from(pairs);
            return verify_solution(p, r);
        },
        py::arg("a"), py::arg("b"), py::arg("k"), py::arg("length"), py::arg("pairs"),
        "Checks count, ordered non-overlap in both sequences and k-string equality.");

    m.def(
        "validate",
        [](const py::object &a, const py::object &b, std::int64_t k) {
            const auto p = make_problem(a, b, k);
            return py::make_tuple(p.m(), p.n(), p.k());
        },
        py::arg("a"), py::arg("b"), py::arg("k"), "Returns (m, n, k) or raises InvalidProblem.");

    py::class_<PyIndex>(m, "MatchIndex")
        .def(py::init([](const py::object &a, const py::object &b, std::int64_t k) {
                 return std::make_unique<PyIndex>(make_problem(a, b, k));
             }),
             py::arg("a"), py::arg("b"), py::arg("k"))
        .def("matches_in_row", [](const PyIndex &x, int i) { return x.index.matches_in_row(i).to_vector(); })
        .def("successor_in_row", [](const PyIndex &x, int i, int jmin) { return x.index.successor_in_row(i, jmin); })
        .def("row_group_id", [](const PyIndex &x, int i) { return x.index.row_group_id(i); })
        .def_property_readonly("total_matches", [](const PyIndex &x) { return x.index.total_matches(); })
        .def_property_readonly("group_count", [](const PyIndex &x) { return x.index.group_count(); })
        .def_property_readonly("memory_bytes", [](const PyIndex &x) { return x.index.memory_bytes(); })
        .def(
            "solve",
            [](const PyIndex &x, const std::string &algorithm, bool extract) {
                const auto algo = algorithm_from(algorithm);
                py::gil_scoped_release release;
                return solve(x.problem, x.index, algo, extract);
            },
            py::arg("algorithm") = "auto", py::arg("extract") = false);

    m.def(
        "selftest",
        [](std::size_t cases, std::uint64_t seed, int max_n) {
            cli::SelftestConfig cfg;
            cfg.cases = cases;
            cfg.seed = seed;
            cfg.max_n = max_n;
            std::ostringstream out;
            std::ostringstream err;
            int code = 0;
            {
                py::gil_scoped_release release;
                code = cli::selftest(cfg, cli::default_solvers(), out, err);
            }
            return py::make_tuple(code, out.str() + err.str());
        },
        py::arg("cases") = 1000, py::arg("seed") = 42, py::arg("max_n") = 64,
        "Cross-checks all solvers; returns (exit_code, report).");

    m.def(
        "bench",
        [](const std::vector<int> &sizes, int sigma, std::size_t k, const std::vector<std::string> &algorithms,
           int repeat, std::uint64_t seed) {
            cli::BenchConfig cfg;
            cfg.sizes = sizes;
            cfg.sigma = sigma;
            cfg.k = k;
            cfg.repeat = repeat;
            cfg.seed = seed;
            cfg.algorithms.clear();
            for (const auto &name : algorithms) {
                cfg.algorithms.push_back(algorithm_from(name));
            }
            std::vector<cli::BenchRow> rows;
            {
                py::gil_scoped_release release;
                rows = cli::bench(cfg);
            }
            py::list out;
            for (const auto &r : rows) {
                py::dict d;
                d["algo"] = std::string(to_string(r.algorithm));
                d["m"] = r.m;
                d["n"] = r.n;
                d["k"] = r.k;
                d["sigma"] = r.sigma;
                d["r"] = r.r;
                d["length"] = r.length;
                d["mean_ms"] = r.mean_ms;
                d["stddev_ms"] = r.stddev_ms;
                d["peak_mem_estimate"] = r.peak_mem_estimate;
                out.append(d);
            }
            return out;
        },
        py::arg("sizes"), py::arg("sigma") = 4, py::arg("k") = 3,
        py::arg("algorithms") = std::vector<std::string>{"dp", "sparse", "dense", "tab"}, py::arg("repeat") = 3,
        py::arg("seed") = 1);
}
