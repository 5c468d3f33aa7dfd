#include "semicut/cuts.hpp"
#include "semicut/digraph.hpp"
#include "semicut/digraph_io.hpp"
#include "semicut/oracle.hpp"
#include "semicut/partitions.hpp"
#include "semicut/solvers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::ordered_json;
using namespace semicut;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

SemiCompleteDigraph load_instance(const std::string& path) {
    if (path == "-") return read_digraph(std::cin);
    return read_digraph_file(path);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot open '" + out_path + "' for writing");
    out << text;
}

struct RangeOpt {
    int64_t lo = 0;
    int64_t hi = -1; // empty range by default
};

RangeOpt parse_range(const std::string& text) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            const int64_t v = std::stoll(text);
            return {v, v};
        }
        return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw InvalidParameterError("malformed range '" + text + "', expected LO:HI");
    }
}

// --- gen -------------------------------------------------------------

struct GenArgs {
    std::string kind;
    int n = 0;
    int flips = 0;
    double p_double = 0.2;
    uint64_t seed = 0;
    std::string out;
};

int run_gen(const GenArgs& args) {
    SemiCompleteDigraph t;
    if (args.kind == "transitive")
        t = gen_transitive(args.n);
    else if (args.kind == "tournament")
        t = gen_random_tournament(args.n, args.seed);
    else if (args.kind == "noisy")
        t = gen_noisy_transitive(args.n, args.flips, args.seed);
    else if (args.kind == "semicomplete")
        t = gen_random_semicomplete(args.n, args.p_double, args.seed);
    else
        throw InvalidParameterError("unknown instance kind '" + args.kind + "'");
    emit(write_digraph(t), args.out);
    return kExitYes;
}

// --- solve -----------------------------------------------------------

struct SolveArgs {
    std::string problem;
    std::string input;
    std::string k_text;
    bool minimize_flag = false;
    bool weighted = false;
    bool linear_scan = false;
    bool json = false;
    bool timing = false;
    std::string engine = "cuts";
};

Problem parse_problem(const std::string& name) {
    if (name == "fas") return Problem::Fas;
    if (name == "cutwidth") return Problem::Cutwidth;
    if (name == "ola") return Problem::Ola;
    throw InvalidParameterError("unknown problem '" + name + "' (expected fas|cutwidth|ola)");
}

ordered_json solution_json(const SolveOutcome& outcome) {
    ordered_json s;
    if (outcome.ordering) s["ordering"] = outcome.ordering->perm;
    if (outcome.fas) {
        auto arcs = ordered_json::array();
        for (const auto& [u, v] : outcome.fas->arcs) arcs.push_back({u, v});
        s["fas"] = arcs;
    }
    return s;
}

void print_solution_text(const SolveOutcome& outcome, std::ostream& out) {
    if (outcome.ordering) {
        out << "ordering:";
        for (int v : outcome.ordering->perm) out << ' ' << v;
        out << '\n';
    }
    if (outcome.fas) {
        out << "fas:";
        for (const auto& [u, v] : outcome.fas->arcs) out << ' ' << u << "->" << v;
        out << '\n';
    }
}

int64_t reported_ms(double elapsed, bool timing) {
    return timing ? static_cast<int64_t>(elapsed) : 0;
}

int run_solve_brute(const SolveArgs& args, const SemiCompleteDigraph& t, Problem problem) {
    Weight value;
    Ordering ordering;
    if (args.weighted) {
        auto result = problem == Problem::Fas ? brute_min_fas_weighted(t) : brute_ola_weighted(t);
        value = result.value;
        ordering = result.ordering;
    } else {
        auto result = problem == Problem::Fas        ? brute_min_fas(t)
                      : problem == Problem::Cutwidth ? brute_cutwidth(t)
                                                     : brute_ola(t);
        value = static_cast<long>(result.value);
        ordering = result.ordering;
    }

    SolveOutcome outcome;
    outcome.yes = true;
    outcome.ordering = ordering;
    if (problem == Problem::Fas) outcome.fas = backward_arcs(t, ordering);
    outcome.objective = value;

    bool yes = true;
    Weight k_star = value;
    if (!args.minimize_flag) {
        const Weight budget =
            args.weighted ? parse_weight(args.k_text) : Weight(static_cast<long>(std::stoll(args.k_text)));
        yes = value <= budget;
        k_star = budget;
    }

    if (args.json) {
        ordered_json report;
        report["problem"] = args.problem;
        report["instance"] = args.input;
        report["n"] = t.size();
        report["mode"] = args.minimize_flag ? "minimize" : "decide";
        report["k"] = weight_to_string(k_star);
        report["weighted"] = args.weighted;
        report["engine"] = "brute";
        report["answer"] = yes ? "yes" : "no";
        if (yes) {
            report["objective"] = weight_to_string(value);
            report["solution"] = solution_json(outcome);
        }
        report["stats"] = {{"orderings_examined", "all"}, {"ms", 0}};
        std::cout << report.dump(2) << '\n';
    } else {
        std::cout << "answer: " << (yes ? "yes" : "no") << '\n';
        if (args.minimize_flag) std::cout << "k-star: " << weight_to_string(value) << '\n';
        if (yes) {
            std::cout << "objective: " << weight_to_string(value) << '\n';
            print_solution_text(outcome, std::cout);
        }
    }
    return yes ? kExitYes : kExitNo;
}

int run_solve(const SolveArgs& args) {
    const Problem problem = parse_problem(args.problem);
    if (args.weighted && problem == Problem::Cutwidth)
        throw InvalidParameterError("cutwidth has no weighted variant");
    const SemiCompleteDigraph t = load_instance(args.input);
    if (args.weighted && !t.is_weighted())
        throw InvalidParameterError("--weighted requires a weighted instance");

    if (args.engine == "brute") return run_solve_brute(args, t, problem);
    if (args.engine != "cuts")
        throw InvalidParameterError("unknown engine '" + args.engine + "'");

    SolveOutcome outcome;
    Weight k_report;
    if (args.minimize_flag) {
        MinimizeResult result =
            minimize(problem, t, {.weighted = args.weighted, .linear_scan = args.linear_scan});
        k_report = result.outcome.objective;
        outcome = std::move(result.outcome);
    } else {
        if (args.weighted) {
            const Weight k = parse_weight(args.k_text);
            k_report = k;
            outcome = problem == Problem::Fas ? fas_decide_weighted(t, k)
                                              : ola_decide_weighted(t, k);
        } else {
            int64_t k = 0;
            try {
                k = std::stoll(args.k_text);
            } catch (const std::exception&) {
                throw InvalidParameterError("budget '" + args.k_text + "' is not an integer");
            }
            k_report = Weight(static_cast<long>(k));
            outcome = problem == Problem::Fas        ? fas_decide(t, k)
                      : problem == Problem::Cutwidth ? cutwidth_decide(t, k)
                                                     : ola_decide(t, k);
        }
    }

    if (args.json) {
        ordered_json report;
        report["problem"] = args.problem;
        report["instance"] = args.input;
        report["n"] = t.size();
        report["mode"] = args.minimize_flag ? "minimize" : "decide";
        report["k"] = weight_to_string(k_report);
        report["weighted"] = args.weighted;
        report["engine"] = "cuts";
        report["answer"] = outcome.yes ? "yes" : "no";
        if (outcome.yes) {
            report["objective"] = weight_to_string(outcome.objective);
            report["solution"] = solution_json(outcome);
        } else {
            report["reason"] = outcome.reason == NoReason::CapExceeded ? "cap-exceeded"
                                                                       : "search-exhausted";
        }
        report["stats"] = {{"cuts_enumerated", outcome.stats.cuts_emitted},
                           {"cap", outcome.stats.cap.get_str()},
                           {"enumeration_k", outcome.stats.enumeration_k},
                           {"cut_graph_vertices", outcome.stats.cut_graph_vertices},
                           {"ms", reported_ms(outcome.stats.elapsed_ms, args.timing)}};
        std::cout << report.dump(2) << '\n';
    } else {
        std::cout << "answer: " << (outcome.yes ? "yes" : "no") << '\n';
        if (args.minimize_flag && outcome.yes)
            std::cout << "k-star: " << weight_to_string(outcome.objective) << '\n';
        if (outcome.yes) {
            std::cout << "objective: " << weight_to_string(outcome.objective) << '\n';
            print_solution_text(outcome, std::cout);
        } else {
            std::cout << "reason: "
                      << (outcome.reason == NoReason::CapExceeded ? "cap-exceeded"
                                                                  : "search-exhausted")
                      << '\n';
        }
        std::cout << "cuts-enumerated: " << outcome.stats.cuts_emitted << '\n'
                  << "cap: " << outcome.stats.cap.get_str() << '\n'
                  << "cut-graph-vertices: " << outcome.stats.cut_graph_vertices << '\n';
        if (args.timing)
            std::cerr << "time-ms: " << static_cast<int64_t>(outcome.stats.elapsed_ms) << '\n';
    }
    return outcome.yes ? kExitYes : kExitNo;
}

// --- count-cuts --------------------------------------------------------

struct CountArgs {
    std::string input;
    int64_t k = 0;
    uint64_t cap = UINT64_MAX;
    bool json = false;
    bool timing = false;
};

int run_count_cuts(const CountArgs& args) {
    const SemiCompleteDigraph t = load_instance(args.input);
    const auto start = std::chrono::steady_clock::now();
    const CutEnumeration enumeration = enumerate_k_cuts(t, args.k, args.cap);
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();

    const BigInt fas_cap = cap_fas(t.size(), args.k);
    const BigInt cutwidth_cap = cap_cutwidth(t.size(), args.k);

    if (args.json) {
        ordered_json report;
        report["instance"] = args.input;
        report["n"] = t.size();
        report["k"] = args.k;
        report["complete"] = enumeration.complete();
        if (enumeration.complete())
            report["count"] = enumeration.cuts_emitted;
        else
            report["cap"] = enumeration.cap;
        report["cap_fas"] = fas_cap.get_str();
        report["cap_cutwidth"] = cutwidth_cap.get_str();
        report["ms"] = reported_ms(elapsed, args.timing);
        std::cout << report.dump(2) << '\n';
    } else {
        std::cout << "n: " << t.size() << '\n' << "k: " << args.k << '\n';
        if (enumeration.complete())
            std::cout << "count: " << enumeration.cuts_emitted << '\n';
        else
            std::cout << "count: cap-exceeded (cap " << enumeration.cap << ")\n";
        std::cout << "cap-fas: " << fas_cap.get_str() << '\n'
                  << "cap-cutwidth: " << cutwidth_cap.get_str() << '\n';
        if (args.timing) std::cerr << "time-ms: " << static_cast<int64_t>(elapsed) << '\n';
    }
    return kExitYes;
}

// --- bench -------------------------------------------------------------

struct BenchArgs {
    std::string family;
    std::string n_range;
    std::string k_range;
    int seeds = 1;
    double p_double = 0.2;
    std::string out;
    bool timing = false;
};

int run_bench(const BenchArgs& args) {
    if (args.family != "transitive" && args.family != "tournament" && args.family != "noisy" &&
        args.family != "semicomplete")
        throw InvalidParameterError("unknown family '" + args.family + "'");
    if (args.seeds < 0) throw InvalidParameterError("seed count must be non-negative");
    const RangeOpt ns = parse_range(args.n_range);
    const RangeOpt ks = parse_range(args.k_range);

    std::string csv = "family,n,k,seed,cuts,cap_fas,cap_cutwidth,capped,ms\n";
    for (int64_t n = ns.lo; n <= ns.hi; ++n) {
        for (int64_t k = ks.lo; k <= ks.hi; ++k) {
            const BigInt fas_cap = cap_fas(n, k);
            const BigInt cutwidth_cap = cap_cutwidth(n, k);
            BigInt enum_cap = std::max(fas_cap, cutwidth_cap);
            const uint64_t cap =
                enum_cap.fits_ulong_p() ? enum_cap.get_ui() : UINT64_MAX;
            for (int seed = 0; seed < args.seeds; ++seed) {
                SemiCompleteDigraph t;
                if (args.family == "transitive")
                    t = gen_transitive(static_cast<int>(n));
                else if (args.family == "tournament")
                    t = gen_random_tournament(static_cast<int>(n), static_cast<uint64_t>(seed));
                else if (args.family == "noisy")
                    t = gen_noisy_transitive(
                        static_cast<int>(n),
                        static_cast<int>(std::min<int64_t>(k, n * (n - 1) / 2)),
                        static_cast<uint64_t>(seed));
                else
                    t = gen_random_semicomplete(static_cast<int>(n), args.p_double,
                                                static_cast<uint64_t>(seed));

                const auto start = std::chrono::steady_clock::now();
                const CutEnumeration enumeration = enumerate_k_cuts(t, k, cap);
                const double elapsed = std::chrono::duration<double, std::milli>(
                                           std::chrono::steady_clock::now() - start)
                                           .count();

                csv += args.family + "," + std::to_string(n) + "," + std::to_string(k) + "," +
                       std::to_string(seed) + "," + std::to_string(enumeration.cuts_emitted) +
                       "," + fas_cap.get_str() + "," + cutwidth_cap.get_str() + "," +
                       (enumeration.complete() ? "0" : "1") + "," +
                       std::to_string(reported_ms(elapsed, args.timing)) + "\n";
            }
        }
    }
    emit(csv, args.out);
    return kExitYes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact feedback-arc-set, cutwidth and linear-arrangement solvers "
                 "for semi-complete digraphs"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    gen->add_option("kind", gen_args.kind, "transitive|tournament|noisy|semicomplete")
        ->required();
    gen->add_option("--n", gen_args.n, "vertex count")->required();
    gen->add_option("--flips", gen_args.flips, "reversed arcs (noisy)");
    gen->add_option("--pdouble", gen_args.p_double, "double-arc probability (semicomplete)");
    gen->add_option("--seed", gen_args.seed, "generator seed");
    gen->add_option("-o,--out", gen_args.out, "output file (default stdout)");

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "decide or minimize a layout problem");
    solve->add_option("problem", solve_args.problem, "fas|cutwidth|ola")->required();
    solve->add_option("input", solve_args.input, "instance file ('-' for stdin)")->required();
    auto* k_opt = solve->add_option("--k", solve_args.k_text, "budget (rational if --weighted)");
    auto* min_opt =
        solve->add_flag("--minimize", solve_args.minimize_flag, "find the smallest feasible k");
    k_opt->excludes(min_opt);
    solve->add_flag("--weighted", solve_args.weighted, "optimize the weighted objective");
    solve->add_flag("--linear-scan", solve_args.linear_scan,
                    "minimize by scanning k = 0,1,2,... instead of doubling");
    solve->add_option("--engine", solve_args.engine, "cuts|brute (brute: n <= 9)");
    solve->add_flag("--json", solve_args.json, "machine-readable report");
    solve->add_flag("--timing", solve_args.timing, "include wall time in reports");

    CountArgs count_args;
    auto* count = app.add_subcommand("count-cuts", "count the k-cuts of an instance");
    count->add_option("input", count_args.input, "instance file ('-' for stdin)")->required();
    count->add_option("--k", count_args.k, "cut bound")->required();
    count->add_option("--cap", count_args.cap, "abort after this many cuts");
    count->add_flag("--json", count_args.json, "machine-readable report");
    count->add_flag("--timing", count_args.timing, "include wall time in reports");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "k-cut growth data over instance families (CSV)");
    bench->add_option("--family", bench_args.family,
                      "transitive|tournament|noisy|semicomplete")
        ->required();
    bench->add_option("--n", bench_args.n_range, "vertex range LO:HI")->required();
    bench->add_option("--k", bench_args.k_range, "cut-bound range LO:HI")->required();
    bench->add_option("--seeds", bench_args.seeds, "seeds 0..S-1 per cell");
    bench->add_option("--pdouble", bench_args.p_double, "double-arc probability (semicomplete)");
    bench->add_option("--out", bench_args.out, "CSV file (default stdout)");
    bench->add_flag("--timing", bench_args.timing, "include wall time in the ms column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitYes : kExitError;
    }

    try {
        if (gen->parsed()) return run_gen(gen_args);
        if (solve->parsed()) {
            if (!solve_args.minimize_flag && solve_args.k_text.empty())
                throw InvalidParameterError("either --k or --minimize is required");
            return run_solve(solve_args);
        }
        if (count->parsed()) return run_count_cuts(count_args);
        if (bench->parsed()) return run_bench(bench_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
