#include "influence/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "influence/approx.hpp"
#include "influence/catalog.hpp"
#include "influence/errors.hpp"
#include "influence/fpt.hpp"
#include "influence/instance.hpp"
#include "influence/oracles.hpp"
#include "influence/propagation.hpp"
#include "influence/records.hpp"
#include "influence/reductions.hpp"

namespace influence {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct GlobalConfig {
    std::uint64_t cap = kDefaultExplorationCap;
    int workers = 1;
    std::string output;
    std::string format = "table";
};

SolverOptions solver_options(const GlobalConfig& config) {
    return SolverOptions{config.cap, config.workers};
}

// Records go to stdout and, when --output is set, to that file as well.
void emit(const GlobalConfig& config, std::ostream& out, const std::string& text) {
    out << text;
    if (!config.output.empty()) {
        std::ofstream file(config.output);
        if (!file) throw std::runtime_error("cannot write output file: " + config.output);
        file << text;
    }
}

Instance load_with_overrides(const std::string& path, int k, bool have_k, int ell, bool have_ell) {
    Instance inst = load_instance(path);
    const int n = inst.graph.vertex_count();
    if (have_k) {
        if (k < 0 || k > n) throw std::runtime_error("budget k outside [0, n]");
        inst.k = k;
    }
    if (have_ell) {
        if (ell < 0) throw std::runtime_error("negative target ell");
        inst.ell = ell;
    }
    return inst;
}

int run_solve(const GlobalConfig& config, const std::string& path, bool open_objective,
              bool decide, int k, bool have_k, int ell, bool have_ell, bool trace,
              std::ostream& out) {
    Instance inst = load_with_overrides(path, k, have_k, ell, have_ell);
    std::ostringstream text;
    VertexSet winner;
    if (decide) {
        if (!inst.ell) throw std::runtime_error("--decide requires --ell");
        DecisionResult result = decide_influence(inst, solver_options(config));
        text << decision_record(meta_for("influence-decision", inst), result) << "\n";
        if (result.witness) winner = *result.witness;
    } else {
        SolveResult result = open_objective ? solve_max_open_exact(inst, solver_options(config))
                                            : solve_max_closed_exact(inst, solver_options(config));
        text << solve_record(
                    meta_for(open_objective ? "max-open-influence" : "max-closed-influence", inst),
                    result)
             << "\n";
        winner = result.seeds;
    }
    if (trace) text << format_trace(propagate(inst.graph, inst.thresholds, winner));
    emit(config, out, text.str());
    return 0;
}

int run_approx(const GlobalConfig& config, const std::string& path, const std::string& algo,
               int k, bool have_k, const std::string& ratio_name, const std::string& seeds_arg,
               std::ostream& out) {
    Instance inst = load_with_overrides(path, k, have_k, 0, false);
    const Graph& g = inst.graph;
    std::ostringstream text;

    if (algo == "twin") {
        SolveResult result = twin_approx_open(g, inst.k);
        text << solve_record(meta_for("twin-approx-open", inst), result) << "\n";
    } else if (algo == "greedy") {
        SolveResult result = bounded_degree_approx(g, inst.k).result;
        text << solve_record(meta_for("bounded-degree-approx", inst), result) << "\n";
    } else if (algo == "fpt-ratio") {
        FptRatioResult result =
            fpt_ratio_approx(g, inst.k, RatioSpec::from_name(ratio_name), solver_options(config));
        text << solve_record(meta_for("fpt-ratio-approx", inst), result.result, "branch",
                             result.branch())
             << "\n";
    } else if (algo == "mis") {
        auto start = Clock::now();
        VertexSet set = max_independent_set_via_influence(g, solver_options(config));
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        text << set_record(meta_for("max-independent-set-via-influence", inst), set, ms) << "\n";
    } else if (algo == "vc") {
        if (seeds_arg.empty()) throw std::runtime_error("--algo vc requires --seeds");
        VertexSet seeds;
        std::istringstream ss(seeds_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) seeds.push_back(std::stoi(tok));
        seeds = make_vertex_set(std::move(seeds));
        auto start = Clock::now();
        VertexSet cover = vertex_cover_from_influence(g, seeds);
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        text << set_record(meta_for("vertex-cover-from-influence", inst), cover, ms) << "\n";
    } else {
        throw std::runtime_error("unknown approximation algorithm: " + algo);
    }
    emit(config, out, text.str());
    return 0;
}

int run_fpt_decide(const GlobalConfig& config, const std::string& path, int k, bool have_k,
                   int ell, std::ostream& out) {
    Instance inst = load_with_overrides(path, k, have_k, ell, true);
    FptDecision result = solve_influence_fpt(inst.graph, inst.k, *inst.ell, solver_options(config));
    std::ostringstream text;
    text << decision_record(meta_for("influence-decision-fpt", inst), result.decision,
                            result.accepted)
         << "\n";
    emit(config, out, text.str());
    return 0;
}

void write_generated(const GlobalConfig& config, const ReductionOutput& output,
                     std::ostream& out) {
    if (config.output.empty())
        throw std::runtime_error("generate requires --output for the instance file");
    save_instance(output.instance, config.output);
    std::ofstream prov(config.output + ".prov");
    if (!prov) throw std::runtime_error("cannot write provenance file");
    prov << provenance_sidecar(output);
    out << "wrote " << config.output << " (" << output.instance.graph.vertex_count()
        << " vertices, " << output.instance.graph.edge_count() << " edges) and "
        << config.output << ".prov\n";
}

int run_generate(const GlobalConfig& config, const std::string& kind, const std::string& source,
                 int k, int grid_depth, int paths, int pendings, int max_n, int count,
                 unsigned seed, double edge_prob, const std::string& scheme, std::ostream& out) {
    if (kind == "corpus" || kind == "random") {
        if (config.output.empty()) throw std::runtime_error("generate requires --output directory");
        fs::create_directories(config.output);
        std::vector<Graph> graphs;
        if (kind == "corpus") {
            for (int n = 1; n <= max_n; ++n)
                for (const Graph& g : catalog::connected_graphs(n)) graphs.push_back(g);
        } else {
            std::mt19937 rng(seed);
            for (int i = 0; i < count; ++i) graphs.push_back(catalog::random_graph(rng, max_n, edge_prob));
        }
        int index = 0;
        for (const Graph& g : graphs) {
            Instance inst;
            inst.graph = g;
            inst.thresholds = assign_thresholds(
                g, scheme == "majority" ? ThresholdScheme::Majority : ThresholdScheme::Unanimity);
            std::ostringstream name;
            name << (kind == "corpus" ? "g" : "r") << std::setw(2) << std::setfill('0')
                 << g.vertex_count() << "_" << std::setw(5) << std::setfill('0') << index++
                 << ".inst";
            save_instance(inst, (fs::path(config.output) / name.str()).string());
        }
        out << "wrote " << index << " instances to " << config.output << "\n";
        return 0;
    }

    if (source.empty()) throw std::runtime_error("generate requires a source instance");
    Graph graph = load_instance(source).graph;
    ReductionKind rk = reduction_kind_from_name(kind);
    ReductionOutput output;
    switch (rk) {
        case ReductionKind::Basic:
            output = basic_reduction(graph);
            output.instance.k = std::min(k, output.instance.graph.vertex_count());
            break;
        case ReductionKind::Majority:
            output = majority_hardness_instance(graph, k, grid_depth);
            break;
        case ReductionKind::Constant:
            output = constant_threshold_instance(graph, k, paths, pendings);
            break;
        case ReductionKind::Clique:
            output = clique_reduction(graph, k);
            break;
        case ReductionKind::Dks:
            output = dks_reduction(graph, k);
            break;
    }
    write_generated(config, output, out);
    return 0;
}

int run_verify(const GlobalConfig& config, const std::string& kind, const std::string& source,
               int k, bool fault, std::ostream& out) {
    Graph graph = load_instance(source).graph;
    VerifyOptions options;
    options.cap = config.cap;
    options.inject_fault = fault;
    VerifyReport report = verify_reduction(reduction_kind_from_name(kind), graph, k, options);
    emit(config, out, format_verify_report(report));
    return 0;
}

struct BenchRow {
    std::string instance;
    std::string algorithm;
    std::string value;
    std::string optimum;
    std::string ratio;
    std::string explored;
    std::string status;
    double elapsed_ms = 0.0;
};

std::string format_double(double v) {
    std::ostringstream ss;
    ss << std::setprecision(6) << v;
    return ss.str();
}

int run_bench(const GlobalConfig& config, const std::string& corpus,
              const std::vector<std::string>& algos, int k, const std::string& ratio_name,
              bool with_oracle, std::ostream& out) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(corpus))
        if (entry.is_regular_file() && entry.path().extension() == ".inst")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());

    std::vector<BenchRow> rows;
    for (const std::string& file : files) {
        Instance inst;
        std::string id = fs::path(file).filename().string();
        try {
            inst = load_instance(file);
        } catch (const std::exception&) {
            for (const std::string& algo : algos)
                rows.push_back({id, algo, "", "", "", "", "error", 0.0});
            continue;
        }
        const int budget = std::min(k, inst.graph.vertex_count());

        std::optional<int> optimum;
        if (with_oracle) {
            try {
                Instance oracle_inst;
                oracle_inst.graph = inst.graph;
                oracle_inst.thresholds =
                    assign_thresholds(inst.graph, ThresholdScheme::Unanimity);
                oracle_inst.k = budget;
                optimum = solve_max_open_exact(oracle_inst, solver_options(config)).open_value;
            } catch (const CapExceededError&) {
                // leave the optimum column empty; rows get status "cap"
            }
        }

        for (const std::string& algo : algos) {
            BenchRow row;
            row.instance = id;
            row.algorithm = algo;
            try {
                SolveResult result;
                if (algo == "twin")
                    result = twin_approx_open(inst.graph, budget);
                else if (algo == "greedy")
                    result = bounded_degree_approx(inst.graph, budget).result;
                else if (algo == "fpt-ratio")
                    result = fpt_ratio_approx(inst.graph, budget,
                                              RatioSpec::from_name(ratio_name),
                                              solver_options(config))
                                 .result;
                else if (algo == "exact-open") {
                    Instance run = inst;
                    run.thresholds = assign_thresholds(inst.graph, ThresholdScheme::Unanimity);
                    run.k = budget;
                    result = solve_max_open_exact(run, solver_options(config));
                } else {
                    throw std::runtime_error("unknown bench algorithm: " + algo);
                }
                row.value = std::to_string(result.open_value);
                row.explored = std::to_string(result.explored);
                row.elapsed_ms = result.elapsed_ms;
                if (optimum) {
                    row.optimum = std::to_string(*optimum);
                    if (result.open_value > 0)
                        row.ratio = format_double(static_cast<double>(*optimum) /
                                                  result.open_value);
                }
                row.status = (with_oracle && !optimum) ? "cap" : "ok";
            } catch (const CapExceededError&) {
                row.status = "cap";
            } catch (const std::exception&) {
                row.status = "error";
            }
            rows.push_back(row);
        }
    }

    std::ostringstream text;
    if (config.format == "records") {
        for (const BenchRow& r : rows)
            text << "{\"instance\":\"" << r.instance << "\",\"algorithm\":\"" << r.algorithm
                 << "\",\"value\":\"" << r.value << "\",\"optimum\":\"" << r.optimum
                 << "\",\"ratio\":\"" << r.ratio << "\",\"explored\":\"" << r.explored
                 << "\",\"status\":\"" << r.status << "\",\"elapsed-ms\":" << r.elapsed_ms
                 << "}\n";
    } else {
        // The table format excludes wall time so that identical configs and
        // corpora produce byte-identical output.
        text << "instance\talgorithm\tvalue\toptimum\tratio\texplored\tstatus\n";
        for (const BenchRow& r : rows)
            text << r.instance << "\t" << r.algorithm << "\t" << r.value << "\t" << r.optimum
                 << "\t" << r.ratio << "\t" << r.explored << "\t" << r.status << "\n";
    }
    emit(config, out, text.str());
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"threshold influence spread: solvers, approximations, gadget generators"};
    app.require_subcommand(1);

    GlobalConfig config;
    app.add_option("--cap", config.cap, "exploration cap on candidate sets")->capture_default_str();
    app.add_option("--workers", config.workers, "worker threads for exhaustive search")
        ->check(CLI::PositiveNumber);
    app.add_option("--output", config.output, "output file (or directory for generators)");
    app.add_option("--format", config.format, "bench output format")
        ->check(CLI::IsMember({"table", "records"}));

    // solve
    auto* solve = app.add_subcommand("solve", "exact influence maximization / decision");
    std::string solve_path;
    bool solve_exact_flag = true, solve_open = false, solve_closed = false, solve_decide = false;
    bool solve_trace = false;
    int solve_k = 0, solve_ell = 0;
    solve->add_option("instance", solve_path, "instance file")->required();
    solve->add_flag("--exact", solve_exact_flag, "exhaustive search (default)");
    auto* solve_open_flag = solve->add_flag("--open", solve_open, "maximize open influence (default)");
    auto* solve_closed_flag = solve->add_flag("--closed", solve_closed, "maximize closed influence");
    auto* solve_decide_flag = solve->add_flag("--decide", solve_decide, "decide the (k, ell) question");
    solve_closed_flag->excludes(solve_open_flag);
    solve_decide_flag->excludes(solve_closed_flag);
    solve->add_flag("--trace", solve_trace, "dump the propagation rounds of the winner");
    auto* solve_k_opt = solve->add_option("-k,--k,--budget", solve_k, "seed budget");
    auto* solve_ell_opt = solve->add_option("--ell", solve_ell, "activation target");

    // approx
    auto* approx = app.add_subcommand("approx", "approximation algorithms (unanimity)");
    std::string approx_path, approx_algo, approx_ratio = "linear", approx_seeds;
    int approx_k = 0;
    approx->add_option("instance", approx_path, "instance file")->required();
    approx->add_option("--algo", approx_algo, "twin | greedy | fpt-ratio | mis | vc")->required();
    auto* approx_k_opt = approx->add_option("-k,--k,--budget", approx_k, "seed budget");
    approx->add_option("--ratio", approx_ratio, "ratio preset for fpt-ratio")
        ->check(CLI::IsMember({"log2", "sqrt", "linear"}));
    approx->add_option("--seeds", approx_seeds, "comma-separated seed list (vc)");

    // fpt-decide
    auto* fpt = app.add_subcommand("fpt-decide", "bounded-degree decision procedure (unanimity)");
    std::string fpt_path;
    int fpt_k = 0, fpt_ell = 0;
    fpt->add_option("instance", fpt_path, "instance file")->required();
    auto* fpt_k_opt = fpt->add_option("-k,--k,--budget", fpt_k, "seed budget");
    fpt->add_option("--ell", fpt_ell, "activation target")->required();

    // generate
    auto* generate = app.add_subcommand("generate", "gadget constructions and corpora");
    std::string gen_kind, gen_source, gen_scheme = "unanimity";
    int gen_k = 1, gen_L = 1, gen_P = 1, gen_Q = 1, gen_max_n = 5, gen_count = 10;
    unsigned gen_seed = 1;
    double gen_prob = 0.5;
    generate->add_option("--kind", gen_kind, "basic | majority | constant | clique | dks | corpus | random")
        ->required();
    generate->add_option("source", gen_source, "source instance file (reductions)");
    generate->add_option("-k,--k,--budget", gen_k, "reduction parameter k");
    generate->add_option("--grid-depth", gen_L, "grid depth L (majority)");
    generate->add_option("--paths", gen_P, "path count P (constant)");
    generate->add_option("--pendings", gen_Q, "pendings per terminus Q (constant)");
    generate->add_option("--max-n", gen_max_n, "catalog bound (corpus) / size (random)");
    generate->add_option("--count", gen_count, "number of random instances");
    generate->add_option("--seed", gen_seed, "random seed");
    generate->add_option("--edge-prob", gen_prob, "edge probability (random)");
    generate->add_option("--scheme", gen_scheme, "threshold scheme for corpus/random")
        ->check(CLI::IsMember({"unanimity", "majority"}));

    // verify
    auto* verify = app.add_subcommand("verify", "check a reduction against both oracles");
    std::string verify_kind, verify_source;
    int verify_k = 1;
    bool verify_fault = false;
    verify->add_option("--kind", verify_kind, "basic | clique | dks")->required();
    verify->add_option("source", verify_source, "source instance file")->required();
    verify->add_option("-k,--k,--budget", verify_k, "parameter k");
    verify->add_flag("--fault", verify_fault, "corrupt one threshold (harness self-test)");

    // bench
    auto* bench = app.add_subcommand("bench", "run algorithms across a corpus");
    std::string bench_corpus, bench_ratio = "linear";
    std::vector<std::string> bench_algos;
    int bench_k = 2;
    bool bench_oracle = false;
    bench->add_option("--corpus", bench_corpus, "directory of .inst files")->required();
    bench->add_option("--algo", bench_algos, "twin | greedy | fpt-ratio | exact-open")->required();
    bench->add_option("-k,--k,--budget", bench_k, "seed budget");
    bench->add_option("--ratio", bench_ratio, "ratio preset for fpt-ratio");
    bench->add_flag("--with-oracle", bench_oracle, "join rows with the exact optimum");

    std::vector<const char*> argv;
    argv.push_back("influence");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (solve->parsed())
            return run_solve(config, solve_path, !solve_closed, solve_decide, solve_k,
                             !solve_k_opt->empty(), solve_ell, !solve_ell_opt->empty(),
                             solve_trace, out);
        if (approx->parsed())
            return run_approx(config, approx_path, approx_algo, approx_k, !approx_k_opt->empty(),
                              approx_ratio, approx_seeds, out);
        if (fpt->parsed())
            return run_fpt_decide(config, fpt_path, fpt_k, !fpt_k_opt->empty(), fpt_ell, out);
        if (generate->parsed())
            return run_generate(config, gen_kind, gen_source, gen_k, gen_L, gen_P, gen_Q,
                                gen_max_n, gen_count, gen_seed, gen_prob, gen_scheme, out);
        if (verify->parsed())
            return run_verify(config, verify_kind, verify_source, verify_k, verify_fault, out);
        if (bench->parsed())
            return run_bench(config, bench_corpus, bench_algos, bench_k, bench_ratio,
                             bench_oracle, out);
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace influence
