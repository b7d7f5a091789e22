// graphpri: generate benchmark graphs, sparsify them, and run the
// measurement harness. Every artifact embeds the command that produced it;
// re-running that command reproduces the artifact byte for byte.
//
// Exit codes: 0 success, 1 property or benchmark failure, 2 usage/IO error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "graphpri/baselines.hpp"
#include "graphpri/edge_list_io.hpp"
#include "graphpri/entropy.hpp"
#include "graphpri/evaluation.hpp"
#include "graphpri/generators.hpp"
#include "graphpri/graph.hpp"
#include "graphpri/optimizer.hpp"
#include "graphpri/rng.hpp"
#include "graphpri/verify.hpp"
#include "graphpri/version.hpp"

namespace gp = graphpri;
using nlohmann::json;

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string fmt_list(const std::vector<double>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += fmt(xs[i]);
    }
    return out;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << content;
    if (!out) throw std::runtime_error(path + ": write failed");
}

// ---- generate ----------------------------------------------------------

struct GenerateArgs {
    std::string model;
    int n = 0;
    double p = 0.0;
    int m_attach = 0;
    int k = 0;
    std::vector<int> blocks;
    double p_in = 0.0, p_out = 0.0;
    std::uint64_t seed = 0;
    std::string out;
};

std::string generate_command(const GenerateArgs& a) {
    std::string cmd = "graphpri generate " + a.model;
    if (a.model == "er") {
        cmd += " -n " + std::to_string(a.n) + " -p " + fmt(a.p);
    } else if (a.model == "ba") {
        cmd += " -n " + std::to_string(a.n) + " -m " + std::to_string(a.m_attach);
    } else if (a.model == "sbm") {
        cmd += " --blocks ";
        for (size_t i = 0; i < a.blocks.size(); ++i) {
            if (i) cmd += ",";
            cmd += std::to_string(a.blocks[i]);
        }
        cmd += " --p-in " + fmt(a.p_in) + " --p-out " + fmt(a.p_out);
    } else {  // knn-circle
        cmd += " -n " + std::to_string(a.n) + " -k " + std::to_string(a.k);
    }
    if (a.model != "knn-circle") cmd += " --seed " + std::to_string(a.seed);
    return cmd;
}

int run_generate(const GenerateArgs& a) {
    gp::Graph g;
    if (a.model == "er") {
        g = gp::gen_er(a.n, a.p, a.seed);
    } else if (a.model == "ba") {
        g = gp::gen_ba(a.n, a.m_attach, a.seed);
    } else if (a.model == "sbm") {
        g = gp::gen_sbm(a.blocks, a.p_in, a.p_out, a.seed);
    } else {
        g = gp::gen_knn_circle(a.n, a.k);
    }
    write_text(a.out, "# cmd: " + generate_command(a) + "\n" +
                          gp::format_edge_list(g));
    std::cerr << "wrote " << a.out << " (" << g.node_count() << " nodes, "
              << g.edge_count() << " edges)\n";
    return 0;
}

// ---- sparsify ----------------------------------------------------------

struct SparsifyArgs {
    std::string input;
    std::string method;
    double ratio = 0.5;
    bool ratio_set = false;
    double exponent = 0.5;
    bool exponent_set = false;
    gp::PriConfig pri;
    bool soft = false;
    std::string out;
    std::string report_path;
};

std::string sparsify_command(const SparsifyArgs& a) {
    std::string cmd = "graphpri sparsify " + a.input + " --method " + a.method;
    if (a.method == "pri") {
        cmd += " --beta " + fmt(a.pri.beta) + " --alpha " + fmt(a.pri.alpha) +
               " --tau " + fmt(a.pri.temperature) + " --step-size " +
               fmt(a.pri.step_size) + " --samples " +
               std::to_string(a.pri.samples) + " --iterations " +
               std::to_string(a.pri.max_iterations);
        if (!a.pri.hard_sampling) cmd += " --soft";
        if (a.pri.use_degree_entropy_approx) cmd += " --degree-entropy-approx";
        cmd += " --seed " + std::to_string(a.pri.seed);
    } else if (a.method == "local-degree") {
        cmd += " --exponent " + fmt(a.exponent);
    } else {
        cmd += " --ratio " + fmt(a.ratio);
        if (a.method != "local-similarity") {
            cmd += " --seed " + std::to_string(a.pri.seed);
        }
    }
    cmd += " -o " + a.out;
    if (!a.report_path.empty()) cmd += " --report " + a.report_path;
    return cmd;
}

int run_sparsify(SparsifyArgs& a) {
    if (!std::filesystem::exists(a.input)) {
        std::cerr << "error: input file not found: " << a.input << "\n";
        return 2;
    }
    const gp::Graph g = gp::read_edge_list(a.input);
    a.pri.hard_sampling = !a.soft;

    gp::EdgeSelection mask;
    json extras;
    if (a.method == "pri") {
        const gp::SparsifyReport rep = gp::sparsify_pri(g, a.pri);
        mask = rep.selection;
        extras["objective_trace"] = rep.objective_trace;
        std::vector<double> soft(rep.soft_selection.data(),
                                 rep.soft_selection.data() +
                                     rep.soft_selection.size());
        extras["soft_selection"] = soft;
        if (rep.empty_selection) {
            std::cerr << "warning: final selection kept no edges\n";
        }
        std::cerr << "wall_time_seconds=" << rep.wall_time_seconds << "\n";
        if (a.soft) mask = gp::harden_threshold(rep.selection, 0.5);
    } else if (a.method == "random") {
        mask = gp::random_sparsifier(g, a.ratio, a.pri.seed);
    } else if (a.method == "local-degree") {
        mask = gp::local_degree_sparsifier(g, a.exponent);
    } else if (a.method == "local-similarity") {
        mask = gp::local_similarity_sparsifier(g, a.ratio);
    } else if (a.method == "effective-resistance") {
        mask = gp::effective_resistance_sparsifier(g, a.ratio, a.pri.seed);
    } else {
        std::cerr << "error: unknown method '" << a.method << "'\n";
        return 2;
    }

    const gp::Graph kept = g.induced_by(mask);
    const std::string cmd = sparsify_command(a);
    write_text(a.out, "# cmd: " + cmd + "\n" + gp::format_edge_list(kept));
    std::cerr << "wrote " << a.out << " (" << kept.edge_count() << " of "
              << g.edge_count() << " edges kept)\n";

    if (!a.report_path.empty()) {
        json config = {{"method", a.method},
                       {"input", a.input},
                       {"seed", a.pri.seed},
                       {"command", cmd}};
        if (a.method == "pri") {
            config["beta"] = a.pri.beta;
            config["alpha"] = a.pri.alpha;
            config["temperature"] = a.pri.temperature;
            config["step_size"] = a.pri.step_size;
            config["samples"] = a.pri.samples;
            config["max_iterations"] = a.pri.max_iterations;
            config["hard_sampling"] = a.pri.hard_sampling;
            config["use_degree_entropy_approx"] = a.pri.use_degree_entropy_approx;
        } else if (a.method == "local-degree") {
            config["exponent"] = a.exponent;
        } else {
            config["ratio"] = a.ratio;
        }
        std::vector<int> selection(static_cast<size_t>(mask.size()));
        for (int i = 0; i < mask.size(); ++i) {
            selection[static_cast<size_t>(i)] = mask[i] > 0.5 ? 1 : 0;
        }
        json report = {{"config", config},
                       {"commit", gp::kCommit},
                       {"node_count", g.node_count()},
                       {"edge_count", g.edge_count()},
                       {"retained_edge_count", kept.edge_count()},
                       {"selection", selection}};
        for (auto& [key, value] : extras.items()) report[key] = value;
        write_text(a.report_path, report.dump(2) + "\n");
        std::cerr << "wrote " << a.report_path << "\n";
    }
    return 0;
}

// ---- benchmark ---------------------------------------------------------

struct ModelArgs {
    std::string model = "er";
    int n = 200;
    double mean_degree = 10.0;
    int m_attach = 5;
    std::uint64_t graph_seed = 0;
};

gp::Graph build_model(const ModelArgs& m, std::uint64_t root_seed) {
    const std::uint64_t seed =
        m.graph_seed ? m.graph_seed : gp::derive_seed(root_seed, "benchmark-graph");
    if (m.model == "er") {
        return gp::gen_er(m.n, m.mean_degree / static_cast<double>(m.n - 1), seed);
    }
    if (m.model == "ba") {
        return gp::gen_ba(m.n, m.m_attach, seed);
    }
    if (m.model == "karate") {
        return gp::karate_club();
    }
    throw std::invalid_argument("unknown model '" + m.model + "'");
}

std::string model_summary(const ModelArgs& m) {
    if (m.model == "er") {
        return "er n=" + std::to_string(m.n) + " mean_degree=" + fmt(m.mean_degree);
    }
    if (m.model == "ba") {
        return "ba n=" + std::to_string(m.n) + " m=" + std::to_string(m.m_attach);
    }
    return m.model;
}

void write_curves(const std::filesystem::path& dir, const std::string& stem,
                  const std::vector<gp::CurvePoint>& points,
                  const std::string& suite, std::uint64_t seed,
                  const std::string& config) {
    std::filesystem::create_directories(dir);
    write_text((dir / (stem + ".csv")).string(),
               gp::curve_csv(points, suite, seed, config));
    write_text((dir / (stem + ".json")).string(),
               gp::curve_json(points, suite, seed, config));
    std::cerr << "wrote " << (dir / (stem + ".csv")).string() << " and .json\n";
}

struct BenchmarkGraph {
    std::string name;
    gp::Graph graph;
    bool surrogate = false;
};

// The six comparison benchmarks: two synthetic, karate bundled, three from
// dataset files (falling back to same-size G(n,m) stand-ins on request).
std::vector<BenchmarkGraph> comparison_graphs(const std::string& data_dir,
                                              bool surrogates,
                                              std::uint64_t seed) {
    std::vector<BenchmarkGraph> out;
    out.push_back({"knn_circle", gp::gen_knn_circle(20, 10), false});
    out.push_back({"sbm",
                   gp::gen_sbm({30, 30, 30, 30}, 0.25, 1.0 / 128.0,
                               gp::derive_seed(seed, "cmp-sbm")),
                   false});
    out.push_back({"karate", gp::karate_club(), false});
    const struct {
        const char* name;
        const char* file;
        int n;
        int m;
    } datasets[] = {
        {"train_bombing", "train_bombing.edgelist", 64, 243},
        {"political_books", "political_books.edgelist", 105, 441},
        {"jazz", "jazz.edgelist", 198, 2742},
    };
    for (const auto& d : datasets) {
        const std::filesystem::path path =
            std::filesystem::path(data_dir) / d.file;
        if (std::filesystem::exists(path)) {
            out.push_back({d.name, gp::read_edge_list(path.string()), false});
        } else if (surrogates) {
            std::cerr << "note: " << path.string() << " not found; using G("
                      << d.n << "," << d.m << ") stand-in for " << d.name << "\n";
            out.push_back({d.name,
                           gp::gen_gnm(d.n, d.m, gp::derive_seed(seed, d.name)),
                           true});
        } else {
            std::cerr << "warning: " << path.string()
                      << " not found; skipping " << d.name
                      << " (use --surrogates for a stand-in)\n";
        }
    }
    return out;
}

// ---- verify ------------------------------------------------------------

int run_verify(std::uint64_t seed) {
    const auto results = gp::run_property_suite(seed);
    bool all_ok = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail
                  << ")\n";
        if (!r.passed) all_ok = false;
    }
    std::cout << (all_ok ? "all properties passed\n" : "properties FAILED\n");
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"information-theoretic graph sparsification toolkit"};
    app.require_subcommand(1);

    // generate
    GenerateArgs gen;
    CLI::App* generate =
        app.add_subcommand("generate", "write a synthetic graph edge list");
    generate->require_subcommand(1);
    auto add_common_gen = [&](CLI::App* sub, bool seeded) {
        sub->add_option("-o,--out", gen.out, "output edge list path")->required();
        if (seeded) sub->add_option("--seed", gen.seed, "random seed");
    };
    CLI::App* g_er = generate->add_subcommand("er", "Erdos-Renyi G(n,p)");
    g_er->add_option("-n", gen.n, "node count")->required();
    g_er->add_option("-p", gen.p, "edge probability")->required();
    add_common_gen(g_er, true);
    CLI::App* g_ba =
        generate->add_subcommand("ba", "Barabasi-Albert preferential attachment");
    g_ba->add_option("-n", gen.n, "node count")->required();
    g_ba->add_option("-m", gen.m_attach, "edges per new node")->required();
    add_common_gen(g_ba, true);
    CLI::App* g_sbm = generate->add_subcommand("sbm", "stochastic block model");
    g_sbm->add_option("--blocks", gen.blocks, "comma-separated block sizes")
        ->required()
        ->delimiter(',');
    g_sbm->add_option("--p-in", gen.p_in, "intra-block probability")->required();
    g_sbm->add_option("--p-out", gen.p_out, "inter-block probability")
        ->required();
    add_common_gen(g_sbm, true);
    CLI::App* g_knn =
        generate->add_subcommand("knn-circle", "ring with k nearest neighbors");
    g_knn->add_option("-n", gen.n, "node count")->required();
    g_knn->add_option("-k", gen.k, "neighbors per node")->required();
    add_common_gen(g_knn, false);

    // sparsify
    SparsifyArgs sp;
    CLI::App* sparsify =
        app.add_subcommand("sparsify", "sparsify an edge list with one method");
    sparsify->add_option("input", sp.input, "input edge list")->required();
    sparsify
        ->add_option("--method", sp.method,
                     "pri|random|local-degree|local-similarity|"
                     "effective-resistance")
        ->required();
    sparsify->add_option("--ratio", sp.ratio, "kept-edge fraction");
    sparsify->add_option("--exponent", sp.exponent, "local-degree exponent");
    sparsify->add_option("--beta", sp.pri.beta, "divergence weight");
    sparsify->add_option("--alpha", sp.pri.alpha, "connectivity barrier weight");
    sparsify->add_option("--tau", sp.pri.temperature, "gumbel temperature");
    sparsify->add_option("--step-size", sp.pri.step_size, "Adam step size");
    sparsify->add_option("--samples", sp.pri.samples, "samples per iteration");
    sparsify->add_option("--iterations", sp.pri.max_iterations,
                         "optimization iterations");
    sparsify->add_flag("--soft", sp.soft, "soft sampling (no straight-through)");
    sparsify->add_flag("--degree-entropy-approx",
                       sp.pri.use_degree_entropy_approx,
                       "O(N) degree-entropy surrogate objective");
    sparsify->add_option("--seed", sp.pri.seed, "random seed");
    sparsify->add_option("-o,--out", sp.out, "output edge list")->required();
    sparsify->add_option("--report", sp.report_path, "JSON report path");

    // benchmark
    CLI::App* benchmark =
        app.add_subcommand("benchmark", "run a measurement suite");
    benchmark->require_subcommand(1);
    ModelArgs model;
    std::string out_dir = "bench-out";
    std::uint64_t bench_seed = 0;
    std::vector<double> ratios = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    std::vector<double> betas = {0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0};
    std::vector<double> degrees = {1.6, 2.5, 3.0, 4.0, 5.0};
    int replicates = 100;
    gp::PriConfig bench_pri;  // benchmark profile: lighter than the defaults
    bench_pri.max_iterations = 150;
    bench_pri.samples = 3;
    bench_pri.beta = 5.0;
    int trials = 1000;
    double corollary_ratio = 0.5;
    std::string data_dir = "data";
    bool surrogates = false;
    std::vector<std::string> methods = {"pri", "random", "local_degree",
                                        "local_similarity",
                                        "effective_resistance"};

    auto add_model_flags = [&](CLI::App* sub) {
        sub->add_option("--model", model.model, "er|ba|karate");
        sub->add_option("-n", model.n, "node count");
        sub->add_option("--mean-degree", model.mean_degree,
                        "target mean degree (er)");
        sub->add_option("-m", model.m_attach, "edges per new node (ba)");
        sub->add_option("--graph-seed", model.graph_seed,
                        "seed for the benchmark graph (0: derive from --seed)");
    };
    auto add_common_bench = [&](CLI::App* sub) {
        sub->add_option("-o,--out", out_dir, "output directory");
        sub->add_option("--seed", bench_seed, "root seed");
        sub->add_option("--replicates", replicates, "replicates per point");
    };

    CLI::App* b_tradeoff = benchmark->add_subcommand(
        "tradeoff", "entropy and divergence vs kept-edge fraction");
    add_model_flags(b_tradeoff);
    add_common_bench(b_tradeoff);
    b_tradeoff->add_option("--ratios", ratios, "kept-edge fractions")
        ->delimiter(',');

    CLI::App* b_beta = benchmark->add_subcommand(
        "beta-curve", "retained edges vs divergence weight");
    add_model_flags(b_beta);
    add_common_bench(b_beta);
    b_beta->add_option("--betas", betas, "beta grid (ascending)")->delimiter(',');
    b_beta->add_option("--iterations", bench_pri.max_iterations,
                       "optimizer iterations");
    b_beta->add_option("--samples", bench_pri.samples, "samples per iteration");
    b_beta->add_option("--alpha", bench_pri.alpha, "barrier weight");
    b_beta->add_option("--tau", bench_pri.temperature, "gumbel temperature");
    b_beta->add_option("--step-size", bench_pri.step_size, "Adam step size");

    CLI::App* b_cmp = benchmark->add_subcommand(
        "comparison", "spectral distance and centralization per method");
    add_common_bench(b_cmp);
    b_cmp->add_option("--ratios", ratios, "kept-edge fractions")->delimiter(',');
    b_cmp->add_option("--methods", methods, "subset of methods")->delimiter(',');
    b_cmp->add_option("--data-dir", data_dir, "directory with dataset files");
    b_cmp->add_flag("--surrogates", surrogates,
                    "use same-size G(n,m) stand-ins for missing datasets");
    b_cmp->add_option("--beta", bench_pri.beta, "PRI divergence weight");
    b_cmp->add_option("--iterations", bench_pri.max_iterations,
                      "optimizer iterations");
    b_cmp->add_option("--samples", bench_pri.samples, "samples per iteration");

    CLI::App* b_assume = benchmark->add_subcommand(
        "assumption", "entropy increase rate of single-edge additions");
    add_common_bench(b_assume);
    b_assume->add_option("-n", model.n, "node count");
    b_assume->add_option("--degrees", degrees, "target mean degrees")
        ->delimiter(',');

    CLI::App* b_corollary = benchmark->add_subcommand(
        "corollary", "divergence decrease rate of edge re-additions");
    add_model_flags(b_corollary);
    add_common_bench(b_corollary);
    b_corollary->add_option("--ratio", corollary_ratio, "sparsification ratio");
    b_corollary->add_option("--trials", trials, "re-addition trials");

    // verify
    std::uint64_t verify_seed = 0;
    CLI::App* verify =
        app.add_subcommand("verify", "run the fast invariant suite");
    verify->add_option("--seed", verify_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (generate->parsed()) {
            for (CLI::App* sub : generate->get_subcommands()) {
                gen.model = sub->get_name();
            }
            return run_generate(gen);
        }
        if (sparsify->parsed()) {
            sp.ratio_set = sparsify->count("--ratio") > 0;
            sp.exponent_set = sparsify->count("--exponent") > 0;
            return run_sparsify(sp);
        }
        if (verify->parsed()) {
            return run_verify(verify_seed);
        }
        // benchmark suites
        const std::filesystem::path dir(out_dir);
        if (b_tradeoff->parsed()) {
            model.n = b_tradeoff->count("-n") ? model.n : 200;
            const gp::Graph g = build_model(model, bench_seed);
            const auto points =
                gp::tradeoff_curve(g, ratios, replicates, bench_seed);
            const std::string cfg = "tradeoff " + model_summary(model) +
                                    " ratios=" + fmt_list(ratios) +
                                    " replicates=" + std::to_string(replicates);
            write_curves(dir, "tradeoff", points, "tradeoff", bench_seed, cfg);
            return 0;
        }
        if (b_beta->parsed()) {
            const gp::Graph g = build_model(model, bench_seed);
            bench_pri.seed = bench_seed;
            if (b_beta->count("--replicates") == 0) replicates = 10;
            const auto points =
                gp::beta_sparsity_curve(g, betas, replicates, bench_pri);
            const std::string cfg =
                "beta-curve " + model_summary(model) + " betas=" +
                fmt_list(betas) + " replicates=" + std::to_string(replicates) +
                " iterations=" + std::to_string(bench_pri.max_iterations) +
                " samples=" + std::to_string(bench_pri.samples);
            write_curves(dir, "beta_curve", points, "beta-curve", bench_seed, cfg);
            return 0;
        }
        if (b_cmp->parsed()) {
            if (b_cmp->count("--replicates") == 0) replicates = 10;
            const auto graphs = comparison_graphs(data_dir, surrogates, bench_seed);
            if (graphs.empty()) {
                std::cerr << "error: no benchmark graphs available\n";
                return 1;
            }
            for (const auto& bg : graphs) {
                const gp::Graph connected = largest_component(bg.graph);
                const auto points = gp::sparsifier_comparison(
                    connected, methods, ratios, replicates,
                    gp::derive_seed(bench_seed, bg.name), bench_pri);
                const std::string cfg =
                    "comparison graph=" + bg.name +
                    (bg.surrogate ? " (surrogate)" : "") +
                    " n=" + std::to_string(connected.node_count()) +
                    " m=" + std::to_string(connected.edge_count()) +
                    " ratios=" + fmt_list(ratios) +
                    " replicates=" + std::to_string(replicates) +
                    " beta=" + fmt(bench_pri.beta);
                write_curves(dir, "comparison_" + bg.name, points, "comparison",
                             bench_seed, cfg);
            }
            return 0;
        }
        if (b_assume->parsed()) {
            model.n = b_assume->count("-n") ? model.n : 20;
            const auto rows =
                gp::assumption_check(model.n, degrees, replicates, bench_seed);
            std::vector<gp::CurvePoint> points;
            for (const auto& r : rows) {
                gp::CurvePoint p;
                p.x = r.target_degree;
                p.metrics["percent_entropy_increase"] = {
                    r.percent_nonnegative, r.percent_stddev, r.graphs_used};
                points.push_back(std::move(p));
            }
            const std::string cfg = "assumption n=" + std::to_string(model.n) +
                                    " degrees=" + fmt_list(degrees) +
                                    " replicates=" + std::to_string(replicates);
            write_curves(dir, "assumption", points, "assumption", bench_seed, cfg);
            return 0;
        }
        if (b_corollary->parsed()) {
            model.n = b_corollary->count("-n") ? model.n : 50;
            if (b_corollary->count("--mean-degree") == 0) model.mean_degree = 5.0;
            gp::Graph g = build_model(model, bench_seed);
            g = largest_component(g);
            const double fraction =
                gp::corollary_check(g, corollary_ratio, trials, bench_seed);
            gp::CurvePoint p;
            p.x = corollary_ratio;
            p.metrics["fraction_divergence_decrease"] = {fraction, 0.0, trials};
            const std::string cfg =
                "corollary " + model_summary(model) + " ratio=" +
                fmt(corollary_ratio) + " trials=" + std::to_string(trials);
            write_curves(dir, "corollary", {p}, "corollary", bench_seed, cfg);
            return 0;
        }
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
