#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qecc/dataset_import.hpp"
#include "qecc/errors.hpp"
#include "qecc/experiment.hpp"
#include "qecc/generators.hpp"
#include "qecc/metrics.hpp"
#include "qecc/verify.hpp"

namespace {

using namespace qecc;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream stream(s);
    std::string part;
    while (std::getline(stream, part, sep)) parts.push_back(part);
    return parts;
}

SyntheticSpec parse_synthetic(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 4 && parts.size() != 5)
        throw ParameterError("--synthetic expects n,k,alpha,beta[,seed]");
    SyntheticSpec spec;
    spec.n = static_cast<std::uint32_t>(std::stoul(parts[0]));
    spec.k = static_cast<std::uint32_t>(std::stoul(parts[1]));
    spec.alpha = std::stod(parts[2]);
    spec.beta = std::stod(parts[3]);
    if (parts.size() == 5) spec.seed = std::stoull(parts[4]);
    return spec;
}

LowerBoundSpec parse_lower_bound(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 3 && parts.size() != 4)
        throw ParameterError("--lower-bound expects n,c,epsilon[,seed]");
    LowerBoundSpec spec;
    spec.n = static_cast<std::uint32_t>(std::stoul(parts[0]));
    spec.c = static_cast<std::uint32_t>(std::stoul(parts[1]));
    spec.epsilon = std::stod(parts[2]);
    if (parts.size() == 4) spec.seed = std::stoull(parts[3]);
    return spec;
}

ClusterSizes parse_sizes(const std::string& s) {
    ClusterSizes sizes;
    for (const auto& part : split(s, ','))
        sizes.push_back(static_cast<std::uint32_t>(std::stoul(part)));
    return sizes;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot open output file: " + path);
    return out;
}

struct GenerateArgs {
    std::string family;
    std::string synthetic, lower_bound, sizes;
    std::uint32_t n = 0, k = 0, c = 1;
    double alpha = 0, beta = 0, epsilon = 0;
    std::uint64_t seed = 1;
    std::string edges_out, labels_out;
};

int cmd_generate(const GenerateArgs& args) {
    SimilarityGraph graph;
    Clustering truth;
    if (args.family == "synthetic") {
        auto instance = generate_synthetic({args.n, args.k, args.alpha, args.beta, args.seed});
        graph = std::move(instance.graph);
        truth = std::move(instance.ground_truth);
    } else if (args.family == "lower-bound") {
        auto instance =
            generate_lower_bound_instance({args.n, args.c, args.epsilon, args.seed});
        std::cerr << "effective epsilon " << instance.params.effective_epsilon << ", k "
                  << instance.params.k << ", |A| " << instance.params.a_size << ", |B| "
                  << instance.params.b_size << ", additive target "
                  << instance.params.additive_target << "\n";
        graph = std::move(instance.graph);
        truth = std::move(instance.natural);
    } else if (args.family == "cluster") {
        auto instance = generate_cluster_graph(parse_sizes(args.sizes));
        graph = std::move(instance.graph);
        truth = std::move(instance.clustering);
    } else {
        throw ParameterError("unknown family '" + args.family +
                             "' (expected synthetic, lower-bound or cluster)");
    }

    auto edges = open_output(args.edges_out);
    write_edge_list(edges, graph);
    if (!args.labels_out.empty()) {
        auto labels = open_output(args.labels_out);
        write_labels(labels, truth);
    }
    std::cerr << "wrote " << graph.num_vertices() << " vertices, " << graph.num_positive_edges()
              << " positive edges\n";
    return 0;
}

int cmd_import(const std::string& kind, const std::string& input, const std::string& edges_path,
               const std::string& labels_path) {
    std::ifstream in(input);
    if (!in) throw ParameterError("cannot open input file: " + input);
    auto edges = open_output(edges_path);

    ImportStats stats;
    if (kind == "cora") {
        stats = import_cora(in, edges);
    } else if (kind == "citeseer") {
        stats = import_citeseer(in, edges);
    } else if (kind == "mushrooms") {
        if (!labels_path.empty()) {
            auto labels = open_output(labels_path);
            stats = import_mushrooms(in, edges, &labels);
        } else {
            stats = import_mushrooms(in, edges);
        }
    } else {
        throw ParameterError("unknown import kind '" + kind +
                             "' (expected cora, citeseer or mushrooms)");
    }
    std::cerr << "imported " << stats.vertices << " vertices, " << stats.edges << " edges\n";
    return 0;
}

struct RunArgs {
    std::string dataset, synthetic, lower_bound, cluster_sizes;
    std::vector<std::string> algos;
    std::string budgets;
    bool auto_budgets = false;
    std::uint32_t trials = 50;
    std::uint64_t seed = 1;
    bool charge_duplicates = false;
    std::uint32_t threads = 1;
    std::string out, summary_out;
};

int cmd_run(const RunArgs& args) {
    ExperimentConfig cfg;
    const int sources = !args.dataset.empty() + !args.synthetic.empty() +
                        !args.lower_bound.empty() + !args.cluster_sizes.empty();
    if (sources != 1)
        throw ParameterError(
            "exactly one of --dataset, --synthetic, --lower-bound, --cluster-sizes is required");
    if (!args.dataset.empty())
        cfg.source = FileSource{args.dataset};
    else if (!args.synthetic.empty())
        cfg.source = parse_synthetic(args.synthetic);
    else if (!args.lower_bound.empty())
        cfg.source = parse_lower_bound(args.lower_bound);
    else
        cfg.source = parse_sizes(args.cluster_sizes);

    if (args.algos.empty())
        cfg.algorithms.assign(std::begin(kAllAlgos), std::end(kAllAlgos));
    else
        for (const auto& name : args.algos) cfg.algorithms.push_back(algo_from_name(name));

    cfg.auto_budgets = args.auto_budgets;
    if (!args.auto_budgets) {
        if (args.budgets.empty())
            throw ParameterError("either --budgets or --auto-budgets is required");
        for (const auto& b : split(args.budgets, ',')) cfg.budgets.push_back(std::stoull(b));
    }
    cfg.trials = args.trials;
    cfg.base_seed = args.seed;
    cfg.charge_duplicates = args.charge_duplicates;
    cfg.threads = args.threads;

    const auto records = run_experiment(cfg);
    if (args.out.empty()) {
        write_trials_csv(std::cout, records);
    } else {
        auto out = open_output(args.out);
        write_trials_csv(out, records);
    }
    if (!args.summary_out.empty()) {
        auto out = open_output(args.summary_out);
        write_summary_csv(out, summarize(records));
    }
    return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opts) {
    bool ok = true;
    if (suite == "all") {
        for (const char* name :
             {"lemma1", "lemma2", "thm1-bound", "thm2-nonadaptive", "approx3"}) {
            const SuiteReport report = run_verify_suite(name, opts);
            print_report(std::cout, report);
            ok = ok && report.all_pass();
        }
    } else {
        const SuiteReport report = run_verify_suite(suite, opts);
        print_report(std::cout, report);
        ok = report.all_pass();
    }
    return ok ? 0 : 1;
}

int cmd_opt(const std::string& dataset) {
    const LoadedGraph loaded = load_edge_list_file(dataset);
    const OptResult result = brute_force_opt(loaded.graph);
    std::cout << "opt_cost " << result.cost << "\n";
    for (std::size_t v = 0; v < result.witness.size(); ++v)
        std::cout << loaded.tokens[v] << ' ' << result.witness.labels[v] << "\n";
    return 0;
}

int cmd_evaluate(const std::string& dataset, const std::string& labels_path) {
    const LoadedGraph loaded = load_edge_list_file(dataset);
    const Clustering labels = load_label_file(labels_path, loaded.token_ids);
    const QualityReport report = evaluate(loaded.graph, labels);
    std::cout << "vertices " << loaded.graph.num_vertices() << "\n"
              << "positive_edges " << loaded.graph.num_positive_edges() << "\n"
              << "cost " << report.cost << "\n"
              << "precision " << report.precision << "\n"
              << "recall " << report.recall << "\n"
              << "num_clusters " << report.num_clusters << "\n"
              << "num_nonsingleton_clusters " << report.num_nonsingleton_clusters << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"query-budgeted correlation clustering toolkit"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "write a generated instance to files");
    generate->add_option("family", gen.family, "synthetic | lower-bound | cluster")->required();
    generate->add_option("--n", gen.n, "vertex count");
    generate->add_option("--k", gen.k, "ground-truth cluster count (synthetic)");
    generate->add_option("--alpha", gen.alpha, "imbalance factor (synthetic)");
    generate->add_option("--beta", gen.beta, "noise rate (synthetic)");
    generate->add_option("--c", gen.c, "approximation target (lower-bound)");
    generate->add_option("--epsilon", gen.epsilon, "error parameter (lower-bound)");
    generate->add_option("--sizes", gen.sizes, "comma-separated clique sizes (cluster)");
    generate->add_option("--seed", gen.seed, "generator seed");
    generate->add_option("--edges-out", gen.edges_out, "edge-list output path")->required();
    generate->add_option("--labels-out", gen.labels_out, "ground-truth output path");

    std::string import_kind, import_in, import_edges, import_labels;
    auto* import = app.add_subcommand("import", "convert a raw dataset to a canonical edge list");
    import->add_option("kind", import_kind, "cora | citeseer | mushrooms")->required();
    import->add_option("--input", import_in, "raw dataset file")->required();
    import->add_option("--edges-out", import_edges, "edge-list output path")->required();
    import->add_option("--labels-out", import_labels, "ground-truth output path (mushrooms)");

    RunArgs run;
    auto* runc = app.add_subcommand("run", "run a seeded (algorithm x budget x trial) sweep");
    runc->add_option("--dataset", run.dataset, "edge-list file");
    runc->add_option("--synthetic", run.synthetic, "n,k,alpha,beta[,seed]");
    runc->add_option("--lower-bound", run.lower_bound, "n,c,epsilon[,seed]");
    runc->add_option("--cluster-sizes", run.cluster_sizes, "comma-separated clique sizes");
    runc->add_option("--algo", run.algos,
                     "algorithm (repeatable): qwick, qecc, qecc-nonadaptive, qecc-heur");
    runc->add_option("--budgets", run.budgets, "comma-separated query budgets");
    runc->add_flag("--auto-budgets", run.auto_budgets,
                   "grid from 2n to the mean qwick_cluster query count");
    runc->add_option("--trials", run.trials, "trials per (algorithm, budget)");
    runc->add_option("--seed", run.seed, "base seed");
    runc->add_flag("--charge-duplicates", run.charge_duplicates,
                   "charge every issued query, repeats included");
    runc->add_option("--threads", run.threads, "worker threads (0 = hardware)");
    runc->add_option("--out", run.out, "trial CSV path (default stdout)");
    runc->add_option("--summary-out", run.summary_out, "summary CSV path");

    std::string verify_suite;
    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "run a property-verification suite");
    verify->add_option("suite", verify_suite,
                       "lemma1 | lemma2 | thm1-bound | thm2-nonadaptive | approx3 | all")
        ->required();
    verify->add_option("--seed", verify_opts.seed, "base seed");
    verify->add_option("--graphs", verify_opts.graphs, "override instance count");
    verify->add_option("--trials", verify_opts.trials, "override trial count");

    std::string opt_dataset;
    auto* opt = app.add_subcommand("opt", "brute-force optimum of a small instance (n <= 12)");
    opt->add_option("--dataset", opt_dataset, "edge-list file")->required();

    std::string eval_dataset, eval_labels;
    auto* evaluate = app.add_subcommand("evaluate", "score a label file against a graph");
    evaluate->add_option("--dataset", eval_dataset, "edge-list file")->required();
    evaluate->add_option("--labels", eval_labels, "label file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) return cmd_generate(gen);
        if (import->parsed()) return cmd_import(import_kind, import_in, import_edges, import_labels);
        if (runc->parsed()) return cmd_run(run);
        if (verify->parsed()) return cmd_verify(verify_suite, verify_opts);
        if (opt->parsed()) return cmd_opt(opt_dataset);
        if (evaluate->parsed()) return cmd_evaluate(eval_dataset, eval_labels);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
