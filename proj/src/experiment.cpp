#include "qecc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <thread>

#include "qecc/algorithms.hpp"
#include "qecc/errors.hpp"
#include "qecc/metrics.hpp"
#include "qecc/oracle.hpp"

namespace qecc {

const char* algo_name(Algo a) {
    switch (a) {
        case Algo::qwick: return "qwick";
        case Algo::qecc: return "qecc";
        case Algo::qecc_nonadaptive: return "qecc-nonadaptive";
        case Algo::qecc_heur: return "qecc-heur";
    }
    return "?";
}

Algo algo_from_name(const std::string& name) {
    for (Algo a : kAllAlgos)
        if (name == algo_name(a)) return a;
    throw ParameterError("unknown algorithm '" + name +
                         "' (expected qwick, qecc, qecc-nonadaptive or qecc-heur)");
}

namespace {

std::string format_double(double value, const char* fmt = "%.6f") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, value);
    return buf;
}

std::string synthetic_id(const SyntheticSpec& s) {
    return "S-n" + std::to_string(s.n) + "-k" + std::to_string(s.k) + "-a" +
           format_double(s.alpha, "%.3f") + "-b" + format_double(s.beta, "%.3f") + "-s" +
           std::to_string(s.seed);
}

std::string lower_bound_id(const LowerBoundSpec& s) {
    return "LB-n" + std::to_string(s.n) + "-c" + std::to_string(s.c) + "-e" +
           format_double(s.epsilon, "%.6f") + "-s" + std::to_string(s.seed);
}

std::string cluster_sizes_id(const ClusterSizes& sizes) {
    std::string id = "CG";
    for (std::uint32_t s : sizes) id += "-" + std::to_string(s);
    return id;
}

}  // namespace

Dataset load_dataset(const DatasetSource& source) {
    Dataset d;
    if (const auto* file = std::get_if<FileSource>(&source)) {
        d.id = std::filesystem::path(file->edge_path).stem().string();
        d.graph = load_edge_list_file(file->edge_path).graph;
    } else if (const auto* synth = std::get_if<SyntheticSpec>(&source)) {
        d.id = synthetic_id(*synth);
        auto instance = generate_synthetic(*synth);
        d.graph = std::move(instance.graph);
        d.ground_truth = std::move(instance.ground_truth);
    } else if (const auto* lb = std::get_if<LowerBoundSpec>(&source)) {
        d.id = lower_bound_id(*lb);
        auto instance = generate_lower_bound_instance(*lb);
        d.graph = std::move(instance.graph);
        d.ground_truth = std::move(instance.natural);
    } else {
        const auto& sizes = std::get<ClusterSizes>(source);
        d.id = cluster_sizes_id(sizes);
        auto instance = generate_cluster_graph(sizes);
        d.graph = std::move(instance.graph);
        d.ground_truth = std::move(instance.clustering);
    }
    return d;
}

std::vector<std::uint64_t> resolve_auto_budgets(const SimilarityGraph& g, std::uint32_t trials,
                                                std::uint64_t base_seed,
                                                std::uint32_t grid_points) {
    if (trials == 0) throw ParameterError("auto budgets: trials must be at least 1");
    if (grid_points == 0) throw ParameterError("auto budgets: need at least one grid point");
    const std::uint32_t n = g.num_vertices();

    long double total = 0;
    for (std::uint32_t t = 0; t < trials; ++t) {
        auto oracle = BudgetedOracle::unlimited(g);
        Rng rng(mix_seed({base_seed, fnv1a64("auto-budget"), t}));
        total += static_cast<long double>(qwick_cluster(oracle, n, rng).queries_used);
    }
    const auto a = static_cast<std::uint64_t>(std::llroundl(total / trials));
    const std::uint64_t lo = std::min<std::uint64_t>(2ull * n, a);

    std::vector<std::uint64_t> grid;
    for (std::uint32_t i = 0; i < grid_points; ++i) {
        const long double frac =
            grid_points == 1 ? 1.0L : static_cast<long double>(i) / (grid_points - 1);
        grid.push_back(static_cast<std::uint64_t>(std::llroundl(lo + frac * (a - lo))));
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

namespace {

TrialRecord run_one_trial(const Dataset& dataset, Algo algorithm, std::uint64_t grid_q,
                          std::uint32_t trial, std::uint64_t base_seed, bool charge_duplicates) {
    const std::uint32_t n = dataset.graph.num_vertices();
    // qwick has no budget notion; it gets the full C(n,2) allowance and
    // the record reports that as its Q.
    const std::uint64_t oracle_budget =
        algorithm == Algo::qwick ? std::max(grid_q, pair_count(n)) : grid_q;

    TrialRecord record;
    record.dataset = dataset.id;
    record.algorithm = algorithm;
    record.q = oracle_budget;
    record.trial = trial;
    record.seed = trial_seed(base_seed, algorithm, grid_q, trial);

    BudgetedOracle oracle(dataset.graph, oracle_budget, charge_duplicates);
    Rng rng(record.seed);
    RunResult run;
    switch (algorithm) {
        case Algo::qwick: run = qwick_cluster(oracle, n, rng); break;
        case Algo::qecc: run = qecc(oracle, n, rng); break;
        case Algo::qecc_nonadaptive: run = qecc_nonadaptive(oracle, n, rng); break;
        case Algo::qecc_heur: run = qecc_heur(oracle, n, rng); break;
    }

    const QualityReport quality = evaluate(dataset.graph, run.clustering);
    record.cost = quality.cost;
    record.precision = quality.precision;
    record.recall = quality.recall;
    record.num_clusters = quality.num_clusters;
    record.num_nonsingleton_clusters = quality.num_nonsingleton_clusters;
    record.queries_used = run.queries_used;
    record.stopped_early = run.stopped_early;
    return record;
}

}  // namespace

std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg) {
    if (cfg.trials == 0) throw ParameterError("experiment: trials must be at least 1");
    if (cfg.algorithms.empty()) throw ParameterError("experiment: no algorithms selected");

    const Dataset dataset = load_dataset(cfg.source);
    std::vector<std::uint64_t> budgets =
        cfg.auto_budgets ? resolve_auto_budgets(dataset.graph, cfg.trials, cfg.base_seed)
                         : cfg.budgets;
    if (!cfg.auto_budgets) {
        std::sort(budgets.begin(), budgets.end());
        budgets.erase(std::unique(budgets.begin(), budgets.end()), budgets.end());
    }
    if (budgets.empty()) throw ParameterError("experiment: no budgets after resolution");

    struct Task {
        Algo algorithm;
        std::uint64_t q;
        std::uint32_t trial;
    };
    std::vector<Task> tasks;
    tasks.reserve(cfg.algorithms.size() * budgets.size() * cfg.trials);
    for (Algo a : cfg.algorithms)
        for (std::uint64_t q : budgets)
            for (std::uint32_t t = 0; t < cfg.trials; ++t) tasks.push_back({a, q, t});

    std::vector<TrialRecord> records(tasks.size());
    std::uint32_t threads = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
    threads = std::max(1u, std::min<std::uint32_t>(threads, tasks.size()));

    auto worker_loop = [&](std::atomic<std::size_t>& next) {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            const Task& task = tasks[i];
            records[i] = run_one_trial(dataset, task.algorithm, task.q, task.trial, cfg.base_seed,
                                       cfg.charge_duplicates);
        }
    };

    if (threads == 1) {
        std::atomic<std::size_t> next{0};
        worker_loop(next);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::uint32_t i = 0; i < threads; ++i) pool.emplace_back([&] { worker_loop(next); });
        for (auto& t : pool) t.join();
    }
    return records;
}

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
    out << "# schema=qecc-trials-1\n";
    out << "dataset,algorithm,Q,trial,seed,cost,precision,recall,num_clusters,"
           "num_nonsingleton_clusters,queries_used,stopped_early\n";
    for (const auto& r : records) {
        out << r.dataset << ',' << algo_name(r.algorithm) << ',' << r.q << ',' << r.trial << ','
            << r.seed << ',' << r.cost << ',' << format_double(r.precision) << ','
            << format_double(r.recall) << ',' << r.num_clusters << ','
            << r.num_nonsingleton_clusters << ',' << r.queries_used << ','
            << (r.stopped_early ? 1 : 0) << '\n';
    }
}

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records) {
    std::vector<SummaryRow> rows;
    std::size_t i = 0;
    while (i < records.size()) {
        std::size_t j = i;
        while (j < records.size() && records[j].algorithm == records[i].algorithm &&
               records[j].q == records[i].q)
            ++j;
        const auto count = static_cast<double>(j - i);

        SummaryRow row;
        row.algorithm = records[i].algorithm;
        row.q = records[i].q;
        row.trials = static_cast<std::uint32_t>(j - i);
        double sum_cost = 0, sum_precision = 0, sum_recall = 0, sum_queries = 0;
        for (std::size_t r = i; r < j; ++r) {
            sum_cost += static_cast<double>(records[r].cost);
            sum_precision += records[r].precision;
            sum_recall += records[r].recall;
            sum_queries += static_cast<double>(records[r].queries_used);
        }
        row.mean_cost = sum_cost / count;
        row.mean_precision = sum_precision / count;
        row.mean_recall = sum_recall / count;
        row.mean_queries_used = sum_queries / count;
        if (row.trials > 1) {
            double ss_cost = 0, ss_precision = 0, ss_recall = 0;
            for (std::size_t r = i; r < j; ++r) {
                const double dc = static_cast<double>(records[r].cost) - row.mean_cost;
                const double dp = records[r].precision - row.mean_precision;
                const double dr = records[r].recall - row.mean_recall;
                ss_cost += dc * dc;
                ss_precision += dp * dp;
                ss_recall += dr * dr;
            }
            row.std_cost = std::sqrt(ss_cost / (count - 1));
            row.std_precision = std::sqrt(ss_precision / (count - 1));
            row.std_recall = std::sqrt(ss_recall / (count - 1));
        }
        rows.push_back(row);
        i = j;
    }
    return rows;
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
    out << "# schema=qecc-summary-1\n";
    out << "algorithm,Q,trials,mean_cost,std_cost,mean_precision,std_precision,mean_recall,"
           "std_recall,mean_queries_used\n";
    for (const auto& r : rows) {
        out << algo_name(r.algorithm) << ',' << r.q << ',' << r.trials << ','
            << format_double(r.mean_cost) << ',' << format_double(r.std_cost) << ','
            << format_double(r.mean_precision) << ',' << format_double(r.std_precision) << ','
            << format_double(r.mean_recall) << ',' << format_double(r.std_recall) << ','
            << format_double(r.mean_queries_used) << '\n';
    }
}

}  // namespace qecc
