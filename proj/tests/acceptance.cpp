// Acceptance suite: runs every release criterion end to end and prints
// one pass/fail line per criterion. Exits nonzero if any required
// criterion fails; dataset-dependent checks are skipped when the data is
// not present.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qecc/algorithms.hpp"
#include "qecc/experiment.hpp"
#include "qecc/generators.hpp"
#include "qecc/metrics.hpp"
#include "qecc/oracle.hpp"
#include "qecc/rng.hpp"
#include "qecc/verify.hpp"

using namespace qecc;

namespace {

struct Outcome {
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

std::uint64_t naive_cost(const SimilarityGraph& g, const Clustering& c) {
    std::uint64_t total = 0;
    for (VertexId u = 0; u < g.num_vertices(); ++u)
        for (VertexId v = u + 1; v < g.num_vertices(); ++v)
            if ((c.labels[u] == c.labels[v]) != g.has_positive_edge(u, v)) ++total;
    return total;
}

double worst_margin(const SuiteReport& report) {
    double worst = 1e300;
    for (const auto& check : report.checks) worst = std::min(worst, check.margin);
    return worst;
}

Outcome from_report(const SuiteReport& report) {
    std::ostringstream detail;
    detail << report.checks.size() << " checks, min margin " << worst_margin(report);
    for (const auto& check : report.checks)
        if (!check.pass) detail << "; FAILED " << check.name << " (" << check.detail << ")";
    return {report.all_pass(), false, detail.str()};
}

// ---- criterion 1: budget compliance across the full matrix ----

std::vector<SimilarityGraph> compliance_instances() {
    std::vector<SimilarityGraph> graphs;
    const std::pair<std::uint32_t, double> er[] = {
        {20, 0.1}, {25, 0.3}, {30, 0.5}, {35, 0.2}, {40, 0.4}};
    for (std::size_t i = 0; i < std::size(er); ++i)
        graphs.push_back(generate_random_graph(er[i].first, er[i].second, mix_seed({500, i})));

    graphs.push_back(generate_synthetic({30, 3, 0.3, 0.1, 501}).graph);
    graphs.push_back(generate_synthetic({40, 4, 0.2, 0.15, 502}).graph);
    graphs.push_back(generate_synthetic({50, 5, 0.3, 0.1, 503}).graph);
    graphs.push_back(generate_synthetic({24, 2, 0.5, 0.05, 504}).graph);
    graphs.push_back(generate_synthetic({36, 6, 0.25, 0.2, 505}).graph);

    graphs.push_back(generate_cluster_graph({5, 5, 5}).graph);
    graphs.push_back(generate_cluster_graph({10, 10}).graph);
    graphs.push_back(generate_cluster_graph(std::vector<std::uint32_t>(20, 1)).graph);
    graphs.push_back(generate_cluster_graph({7, 5, 3, 3, 3, 3, 3, 3}).graph);

    graphs.push_back(generate_lower_bound_instance({32, 1, 1.0 / 16.0, 506}).graph);
    graphs.push_back(generate_lower_bound_instance({64, 1, 1.0 / 32.0, 507}).graph);
    graphs.push_back(generate_lower_bound_instance({48, 2, 1.0 / 32.0, 508}).graph);

    graphs.push_back(SimilarityGraph::from_edges(25, {}));
    graphs.push_back(generate_cluster_graph({20}).graph);  // one clique
    std::vector<std::pair<VertexId, VertexId>> star_edges;
    for (VertexId leaf = 1; leaf < 20; ++leaf) star_edges.emplace_back(0, leaf);
    graphs.push_back(SimilarityGraph::from_edges(20, star_edges));
    return graphs;
}

Outcome criterion_budget_compliance() {
    const auto graphs = compliance_instances();
    std::uint64_t runs = 0, violations = 0;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const SimilarityGraph& g = graphs[gi];
        const std::uint32_t n = g.num_vertices();
        const std::uint64_t grid[] = {0, n - 1, 2ull * n, pair_count(n)};
        for (std::uint64_t q : grid) {
            for (Algo algo : kAllAlgos) {
                const std::uint64_t budget = algo == Algo::qwick ? std::max(q, pair_count(n)) : q;
                for (std::uint32_t trial = 0; trial < 100; ++trial) {
                    BudgetedOracle oracle(g, budget);
                    Rng rng(trial_seed(600 + gi, algo, q, trial));
                    RunResult run;
                    switch (algo) {
                        case Algo::qwick: run = qwick_cluster(oracle, n, rng); break;
                        case Algo::qecc: run = qecc::qecc(oracle, n, rng); break;
                        case Algo::qecc_nonadaptive: run = qecc_nonadaptive(oracle, n, rng); break;
                        case Algo::qecc_heur: run = qecc_heur(oracle, n, rng); break;
                    }
                    ++runs;
                    if (oracle.budget_used() > budget || oracle.distinct_pairs_queried() > budget ||
                        run.queries_used > budget)
                        ++violations;
                }
            }
        }
    }
    return {violations == 0, false,
            std::to_string(runs) + " runs across " + std::to_string(graphs.size()) +
                " instances, " + std::to_string(violations) + " violations"};
}

// ---- criterion 7: exactness on cluster graphs at full budget ----

Outcome criterion_cluster_exactness() {
    const auto instance = generate_cluster_graph({8, 5, 5, 2, 10});
    const std::uint32_t n = instance.graph.num_vertices();
    std::uint32_t failures = 0;
    for (std::uint32_t trial = 0; trial < 100; ++trial) {
        auto o1 = BudgetedOracle::unlimited(instance.graph);
        Rng r1(mix_seed({700, trial}));
        if (cost(instance.graph, qecc::qecc(o1, n, r1).clustering) != 0) ++failures;
        auto o2 = BudgetedOracle::unlimited(instance.graph);
        Rng r2(mix_seed({701, trial}));
        if (cost(instance.graph, qecc_nonadaptive(o2, n, r2).clustering) != 0) ++failures;
    }
    return {failures == 0, false,
            "100 qecc runs + 100 non-adaptive runs, " + std::to_string(failures) +
                " nonzero costs"};
}

// ---- criterion 8: heuristic pivot bias on the star K(1,9) ----

Outcome criterion_heur_pivot_bias() {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId leaf = 1; leaf < 10; ++leaf) edges.emplace_back(0, leaf);
    const SimilarityGraph star = SimilarityGraph::from_edges(10, edges);

    const std::uint32_t trials = 10000;
    std::uint32_t center_first = 0;
    for (std::uint32_t t = 0; t < trials; ++t) {
        BudgetedOracle oracle(star, 2 * pair_count(10));
        Rng rng(mix_seed({800, t}));
        const RunResult run = qecc_heur(oracle, 10, rng);
        if (!run.pivots.empty() && run.pivots.front() == 0) ++center_first;
    }
    const double freq = static_cast<double>(center_first) / trials;
    std::ostringstream detail;
    detail << "center-first frequency " << freq << " (target 0.5 +- 0.03)";
    return {std::abs(freq - 0.5) <= 0.03, false, detail.str()};
}

// ---- criterion 9: lower-bound natural clustering statistics ----

Outcome criterion_lower_bound_stats() {
    const std::uint32_t seeds = 1000;
    std::vector<double> costs;
    costs.reserve(seeds);
    for (std::uint32_t s = 0; s < seeds; ++s) {
        const auto instance = generate_lower_bound_instance({64, 1, 1.0 / 32.0, mix_seed({900, s})});
        costs.push_back(static_cast<double>(cost(instance.graph, instance.natural)));
    }
    double mean = 0;
    for (double c : costs) mean += c;
    mean /= seeds;
    double ss = 0;
    for (double c : costs) ss += (c - mean) * (c - mean);
    const double stderr_ = std::sqrt(ss / (seeds - 1)) / std::sqrt(static_cast<double>(seeds));

    const double expected = static_cast<double>(pair_count(16));  // C(alpha*n, 2) / k with k = 1
    const bool pass = std::abs(mean - expected) <= 3 * stderr_ + 1e-9;
    std::ostringstream detail;
    detail << "mean natural cost " << mean << " vs C(16,2)/1 = " << expected << " over " << seeds
           << " seeds";
    return {pass, false, detail.str()};
}

// ---- criterion 10: metric and brute-force oracle correctness ----

Outcome criterion_metrics_oracle() {
    Rng rng(1000);
    std::uint32_t mismatches = 0;
    for (std::uint32_t round = 0; round < 200; ++round) {
        const auto n = static_cast<std::uint32_t>(4 + rng.next_below(57));  // up to 60
        const SimilarityGraph g = generate_random_graph(n, rng.next_unit(), rng.next_u64());
        Clustering c;
        c.labels.resize(n);
        const auto groups = 1 + rng.next_below(n);
        for (auto& l : c.labels) l = static_cast<ClusterId>(rng.next_below(groups));
        if (cost(g, c) != naive_cost(g, c)) ++mismatches;
    }

    const SimilarityGraph k3_minus = SimilarityGraph::from_edges(3, {{0, 1}, {1, 2}});
    const SimilarityGraph five_cycle =
        SimilarityGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    const bool brute_ok =
        brute_force_opt(k3_minus).cost == 1 && brute_force_opt(five_cycle).cost == 3;

    return {mismatches == 0 && brute_ok, false,
            "200 sparse-vs-naive cost checks, " + std::to_string(mismatches) +
                " mismatches; OPT(K3 minus edge) = " +
                std::to_string(brute_force_opt(k3_minus).cost) + ", OPT(5-cycle) = " +
                std::to_string(brute_force_opt(five_cycle).cost)};
}

// ---- criterion 11 (optional): Table-1 style checks on Cora ----

Outcome criterion_cora() {
    const char* edges_path = std::getenv("QECC_CORA_EDGES");
    const char* labels_path = std::getenv("QECC_CORA_LABELS");
    if (!edges_path || !labels_path)
        return {true, true, "set QECC_CORA_EDGES and QECC_CORA_LABELS to enable"};
    std::ifstream probe(edges_path);
    if (!probe) return {true, true, std::string("cannot open ") + edges_path};

    const LoadedGraph loaded = load_edge_list_file(edges_path);
    const Clustering truth = load_label_file(labels_path, loaded.token_ids);
    const QualityReport gt = evaluate(loaded.graph, truth);

    const bool metrics_ok = std::abs(gt.precision - 0.829) <= 0.002 * 0.829 &&
                            std::abs(gt.recall - 0.803) <= 0.002 * 0.803 &&
                            std::abs(static_cast<double>(gt.cost) - 23516.0) <= 0.002 * 23516.0;

    // trend: qecc-heur should not cost more than qecc at equal budgets
    const std::uint32_t n = loaded.graph.num_vertices();
    bool trend_ok = true;
    std::ostringstream trend;
    for (std::uint64_t q : {2ull * n, 15000ull, 40000ull}) {
        double mean_qecc = 0, mean_heur = 0;
        for (std::uint32_t t = 0; t < 50; ++t) {
            BudgetedOracle o1(loaded.graph, q);
            Rng r1(trial_seed(1100, Algo::qecc, q, t));
            mean_qecc += static_cast<double>(cost(loaded.graph, qecc::qecc(o1, n, r1).clustering));
            BudgetedOracle o2(loaded.graph, q);
            Rng r2(trial_seed(1100, Algo::qecc_heur, q, t));
            mean_heur += static_cast<double>(cost(loaded.graph, qecc_heur(o2, n, r2).clustering));
        }
        mean_qecc /= 50;
        mean_heur /= 50;
        trend << " Q=" << q << ": heur " << mean_heur << " vs qecc " << mean_qecc << ";";
        if (mean_heur > mean_qecc) trend_ok = false;
    }

    std::ostringstream detail;
    detail << "GT cost " << gt.cost << ", precision " << gt.precision << ", recall " << gt.recall
           << ";" << trend.str();
    return {metrics_ok && trend_ok, false, detail.str()};
}

}  // namespace

int main() {
    struct Row {
        int id;
        const char* name;
        Outcome outcome;
    };
    std::vector<Row> rows;
    rows.push_back({1, "budget compliance across the full matrix", criterion_budget_compliance()});
    rows.push_back({2, "3-approximation at full budget vs brute-force OPT",
                    from_report(verify_approx3())});
    rows.push_back({3, "budgeted cost bound 3*OPT + n^3/(2Q)", from_report(verify_thm1_bound())});
    rows.push_back({4, "pivot-averaged edge removal (deterministic)", from_report(verify_lemma1())});
    rows.push_back({5, "uncovered edges after r pivots (Monte Carlo)", from_report(verify_lemma2())});
    rows.push_back({6, "non-adaptive transcripts and query counts",
                    from_report(verify_thm2_nonadaptive())});
    rows.push_back({7, "exactness on cluster graphs at full budget", criterion_cluster_exactness()});
    rows.push_back({8, "qecc-heur pivot bias d_u/(2E) on the star", criterion_heur_pivot_bias()});
    rows.push_back({9, "lower-bound natural clustering cost", criterion_lower_bound_stats()});
    rows.push_back({10, "cost formula and brute-force oracle", criterion_metrics_oracle()});
    rows.push_back({11, "Cora ground-truth metrics and heur trend (optional)", criterion_cora()});

    int failed = 0;
    for (const auto& row : rows) {
        const char* tag = row.outcome.skipped ? "[SKIP]" : row.outcome.pass ? "[PASS]" : "[FAIL]";
        if (!row.outcome.skipped && !row.outcome.pass) ++failed;
        std::cout << tag << " criterion " << row.id << ": " << row.name << " - "
                  << row.outcome.detail << "\n";
    }
    std::cout << (failed == 0 ? "acceptance: all required criteria passed"
                              : "acceptance: FAILURES PRESENT")
              << "\n";
    return failed == 0 ? 0 : 1;
}
