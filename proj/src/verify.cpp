#include "qecc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "qecc/algorithms.hpp"
#include "qecc/errors.hpp"
#include "qecc/generators.hpp"
#include "qecc/metrics.hpp"
#include "qecc/oracle.hpp"
#include "qecc/rng.hpp"

namespace qecc {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

struct MeanStderr {
    double mean = 0;
    double stderr_ = 0;
};

MeanStderr mean_stderr(const std::vector<double>& samples) {
    MeanStderr out;
    const double count = static_cast<double>(samples.size());
    out.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / count;
    if (samples.size() > 1) {
        double ss = 0;
        for (double s : samples) ss += (s - out.mean) * (s - out.mean);
        out.stderr_ = std::sqrt(ss / (count - 1)) / std::sqrt(count);
    }
    return out;
}

// Edges of g with at least one endpoint in the positive neighborhood of
// the pivot; this is exactly what one pivot round removes.
std::uint64_t edges_removed_by_pivot(const SimilarityGraph& g, VertexId pivot) {
    std::vector<char> in_neighborhood(g.num_vertices(), 0);
    for (VertexId w : g.positive_neighbors(pivot)) in_neighborhood[w] = 1;
    std::uint64_t removed = 0;
    for (VertexId u = 0; u < g.num_vertices(); ++u)
        for (VertexId v : g.positive_neighbors(u))
            if (u < v && (in_neighborhood[u] || in_neighborhood[v])) ++removed;
    return removed;
}

// Plays r uniform pivot rounds directly on the graph and counts positive
// edges with both endpoints still unclustered.
std::uint64_t uncovered_edges_after_pivots(const SimilarityGraph& g, std::uint32_t rounds,
                                           Rng& rng) {
    const std::uint32_t n = g.num_vertices();
    std::vector<VertexId> remaining(n);
    std::iota(remaining.begin(), remaining.end(), VertexId{0});
    std::vector<char> in_r(n, 1);
    for (std::uint32_t round = 0; round < rounds && !remaining.empty(); ++round) {
        const VertexId pivot = remaining[rng.next_below(remaining.size())];
        in_r[pivot] = 0;
        for (VertexId w : g.positive_neighbors(pivot)) in_r[w] = 0;
        std::vector<VertexId> keep;
        keep.reserve(remaining.size());
        for (VertexId v : remaining)
            if (in_r[v]) keep.push_back(v);
        remaining.swap(keep);
    }
    std::uint64_t uncovered = 0;
    for (VertexId u = 0; u < n; ++u)
        if (in_r[u])
            for (VertexId v : g.positive_neighbors(u))
                if (u < v && in_r[v]) ++uncovered;
    return uncovered;
}

}  // namespace

SuiteReport verify_lemma1(const VerifyOptions& opts) {
    const std::uint32_t num_graphs = opts.graphs ? opts.graphs : 100;
    const std::uint32_t n = 40;
    const double edge_probs[] = {0.05, 0.2, 0.5};

    SuiteReport report{"lemma1", {}};
    for (std::size_t pi = 0; pi < std::size(edge_probs); ++pi) {
        const double p = edge_probs[pi];
        std::int64_t min_slack = 0;
        bool first = true;
        bool pass = true;
        std::uint32_t graphs_checked = 0;
        for (std::uint32_t i = static_cast<std::uint32_t>(pi); i < num_graphs;
             i += static_cast<std::uint32_t>(std::size(edge_probs))) {
            const SimilarityGraph g =
                generate_random_graph(n, p, mix_seed({opts.seed, fnv1a64("lemma1"), i}));
            std::uint64_t total_removed = 0;
            for (VertexId pivot = 0; pivot < n; ++pivot)
                total_removed += edges_removed_by_pivot(g, pivot);
            // (1/n) * sum_v removed_v >= C(dbar+1, 2) with dbar = 2m/n,
            // cleared of denominators: n * sum_v removed_v >= m * (2m + n).
            const std::uint64_t m = g.num_positive_edges();
            const auto slack = static_cast<std::int64_t>(n * total_removed) -
                               static_cast<std::int64_t>(m * (2 * m + n));
            if (first || slack < min_slack) min_slack = slack;
            first = false;
            if (slack < 0) pass = false;
            ++graphs_checked;
        }
        report.checks.push_back({"pivot-average edge removal, n=40 p=" + fmt(p) + " (" +
                                     std::to_string(graphs_checked) + " graphs)",
                                 pass, static_cast<double>(min_slack),
                                 "min integer slack " + std::to_string(min_slack) + " (>= 0)"});
    }
    return report;
}

SuiteReport verify_lemma2(const VerifyOptions& opts) {
    const std::uint32_t trials = opts.trials ? opts.trials : 1000;
    const std::uint32_t n = 100;
    const double p = 0.1;
    const std::uint32_t rounds_grid[] = {1, 5, 10, 20};

    SuiteReport report{"lemma2", {}};
    for (std::uint32_t r : rounds_grid) {
        std::vector<double> samples;
        samples.reserve(trials);
        for (std::uint32_t t = 0; t < trials; ++t) {
            // fresh instance per trial; the inequality is per-graph, so
            // it also bounds the mean over instances
            const SimilarityGraph g =
                generate_random_graph(n, p, mix_seed({opts.seed, fnv1a64("lemma2-graph"), r, t}));
            Rng rng(mix_seed({opts.seed, fnv1a64("lemma2-trial"), r, t}));
            samples.push_back(static_cast<double>(uncovered_edges_after_pivots(g, r, rng)));
        }
        const MeanStderr ms = mean_stderr(samples);
        const double bound = static_cast<double>(n) * n / (2.0 * (r + 1)) + 3.0 * ms.stderr_;
        const bool pass = ms.mean < bound;
        report.checks.push_back({"uncovered edges after r=" + std::to_string(r) + " pivots", pass,
                                 bound - ms.mean,
                                 "mean " + fmt(ms.mean) + " < bound " + fmt(bound)});
    }
    return report;
}

SuiteReport verify_thm1_bound(const VerifyOptions& opts) {
    const std::uint32_t trials = opts.trials ? opts.trials : 500;
    const SyntheticSpec spec{50, 5, 0.3, 0.1, mix_seed({opts.seed, fnv1a64("thm1-instance")})};
    const SyntheticInstance instance = generate_synthetic(spec);
    const std::uint32_t n = spec.n;
    const auto gt_cost = static_cast<double>(cost(instance.graph, instance.ground_truth));
    const std::uint64_t budgets[] = {100, 250, 500, 1225};

    SuiteReport report{"thm1-bound", {}};
    for (std::uint64_t q : budgets) {
        std::vector<double> samples;
        samples.reserve(trials);
        for (std::uint32_t t = 0; t < trials; ++t) {
            BudgetedOracle oracle(instance.graph, q);
            Rng rng(mix_seed({opts.seed, fnv1a64("thm1-trial"), q, t}));
            const RunResult run = qecc(oracle, n, rng);
            samples.push_back(static_cast<double>(cost(instance.graph, run.clustering)));
        }
        const MeanStderr ms = mean_stderr(samples);
        const double additive = static_cast<double>(n) * n * n / (2.0 * static_cast<double>(q));
        const double bound = 3.0 * gt_cost + additive + 3.0 * ms.stderr_;
        const bool pass = ms.mean <= bound;
        report.checks.push_back({"qecc cost at Q=" + std::to_string(q), pass, bound - ms.mean,
                                 "mean " + fmt(ms.mean) + " <= 3*" + fmt(gt_cost) + " + " +
                                     fmt(additive) + " + 3se = " + fmt(bound)});
    }
    return report;
}

SuiteReport verify_thm2_nonadaptive(const VerifyOptions& opts) {
    const std::uint32_t n = 30;
    const SimilarityGraph empty = SimilarityGraph::from_edges(n, {});
    const SimilarityGraph dense =
        generate_random_graph(n, 0.4, mix_seed({opts.seed, fnv1a64("thm2-graph")}));
    const std::uint64_t budgets[] = {0, 9, 29, 100, 250, pair_count(n)};

    SuiteReport report{"thm2-nonadaptive", {}};
    for (std::uint64_t q : budgets) {
        const std::uint64_t seed = mix_seed({opts.seed, fnv1a64("thm2-trial"), q});
        BudgetedOracle oracle_a(empty, q);
        BudgetedOracle oracle_b(dense, q);
        Rng rng_a(seed);
        Rng rng_b(seed);
        qecc_nonadaptive(oracle_a, n, rng_a);
        qecc_nonadaptive(oracle_b, n, rng_b);

        const bool same_transcript = oracle_a.query_pairs_list() == oracle_b.query_pairs_list();
        std::uint64_t k = 0;
        while (k < n && (2ull * n - 2 - k) * (k + 1) <= 2 * q) ++k;
        const std::uint64_t expected = (2 * n - 1 - k) * k / 2;
        const bool count_ok = oracle_a.budget_used() == expected &&
                              oracle_b.budget_used() == expected;
        report.checks.push_back(
            {"transcripts at Q=" + std::to_string(q), same_transcript && count_ok,
             same_transcript && count_ok ? 0.0 : -1.0,
             std::string(same_transcript ? "identical pair sequences" : "sequences differ") +
                 ", " + std::to_string(oracle_a.budget_used()) + " queries (expected " +
                 std::to_string(expected) + ")"});
    }
    return report;
}

SuiteReport verify_approx3(const VerifyOptions& opts) {
    const std::uint32_t num_instances = opts.graphs ? opts.graphs : 20;
    const std::uint32_t trials = opts.trials ? opts.trials : 2000;
    const std::uint32_t n = 8;
    const double edge_probs[] = {0.2, 0.35, 0.5, 0.65, 0.8};

    SuiteReport report{"approx3", {}};
    for (std::uint32_t i = 0; i < num_instances; ++i) {
        const double p = edge_probs[i % std::size(edge_probs)];
        const SimilarityGraph g =
            generate_random_graph(n, p, mix_seed({opts.seed, fnv1a64("approx3-instance"), i}));
        const auto opt = static_cast<double>(brute_force_opt(g).cost);

        std::vector<double> samples;
        samples.reserve(trials);
        for (std::uint32_t t = 0; t < trials; ++t) {
            BudgetedOracle oracle = BudgetedOracle::unlimited(g);
            Rng rng(mix_seed({opts.seed, fnv1a64("approx3-trial"), i, t}));
            const RunResult run = qecc(oracle, n, rng);
            samples.push_back(static_cast<double>(cost(g, run.clustering)));
        }
        const MeanStderr ms = mean_stderr(samples);
        const double bound = 3.0 * opt + 3.0 * ms.stderr_;
        const bool pass = ms.mean <= bound;
        report.checks.push_back({"instance " + std::to_string(i) + " (p=" + fmt(p) + ")", pass,
                                 bound - ms.mean,
                                 "mean " + fmt(ms.mean) + " <= 3*OPT(" + fmt(opt) + ") + 3se = " +
                                     fmt(bound)});
    }
    return report;
}

SuiteReport run_verify_suite(const std::string& name, const VerifyOptions& opts) {
    if (name == "lemma1") return verify_lemma1(opts);
    if (name == "lemma2") return verify_lemma2(opts);
    if (name == "thm1-bound") return verify_thm1_bound(opts);
    if (name == "thm2-nonadaptive") return verify_thm2_nonadaptive(opts);
    if (name == "approx3") return verify_approx3(opts);
    throw ParameterError("unknown verify suite '" + name +
                         "' (expected lemma1, lemma2, thm1-bound, thm2-nonadaptive or approx3)");
}

void print_report(std::ostream& out, const SuiteReport& report) {
    for (const auto& check : report.checks)
        out << (check.pass ? "[PASS] " : "[FAIL] ") << report.suite << ": " << check.name << " ("
            << check.detail << ")\n";
    out << report.suite << ": " << (report.all_pass() ? "all checks passed" : "CHECKS FAILED")
        << "\n";
}

}  // namespace qecc
