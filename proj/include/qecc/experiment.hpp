#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qecc/generators.hpp"
#include "qecc/graph.hpp"
#include "qecc/rng.hpp"

namespace qecc {

enum class Algo { qwick, qecc, qecc_nonadaptive, qecc_heur };

inline constexpr Algo kAllAlgos[] = {Algo::qwick, Algo::qecc, Algo::qecc_nonadaptive,
                                     Algo::qecc_heur};

const char* algo_name(Algo a);
Algo algo_from_name(const std::string& name);  // throws ParameterError on unknown names

// Published per-trial seed derivation: a SplitMix64 fold of the base
// seed, the FNV-1a hash of the algorithm name, the budget and the trial
// index. Reproducible and independent across the sweep grid.
inline std::uint64_t trial_seed(std::uint64_t base_seed, Algo a, std::uint64_t q,
                                std::uint32_t trial) {
    return mix_seed({base_seed, fnv1a64(algo_name(a)), q, trial});
}

struct FileSource {
    std::string edge_path;
};
using ClusterSizes = std::vector<std::uint32_t>;
using DatasetSource = std::variant<FileSource, SyntheticSpec, LowerBoundSpec, ClusterSizes>;

struct Dataset {
    std::string id;
    SimilarityGraph graph;
    std::optional<Clustering> ground_truth;
};

Dataset load_dataset(const DatasetSource& source);

struct ExperimentConfig {
    DatasetSource source;
    std::vector<Algo> algorithms;
    std::vector<std::uint64_t> budgets;  // ignored when auto_budgets is set
    bool auto_budgets = false;
    std::uint32_t trials = 50;
    std::uint64_t base_seed = 1;
    bool charge_duplicates = false;
    std::uint32_t threads = 1;  // 0 = hardware concurrency
};

struct TrialRecord {
    std::string dataset;
    Algo algorithm = Algo::qecc;
    std::uint64_t q = 0;  // the oracle budget of this run
    std::uint32_t trial = 0;
    std::uint64_t seed = 0;
    std::uint64_t cost = 0;
    double precision = 1.0;
    double recall = 1.0;
    std::uint32_t num_clusters = 0;
    std::uint32_t num_nonsingleton_clusters = 0;
    std::uint64_t queries_used = 0;
    bool stopped_early = false;
};

// Evenly spaced budget grid from min(2n, A) to A, where A is the mean
// number of distinct queries qwick_cluster makes over seeded runs.
std::vector<std::uint64_t> resolve_auto_budgets(const SimilarityGraph& g, std::uint32_t trials,
                                                std::uint64_t base_seed,
                                                std::uint32_t grid_points = 8);

// Runs the full (algorithm x budget x trial) sweep. Each trial owns a
// fresh oracle and generator; trials may execute concurrently but the
// record order is always (algorithm in config order, Q ascending, trial).
std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg);

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records);

struct SummaryRow {
    Algo algorithm = Algo::qecc;
    std::uint64_t q = 0;
    std::uint32_t trials = 0;
    double mean_cost = 0, std_cost = 0;
    double mean_precision = 0, std_precision = 0;
    double mean_recall = 0, std_recall = 0;
    double mean_queries_used = 0;
};

// Per-(algorithm, Q) empirical averages and sample standard deviations.
std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

}  // namespace qecc
