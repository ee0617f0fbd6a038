#include "qecc/algorithms.hpp"

#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include "qecc/errors.hpp"

namespace qecc {

namespace {

constexpr ClusterId kUnassigned = std::numeric_limits<ClusterId>::max();

std::vector<VertexId> all_vertices(std::uint32_t n) {
    std::vector<VertexId> vertices(n);
    std::iota(vertices.begin(), vertices.end(), VertexId{0});
    return vertices;
}

// Assigns fresh labels to everything still unclustered, in ascending
// vertex order (the remaining set stays sorted throughout).
void finish_singletons(const std::vector<VertexId>& remaining, std::vector<ClusterId>& labels,
                       ClusterId& next_label) {
    for (VertexId v : remaining) labels[v] = next_label++;
}

RunResult budgeted_pivot_loop(BudgetedOracle& oracle, std::uint32_t n, Rng& rng) {
    const std::uint64_t used_before = oracle.budget_used();
    std::vector<VertexId> remaining = all_vertices(n);
    std::vector<ClusterId> labels(n, kUnassigned);
    std::vector<VertexId> pivots;
    ClusterId next_label = 0;

    // The loop gate uses the worst-case scan charge |R|-1; QECC never
    // revisits a pair, so the actual charge per round equals it.
    while (!remaining.empty() && oracle.remaining_budget() >= remaining.size() - 1) {
        const VertexId pivot = remaining[rng.next_below(remaining.size())];
        labels[pivot] = next_label;
        std::vector<VertexId> keep;
        keep.reserve(remaining.size());
        for (VertexId w : remaining) {
            if (w == pivot) continue;
            if (oracle.query(pivot, w) > 0)
                labels[w] = next_label;
            else
                keep.push_back(w);
        }
        pivots.push_back(pivot);
        ++next_label;
        remaining.swap(keep);
    }

    RunResult result;
    result.stopped_early = !remaining.empty();
    finish_singletons(remaining, labels, next_label);
    result.clustering.labels = std::move(labels);
    result.pivots = std::move(pivots);
    result.queries_used = oracle.budget_used() - used_before;
    return result;
}

std::uint64_t pair_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

RunResult qwick_cluster(BudgetedOracle& oracle, std::uint32_t n, Rng& rng) {
    if (oracle.remaining_budget() < pair_count(n))
        throw ParameterError("qwick_cluster needs budget for all C(n,2) = " +
                             std::to_string(pair_count(n)) + " pairs, have " +
                             std::to_string(oracle.remaining_budget()));
    return budgeted_pivot_loop(oracle, n, rng);
}

RunResult qecc(BudgetedOracle& oracle, std::uint32_t n, Rng& rng) {
    return budgeted_pivot_loop(oracle, n, rng);
}

RunResult qecc_nonadaptive(BudgetedOracle& oracle, std::uint32_t n, Rng& rng) {
    const std::uint64_t used_before = oracle.budget_used();
    const std::uint64_t q = oracle.remaining_budget();

    // Largest sample size whose full neighborhood scan fits the budget:
    // scanning t sampled vertices costs (n-1) + (n-2) + ... + (n-t).
    std::uint32_t k = 0;
    while (k < n && (2ull * n - 2 - k) * (k + 1) <= 2 * q) ++k;

    // Uniform sample without replacement, order retained (partial
    // Fisher-Yates).
    std::vector<VertexId> perm = all_vertices(n);
    for (std::uint32_t i = 0; i < k; ++i) {
        const auto j = i + rng.next_below(n - i);
        std::swap(perm[i], perm[j]);
    }
    const std::vector<VertexId> sample(perm.begin(), perm.begin() + k);

    // Querying phase: all pairs touching the sample, each once, in a
    // fixed canonical order. Answers are recorded before any clustering
    // decision is made.
    std::vector<std::int32_t> sample_index(n, -1);
    for (std::uint32_t i = 0; i < k; ++i) sample_index[sample[i]] = static_cast<std::int32_t>(i);
    std::vector<std::vector<VertexId>> learned(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        const VertexId s = sample[i];
        for (VertexId w = 0; w < n; ++w) {
            if (w == s) continue;
            const std::int32_t wi = sample_index[w];
            if (wi >= 0 && static_cast<std::uint32_t>(wi) < i) continue;  // already covered
            if (oracle.query(s, w) > 0) {
                learned[i].push_back(w);
                if (wi >= 0) learned[wi].push_back(s);
            }
        }
    }

    // Clustering phase: walk the sample in order, pivoting on members
    // still unclustered; uses only the recorded answers.
    std::vector<VertexId> remaining = all_vertices(n);
    std::vector<char> in_r(n, 1);
    std::vector<ClusterId> labels(n, kUnassigned);
    std::vector<VertexId> pivots;
    ClusterId next_label = 0;
    std::vector<char> positive_to_pivot(n, 0);
    for (std::uint32_t i = 0; i < k && !remaining.empty(); ++i) {
        const VertexId s = sample[i];
        if (!in_r[s]) continue;
        for (VertexId w : learned[i]) positive_to_pivot[w] = 1;
        labels[s] = next_label;
        in_r[s] = 0;
        std::vector<VertexId> keep;
        keep.reserve(remaining.size());
        for (VertexId w : remaining) {
            if (w == s) continue;
            if (positive_to_pivot[w]) {
                labels[w] = next_label;
                in_r[w] = 0;
            } else {
                keep.push_back(w);
            }
        }
        for (VertexId w : learned[i]) positive_to_pivot[w] = 0;
        pivots.push_back(s);
        ++next_label;
        remaining.swap(keep);
    }

    RunResult result;
    result.stopped_early = !remaining.empty();
    finish_singletons(remaining, labels, next_label);
    result.clustering.labels = std::move(labels);
    result.pivots = std::move(pivots);
    result.queries_used = oracle.budget_used() - used_before;
    return result;
}

RunResult qecc_heur(BudgetedOracle& oracle, std::uint32_t n, Rng& rng) {
    const std::uint64_t used_before = oracle.budget_used();
    std::vector<VertexId> remaining = all_vertices(n);
    std::vector<char> in_r(n, 1);
    std::vector<ClusterId> labels(n, kUnassigned);
    std::vector<VertexId> pivots;
    ClusterId next_label = 0;

    // The algorithm's own memory of negative answers between vertices
    // still in R. When every pair inside R is a known negative, no probe
    // can make progress and the loop stops (only reachable under
    // memoized charging, where cached probes are free).
    std::unordered_set<std::uint64_t> known_negative;
    std::vector<std::vector<VertexId>> negative_partners(n);
    std::uint64_t known_negative_in_r = 0;

    bool out_of_budget = false;
    while (remaining.size() > 1) {
        if (oracle.remaining_budget() < remaining.size() - 1) {
            out_of_budget = true;
            break;
        }
        if (!oracle.charges_duplicates() &&
            known_negative_in_r == pair_count(remaining.size()))
            break;  // R is proven edgeless

        const VertexId u = remaining[rng.next_below(remaining.size())];
        const VertexId v = remaining[rng.next_below(remaining.size())];
        if (u == v) continue;  // no query issued, nothing charged

        if (oracle.query(u, v) < 0) {
            if (known_negative.insert(pair_key(u, v)).second) {
                ++known_negative_in_r;
                negative_partners[u].push_back(v);
                negative_partners[v].push_back(u);
            }
            continue;
        }

        // Positive probe: pivot on v; u already belongs to the cluster.
        std::vector<VertexId> cluster{v, u};
        labels[v] = next_label;
        labels[u] = next_label;
        std::vector<VertexId> keep;
        keep.reserve(remaining.size());
        for (VertexId w : remaining) {
            if (w == u || w == v) continue;
            if (oracle.query(v, w) > 0) {
                labels[w] = next_label;
                cluster.push_back(w);
            } else {
                keep.push_back(w);
            }
        }
        pivots.push_back(v);
        ++next_label;

        // Retire known-negative pairs that lose an endpoint; processing
        // members one at a time counts each pair exactly once.
        for (VertexId x : cluster) {
            in_r[x] = 0;
            for (VertexId y : negative_partners[x])
                if (in_r[y]) --known_negative_in_r;
        }
        remaining.swap(keep);
    }

    RunResult result;
    result.stopped_early = out_of_budget;
    finish_singletons(remaining, labels, next_label);
    result.clustering.labels = std::move(labels);
    result.pivots = std::move(pivots);
    result.queries_used = oracle.budget_used() - used_before;
    return result;
}

}  // namespace qecc
