#pragma once

#include <cstdint>
#include <iosfwd>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qecc/graph.hpp"

namespace qecc {

struct QueryRecord {
    VertexId u, v;  // normalized, u < v
    int sign;
    bool charged;
};

// The budgeted edge-query gate. Algorithms observe the graph only through
// query(); the oracle enforces the budget, memoizes answers and records a
// full transcript.
//
// Charging modes:
//   default            - the first query of a distinct pair costs one
//                        unit, repeats of a cached pair are free;
//   charge_duplicates  - every issued query is charged, replicating
//                        pseudocode that decrements the budget per probe.
//
// The budget check precedes evaluation: a query that cannot be paid for
// throws BudgetExhaustedError without revealing the answer.
class BudgetedOracle {
public:
    BudgetedOracle(const SimilarityGraph& g, std::uint64_t budget, bool charge_duplicates = false)
        : graph_(&g), budget_(budget), charge_duplicates_(charge_duplicates) {}

    // Oracle with budget C(n,2): every distinct pair is affordable.
    static BudgetedOracle unlimited(const SimilarityGraph& g) {
        return BudgetedOracle(g, pair_count(g.num_vertices()));
    }

    int query(VertexId u, VertexId v);

    std::uint64_t budget_total() const { return budget_; }
    std::uint64_t budget_used() const { return used_; }
    std::uint64_t remaining_budget() const { return budget_ - used_; }
    std::uint64_t distinct_pairs_queried() const { return cache_.size(); }
    bool charges_duplicates() const { return charge_duplicates_; }
    std::uint32_t num_items() const { return graph_->num_vertices(); }

    const std::vector<QueryRecord>& transcript() const { return transcript_; }

    // The transcript's pair sequence (normalized unordered pairs, in
    // query order, repeats included). Free of charge.
    std::vector<std::pair<VertexId, VertexId>> query_pairs_list() const;

    // CSV dump with columns step,u,v,sign,charged.
    void dump_transcript_csv(std::ostream& out) const;

private:
    static std::uint64_t pair_key(VertexId u, VertexId v) {
        return (static_cast<std::uint64_t>(u) << 32) | v;
    }

    const SimilarityGraph* graph_;
    std::uint64_t budget_;
    std::uint64_t used_ = 0;
    bool charge_duplicates_;
    std::unordered_map<std::uint64_t, int> cache_;
    std::vector<QueryRecord> transcript_;
};

}  // namespace qecc
