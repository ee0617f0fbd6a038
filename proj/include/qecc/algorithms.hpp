#pragma once

#include <cstdint>
#include <vector>

#include "qecc/graph.hpp"
#include "qecc/oracle.hpp"
#include "qecc/rng.hpp"

namespace qecc {

struct RunResult {
    Clustering clustering;
    std::vector<VertexId> pivots;   // selection order; pivot i's cluster carries label i
    std::uint64_t queries_used = 0; // charged queries consumed by this run
    bool stopped_early = false;     // budget bound before every vertex was clustered
};

// All four procedures observe the graph exclusively through the oracle
// and consume randomness only for their core random choices (pivot picks,
// sample draws, pair probes), so runs with the same seed share pivot
// sequences regardless of the budget. Vertices left unclustered become
// singleton clusters labeled after the pivot clusters, in ascending
// vertex order.

// Repeatedly picks a uniform pivot from the unclustered set R, queries
// its whole neighborhood within R and emits {pivot} + positive neighbors
// as a cluster, until R is empty. Requires remaining budget >= C(n,2).
RunResult qwick_cluster(BudgetedOracle& oracle, std::uint32_t n, Rng& rng);

// Same loop as qwick_cluster but only while the remaining budget covers
// the worst-case scan charge |R|-1; leftover vertices become singletons.
RunResult qecc(BudgetedOracle& oracle, std::uint32_t n, Rng& rng);

// Non-adaptive variant: draws a sample of k = max{t <= n : (2n-1-t)t <= 2Q}
// vertices without replacement, queries every pair touching the sample up
// front, then walks the sample in order pivoting on members still
// unclustered. The query-pair transcript is a function of (n, Q, seed)
// alone.
RunResult qecc_nonadaptive(BudgetedOracle& oracle, std::uint32_t n, Rng& rng);

// Degree-biased heuristic: probes uniform ordered pairs of R until one is
// a positive edge, pivots on its second endpoint and scans that pivot's
// neighborhood. Within a round a vertex u becomes pivot with probability
// d_u/(2E) over R's induced subgraph.
RunResult qecc_heur(BudgetedOracle& oracle, std::uint32_t n, Rng& rng);

}  // namespace qecc
