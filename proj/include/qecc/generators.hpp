#pragma once

#include <cstdint>
#include <vector>

#include "qecc/graph.hpp"
#include "qecc/rng.hpp"

namespace qecc {

// Parameters of the synthetic family S(n, k, alpha, beta): a planted
// clustering with one cluster of size round(alpha*n) and k-1 clusters
// splitting the rest as evenly as possible, then independent sign flips
// with probability beta inside clusters and beta/(k-1) across.
struct SyntheticSpec {
    std::uint32_t n = 0;
    std::uint32_t k = 2;
    double alpha = 0.5;
    double beta = 0.0;
    std::uint64_t seed = 1;
};

struct SyntheticInstance {
    SimilarityGraph graph;
    Clustering ground_truth;
    std::vector<std::uint32_t> cluster_sizes;  // effective sizes, largest-alpha cluster first
};

SyntheticInstance generate_synthetic(const SyntheticSpec& spec);

// Parameters of the planted hard family: vertices split into A (k equal
// cliques) and B (each B-vertex positively joined to one uniformly chosen
// A-clique). alpha = 1/(4c) so |B| = n/(4c); k is snapped to the divisor
// of gcd(|A|, |B|) closest to 1/(32*c*epsilon) and the effective epsilon
// is reported back.
struct LowerBoundSpec {
    std::uint32_t n = 0;
    std::uint32_t c = 1;  // approximation target
    double epsilon = 0.0;
    std::uint64_t seed = 1;
};

struct LowerBoundParams {
    std::uint32_t a_size = 0;
    std::uint32_t b_size = 0;         // alpha * n
    std::uint32_t k = 1;
    std::uint32_t a_cluster_size = 0; // |A| / k
    double effective_epsilon = 0.0;   // 1 / (32 * c * k)
    double additive_target = 0.0;     // effective_epsilon * n^2
};

// Derives the effective parameters without generating; throws
// ParameterError when the spec is infeasible.
LowerBoundParams resolve_lower_bound_params(const LowerBoundSpec& spec);

struct LowerBoundInstance {
    SimilarityGraph graph;
    Clustering natural;  // each B-vertex joined to the clique it links to
    LowerBoundParams params;
};

LowerBoundInstance generate_lower_bound_instance(const LowerBoundSpec& spec);

struct ClusterGraphInstance {
    SimilarityGraph graph;
    Clustering clustering;
};

// Disjoint cliques of the given sizes; the returned clustering is the
// cliques themselves and has cost 0.
ClusterGraphInstance generate_cluster_graph(const std::vector<std::uint32_t>& sizes);

// Erdos-Renyi positive graph, each pair positive independently with
// probability p, pairs drawn in lexicographic order.
SimilarityGraph generate_random_graph(std::uint32_t n, double p, std::uint64_t seed);

}  // namespace qecc
