#pragma once

#include <cstdint>
#include <utility>

#include "qecc/graph.hpp"

namespace qecc {

struct QualityReport {
    std::uint64_t cost = 0;
    double precision = 1.0;
    double recall = 1.0;
    std::uint32_t num_clusters = 0;
    std::uint32_t num_nonsingleton_clusters = 0;
};

// Number of disagreements: negative pairs inside clusters plus positive
// pairs across clusters. Computed from cluster sizes and the positive
// adjacency, without enumerating all C(n,2) pairs.
std::uint64_t cost(const SimilarityGraph& g, const Clustering& c);

// Precision = positive pairs clustered together / pairs clustered
// together; recall = positive pairs clustered together / m. Conventions:
// precision is 1 when nothing is clustered together, recall is 1 when
// m = 0.
std::pair<double, double> precision_recall(const SimilarityGraph& g, const Clustering& c);

QualityReport evaluate(const SimilarityGraph& g, const Clustering& c);

struct OptResult {
    std::uint64_t cost = 0;
    Clustering witness;
};

// Exact minimum-disagreement clustering via enumeration of set
// partitions in restricted-growth-string order (first minimizer wins).
// Limited to n <= 12; throws SizeError above that.
OptResult brute_force_opt(const SimilarityGraph& g);

}  // namespace qecc
