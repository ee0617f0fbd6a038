#include "qecc/metrics.hpp"

#include <string>
#include <unordered_map>

#include "qecc/errors.hpp"

namespace qecc {

namespace {

struct PairCounts {
    std::uint64_t pairs_together = 0;       // sum over clusters of C(size,2)
    std::uint64_t positives_together = 0;   // positive edges inside clusters
    std::uint32_t num_clusters = 0;
    std::uint32_t num_nonsingleton = 0;
};

PairCounts count_pairs(const SimilarityGraph& g, const Clustering& c) {
    if (c.size() != g.num_vertices())
        throw DomainError("clustering covers " + std::to_string(c.size()) + " vertices, graph has " +
                          std::to_string(g.num_vertices()));
    std::unordered_map<ClusterId, std::uint64_t> sizes;
    for (ClusterId label : c.labels) ++sizes[label];

    PairCounts out;
    out.num_clusters = static_cast<std::uint32_t>(sizes.size());
    for (const auto& [label, size] : sizes) {
        out.pairs_together += pair_count(size);
        if (size > 1) ++out.num_nonsingleton;
    }
    for (VertexId u = 0; u < g.num_vertices(); ++u)
        for (VertexId v : g.positive_neighbors(u))
            if (u < v && c.labels[u] == c.labels[v]) ++out.positives_together;
    return out;
}

}  // namespace

std::uint64_t cost(const SimilarityGraph& g, const Clustering& c) {
    const PairCounts p = count_pairs(g, c);
    return (p.pairs_together - p.positives_together) +
           (g.num_positive_edges() - p.positives_together);
}

std::pair<double, double> precision_recall(const SimilarityGraph& g, const Clustering& c) {
    const PairCounts p = count_pairs(g, c);
    const double precision = p.pairs_together == 0
                                 ? 1.0
                                 : static_cast<double>(p.positives_together) /
                                       static_cast<double>(p.pairs_together);
    const double recall = g.num_positive_edges() == 0
                              ? 1.0
                              : static_cast<double>(p.positives_together) /
                                    static_cast<double>(g.num_positive_edges());
    return {precision, recall};
}

QualityReport evaluate(const SimilarityGraph& g, const Clustering& c) {
    const PairCounts p = count_pairs(g, c);
    QualityReport report;
    report.cost = (p.pairs_together - p.positives_together) +
                  (g.num_positive_edges() - p.positives_together);
    report.precision = p.pairs_together == 0 ? 1.0
                                             : static_cast<double>(p.positives_together) /
                                                   static_cast<double>(p.pairs_together);
    report.recall = g.num_positive_edges() == 0
                        ? 1.0
                        : static_cast<double>(p.positives_together) /
                              static_cast<double>(g.num_positive_edges());
    report.num_clusters = p.num_clusters;
    report.num_nonsingleton_clusters = p.num_nonsingleton;
    return report;
}

namespace {

// Depth-first enumeration of restricted-growth strings with incremental
// cost and pruning. Trying block ids in increasing order makes the first
// minimizer the canonically smallest one.
class PartitionSearch {
public:
    explicit PartitionSearch(const SimilarityGraph& g) : g_(g), n_(g.num_vertices()) {
        assign_.assign(n_, 0);
        block_size_.assign(n_, 0);
        earlier_neighbors_.assign(n_, {});
        for (VertexId v = 0; v < n_; ++v)
            for (VertexId w : g.positive_neighbors(v))
                if (w < v) earlier_neighbors_[v].push_back(w);
    }

    OptResult run() {
        best_cost_ = ~std::uint64_t{0};
        if (n_ == 0) return {0, Clustering{}};
        descend(0, 0, 0);
        return {best_cost_, Clustering{best_}};
    }

private:
    void descend(VertexId v, std::uint32_t blocks_used, std::uint64_t partial) {
        if (partial >= best_cost_) return;
        if (v == n_) {
            best_cost_ = partial;
            best_ = assign_;
            return;
        }
        const auto& earlier = earlier_neighbors_[v];
        for (std::uint32_t b = 0; b <= blocks_used; ++b) {
            std::uint64_t delta;
            if (b == blocks_used) {
                delta = earlier.size();  // singleton block: every earlier positive edge is cut
            } else {
                std::uint64_t positives_in_block = 0;
                for (VertexId w : earlier)
                    if (assign_[w] == b) ++positives_in_block;
                delta = (block_size_[b] - positives_in_block) +
                        (earlier.size() - positives_in_block);
            }
            assign_[v] = b;
            ++block_size_[b];
            descend(v + 1, blocks_used + (b == blocks_used ? 1 : 0), partial + delta);
            --block_size_[b];
        }
    }

    const SimilarityGraph& g_;
    const std::uint32_t n_;
    std::vector<ClusterId> assign_;
    std::vector<ClusterId> best_;
    std::vector<std::uint64_t> block_size_;
    std::vector<std::vector<VertexId>> earlier_neighbors_;
    std::uint64_t best_cost_ = 0;
};

}  // namespace

OptResult brute_force_opt(const SimilarityGraph& g) {
    constexpr std::uint32_t kMaxVertices = 12;
    if (g.num_vertices() > kMaxVertices)
        throw SizeError("brute_force_opt limited to n <= " + std::to_string(kMaxVertices) +
                        ", got n = " + std::to_string(g.num_vertices()));
    return PartitionSearch(g).run();
}

}  // namespace qecc
