#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qecc {

using VertexId = std::uint32_t;
using ClusterId = std::uint32_t;

constexpr std::uint64_t pair_count(std::uint64_t n) noexcept { return n * (n - 1) / 2; }

// A labeling of vertices into clusters; a cluster is the maximal set of
// vertices sharing a label.
struct Clustering {
    std::vector<ClusterId> labels;

    std::size_t size() const { return labels.size(); }
    ClusterId operator[](std::size_t v) const { return labels[v]; }
    std::uint32_t num_clusters() const;
    std::uint32_t num_nonsingleton_clusters() const;

    bool operator==(const Clustering&) const = default;
};

// The complete "+/-" labeled similarity graph over n vertices, stored by
// its positive edges: any pair not present in the adjacency is negative.
// Immutable once built; safe to share read-only across threads.
class SimilarityGraph {
public:
    SimilarityGraph() = default;

    // Symmetrizes, deduplicates and drops self-loops. Throws DomainError
    // if an endpoint is >= n.
    static SimilarityGraph from_edges(std::uint32_t n,
                                      std::vector<std::pair<VertexId, VertexId>> edges);

    std::uint32_t num_vertices() const { return n_; }
    std::uint64_t num_positive_edges() const { return m_; }

    std::span<const VertexId> positive_neighbors(VertexId v) const;
    std::uint32_t positive_degree(VertexId v) const;
    bool has_positive_edge(VertexId u, VertexId v) const;

    // +1 if {u,v} is a positive pair, -1 otherwise. Requires u != v and
    // both in range; throws DomainError otherwise.
    int edge_sign(VertexId u, VertexId v) const;

    // Connected components of the positive graph, one cluster each,
    // labeled in order of their smallest vertex.
    Clustering positive_components() const;

private:
    std::uint32_t n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::vector<VertexId>> adj_;
};

// Result of reading an edge-list file: the graph, the token <-> id maps
// (ids assigned in first-seen order) and counts of dropped input.
struct LoadedGraph {
    SimilarityGraph graph;
    std::vector<std::string> tokens;
    std::unordered_map<std::string, VertexId> token_ids;
    std::uint64_t duplicate_edges = 0;
    std::uint64_t self_loops = 0;
};

// Edge-list format: UTF-8 text, one edge per line as two whitespace
// separated tokens; blank lines and lines starting with '#' are skipped.
// Throws ParseError naming the line number on malformed lines.
LoadedGraph build_from_edge_list(std::istream& in);
LoadedGraph load_edge_list_file(const std::string& path);

// Ground-truth label format: one line per vertex, "vertex_token cluster_token".
// Cluster ids are assigned to cluster tokens in first-seen order. Every
// graph vertex must receive exactly one label.
Clustering load_labels(std::istream& in,
                       const std::unordered_map<std::string, VertexId>& token_ids);
Clustering load_label_file(const std::string& path,
                           const std::unordered_map<std::string, VertexId>& token_ids);

// Writers for the same two formats. When tokens is empty, decimal vertex
// ids are used as tokens.
void write_edge_list(std::ostream& out, const SimilarityGraph& g,
                     const std::vector<std::string>& tokens = {});
void write_labels(std::ostream& out, const Clustering& c,
                  const std::vector<std::string>& tokens = {});

}  // namespace qecc
