#include "qecc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "qecc/errors.hpp"

namespace qecc {

std::uint32_t Clustering::num_clusters() const {
    std::unordered_set<ClusterId> distinct(labels.begin(), labels.end());
    return static_cast<std::uint32_t>(distinct.size());
}

std::uint32_t Clustering::num_nonsingleton_clusters() const {
    std::unordered_map<ClusterId, std::uint32_t> sizes;
    for (ClusterId c : labels) ++sizes[c];
    std::uint32_t count = 0;
    for (const auto& [label, size] : sizes)
        if (size > 1) ++count;
    return count;
}

SimilarityGraph SimilarityGraph::from_edges(std::uint32_t n,
                                            std::vector<std::pair<VertexId, VertexId>> edges) {
    SimilarityGraph g;
    g.n_ = n;
    g.adj_.assign(n, {});

    for (auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw DomainError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                              std::to_string(v) + ") with n=" + std::to_string(n));
        if (u > v) std::swap(u, v);
    }
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    g.m_ = edges.size();
    for (const auto& [u, v] : edges) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& neighbors : g.adj_) std::sort(neighbors.begin(), neighbors.end());
    return g;
}

std::span<const VertexId> SimilarityGraph::positive_neighbors(VertexId v) const {
    if (v >= n_) throw DomainError("vertex out of range: " + std::to_string(v));
    return adj_[v];
}

std::uint32_t SimilarityGraph::positive_degree(VertexId v) const {
    if (v >= n_) throw DomainError("vertex out of range: " + std::to_string(v));
    return static_cast<std::uint32_t>(adj_[v].size());
}

bool SimilarityGraph::has_positive_edge(VertexId u, VertexId v) const {
    if (adj_[u].size() > adj_[v].size()) std::swap(u, v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int SimilarityGraph::edge_sign(VertexId u, VertexId v) const {
    if (u >= n_ || v >= n_)
        throw DomainError("vertex out of range in edge_sign(" + std::to_string(u) + ", " +
                          std::to_string(v) + ")");
    if (u == v) throw DomainError("edge_sign on a self-pair: " + std::to_string(u));
    return has_positive_edge(u, v) ? +1 : -1;
}

Clustering SimilarityGraph::positive_components() const {
    constexpr ClusterId kNone = ~ClusterId{0};
    Clustering c;
    c.labels.assign(n_, kNone);
    ClusterId next = 0;
    std::vector<VertexId> stack;
    for (VertexId root = 0; root < n_; ++root) {
        if (c.labels[root] != kNone) continue;
        c.labels[root] = next;
        stack.push_back(root);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : adj_[v]) {
                if (c.labels[w] == kNone) {
                    c.labels[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return c;
}

LoadedGraph build_from_edge_list(std::istream& in) {
    LoadedGraph out;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::string line, a, b, extra;
    std::uint64_t line_number = 0;

    auto intern = [&out](const std::string& token) -> VertexId {
        auto [it, inserted] =
            out.token_ids.try_emplace(token, static_cast<VertexId>(out.tokens.size()));
        if (inserted) out.tokens.push_back(token);
        return it->second;
    };

    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream fields(line);
        if (!(fields >> a)) continue;  // blank
        if (a[0] == '#') continue;
        if (!(fields >> b) || (fields >> extra))
            throw ParseError("line " + std::to_string(line_number) +
                             ": expected exactly two tokens");
        const VertexId u = intern(a);
        const VertexId v = intern(b);
        if (u == v) {
            ++out.self_loops;
            continue;
        }
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }

    const std::uint64_t raw = edges.size();
    out.graph = SimilarityGraph::from_edges(static_cast<std::uint32_t>(out.tokens.size()),
                                            std::move(edges));
    out.duplicate_edges = raw - out.graph.num_positive_edges();
    return out;
}

LoadedGraph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open edge-list file: " + path);
    return build_from_edge_list(in);
}

Clustering load_labels(std::istream& in,
                       const std::unordered_map<std::string, VertexId>& token_ids) {
    constexpr ClusterId kNone = ~ClusterId{0};
    Clustering c;
    c.labels.assign(token_ids.size(), kNone);
    std::unordered_map<std::string, ClusterId> cluster_ids;
    std::string line, vertex_token, cluster_token, extra;
    std::uint64_t line_number = 0;

    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream fields(line);
        if (!(fields >> vertex_token)) continue;
        if (vertex_token[0] == '#') continue;
        if (!(fields >> cluster_token) || (fields >> extra))
            throw ParseError("line " + std::to_string(line_number) +
                             ": expected exactly two tokens");
        const auto it = token_ids.find(vertex_token);
        if (it == token_ids.end())
            throw ParseError("line " + std::to_string(line_number) + ": unknown vertex token '" +
                             vertex_token + "'");
        if (c.labels[it->second] != kNone)
            throw ParseError("line " + std::to_string(line_number) + ": vertex '" + vertex_token +
                             "' labeled twice");
        const auto [cit, inserted] =
            cluster_ids.try_emplace(cluster_token, static_cast<ClusterId>(cluster_ids.size()));
        c.labels[it->second] = cit->second;
    }
    for (std::size_t v = 0; v < c.labels.size(); ++v)
        if (c.labels[v] == kNone)
            throw ParseError("no label for vertex id " + std::to_string(v));
    return c;
}

Clustering load_label_file(const std::string& path,
                           const std::unordered_map<std::string, VertexId>& token_ids) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open label file: " + path);
    return load_labels(in, token_ids);
}

namespace {

const std::string& token_of(const std::vector<std::string>& tokens, VertexId v,
                            std::string& scratch) {
    if (v < tokens.size()) return tokens[v];
    scratch = std::to_string(v);
    return scratch;
}

}  // namespace

void write_edge_list(std::ostream& out, const SimilarityGraph& g,
                     const std::vector<std::string>& tokens) {
    std::string su, sv;
    for (VertexId u = 0; u < g.num_vertices(); ++u)
        for (VertexId v : g.positive_neighbors(u))
            if (u < v) out << token_of(tokens, u, su) << ' ' << token_of(tokens, v, sv) << '\n';
}

void write_labels(std::ostream& out, const Clustering& c, const std::vector<std::string>& tokens) {
    std::string sv;
    for (std::size_t v = 0; v < c.size(); ++v)
        out << token_of(tokens, static_cast<VertexId>(v), sv) << ' ' << c.labels[v] << '\n';
}

}  // namespace qecc
