#include "qecc/generators.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "qecc/errors.hpp"

namespace qecc {

namespace {

std::vector<std::uint32_t> synthetic_cluster_sizes(const SyntheticSpec& spec) {
    if (spec.n == 0) throw ParameterError("synthetic spec: n must be positive");
    if (spec.k < 2) throw ParameterError("synthetic spec: k must be at least 2");
    if (!(spec.alpha > 0.0 && spec.alpha < 1.0))
        throw ParameterError("synthetic spec: alpha must be in (0,1)");
    if (!(spec.beta >= 0.0 && spec.beta <= 1.0))
        throw ParameterError("synthetic spec: beta must be in [0,1]");
    if (spec.beta / (spec.k - 1) > 1.0)
        throw ParameterError("synthetic spec: cross-flip probability beta/(k-1) exceeds 1");

    const auto first = static_cast<std::uint32_t>(std::lround(spec.alpha * spec.n));
    if (first < 1) throw ParameterError("synthetic spec: round(alpha*n) must be at least 1");
    if (spec.n - first < spec.k - 1)
        throw ParameterError("synthetic spec: not enough vertices for k-1 further clusters");

    std::vector<std::uint32_t> sizes{first};
    const std::uint32_t rest = spec.n - first;
    const std::uint32_t base = rest / (spec.k - 1);
    const std::uint32_t extra = rest % (spec.k - 1);
    for (std::uint32_t i = 0; i < spec.k - 1; ++i) sizes.push_back(base + (i < extra ? 1 : 0));
    return sizes;
}

Clustering labels_from_sizes(const std::vector<std::uint32_t>& sizes) {
    Clustering c;
    for (ClusterId label = 0; label < sizes.size(); ++label)
        c.labels.insert(c.labels.end(), sizes[label], label);
    return c;
}

}  // namespace

SyntheticInstance generate_synthetic(const SyntheticSpec& spec) {
    SyntheticInstance out;
    out.cluster_sizes = synthetic_cluster_sizes(spec);
    out.ground_truth = labels_from_sizes(out.cluster_sizes);

    const double cross_flip = spec.beta / (spec.k - 1);
    Rng rng(spec.seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u + 1 < spec.n; ++u) {
        for (VertexId v = u + 1; v < spec.n; ++v) {
            const bool same = out.ground_truth.labels[u] == out.ground_truth.labels[v];
            const bool flip = rng.bernoulli(same ? spec.beta : cross_flip);
            if (same != flip) edges.emplace_back(u, v);
        }
    }
    out.graph = SimilarityGraph::from_edges(spec.n, std::move(edges));
    return out;
}

LowerBoundParams resolve_lower_bound_params(const LowerBoundSpec& spec) {
    if (spec.n < 2) throw ParameterError("lower-bound spec: n must be at least 2");
    if (spec.c < 1) throw ParameterError("lower-bound spec: c must be at least 1");
    if (spec.n % (4 * spec.c) != 0)
        throw ParameterError("lower-bound spec: n must be divisible by 4c so that alpha*n = n/(4c) "
                             "is integral");
    if (!(spec.epsilon > 1.0 / spec.n && spec.epsilon <= 1.0))
        throw ParameterError("lower-bound spec: epsilon must satisfy 1/n < epsilon <= 1");

    LowerBoundParams p;
    p.b_size = spec.n / (4 * spec.c);
    p.a_size = spec.n - p.b_size;

    // k must divide both |A| (equal cliques) and |B| (alpha*n/k integral);
    // snap the requested 1/(32*c*epsilon) to the nearest such divisor.
    const std::uint32_t g = std::gcd(p.a_size, p.b_size);
    const double requested_k = 1.0 / (32.0 * spec.c * spec.epsilon);
    std::uint32_t best_k = 1;
    double best_distance = std::abs(1.0 - requested_k);
    for (std::uint32_t d = 2; d <= g; ++d) {
        if (g % d != 0) continue;
        const double distance = std::abs(static_cast<double>(d) - requested_k);
        if (distance < best_distance) {
            best_distance = distance;
            best_k = d;
        }
    }
    p.k = best_k;
    p.a_cluster_size = p.a_size / p.k;
    p.effective_epsilon = 1.0 / (32.0 * spec.c * p.k);
    p.additive_target = p.effective_epsilon * static_cast<double>(spec.n) * spec.n;
    return p;
}

LowerBoundInstance generate_lower_bound_instance(const LowerBoundSpec& spec) {
    LowerBoundInstance out;
    out.params = resolve_lower_bound_params(spec);
    const auto& p = out.params;

    std::vector<std::pair<VertexId, VertexId>> edges;
    out.natural.labels.assign(spec.n, 0);

    // A = [0, a_size) split into k contiguous cliques.
    for (std::uint32_t block = 0; block < p.k; ++block) {
        const VertexId lo = block * p.a_cluster_size;
        const VertexId hi = lo + p.a_cluster_size;
        for (VertexId u = lo; u < hi; ++u) {
            out.natural.labels[u] = block;
            for (VertexId v = u + 1; v < hi; ++v) edges.emplace_back(u, v);
        }
    }
    // Each B-vertex picks one clique uniformly and joins all of it.
    Rng rng(spec.seed);
    for (VertexId v = p.a_size; v < spec.n; ++v) {
        const auto pick = static_cast<std::uint32_t>(rng.next_below(p.k));
        out.natural.labels[v] = pick;
        const VertexId lo = pick * p.a_cluster_size;
        for (VertexId u = lo; u < lo + p.a_cluster_size; ++u) edges.emplace_back(u, v);
    }
    out.graph = SimilarityGraph::from_edges(spec.n, std::move(edges));
    return out;
}

ClusterGraphInstance generate_cluster_graph(const std::vector<std::uint32_t>& sizes) {
    if (sizes.empty()) throw ParameterError("cluster graph: sizes must be non-empty");
    std::uint64_t n = 0;
    for (std::uint32_t s : sizes) {
        if (s == 0) throw ParameterError("cluster graph: sizes must be positive");
        n += s;
    }
    if (n > ~VertexId{0}) throw ParameterError("cluster graph: too many vertices");

    ClusterGraphInstance out;
    out.clustering = labels_from_sizes(sizes);
    std::vector<std::pair<VertexId, VertexId>> edges;
    VertexId offset = 0;
    for (std::uint32_t s : sizes) {
        for (VertexId u = offset; u < offset + s; ++u)
            for (VertexId v = u + 1; v < offset + s; ++v) edges.emplace_back(u, v);
        offset += s;
    }
    out.graph = SimilarityGraph::from_edges(static_cast<std::uint32_t>(n), std::move(edges));
    return out;
}

SimilarityGraph generate_random_graph(std::uint32_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("random graph: p must be in [0,1]");
    Rng rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; n != 0 && u + 1 < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    return SimilarityGraph::from_edges(n, std::move(edges));
}

}  // namespace qecc
