#include <doctest.h>

#include <sstream>

#include "qecc/errors.hpp"
#include "qecc/generators.hpp"
#include "qecc/graph.hpp"
#include "qecc/metrics.hpp"
#include "qecc/rng.hpp"

using namespace qecc;

namespace {

SimilarityGraph triangle() { return SimilarityGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_CASE("edge list loader deduplicates and drops self-loops") {
    std::istringstream in("a b\nb a\na a\n");
    const LoadedGraph loaded = build_from_edge_list(in);
    CHECK(loaded.graph.num_vertices() == 2);
    CHECK(loaded.graph.num_positive_edges() == 1);
    CHECK(loaded.duplicate_edges == 1);
    CHECK(loaded.self_loops == 1);
    CHECK(loaded.tokens == std::vector<std::string>{"a", "b"});
}

TEST_CASE("edge list loader on empty input") {
    std::istringstream in("");
    const LoadedGraph loaded = build_from_edge_list(in);
    CHECK(loaded.graph.num_vertices() == 0);
    CHECK(loaded.graph.num_positive_edges() == 0);
}

TEST_CASE("edge list loader skips comments and blanks") {
    std::istringstream in("# header\n\n  \nx y\n");
    const LoadedGraph loaded = build_from_edge_list(in);
    CHECK(loaded.graph.num_vertices() == 2);
    CHECK(loaded.graph.num_positive_edges() == 1);
}

TEST_CASE("edge list loader reports the malformed line") {
    std::istringstream in("a b\nc\n");
    CHECK_THROWS_WITH_AS(build_from_edge_list(in), doctest::Contains("line 2"), ParseError);
    std::istringstream three("a b c\n");
    CHECK_THROWS_AS(build_from_edge_list(three), ParseError);
}

TEST_CASE("edge_sign") {
    const SimilarityGraph t = triangle();
    CHECK(t.edge_sign(0, 1) == 1);
    CHECK(t.edge_sign(1, 0) == 1);

    const SimilarityGraph empty = SimilarityGraph::from_edges(3, {});
    CHECK(empty.edge_sign(0, 1) == -1);

    const SimilarityGraph path = SimilarityGraph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(path.edge_sign(0, 2) == -1);

    CHECK_THROWS_AS(t.edge_sign(1, 1), DomainError);
    CHECK_THROWS_AS(t.edge_sign(0, 3), DomainError);
}

TEST_CASE("from_edges rejects out-of-range endpoints") {
    CHECK_THROWS_AS(SimilarityGraph::from_edges(2, {{0, 2}}), DomainError);
}

TEST_CASE("positive components") {
    const SimilarityGraph two_triangles =
        SimilarityGraph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    const Clustering c = two_triangles.positive_components();
    CHECK(c.num_clusters() == 2);
    CHECK(c.labels == std::vector<ClusterId>{0, 0, 0, 1, 1, 1});

    const SimilarityGraph empty = SimilarityGraph::from_edges(4, {});
    CHECK(empty.positive_components().num_clusters() == 4);

    const SimilarityGraph star = SimilarityGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(star.positive_components().num_clusters() == 1);
}

TEST_CASE("adjacency is symmetric for arbitrary dirty input") {
    Rng rng(123);
    for (int round = 0; round < 4; ++round) {
        const std::uint32_t n = 50 + 50 * round;
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (int e = 0; e < 3000; ++e) {
            const auto u = static_cast<VertexId>(rng.next_below(n));
            const auto v = static_cast<VertexId>(rng.next_below(n));
            edges.emplace_back(u, v);
            if (rng.bernoulli(0.3)) edges.emplace_back(v, u);  // reversed duplicates
        }
        const SimilarityGraph g = SimilarityGraph::from_edges(n, edges);
        std::uint64_t degree_sum = 0;
        for (VertexId u = 0; u < n; ++u) {
            degree_sum += g.positive_degree(u);
            for (VertexId v = u + 1; v < n; ++v)
                CHECK(g.edge_sign(u, v) == g.edge_sign(v, u));
        }
        CHECK(degree_sum == 2 * g.num_positive_edges());
    }
}

TEST_CASE("components of a cluster graph cost nothing") {
    const auto instance = generate_cluster_graph({4, 3, 5, 1});
    const Clustering c = instance.graph.positive_components();
    CHECK(cost(instance.graph, c) == 0);
}

TEST_CASE("label loader round trip") {
    std::istringstream edges("a b\nb c\nd e\n");
    const LoadedGraph loaded = build_from_edge_list(edges);
    std::istringstream labels("a red\nb red\nc red\nd blue\ne blue\n");
    const Clustering c = load_labels(labels, loaded.token_ids);
    CHECK(c.size() == 5);
    CHECK(c.labels[0] == c.labels[1]);
    CHECK(c.labels[0] != c.labels[3]);
    CHECK(c.num_clusters() == 2);
}

TEST_CASE("label loader rejects bad input") {
    std::istringstream edges("a b\n");
    const LoadedGraph loaded = build_from_edge_list(edges);
    {
        std::istringstream labels("a x\nz y\n");
        CHECK_THROWS_AS(load_labels(labels, loaded.token_ids), ParseError);
    }
    {
        std::istringstream labels("a x\n");  // b unlabeled
        CHECK_THROWS_AS(load_labels(labels, loaded.token_ids), ParseError);
    }
    {
        std::istringstream labels("a x\na y\nb x\n");
        CHECK_THROWS_AS(load_labels(labels, loaded.token_ids), ParseError);
    }
}

TEST_CASE("edge list writer round trip") {
    const SimilarityGraph g = SimilarityGraph::from_edges(4, {{0, 1}, {2, 3}, {1, 3}});
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    const LoadedGraph back = build_from_edge_list(in);
    CHECK(back.graph.num_vertices() == 4);
    CHECK(back.graph.num_positive_edges() == 3);
}
