#include <doctest.h>

#include <sstream>

#include "qecc/dataset_import.hpp"
#include "qecc/errors.hpp"
#include "qecc/graph.hpp"

using namespace qecc;

TEST_CASE("jaro similarity reference values") {
    CHECK(jaro_similarity("MARTHA", "MARHTA") == doctest::Approx(0.944444).epsilon(1e-5));
    CHECK(jaro_similarity("DIXON", "DICKSONX") == doctest::Approx(0.766667).epsilon(1e-5));
    CHECK(jaro_similarity("DWAYNE", "DUANE") == doctest::Approx(0.822222).epsilon(1e-5));
    CHECK(jaro_similarity("same", "same") == 1.0);
    CHECK(jaro_similarity("", "") == 1.0);
    CHECK(jaro_similarity("abc", "") == 0.0);
    CHECK(jaro_similarity("abc", "xyz") == 0.0);
}

TEST_CASE("jaro similarity is symmetric") {
    const char* words[] = {"cluster", "clutter", "editing", "med", "m"};
    for (const char* a : words)
        for (const char* b : words)
            CHECK(jaro_similarity(a, b) == doctest::Approx(jaro_similarity(b, a)));
}

TEST_CASE("cora import joins records above the threshold") {
    std::istringstream in("MARTHA\nMARHTA\nZZZZZZZZZ\n");
    std::ostringstream edges;
    const ImportStats stats = import_cora(in, edges);
    CHECK(stats.vertices == 3);
    CHECK(stats.edges == 1);
    CHECK(edges.str() == "0 1\n");
}

TEST_CASE("citeseer import canonicalizes the pair list") {
    std::istringstream in("p1 p2\np2 p1\np1 p1\np3 p2\n");
    std::ostringstream edges;
    const ImportStats stats = import_citeseer(in, edges);
    CHECK(stats.vertices == 3);
    CHECK(stats.edges == 2);
    std::istringstream back(edges.str());
    const LoadedGraph loaded = build_from_edge_list(back);
    CHECK(loaded.graph.num_positive_edges() == 2);
    CHECK(loaded.duplicate_edges == 0);
}

TEST_CASE("mushrooms import applies the half-feature rule") {
    // four features; records joined when they differ on at most two
    std::istringstream in("p,a,b,c,d\ne,a,b,c,x\ne,w,x,y,z\n");
    std::ostringstream edges, labels;
    const ImportStats stats = import_mushrooms(in, edges, &labels);
    CHECK(stats.vertices == 3);
    CHECK(stats.edges == 1);
    CHECK(edges.str() == "0 1\n");
    CHECK(labels.str() == "0 p\n1 e\n2 e\n");
}

TEST_CASE("mushrooms import rejects ragged rows") {
    std::istringstream in("p,a,b\ne,a\n");
    std::ostringstream edges;
    CHECK_THROWS_AS(import_mushrooms(in, edges), ParseError);
}
