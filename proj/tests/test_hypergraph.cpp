#include "doctest.h"

#include "ldh/hypergraph.hpp"

using namespace ldh;

namespace {

// Ten vertices, three pairwise-overlapping edges; used across the suites
// because every cell degree from 1 to 3 appears.
hypergraph ten_vertex_chain() {
    return hypergraph::build(10, {{0, 1, 2, 3}, {0, 3, 4, 5, 6}, {1, 2, 3, 4, 7, 8, 9}});
}

} // namespace

TEST_CASE("build validates the axioms") {
    CHECK_THROWS_AS(hypergraph::build(0, {}), error);
    CHECK_THROWS_AS(hypergraph::build(2, {{0, 1}, {}}), error);
    CHECK_THROWS_AS(hypergraph::build(2, {{0, 2}}), error);
    CHECK_THROWS_AS(hypergraph::build(2, {{0, -1}}), error);
    CHECK_THROWS_AS(hypergraph::build(3, {{0, 1}}), error); // vertex 2 uncovered

    try {
        hypergraph::build(3, {{0, 1}});
        FAIL("expected uncovered_vertex");
    } catch (const error& e) {
        CHECK(e.code() == errc::uncovered_vertex);
    }
}

TEST_CASE("build sorts members and collapses duplicate edges") {
    hypergraph h = hypergraph::build(3, {{2, 0, 1}, {1, 0, 2}, {2, 1}});
    CHECK(h.edge_count() == 2);
    CHECK(h.edge(0) == edge_t{0, 1, 2});
    CHECK(h.edge(1) == edge_t{1, 2});
}

TEST_CASE("build enforces the optional Sperner and connected flags") {
    build_options sperner;
    sperner.require_sperner = true;
    CHECK_THROWS_AS(hypergraph::build(3, {{0, 1, 2}, {1, 2}}, sperner), error);
    CHECK_NOTHROW(hypergraph::build(3, {{0, 1}, {1, 2}}, sperner));

    build_options conn;
    conn.require_connected = true;
    CHECK_THROWS_AS(hypergraph::build(4, {{0, 1}, {2, 3}}, conn), error);
    CHECK_NOTHROW(hypergraph::build(4, {{0, 1}, {1, 2}, {2, 3}}, conn));
}

TEST_CASE("neighborhoods, degrees and adjacency on the ten-vertex chain") {
    hypergraph h = ten_vertex_chain();
    CHECK(h.vertex_count() == 10);
    CHECK(h.edge_count() == 3);

    CHECK(h.degree(3) == 3);
    CHECK(h.degree(0) == 2);
    CHECK(h.degree(7) == 1);
    CHECK(h.is_pendant(7));
    CHECK_FALSE(h.is_pendant(0));

    CHECK(h.neighborhood(3) == std::vector<int>{0, 1, 2, 4, 5, 6, 7, 8, 9});
    CHECK(h.neighborhood(3, /*closed=*/true) == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(h.neighborhood(5) == std::vector<int>{0, 3, 4, 6});
    CHECK(h.incident_edges(4) == std::vector<int>{1, 2});

    CHECK(h.adjacent(0, 5));
    CHECK_FALSE(h.adjacent(0, 7));
    CHECK_FALSE(h.adjacent(5, 5));

    // bitmask view agrees with the vector view
    for (int v = 0; v < h.vertex_count(); ++v) {
        uint64_t mask = h.neighborhood_mask(v, false);
        std::vector<int> nb = h.neighborhood(v);
        for (int u = 0; u < h.vertex_count(); ++u) {
            bool in_vec = std::binary_search(nb.begin(), nb.end(), u);
            CHECK(in_vec == bool(mask >> u & 1));
        }
    }
}

TEST_CASE("classify reports the structure profile") {
    hypergraph h = ten_vertex_chain();
    auto p = classify(h);
    CHECK(p.rank == 7);
    CHECK_FALSE(p.is_uniform);
    CHECK_FALSE(p.is_linear); // first and third edge share three vertices
    CHECK(p.is_sperner);
    CHECK(p.is_connected);
    CHECK_FALSE(p.is_complete);
    CHECK(p.max_degree == 3);
    CHECK_FALSE(p.is_regular);

    hypergraph k4 = hypergraph::build(4, {{0, 1, 2, 3}});
    auto pk = classify(k4);
    CHECK(pk.is_complete);
    CHECK(pk.is_uniform);
    CHECK(pk.uniform_k == 4);
    CHECK(pk.is_regular);
    CHECK(pk.regular_degree == 1);

    hypergraph p4 = hypergraph::build(4, {{0, 1}, {1, 2}, {2, 3}});
    auto pp = classify(p4);
    CHECK(pp.is_uniform);
    CHECK(pp.uniform_k == 2);
    CHECK(pp.is_linear);
    CHECK_FALSE(pp.is_complete);
}

TEST_CASE("2-uniform instances behave like graphs") {
    hypergraph c5 = hypergraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    for (int v = 0; v < 5; ++v) {
        CHECK(c5.degree(v) == 2);
        CHECK(c5.neighborhood(v).size() == 2);
    }
    CHECK(c5.neighborhood(0) == std::vector<int>{1, 4});
}
