#include "doctest.h"

#include "ldh/families.hpp"
#include "ldh/hypergraph.hpp"
#include "ldh/ld.hpp"
#include "ldh/transforms.hpp"

using namespace ldh;

namespace {

hypergraph ten_vertex_chain() {
    return hypergraph::build(10, {{0, 1, 2, 3}, {0, 3, 4, 5, 6}, {1, 2, 3, 4, 7, 8, 9}});
}

hypergraph chained_tree() {
    return hypergraph::build(10, {{0, 1, 2, 3}, {3, 4, 5}, {5, 6, 7, 8, 9}});
}

} // namespace

TEST_CASE("middle graph lists cohabiting pairs once, in order") {
    hypergraph h = hypergraph::build(4, {{0, 1, 2}, {2, 3}});
    hypergraph m = primal_middle(h);
    REQUIRE(m.edge_count() == 4);
    CHECK(m.edge(0) == edge_t{0, 1});
    CHECK(m.edge(1) == edge_t{0, 2});
    CHECK(m.edge(2) == edge_t{1, 2});
    CHECK(m.edge(3) == edge_t{2, 3});
}

TEST_CASE("middle graph keeps vertices isolated by singleton edges") {
    hypergraph h = hypergraph::build(3, {{0, 1}, {2}});
    hypergraph m = primal_middle(h);
    REQUIRE(m.edge_count() == 2);
    CHECK(m.edge(0) == edge_t{0, 1});
    CHECK(m.edge(1) == edge_t{2});
    CHECK(lambda_exact(m).lambda == lambda_exact(h).lambda);
}

TEST_CASE("dual swaps vertices and edges with generated labels") {
    hypergraph d = dual(ten_vertex_chain());
    CHECK(d.vertex_count() == 3);
    REQUIRE(d.edge_count() == 6); // ten incidence sets collapse to six distinct
    CHECK(d.edge(0) == edge_t{0, 1});    // from vertex 0
    CHECK(d.edge(1) == edge_t{0, 2});    // from vertices 1, 2
    CHECK(d.edge(2) == edge_t{0, 1, 2}); // from vertex 3
    CHECK(d.edge(3) == edge_t{1, 2});    // from vertex 4
    CHECK(d.edge(4) == edge_t{1});       // from vertices 5, 6
    CHECK(d.edge(5) == edge_t{2});       // from vertices 7, 8, 9
    REQUIRE(d.has_labels());
    CHECK(d.label(0) == "e1");
    CHECK(d.label(2) == "e3");
}

TEST_CASE("k-section keeps small edges and expands large ones") {
    hypergraph k4 = hypergraph::build(4, {{0, 1, 2, 3}});
    hypergraph s2 = k_section(k4, 2);
    CHECK(s2.edge_count() == 6);
    hypergraph s3 = k_section(k4, 3);
    CHECK(s3.edge_count() == 4);
    CHECK(s3.edge(0) == edge_t{0, 1, 2});
    hypergraph s4 = k_section(k4, 4);
    CHECK(s4.edges() == k4.edges());

    hypergraph mixed = hypergraph::build(4, {{0, 1}, {1, 2, 3}});
    hypergraph m2 = k_section(mixed, 2);
    REQUIRE(m2.edge_count() == 4);
    CHECK(m2.edge(0) == edge_t{0, 1});
    CHECK(m2.edge(1) == edge_t{1, 2});

    CHECK_THROWS_AS(k_section(k4, 1), error);
}

TEST_CASE("level hypergraph contracts equal incidence classes") {
    auto hl = level_hypergraph(chained_tree());
    CHECK(hl.quotient.vertex_count() == 5);
    REQUIRE(hl.quotient.edge_count() == 3);
    CHECK(hl.quotient.edge(0) == edge_t{0, 1});
    CHECK(hl.quotient.edge(1) == edge_t{1, 2, 3});
    CHECK(hl.quotient.edge(2) == edge_t{3, 4});
    CHECK(hl.representatives == std::vector<int>{0, 3, 4, 5, 6});
    CHECK(hl.level_of[7] == 4);
    CHECK(hl.source_is_hypertree);
}

TEST_CASE("hypertree recognition") {
    CHECK(is_hypertree(chained_tree()));
    CHECK(is_hypertree(hypergraph::build(4, {{0, 1}, {1, 2}, {2, 3}})));
    CHECK(is_hypertree(hypergraph::build(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}}))); // star
    CHECK(is_hypertree(hypergraph::build(2, {{0, 1}})));

    // cycles are rejected
    CHECK_FALSE(is_hypertree(hypergraph::build(3, {{0, 1}, {1, 2}, {0, 2}})));
    CHECK_FALSE(is_hypertree(
        hypergraph::build(6, {{0, 2, 3}, {0, 1, 4}, {1, 2, 5}}))); // 3-edge hypercycle

    // three edges through one shared vertex but with pairwise-distinct
    // second links close a cycle
    CHECK_FALSE(is_hypertree(hypergraph::build(4, {{0, 1, 2}, {1, 2, 3}, {0, 2, 3}})));

    // disconnected instances are not hypertrees
    CHECK_FALSE(is_hypertree(hypergraph::build(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("pendant set of the level hypergraph verifies on hypertrees") {
    auto hl = level_hypergraph(chained_tree());
    auto s = pendant_ld_set(hl);
    CHECK(s == std::vector<int>{0, 2, 4});
    CHECK(verify_ld(hl.quotient, s).valid());

    auto star = level_hypergraph(hypergraph::build(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}}));
    auto ss = pendant_ld_set(star);
    CHECK(verify_ld(star.quotient, ss).valid());
}

TEST_CASE("pendant set construction fails beyond four path levels") {
    // five levels in a row: the middle level's trace comes out empty, so the
    // pendant rule is not sufficient for every hypertree
    auto hl = level_hypergraph(hypergraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
    REQUIRE(hl.source_is_hypertree);
    auto s = pendant_ld_set(hl);
    CHECK(s == std::vector<int>{0, 4});
    auto rep = verify_ld(hl.quotient, s);
    CHECK(rep.verdict == ld_verdict::not_dominating);
    REQUIRE(rep.witness_vertex.has_value());
    CHECK(*rep.witness_vertex == 2);
}

TEST_CASE("pendant set requires a hypertree source") {
    auto hl = level_hypergraph(hypergraph::build(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK_FALSE(hl.source_is_hypertree);
    try {
        pendant_ld_set(hl);
        FAIL("expected not_a_hypertree");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_a_hypertree);
    }
}

TEST_CASE("reduce keeps only maximal edges, preserving order") {
    hypergraph h = hypergraph::build(4, {{0, 1}, {0, 1, 2}, {2, 3}, {3}});
    hypergraph r = reduce_sperner(h);
    REQUIRE(r.edge_count() == 2);
    CHECK(r.edge(0) == edge_t{0, 1, 2});
    CHECK(r.edge(1) == edge_t{2, 3});
    CHECK(classify(r).is_sperner);

    // idempotent
    hypergraph rr = reduce_sperner(r);
    CHECK(rr.edges() == r.edges());
}

TEST_CASE("transforms preserve lambda on the worked instance") {
    hypergraph h = ten_vertex_chain();
    int lam = lambda_exact(h).lambda;
    CHECK(lambda_exact(primal_middle(h)).lambda == lam);
    CHECK(lambda_exact(k_section(h, 2)).lambda == lam);
    CHECK(lambda_exact(k_section(h, 3)).lambda == lam);
    hypergraph d = dual(h);
    CHECK(lambda_exact(primal_middle(d)).lambda == lambda_exact(d).lambda);
}
