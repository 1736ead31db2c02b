#include "doctest.h"

#include <random>

#include "ldh/families.hpp"
#include "ldh/hypergraph.hpp"
#include "ldh/ld.hpp"

#include "test_support.hpp"

using namespace ldh;

namespace {

hypergraph ten_vertex_chain() {
    return hypergraph::build(10, {{0, 1, 2, 3}, {0, 3, 4, 5, 6}, {1, 2, 3, 4, 7, 8, 9}});
}

} // namespace

TEST_CASE("verify accepts valid sets and the one-outside-vertex case") {
    hypergraph p2 = hypergraph::build(2, {{0, 1}});
    CHECK(verify_ld(p2, {0}).valid());
    CHECK(verify_ld(p2, {0, 1}).valid());

    auto rep = verify_ld(p2, {});
    CHECK(rep.verdict == ld_verdict::not_dominating);
    REQUIRE(rep.witness_vertex.has_value());
    CHECK(*rep.witness_vertex == 0);
}

TEST_CASE("verify reports the first failing pair in scan order") {
    // one big edge plus a pendant edge: {0,1} leaves 2 and 3 with equal
    // traces, scanned before the undominated vertex 4
    hypergraph h = hypergraph::build(5, {{0, 1, 2, 3}, {3, 4}});
    auto rep = verify_ld(h, {0, 1});
    CHECK(rep.verdict == ld_verdict::not_locating);
    REQUIRE(rep.witness_pair.has_value());
    CHECK(*rep.witness_pair == std::pair<int, int>{2, 3});

    // three mutually overlapping 4-edges on six vertices
    hypergraph h2 = hypergraph::build(6, {{0, 1, 2, 3}, {2, 3, 4, 5}, {0, 1, 4, 5}});
    auto rep2 = verify_ld(h2, {0, 2, 4});
    CHECK(rep2.verdict == ld_verdict::not_locating);
    REQUIRE(rep2.witness_pair.has_value());
    CHECK(*rep2.witness_pair == std::pair<int, int>{1, 3});
}

TEST_CASE("verify reports an undominated witness when it scans first") {
    // S = {4}: vertex 0 and 1 both have empty traces; 0 is reported
    hypergraph h = hypergraph::build(5, {{0, 1, 2}, {2, 3, 4}});
    auto rep = verify_ld(h, {4});
    CHECK(rep.verdict == ld_verdict::not_dominating);
    REQUIRE(rep.witness_vertex.has_value());
    CHECK(*rep.witness_vertex == 0);
}

TEST_CASE("verify records traces for all outside vertices") {
    hypergraph h = ten_vertex_chain();
    auto rep = verify_ld(h, {0, 1, 3, 5, 7, 8});
    CHECK(rep.valid());
    REQUIRE(rep.traces.size() == 4);
    CHECK(rep.traces[0].first == 2);
    CHECK(rep.traces[0].second == std::vector<int>{0, 1, 3, 7, 8});
    CHECK(rep.traces[1].first == 4);
    CHECK(rep.traces[1].second == std::vector<int>{0, 1, 3, 5, 7, 8});
    CHECK(rep.traces[2].first == 6);
    CHECK(rep.traces[2].second == std::vector<int>{0, 3, 5});
    CHECK(rep.traces[3].first == 9);
    CHECK(rep.traces[3].second == std::vector<int>{1, 3, 7, 8});
}

TEST_CASE("verify rejects out-of-range candidate members") {
    hypergraph p2 = hypergraph::build(2, {{0, 1}});
    CHECK_THROWS_AS(verify_ld(p2, {2}), error);
    CHECK_THROWS_AS(verify_ld(p2, {-1}), error);
}

TEST_CASE("bounds on fixed instances") {
    auto b = bounds(hypergraph::build(4, {{0, 1, 2, 3}}));
    CHECK(b.lower_coincident == 3);
    CHECK(b.upper_trivial == 3);

    auto b2 = bounds(hypergraph::build(10, {{0, 1, 2, 3}, {3, 4, 5, 6}, {6, 7, 8, 9}}));
    CHECK(b2.lower_coincident == 5);
    CHECK(b2.packing_linear);
    CHECK(b2.packing_pendants);
    REQUIRE(b2.packing_number.has_value());
    CHECK(*b2.packing_number == 3);
    CHECK(*b2.upper_packing == 7);

    auto b3 = bounds(ten_vertex_chain());
    CHECK(b3.lower_coincident == 4);
    CHECK(b3.upper_trivial == 9);
    CHECK_FALSE(b3.packing_linear);
    CHECK_FALSE(b3.upper_packing.has_value());
}

TEST_CASE("bounds recognizes complete t-partite instances") {
    family_spec s;
    s.kind = family_kind::complete_tpartite;
    s.r = 2;
    s.parts = {1, 2, 2};
    auto b = bounds(generate(s));
    REQUIRE(b.partite_parts.has_value());
    CHECK(*b.partite_parts == std::vector<int>{1, 2, 2});
    CHECK(*b.partite_lower == 2);

    // the 4-path is 2-uniform but not complete multipartite (the 3-path is:
    // it equals the complete bipartite graph with parts {0,2} and {1})
    auto bp = bounds(hypergraph::build(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK_FALSE(bp.partite_parts.has_value());
    auto bp3 = bounds(hypergraph::build(3, {{0, 1}, {1, 2}}));
    CHECK(bp3.partite_parts.has_value());

    // complete graph = t-partite with all parts singletons
    auto bk = bounds(hypergraph::build(3, {{0, 1}, {0, 2}, {1, 2}}));
    REQUIRE(bk.partite_parts.has_value());
    CHECK(*bk.partite_parts == std::vector<int>{1, 1, 1});
}

TEST_CASE("lambda on fixed instances") {
    CHECK(lambda_exact(hypergraph::build(2, {{0, 1}})).lambda == 1);
    CHECK(lambda_exact(hypergraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})).lambda == 2);
    CHECK(lambda_exact(hypergraph::build(5, {{0, 1, 2}, {2, 3, 4}})).lambda == 2);
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> all(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            all[static_cast<size_t>(i)] = i;
        CHECK(lambda_exact(hypergraph::build(n, {all})).lambda == n - 1);
    }

    auto cert = lambda_exact(ten_vertex_chain());
    CHECK(cert.lambda == 6);
    CHECK(cert.set == std::vector<int>{0, 1, 3, 5, 7, 8});
    CHECK(cert.report.valid());
    CHECK(cert.warnings.empty());
}

TEST_CASE("solver matches brute force including the certificate") {
    std::mt19937 rng(911);
    for (int trial = 0; trial < 30; ++trial) {
        auto inst = bf::random_connected_sperner(rng, 9, 5);
        hypergraph h = hypergraph::build(inst.n, inst.edges);
        auto cert = lambda_exact(h);
        auto want = bf::lambda_set(inst.n, inst.edges);
        CHECK(cert.lambda == static_cast<int>(want.size()));
        CHECK(cert.set == want);
        CHECK(bf::is_ld(inst.n, inst.edges, cert.set));
    }
}

TEST_CASE("solver honors the size cap") {
    std::vector<edge_t> edges;
    for (int i = 0; i + 1 < 30; ++i)
        edges.push_back({i, i + 1});
    hypergraph p30 = hypergraph::build(30, std::move(edges));
    CHECK_THROWS_AS(lambda_exact(p30), error);
    solve_options relaxed;
    relaxed.max_n = 30;
    CHECK(lambda_exact(p30, relaxed).lambda == 12); // ceil(60/5)
    solve_options huge;
    huge.max_n = 100;
    std::vector<edge_t> chain;
    for (int i = 0; i + 1 < 70; ++i)
        chain.push_back({i, i + 1});
    CHECK_THROWS_AS(lambda_exact(hypergraph::build(70, std::move(chain)), huge), error);
}

TEST_CASE("solver warns on disconnected input but still solves") {
    hypergraph h = hypergraph::build(4, {{0, 1}, {2, 3}});
    auto cert = lambda_exact(h);
    CHECK_FALSE(cert.warnings.empty());
    CHECK(cert.lambda == static_cast<int>(bf::lambda(4, {{0, 1}, {2, 3}})));
    CHECK(cert.report.valid());
}

TEST_CASE("all-but-one-per-part set fails for two parts with a singleton") {
    // complete bipartite with parts {0} and {1,2}: the construction keeps
    // only vertex 1, which leaves vertex 2 undominated
    family_spec s;
    s.kind = family_kind::complete_tpartite;
    s.r = 2;
    s.parts = {1, 2};
    auto c = construct_ld_set(s);
    CHECK(c.set == std::vector<int>{1});
    auto rep = verify_ld(generate(s), c.set);
    CHECK(rep.verdict == ld_verdict::not_dominating);
    REQUIRE(rep.witness_vertex.has_value());
    CHECK(*rep.witness_vertex == 2);
    // lambda is 2 here, not the formula's 1
    CHECK(lambda_exact(generate(s)).lambda == 2);
}
