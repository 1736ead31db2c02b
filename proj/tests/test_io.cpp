#include "doctest.h"

#include "ldh/families.hpp"
#include "ldh/io.hpp"

using namespace ldh;

TEST_CASE("parse accepts the documented format") {
    hypergraph h = parse_hypergraph("# comment line\n"
                                    "vertices 4\n"
                                    "\n"
                                    "edge 0 1 2   # trailing comment\n"
                                    "edge 2 3\n");
    CHECK(h.vertex_count() == 4);
    REQUIRE(h.edge_count() == 2);
    CHECK(h.edge(0) == edge_t{0, 1, 2});
    CHECK(h.edge(1) == edge_t{2, 3});
}

TEST_CASE("parse reports line numbers on errors") {
    auto expect_error = [](const std::string& text, errc code, const std::string& fragment) {
        try {
            parse_hypergraph(text);
            FAIL("expected a parse failure for: ", text);
        } catch (const error& e) {
            CHECK(e.code() == code);
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };

    expect_error("edge 0 1\n", errc::syntax_error, "line 1");
    expect_error("vertices 2\nvertices 3\n", errc::syntax_error, "line 2");
    expect_error("vertices 2\nedge 0 x\n", errc::syntax_error, "line 2");
    expect_error("vertices\nedge 0 1\n", errc::syntax_error, "line 1");
    expect_error("vertices 2\nbogus 0\n", errc::syntax_error, "line 2");
    expect_error("vertices 2\n", errc::uncovered_vertex, "");
    expect_error("vertices 2\nedge 0 2\n", errc::bad_vertex_id, "");
    expect_error("vertices 3\nedge 0 1\n", errc::uncovered_vertex, "");
}

TEST_CASE("parse honors build options") {
    build_options sperner;
    sperner.require_sperner = true;
    CHECK_THROWS_AS(parse_hypergraph("vertices 3\nedge 0 1 2\nedge 0 1\n", sperner), error);
}

TEST_CASE("serialization is bit-exact and round-trips") {
    hypergraph h = hypergraph::build(4, {{2, 1, 0}, {3, 2}});
    CHECK(serialize_hypergraph(h) == "vertices 4\nedge 0 1 2\nedge 2 3\n");

    std::vector<family_spec> grid;
    family_spec p;
    p.kind = family_kind::hyperpath;
    p.m = 3;
    p.k = 4;
    grid.push_back(p);
    family_spec c;
    c.kind = family_kind::hypercycle;
    c.m = 4;
    c.k = 3;
    grid.push_back(c);
    family_spec t;
    t.kind = family_kind::complete_tpartite;
    t.r = 2;
    t.parts = {1, 2, 2};
    grid.push_back(t);
    family_spec s;
    s.kind = family_kind::simple_cycle;
    s.n = 6;
    grid.push_back(s);

    for (const auto& spec : grid) {
        hypergraph g = generate(spec);
        std::string text = serialize_hypergraph(g);
        hypergraph back = parse_hypergraph(text);
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
        CHECK(serialize_hypergraph(back) == text);
    }
}
