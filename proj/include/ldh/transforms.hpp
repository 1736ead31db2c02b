#pragma once

#include <vector>

#include "ldh/hypergraph.hpp"

namespace ldh {

// 2-uniform hypergraph on V(h) with an edge {u,v} for every pair sharing at
// least one edge of h. Edges in lexicographic order. Neighborhoods (and so
// locating-domination) are preserved. Throws uncovered_vertex when h has an
// isolated vertex (a vertex whose only edge is a singleton).
hypergraph primal_middle(const hypergraph& h);

// Dual hypergraph: one vertex per edge of h (id j for edge j, labeled after
// it), one edge per vertex v of h holding the edges incident to v. Exact
// duplicate dual edges are collapsed (first occurrence wins). The dual of a
// Sperner hypergraph need not be Sperner.
hypergraph dual(const hypergraph& h);

// Edges of size <= k kept as-is; larger edges replaced by all their
// k-subsets (lexicographic). Duplicates collapsed. Requires k >= 2 (bad_k):
// 1-sections would break the coverage/adjacency semantics.
hypergraph k_section(const hypergraph& h, int k);

struct level_hypergraph_t {
    hypergraph quotient;              // vertex i = level i (by ascending representative)
    std::vector<int> representatives; // original id of each level's smallest member
    std::vector<int> level_of;        // original vertex id -> level index
    bool source_is_hypertree = false;
};

// Quotient of h by the natural partition (levels of equal incident edge
// sets), each level contracted to its smallest member. Edge order follows
// h; duplicate quotient edges cannot arise. Labels carry over from the
// representatives when present.
level_hypergraph_t level_hypergraph(const hypergraph& h);

// True iff h is connected and has no Berge cycle: a sequence of >= 3
// distinct edges E_1..E_l with pairwise-distinct linking vertices
// v_i in E_i cap E_{i+1} (indices cyclic). Equivalently, the incidence
// bipartite graph has no cycle of length >= 6. Exhaustive DFS with a step
// cap; throws instance_too_large if the cap is hit.
bool is_hypertree(const hypergraph& h);

// The degree-one vertices of hl.quotient, as quotient vertex ids. This is
// the pendant-representative set associated with hypertrees; callers should
// verify_ld the result, since interior levels of long paths are not
// dominated by it. Throws not_a_hypertree when the source was not one.
std::vector<int> pendant_ld_set(const level_hypergraph_t& hl);

// Drops exact duplicate edges and edges strictly contained in another edge;
// survivors keep their input order. Idempotent. Neighborhoods are unchanged
// (a contained edge only repeats adjacencies its superset already provides).
hypergraph reduce_sperner(const hypergraph& h);

} // namespace ldh
