#pragma once

#include <string>
#include <vector>

#include "ldh/hypergraph.hpp"

namespace ldh {

enum class family_kind {
    hyperpath,        // m edges of size k, consecutive edges share `overlap` vertices
    hypercycle,       // as hyperpath but cyclic (edge m wraps to edge 1)
    hyperstar,        // m edges = center ∪ petal_i, petals pairwise disjoint
    complete_tpartite,// all r-subsets meeting each part at most once
    complete,         // single edge on n vertices
    simple_path,      // 2-uniform path on n vertices
    simple_cycle,     // 2-uniform cycle on n vertices
};

const char* family_kind_name(family_kind k);

struct family_spec {
    family_kind kind = family_kind::hyperpath;
    int m = 0;                    // edge count (paths, cycles, stars)
    int k = 0;                    // edge size (paths, cycles; optional for stars)
    int overlap = 1;              // consecutive intersection size (paths, cycles)
    int center_size = 1;          // hyperstar
    std::vector<int> petal_sizes; // hyperstar; empty means all k - center_size
    int r = 0;                    // complete_tpartite uniformity
    std::vector<int> parts;       // complete_tpartite part sizes
    int n = 0;                    // complete, simple_path, simple_cycle
};

// Vertex numbering is fixed so closed-form constructions can name vertices:
// shared vertices first, then degree-one vertices per edge in edge order.
//   hyperpath:  overlaps O_1..O_{m-1} get ids 0..(m-1)*o-1, then private
//               vertices of E_1, E_2, ..., E_m ascending.
//   hypercycle: overlaps O_1..O_m (O_m = E_m cap E_1) get ids 0..m*o-1,
//               then private vertices of E_1..E_m ascending.
//   hyperstar:  center 0..c-1, then petal vertices of E_1..E_m ascending.
//   complete_tpartite: parts occupy consecutive id ranges in input order;
//               edges are all valid r-subsets in lexicographic order.
// Throws bad_family_params when the parameters violate the family's domain
// (sizes, overlap bounds, Sperner-ness of the result).
hypergraph generate(const family_spec& spec);

struct oracle_prediction {
    bool preconditions_met = false;
    int value = 0;          // meaningful only when preconditions_met
    std::string theorem;    // formula identifier, e.g. "cor-2.11"
    std::string reason;     // why preconditions failed, otherwise empty
};

// Closed-form lambda where a formula's stated preconditions hold. The most
// specific applicable formula wins; precedence is documented in the source
// next to the dispatch. Families without a matching formula (for example
// complete t-partite) report preconditions_met = false.
oracle_prediction predicted_lambda(const family_spec& spec);

struct construction {
    std::vector<int> set;   // ascending vertex ids in generate(spec)'s numbering
    std::string theorem;    // construction identifier, e.g. "thm-2.33"
};

// Explicit LD set for the generated instance, using the closed-form
// constructions. Throws no_construction_available when no construction is
// implemented for the given family, construction_precondition_failed when one exists
// but its hypothesis fails (e.g. complete t-partite with two singleton parts).
construction construct_ld_set(const family_spec& spec);

} // namespace ldh
