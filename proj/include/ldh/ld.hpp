#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ldh/hypergraph.hpp"

namespace ldh {

// S is locating-dominating iff for every pair u != v outside S:
//   {} != N(u) cap S != N(v) cap S != {}.
// With at most one vertex outside S there is no pair, so S is valid.
enum class ld_verdict { valid, not_dominating, not_locating };

const char* ld_verdict_name(ld_verdict v);

struct ld_report {
    ld_verdict verdict = ld_verdict::valid;
    // Set for not_dominating: a vertex outside S with empty trace.
    std::optional<int> witness_vertex;
    // Set for not_locating: the lexicographically smallest pair (u,v), u<v,
    // outside S with equal nonempty traces.
    std::optional<std::pair<int, int>> witness_pair;
    // For every v outside S (ascending), its trace N(v) cap S.
    std::vector<std::pair<int, std::vector<int>>> traces;

    bool valid() const { return verdict == ld_verdict::valid; }
};

// Outside pairs (u,v), u<v, are scanned in lexicographic order and the first
// failing pair decides the verdict: an empty trace on either side reports
// not_dominating with that vertex; equal nonempty traces report not_locating
// with the pair. This makes the witness deterministic even when both kinds
// of failure are present. Throws bad_vertex_id on out-of-range members of s.
ld_report verify_ld(const hypergraph& h, const std::vector<int>& s);

struct bounds_report {
    int lower_coincident = 0; // sum over cells of (|cell|-1)
    int upper_trivial = 0;    // n - 1

    // n - max_packing, valid when the instance is linear and every edge has
    // at least two degree-one vertices. Flags reported either way.
    bool packing_linear = false;
    bool packing_pendants = false; // every edge has >= 2 degree-one vertices
    std::optional<int> packing_number;
    std::optional<int> upper_packing;

    // Filled when the instance is a complete t-partite uniform hypergraph:
    // all r-subsets of V meeting each part at most once, t >= 2, r >= 2.
    std::optional<std::vector<int>> partite_parts; // sizes, in vertex-id order
    std::optional<int> partite_lower;              // sum of (n_i - 1)
};

bounds_report bounds(const hypergraph& h);

struct lambda_certificate {
    int lambda = 0;
    std::vector<int> set; // lexicographically smallest minimum LD set
    ld_report report;     // verify_ld(h, set), always valid
    std::vector<std::string> warnings;
};

struct solve_options {
    int max_n = 24; // refuse larger instances (instance_too_large)
};

// Exact minimum via ascending-cardinality search. From every class of
// closed twins (N[u] == N[v]) all members except the largest are forced
// into the candidate set: swapping two closed twins is an adjacency
// automorphism, so the lexicographically smallest minimum LD set never
// omits a non-maximal class member. The search therefore starts at
// cardinality n - #classes (which is >= lower_coincident) and enumerates
// subsets of the class maxima in lexicographic order; the first valid
// candidate is the global lexicographically-smallest minimum LD set.
lambda_certificate lambda_exact(const hypergraph& h, solve_options opts = {});

} // namespace ldh
