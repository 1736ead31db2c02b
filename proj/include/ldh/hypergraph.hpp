#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ldh/error.hpp"

namespace ldh {

// Vertices are dense 0-based ids. An edge is a sorted duplicate-free id
// vector; the edge list keeps input order with exact duplicates collapsed
// (first occurrence wins).
using edge_t = std::vector<int>;

struct build_options {
    bool require_sperner = false;   // reject edges contained in other edges
    bool require_connected = false; // reject instances with >1 component
};

class hypergraph {
public:
    // Validates and normalizes. Throws:
    //   bad_vertex_id      id outside [0,n) or n < 1
    //   empty_edge         an edge with no vertices
    //   uncovered_vertex   some vertex lies in no edge
    //   not_sperner        only with require_sperner
    //   not_connected      only with require_connected
    static hypergraph build(int n, std::vector<edge_t> edges, build_options opts = {});
    static hypergraph build(int n, std::vector<edge_t> edges, std::vector<std::string> labels,
                            build_options opts = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const edge_t& edge(int j) const { return edges_[static_cast<size_t>(j)]; }
    const std::vector<edge_t>& edges() const { return edges_; }

    // Ascending edge indices containing v.
    const std::vector<int>& incident_edges(int v) const;
    int degree(int v) const;
    bool is_pendant(int v) const { return degree(v) == 1; }

    // Open neighborhood N(v) (sorted, v excluded) or closed N[v].
    std::vector<int> neighborhood(int v, bool closed = false) const;
    // Bit i set iff i in N(v) / N[v]. Only valid when vertex_count() <= 64.
    uint64_t neighborhood_mask(int v, bool closed = false) const;
    bool adjacent(int u, int v) const; // share at least one edge, u != v

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const { return labels_[static_cast<size_t>(v)]; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    hypergraph() = default;

    int n_ = 0;
    std::vector<edge_t> edges_;
    std::vector<std::vector<int>> incidence_; // per vertex, ascending edge indices
    std::vector<std::vector<int>> open_adj_;  // per vertex, sorted open neighborhood
    std::vector<uint64_t> open_mask_;         // empty when n_ > 64
    std::vector<std::string> labels_;         // empty when unlabeled
};

struct structure_profile {
    int rank = 0;            // max edge size
    bool is_uniform = false; // all edges the same size
    int uniform_k = 0;       // that size, 0 if not uniform
    bool is_linear = false;  // pairwise |Ei cap Ej| <= 1
    bool is_sperner = false; // no edge contained in another
    bool is_connected = false;
    bool is_complete = false; // every vertex pair inside some edge
    int max_degree = 0;
    bool is_regular = false; // all degrees equal
    int regular_degree = 0;  // that degree, 0 if not regular
};

structure_profile classify(const hypergraph& h);

// True iff every pair of distinct edges intersects in at most one vertex.
bool is_linear(const hypergraph& h);
// True iff no edge is a subset of a different edge.
bool is_sperner(const hypergraph& h);
// Connectivity under "share an edge" adjacency.
bool is_connected(const hypergraph& h);

} // namespace ldh
