#pragma once

#include <vector>

#include "ldh/hypergraph.hpp"

namespace ldh {

// One nonempty coincidence cell: the vertices of degree `degree` whose
// incident edge set is exactly `edge_set` (ascending edge indices).
struct coincident_cell {
    int degree = 0;
    std::vector<int> edge_set;
    std::vector<int> members; // ascending vertex ids
};

// Cells ordered by ascending degree, then lexicographic edge_set. The cells
// partition the vertex set; only nonempty cells are materialized.
struct coincident_partition_t {
    std::vector<coincident_cell> cells;
    int cell_count() const { return static_cast<int>(cells.size()); }
    // Sum over cells of (|cell| - 1): n - #cells. Lower bound on lambda.
    int sum_all_but_one() const;
};

coincident_partition_t coincident_partition(const hypergraph& h);

// Classes of the relation N[u] == N[v], ordered by smallest member;
// members ascending. Singleton classes included.
struct twin_classes_t {
    std::vector<std::vector<int>> classes;
    int class_count() const { return static_cast<int>(classes.size()); }
};

twin_classes_t closed_twin_classes(const hypergraph& h);

// Classes of the relation E(u) == E(v) (same incident edge set), i.e. the
// coincidence cells keyed only by edge set. Levels ordered by their
// representative (smallest member), ascending.
struct natural_partition_t {
    std::vector<std::vector<int>> levels;
    std::vector<int> representatives; // representatives[i] = min(levels[i])
    int level_count() const { return static_cast<int>(levels.size()); }
};

natural_partition_t natural_partition(const hypergraph& h);

// A vertex packing: pairwise non-adjacent vertices (no two share an edge).
struct packing_t {
    std::vector<int> members; // ascending
    int size() const { return static_cast<int>(members.size()); }
};

// Maximum-cardinality packing; among maximum packings the lexicographically
// smallest member list is returned. Exhaustive branch and bound; requires
// vertex_count() <= 64 (instance_too_large otherwise).
packing_t max_packing(const hypergraph& h);

} // namespace ldh
