#include "ldh/partitions.hpp"

#include <algorithm>
#include <map>

namespace ldh {

int coincident_partition_t::sum_all_but_one() const {
    int s = 0;
    for (const auto& c : cells)
        s += static_cast<int>(c.members.size()) - 1;
    return s;
}

coincident_partition_t coincident_partition(const hypergraph& h) {
    // Key by (degree, incident edge set); incident_edges is already the
    // canonical ascending signature.
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> groups;
    for (int v = 0; v < h.vertex_count(); ++v) {
        const auto& sig = h.incident_edges(v);
        groups[{static_cast<int>(sig.size()), sig}].push_back(v);
    }
    coincident_partition_t part;
    for (auto& [key, members] : groups)
        part.cells.push_back({key.first, key.second, std::move(members)});
    return part;
}

twin_classes_t closed_twin_classes(const hypergraph& h) {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int v = 0; v < h.vertex_count(); ++v)
        groups[h.neighborhood(v, /*closed=*/true)].push_back(v);
    std::vector<std::vector<int>> classes;
    classes.reserve(groups.size());
    for (auto& [nb, members] : groups)
        classes.push_back(std::move(members));
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return {std::move(classes)};
}

natural_partition_t natural_partition(const hypergraph& h) {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int v = 0; v < h.vertex_count(); ++v)
        groups[h.incident_edges(v)].push_back(v);
    natural_partition_t np;
    np.levels.reserve(groups.size());
    for (auto& [sig, members] : groups)
        np.levels.push_back(std::move(members));
    std::sort(np.levels.begin(), np.levels.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (const auto& lvl : np.levels)
        np.representatives.push_back(lvl.front());
    return np;
}

namespace {

// Largest independent set in the share-an-edge graph. Pass 1 computes the
// maximum size; pass 2 replays the include-smallest-first DFS and keeps the
// first set reaching that size, which is the lexicographically smallest
// (the include branch of the smaller vertex is always explored first).
struct packing_search {
    int n;
    const std::vector<uint64_t>& conflict; // open neighborhood masks

    int best = 0;
    std::vector<int> current;

    void find_best(int next, uint64_t blocked) {
        best = std::max(best, static_cast<int>(current.size()));
        for (int v = next; v < n; ++v) {
            if (static_cast<int>(current.size()) + (n - v) <= best)
                return; // even taking all remaining vertices cannot improve
            if (blocked & (uint64_t{1} << v))
                continue;
            current.push_back(v);
            find_best(v + 1, blocked | conflict[static_cast<size_t>(v)]);
            current.pop_back();
        }
    }

    int target = 0;
    std::vector<int> found;

    bool find_lex_first(int next, uint64_t blocked) {
        if (static_cast<int>(current.size()) == target) {
            found = current;
            return true;
        }
        for (int v = next; v < n; ++v) {
            if (static_cast<int>(current.size()) + (n - v) < target)
                return false; // too few vertices left to reach the target
            if (blocked & (uint64_t{1} << v))
                continue;
            current.push_back(v);
            if (find_lex_first(v + 1, blocked | conflict[static_cast<size_t>(v)]))
                return true;
            current.pop_back();
        }
        return false;
    }
};

} // namespace

packing_t max_packing(const hypergraph& h) {
    int n = h.vertex_count();
    if (n > 64)
        fail(errc::instance_too_large, "packing search needs n <= 64, got " + std::to_string(n));
    std::vector<uint64_t> conflict(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        conflict[static_cast<size_t>(v)] = h.neighborhood_mask(v, /*closed=*/false);

    packing_search search{n, conflict, 0, {}, 0, {}};
    search.find_best(0, 0);
    search.target = search.best;
    search.current.clear();
    search.find_lex_first(0, 0);
    return {std::move(search.found)};
}

} // namespace ldh
