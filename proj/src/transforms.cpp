#include "ldh/transforms.hpp"

#include <algorithm>
#include <set>

#include "ldh/partitions.hpp"

namespace ldh {

hypergraph primal_middle(const hypergraph& h) {
    int n = h.vertex_count();
    std::vector<edge_t> pairs;
    std::vector<bool> covered(static_cast<size_t>(n), false);
    for (int u = 0; u < n; ++u)
        for (int v : h.neighborhood(u))
            if (v > u) {
                pairs.push_back({u, v});
                covered[static_cast<size_t>(u)] = covered[static_cast<size_t>(v)] = true;
            }
    // A vertex whose only incidences are singleton edges has no pair. The
    // middle graph leaves it isolated; a singleton edge encodes that under
    // the coverage axiom without changing any open neighborhood.
    for (int u = 0; u < n; ++u)
        if (!covered[static_cast<size_t>(u)])
            pairs.push_back({u});
    return hypergraph::build(n, std::move(pairs), h.labels());
}

hypergraph dual(const hypergraph& h) {
    int m = h.edge_count();
    std::vector<edge_t> dual_edges;
    for (int v = 0; v < h.vertex_count(); ++v)
        dual_edges.push_back(h.incident_edges(v)); // already ascending
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j)
        labels.push_back("e" + std::to_string(j + 1));
    // build() collapses duplicate dual edges (vertices with equal incidence)
    return hypergraph::build(m, std::move(dual_edges), std::move(labels));
}

hypergraph k_section(const hypergraph& h, int k) {
    if (k < 2)
        fail(errc::bad_k, "k-section needs k >= 2, got " + std::to_string(k));
    std::vector<edge_t> out;
    for (const auto& e : h.edges()) {
        if (static_cast<int>(e.size()) <= k) {
            out.push_back(e);
            continue;
        }
        // all k-subsets of e, lexicographic
        std::vector<int> idx(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
            idx[static_cast<size_t>(i)] = i;
        int sz = static_cast<int>(e.size());
        while (true) {
            edge_t sub;
            for (int i : idx)
                sub.push_back(e[static_cast<size_t>(i)]);
            out.push_back(std::move(sub));
            int i = k - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == sz - k + i)
                --i;
            if (i < 0)
                break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j) - 1] + 1;
        }
    }
    return hypergraph::build(h.vertex_count(), std::move(out), h.labels());
}

level_hypergraph_t level_hypergraph(const hypergraph& h) {
    auto np = natural_partition(h);
    std::vector<int> level_of(static_cast<size_t>(h.vertex_count()), -1);
    for (size_t lv = 0; lv < np.levels.size(); ++lv)
        for (int v : np.levels[lv])
            level_of[static_cast<size_t>(v)] = static_cast<int>(lv);

    // Each edge maps to the set of levels it meets. A level is contained in
    // every edge its members share, so distinct edges stay distinct.
    std::vector<edge_t> edges;
    for (const auto& e : h.edges()) {
        edge_t q;
        for (int v : e)
            q.push_back(level_of[static_cast<size_t>(v)]);
        std::sort(q.begin(), q.end());
        q.erase(std::unique(q.begin(), q.end()), q.end());
        edges.push_back(std::move(q));
    }
    std::vector<std::string> labels;
    if (h.has_labels())
        for (int rep : np.representatives)
            labels.push_back(h.label(rep));
    hypergraph quotient =
        hypergraph::build(static_cast<int>(np.levels.size()), std::move(edges), std::move(labels));
    return level_hypergraph_t{std::move(quotient), std::move(np.representatives),
                              std::move(level_of), is_hypertree(h)};
}

namespace {

// DFS over edge sequences looking for a Berge cycle: >= 3 distinct edges
// chained by pairwise-distinct linking vertices, closing back to the start
// edge. Edges and linking vertices are tracked in masks. The start edge is
// the smallest edge index on the cycle, which prevents revisiting the same
// cycle from every position.
struct berge_search {
    const hypergraph& h;
    std::vector<uint64_t> edge_masks; // vertex mask per edge
    long steps = 0;
    static constexpr long step_cap = 4'000'000;

    explicit berge_search(const hypergraph& hg) : h(hg) {
        for (const auto& e : h.edges()) {
            uint64_t m = 0;
            for (int v : e)
                m |= uint64_t{1} << v;
            edge_masks.push_back(m);
        }
    }

    bool extend(int start, int cur, int depth, uint64_t used_vertices, uint64_t used_edges) {
        if (++steps > step_cap)
            fail(errc::instance_too_large, "Berge cycle search exceeded its step budget");
        // close the cycle: need an unused linking vertex shared with start
        if (depth >= 3) {
            uint64_t closing = edge_masks[static_cast<size_t>(cur)] &
                               edge_masks[static_cast<size_t>(start)] & ~used_vertices;
            if (closing)
                return true;
        }
        int m = h.edge_count();
        for (int nxt = start + 1; nxt < m; ++nxt) {
            if (used_edges & (uint64_t{1} << nxt))
                continue;
            uint64_t links = edge_masks[static_cast<size_t>(cur)] &
                             edge_masks[static_cast<size_t>(nxt)] & ~used_vertices;
            while (links) {
                uint64_t bit = links & (~links + 1);
                links ^= bit;
                if (extend(start, nxt, depth + 1, used_vertices | bit,
                           used_edges | (uint64_t{1} << nxt)))
                    return true;
            }
        }
        return false;
    }

    bool has_berge_cycle() {
        int m = h.edge_count();
        for (int start = 0; start < m; ++start)
            if (extend(start, start, 1, 0, uint64_t{1} << start))
                return true;
        return false;
    }
};

} // namespace

bool is_hypertree(const hypergraph& h) {
    if (!is_connected(h))
        return false;
    if (h.vertex_count() > 64 || h.edge_count() > 64)
        fail(errc::instance_too_large, "hypertree check needs n, m <= 64");
    if (h.edge_count() < 3)
        return true; // a Berge cycle needs at least three edges
    berge_search search(h);
    return !search.has_berge_cycle();
}

std::vector<int> pendant_ld_set(const level_hypergraph_t& hl) {
    if (!hl.source_is_hypertree)
        fail(errc::not_a_hypertree, "pendant LD sets are defined for level hypergraphs "
                                    "of hypertrees");
    std::vector<int> s;
    for (int v = 0; v < hl.quotient.vertex_count(); ++v)
        if (hl.quotient.degree(v) == 1)
            s.push_back(v);
    return s;
}

hypergraph reduce_sperner(const hypergraph& h) {
    const auto& es = h.edges();
    std::vector<edge_t> kept;
    for (size_t i = 0; i < es.size(); ++i) {
        bool drop = false;
        for (size_t j = 0; j < es.size() && !drop; ++j) {
            if (i == j)
                continue;
            bool contained =
                std::includes(es[j].begin(), es[j].end(), es[i].begin(), es[i].end());
            // strict containment drops i; build() already removed duplicates
            if (contained && es[i].size() < es[j].size())
                drop = true;
        }
        if (!drop)
            kept.push_back(es[i]);
    }
    return hypergraph::build(h.vertex_count(), std::move(kept), h.labels());
}

} // namespace ldh
