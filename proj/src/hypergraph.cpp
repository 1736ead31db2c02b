#include "ldh/hypergraph.hpp"

#include <algorithm>
#include <set>

namespace ldh {

const char* errc_name(errc c) {
    switch (c) {
    case errc::empty_edge: return "EmptyEdge";
    case errc::uncovered_vertex: return "UncoveredVertex";
    case errc::not_sperner: return "NotSperner";
    case errc::not_connected: return "NotConnected";
    case errc::bad_vertex_id: return "BadVertexId";
    case errc::bad_family_params: return "BadFamilyParams";
    case errc::instance_too_large: return "InstanceTooLarge";
    case errc::bad_k: return "BadK";
    case errc::not_a_hypertree: return "NotAHypertree";
    case errc::no_construction_available: return "NoConstructionAvailable";
    case errc::construction_precondition_failed: return "ConstructionPreconditionFailed";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_theorem: return "UnknownTheorem";
    case errc::range_too_large: return "RangeTooLarge";
    }
    return "Error";
}

void fail(errc c, const std::string& msg) {
    throw error(c, std::string(errc_name(c)) + ": " + msg);
}

namespace {

bool edge_subset(const edge_t& a, const edge_t& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

hypergraph hypergraph::build(int n, std::vector<edge_t> edges, build_options opts) {
    return build(n, std::move(edges), {}, opts);
}

hypergraph hypergraph::build(int n, std::vector<edge_t> edges, std::vector<std::string> labels,
                             build_options opts) {
    if (n < 1)
        fail(errc::bad_vertex_id, "vertex count must be at least 1, got " + std::to_string(n));
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        fail(errc::bad_vertex_id, "label count " + std::to_string(labels.size()) +
                                      " does not match vertex count " + std::to_string(n));

    hypergraph h;
    h.n_ = n;
    h.labels_ = std::move(labels);

    // Normalize: sort ids inside each edge, drop repeats, reject bad ids,
    // collapse exact duplicate edges keeping first occurrence.
    std::set<edge_t> seen;
    for (auto& e : edges) {
        if (e.empty())
            fail(errc::empty_edge, "edge " + std::to_string(h.edges_.size()) + " has no vertices");
        for (int v : e)
            if (v < 0 || v >= n)
                fail(errc::bad_vertex_id,
                     "vertex " + std::to_string(v) + " outside [0," + std::to_string(n) + ")");
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (seen.insert(e).second)
            h.edges_.push_back(std::move(e));
    }

    h.incidence_.assign(static_cast<size_t>(n), {});
    for (size_t j = 0; j < h.edges_.size(); ++j)
        for (int v : h.edges_[j])
            h.incidence_[static_cast<size_t>(v)].push_back(static_cast<int>(j));

    for (int v = 0; v < n; ++v)
        if (h.incidence_[static_cast<size_t>(v)].empty())
            fail(errc::uncovered_vertex, "vertex " + std::to_string(v) + " lies in no edge");

    h.open_adj_.assign(static_cast<size_t>(n), {});
    for (int v = 0; v < n; ++v) {
        auto& adj = h.open_adj_[static_cast<size_t>(v)];
        for (int j : h.incidence_[static_cast<size_t>(v)])
            for (int u : h.edges_[static_cast<size_t>(j)])
                if (u != v)
                    adj.push_back(u);
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    if (n <= 64) {
        h.open_mask_.assign(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            for (int u : h.open_adj_[static_cast<size_t>(v)])
                h.open_mask_[static_cast<size_t>(v)] |= uint64_t{1} << u;
    }

    if (opts.require_sperner && !is_sperner(h)) {
        for (size_t i = 0; i < h.edges_.size(); ++i)
            for (size_t j = 0; j < h.edges_.size(); ++j)
                if (i != j && edge_subset(h.edges_[i], h.edges_[j]))
                    fail(errc::not_sperner, "edge " + std::to_string(i) +
                                                " is contained in edge " + std::to_string(j));
    }
    if (opts.require_connected && !is_connected(h))
        fail(errc::not_connected, "hypergraph has more than one component");

    return h;
}

const std::vector<int>& hypergraph::incident_edges(int v) const {
    if (v < 0 || v >= n_)
        fail(errc::bad_vertex_id, "vertex " + std::to_string(v));
    return incidence_[static_cast<size_t>(v)];
}

int hypergraph::degree(int v) const { return static_cast<int>(incident_edges(v).size()); }

std::vector<int> hypergraph::neighborhood(int v, bool closed) const {
    if (v < 0 || v >= n_)
        fail(errc::bad_vertex_id, "vertex " + std::to_string(v));
    std::vector<int> nb = open_adj_[static_cast<size_t>(v)];
    if (closed) {
        nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
    }
    return nb;
}

uint64_t hypergraph::neighborhood_mask(int v, bool closed) const {
    if (v < 0 || v >= n_)
        fail(errc::bad_vertex_id, "vertex " + std::to_string(v));
    if (n_ > 64)
        fail(errc::instance_too_large, "neighborhood masks need n <= 64");
    uint64_t m = open_mask_[static_cast<size_t>(v)];
    if (closed)
        m |= uint64_t{1} << v;
    return m;
}

bool hypergraph::adjacent(int u, int v) const {
    if (u == v)
        return false;
    const auto& adj = open_adj_[static_cast<size_t>(u)];
    return std::binary_search(adj.begin(), adj.end(), v);
}

bool is_linear(const hypergraph& h) {
    const auto& es = h.edges();
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
            edge_t tmp;
            std::set_intersection(es[i].begin(), es[i].end(), es[j].begin(), es[j].end(),
                                  std::back_inserter(tmp));
            if (tmp.size() > 1)
                return false;
        }
    return true;
}

bool is_sperner(const hypergraph& h) {
    const auto& es = h.edges();
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = 0; j < es.size(); ++j)
            if (i != j && edge_subset(es[i], es[j]))
                return false;
    return true;
}

bool is_connected(const hypergraph& h) {
    int n = h.vertex_count();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : h.neighborhood(v))
            if (!seen[static_cast<size_t>(u)]) {
                seen[static_cast<size_t>(u)] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == n;
}

structure_profile classify(const hypergraph& h) {
    structure_profile p;
    int n = h.vertex_count();

    p.rank = 0;
    p.is_uniform = true;
    int first = static_cast<int>(h.edge(0).size());
    for (const auto& e : h.edges()) {
        p.rank = std::max(p.rank, static_cast<int>(e.size()));
        if (static_cast<int>(e.size()) != first)
            p.is_uniform = false;
    }
    p.uniform_k = p.is_uniform ? first : 0;

    p.is_linear = is_linear(h);
    p.is_sperner = is_sperner(h);
    p.is_connected = is_connected(h);

    p.is_complete = true;
    for (int v = 0; v < n && p.is_complete; ++v)
        if (static_cast<int>(h.neighborhood(v).size()) != n - 1)
            p.is_complete = false;

    p.max_degree = 0;
    p.is_regular = true;
    int d0 = h.degree(0);
    for (int v = 0; v < n; ++v) {
        p.max_degree = std::max(p.max_degree, h.degree(v));
        if (h.degree(v) != d0)
            p.is_regular = false;
    }
    p.regular_degree = p.is_regular ? d0 : 0;
    return p;
}

} // namespace ldh
