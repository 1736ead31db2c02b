#include "ldh/families.hpp"

#include <algorithm>
#include <numeric>

#include "ldh/partitions.hpp"

namespace ldh {

const char* family_kind_name(family_kind k) {
    switch (k) {
    case family_kind::hyperpath: return "hyperpath";
    case family_kind::hypercycle: return "hypercycle";
    case family_kind::hyperstar: return "hyperstar";
    case family_kind::complete_tpartite: return "tpartite";
    case family_kind::complete: return "complete";
    case family_kind::simple_path: return "path";
    case family_kind::simple_cycle: return "cycle";
    }
    return "?";
}

namespace {

void need(bool ok, const std::string& msg) {
    if (!ok)
        fail(errc::bad_family_params, msg);
}

// Effective petal sizes for a hyperstar spec (explicit list wins, else all
// petals have k - center_size vertices).
std::vector<int> star_petals(const family_spec& s) {
    if (!s.petal_sizes.empty()) {
        need(static_cast<int>(s.petal_sizes.size()) == s.m,
             "hyperstar needs one petal size per edge");
        for (int p : s.petal_sizes)
            need(p >= 1, "petal sizes must be >= 1");
        return s.petal_sizes;
    }
    need(s.k >= s.center_size + 1, "hyperstar needs k > center size (or explicit petal sizes)");
    return std::vector<int>(static_cast<size_t>(s.m), s.k - s.center_size);
}

void validate(const family_spec& s) {
    switch (s.kind) {
    case family_kind::hyperpath:
        need(s.m >= 1, "hyperpath needs m >= 1");
        need(s.overlap >= 1, "hyperpath needs overlap >= 1");
        need(s.k >= 2, "hyperpath needs k >= 2");
        if (s.m == 2)
            need(s.k >= s.overlap + 1, "hyperpath with m = 2 needs k > overlap");
        if (s.m >= 3)
            need(s.k >= 2 * s.overlap, "hyperpath needs k >= 2*overlap");
        break;
    case family_kind::hypercycle:
        need(s.m >= 3, "hypercycle needs m >= 3");
        need(s.overlap >= 1, "hypercycle needs overlap >= 1");
        need(s.k >= 2 * s.overlap, "hypercycle needs k >= 2*overlap");
        break;
    case family_kind::hyperstar:
        need(s.m >= 2, "hyperstar needs m >= 2");
        need(s.center_size >= 1, "hyperstar needs center size >= 1");
        star_petals(s);
        break;
    case family_kind::complete_tpartite:
        need(static_cast<int>(s.parts.size()) >= 2, "tpartite needs at least 2 parts");
        for (int p : s.parts)
            need(p >= 1, "part sizes must be >= 1");
        need(s.r >= 2, "tpartite needs r >= 2");
        need(s.r <= static_cast<int>(s.parts.size()), "tpartite needs r <= part count");
        break;
    case family_kind::complete:
        need(s.n >= 1, "complete needs n >= 1");
        break;
    case family_kind::simple_path:
        need(s.n >= 2, "path needs n >= 2");
        break;
    case family_kind::simple_cycle:
        need(s.n >= 3, "cycle needs n >= 3");
        break;
    }
}

// Shared id layout for hyperpaths/hypercycles: overlap blocks first, then
// the degree-one vertices of E_1..E_m. See the header comment.
struct chain_layout {
    int m, k, o;
    bool cyclic;

    int overlap_count() const { return cyclic ? m : m - 1; }
    int base() const { return overlap_count() * o; }
    // overlap i is E_i cap E_{i+1} (1-based; for cycles i = m wraps to E_1)
    int overlap_first(int i) const { return (i - 1) * o; }
    int priv_count(int i) const {
        if (cyclic)
            return k - 2 * o;
        if (m == 1)
            return k;
        return (i == 1 || i == m) ? k - o : k - 2 * o;
    }
    int priv_first(int i) const {
        int at = base();
        for (int j = 1; j < i; ++j)
            at += priv_count(j);
        return at;
    }
    int n() const { return priv_first(m) + priv_count(m); }

    edge_t edge(int i) const {
        edge_t e;
        auto add_overlap = [&](int idx) {
            for (int t = 0; t < o; ++t)
                e.push_back(overlap_first(idx) + t);
        };
        if (cyclic) {
            add_overlap(i == 1 ? m : i - 1);
            add_overlap(i);
        } else {
            if (i > 1)
                add_overlap(i - 1);
            if (i < m)
                add_overlap(i);
        }
        for (int t = 0; t < priv_count(i); ++t)
            e.push_back(priv_first(i) + t);
        return e;
    }
};

chain_layout layout_for(const family_spec& s) {
    return {s.m, s.k, s.overlap, s.kind == family_kind::hypercycle};
}

int ceil_2n_over_5(int n) { return (2 * n + 4) / 5; }

} // namespace

hypergraph generate(const family_spec& s) {
    validate(s);
    std::vector<edge_t> edges;
    switch (s.kind) {
    case family_kind::hyperpath:
    case family_kind::hypercycle: {
        chain_layout lay = layout_for(s);
        for (int i = 1; i <= s.m; ++i)
            edges.push_back(lay.edge(i));
        return hypergraph::build(lay.n(), std::move(edges));
    }
    case family_kind::hyperstar: {
        auto petals = star_petals(s);
        int c = s.center_size;
        edge_t center(static_cast<size_t>(c));
        std::iota(center.begin(), center.end(), 0);
        int at = c;
        for (int i = 0; i < s.m; ++i) {
            edge_t e = center;
            for (int t = 0; t < petals[static_cast<size_t>(i)]; ++t)
                e.push_back(at++);
            edges.push_back(std::move(e));
        }
        return hypergraph::build(at, std::move(edges));
    }
    case family_kind::complete_tpartite: {
        int n = std::accumulate(s.parts.begin(), s.parts.end(), 0);
        std::vector<int> part_of(static_cast<size_t>(n));
        {
            int v = 0;
            for (size_t p = 0; p < s.parts.size(); ++p)
                for (int t = 0; t < s.parts[p]; ++t)
                    part_of[static_cast<size_t>(v++)] = static_cast<int>(p);
        }
        // all r-subsets meeting each part at most once, lexicographic
        edge_t cur;
        std::vector<char> used(s.parts.size(), 0);
        auto rec = [&](auto&& self, int from) -> void {
            if (static_cast<int>(cur.size()) == s.r) {
                edges.push_back(cur);
                return;
            }
            for (int v = from; v < n; ++v) {
                int p = part_of[static_cast<size_t>(v)];
                if (used[static_cast<size_t>(p)])
                    continue;
                used[static_cast<size_t>(p)] = 1;
                cur.push_back(v);
                self(self, v + 1);
                cur.pop_back();
                used[static_cast<size_t>(p)] = 0;
            }
        };
        rec(rec, 0);
        return hypergraph::build(n, std::move(edges));
    }
    case family_kind::complete: {
        edge_t e(static_cast<size_t>(s.n));
        std::iota(e.begin(), e.end(), 0);
        edges.push_back(std::move(e));
        return hypergraph::build(s.n, std::move(edges));
    }
    case family_kind::simple_path: {
        for (int i = 0; i + 1 < s.n; ++i)
            edges.push_back({i, i + 1});
        return hypergraph::build(s.n, std::move(edges));
    }
    case family_kind::simple_cycle: {
        for (int i = 0; i < s.n; ++i)
            edges.push_back({i, (i + 1) % s.n});
        return hypergraph::build(s.n, std::move(edges));
    }
    }
    fail(errc::bad_family_params, "unknown family kind");
}

namespace {

oracle_prediction met(int value, const char* theorem) { return {true, value, theorem, ""}; }
oracle_prediction unmet(const char* theorem, const std::string& reason) {
    return {false, 0, theorem, reason};
}

} // namespace

// Formula precedence (most specific first):
//   simple paths/cycles, 2-uniform chains .... thm-2.32
//   single-edge chains ........................ lem-2.18 (the edge is complete)
//   3-uniform paths m in {2,3,4} .............. literal observed values
//   3-uniform paths m >= 5 .................... thm-2.33
//   3-uniform cycles m >= 6 ................... thm-2.34
//   k >= 4 unit-overlap paths / cycles ........ cor-2.11 / cor-2.12
//   half-overlap cycles (k = 2*overlap) ....... thm-2.13 (m >= 4 only; at
//       m = 3 the instance is complete, the formula does not hold there)
//   uniform linear hyperstars, m >= 3 ......... cor-2.17
//   hyperstars, all petals = 1, center >= 2 ... prop-2.15
//   hyperstars, all petals >= 2 ............... prop-2.16
//   complete .................................. lem-2.18
oracle_prediction predicted_lambda(const family_spec& s) {
    validate(s);
    switch (s.kind) {
    case family_kind::simple_path:
        return met(ceil_2n_over_5(s.n), "thm-2.32");
    case family_kind::simple_cycle:
        return met(ceil_2n_over_5(s.n), "thm-2.32");

    case family_kind::hyperpath: {
        if (s.m == 1)
            return met(s.k - 1, "lem-2.18");
        if (s.overlap != 1)
            return unmet("", "no closed form for overlap >= 2 hyperpaths (see check 2.14)");
        if (s.k == 2)
            return met(ceil_2n_over_5(s.m + 1), "thm-2.32");
        if (s.k == 3) {
            if (s.m == 2)
                return met(2, "obs-3uniform");
            if (s.m == 3)
                return met(3, "obs-3uniform");
            if (s.m == 4)
                return met(4, "obs-3uniform");
            int b = (s.m - 2) % 3;
            int a = (s.m - 2 - b) / 3;
            return met(2 * a + b + 2, "thm-2.33");
        }
        return met(s.m * (s.k - 3) + 2, "cor-2.11");
    }

    case family_kind::hypercycle: {
        if (s.overlap == 1) {
            if (s.k == 2)
                return met(ceil_2n_over_5(s.m), "thm-2.32");
            if (s.k == 3) {
                if (s.m < 6)
                    return unmet("thm-2.34", "3-uniform cycle formula needs m >= 6");
                int b = s.m % 3;
                int a = (s.m - b) / 3;
                return met(2 * a + b, "thm-2.34");
            }
            return met(s.m * (s.k - 3), "cor-2.12");
        }
        if (s.k == 2 * s.overlap && s.k >= 4) {
            if (s.m == 3)
                return unmet("thm-2.13",
                             "half-overlap formula needs m >= 4: at m = 3 every two vertices "
                             "share an edge and lambda = n - 1");
            return met(s.m * (s.k / 2 - 1), "thm-2.13");
        }
        return unmet("", "no closed form for this overlap");
    }

    case family_kind::hyperstar: {
        auto petals = star_petals(s);
        bool all_one = std::all_of(petals.begin(), petals.end(), [](int p) { return p == 1; });
        bool all_two_plus =
            std::all_of(petals.begin(), petals.end(), [](int p) { return p >= 2; });
        bool equal = std::all_of(petals.begin(), petals.end(),
                                 [&](int p) { return p == petals[0]; });
        int c = s.center_size;
        int n = c + std::accumulate(petals.begin(), petals.end(), 0);
        if (c == 1 && equal && petals[0] >= 2 && s.m >= 3)
            return met(s.m * (petals[0] - 1), "cor-2.17"); // k = petal + 1, value m(k-2)
        if (all_one && c >= 2)
            return met(n - 2, "prop-2.15");
        if (all_two_plus) {
            int sum = 0;
            for (int p : petals)
                sum += p - 1;
            return met(sum + c - 1, "prop-2.16");
        }
        return unmet("", "no closed form: petal sizes mix 1 with >= 2");
    }

    case family_kind::complete:
        return met(s.n - 1, "lem-2.18");

    case family_kind::complete_tpartite:
        return unmet("", "no closed form for complete t-partite; run lambda on the instance");
    }
    fail(errc::bad_family_params, "unknown family kind");
}

namespace {

// All members except the largest, for each nonempty coincidence cell. Valid
// whenever every edge has at least two degree-one vertices (each edge then
// keeps a degree-one cell member that pins down which edges contain an
// outside vertex).
construction cells_all_but_max(const hypergraph& h) {
    construction c;
    c.theorem = "thm-2.7";
    for (const auto& cell : coincident_partition(h).cells)
        for (size_t i = 0; i + 1 < cell.members.size(); ++i)
            c.set.push_back(cell.members[i]);
    std::sort(c.set.begin(), c.set.end());
    return c;
}

bool every_edge_two_pendants(const hypergraph& h) {
    for (const auto& e : h.edges()) {
        int pend = 0;
        for (int v : e)
            if (h.degree(v) == 1)
                ++pend;
        if (pend < 2)
            return false;
    }
    return true;
}

} // namespace

construction construct_ld_set(const family_spec& s) {
    validate(s);

    if (s.kind == family_kind::hyperpath && s.overlap == 1 && s.k == 3 && s.m >= 5) {
        chain_layout lay = layout_for(s);
        int b = (s.m - 2) % 3;
        int a = (s.m - 2 - b) / 3;
        construction c;
        c.theorem = "thm-2.33";
        c.set.push_back(lay.priv_first(1) + 1);   // second degree-one vertex of E_1
        c.set.push_back(lay.priv_first(s.m) + 1); // second degree-one vertex of E_m
        for (int i = 0; i < a; ++i) {
            c.set.push_back(lay.overlap_first(3 * i + 2)); // E_{3i+2} cap E_{3i+3}
            c.set.push_back(lay.overlap_first(3 * i + 3));
        }
        if (b >= 2)
            c.set.push_back(lay.overlap_first(s.m - 2));
        if (b >= 1)
            c.set.push_back(lay.overlap_first(s.m - 1));
        std::sort(c.set.begin(), c.set.end());
        return c;
    }

    if (s.kind == family_kind::hypercycle && s.overlap == 1 && s.k == 3 && s.m >= 6) {
        chain_layout lay = layout_for(s);
        int b = s.m % 3;
        int a = (s.m - b) / 3;
        construction c;
        c.theorem = "thm-2.34";
        for (int i = 0; i < a; ++i) {
            c.set.push_back(lay.overlap_first(3 * i + 1));
            c.set.push_back(lay.overlap_first(3 * i + 2));
        }
        if (b >= 2)
            c.set.push_back(lay.overlap_first(s.m - 1));
        if (b >= 1)
            c.set.push_back(lay.overlap_first(s.m));
        std::sort(c.set.begin(), c.set.end());
        return c;
    }

    if (s.kind == family_kind::complete_tpartite) {
        // One vertex dropped per part; LD iff at most one singleton part.
        std::vector<int> singletons;
        int at = 0;
        for (int p : s.parts) {
            if (p == 1)
                singletons.push_back(at);
            at += p;
        }
        if (singletons.size() >= 2)
            fail(errc::construction_precondition_failed,
                 "more than one singleton part: vertices " + std::to_string(singletons[0]) +
                     " and " + std::to_string(singletons[1]) +
                     " would keep equal traces in any all-but-one-per-part set");
        construction c;
        c.theorem = "thm-2.22";
        at = 0;
        for (int p : s.parts) {
            for (int v = at; v < at + p - 1; ++v)
                c.set.push_back(v);
            at += p;
        }
        return c;
    }

    if (s.kind == family_kind::hyperstar) {
        auto petals = star_petals(s);
        int c_sz = s.center_size;
        bool all_one = std::all_of(petals.begin(), petals.end(), [](int p) { return p == 1; });
        bool all_two_plus =
            std::all_of(petals.begin(), petals.end(), [](int p) { return p >= 2; });
        if (all_one && c_sz >= 2) {
            // center minus its largest id, petals minus the last petal
            construction c;
            c.theorem = "prop-2.15";
            for (int v = 0; v < c_sz - 1; ++v)
                c.set.push_back(v);
            for (int i = 0; i < s.m - 1; ++i)
                c.set.push_back(c_sz + i);
            return c;
        }
        if (all_two_plus) {
            // center minus its largest id, each petal minus its largest id
            construction c;
            c.theorem = "prop-2.16";
            for (int v = 0; v < c_sz - 1; ++v)
                c.set.push_back(v);
            int at = c_sz;
            for (int p : petals) {
                for (int v = at; v < at + p - 1; ++v)
                    c.set.push_back(v);
                at += p;
            }
            return c;
        }
        fail(errc::no_construction_available,
             "no construction for hyperstars mixing petal size 1 with a center of size 1");
    }

    if (s.kind == family_kind::complete) {
        construction c;
        c.theorem = "lem-2.18";
        for (int v = 0; v + 1 < s.n; ++v)
            c.set.push_back(v);
        return c;
    }

    if (s.kind == family_kind::hypercycle && s.k == 2 * s.overlap && s.k >= 4 && s.m >= 4) {
        // all but one vertex per overlap block
        chain_layout lay = layout_for(s);
        construction c;
        c.theorem = "thm-2.13";
        for (int i = 1; i <= s.m; ++i)
            for (int t = 0; t + 1 < s.overlap; ++t)
                c.set.push_back(lay.overlap_first(i) + t);
        std::sort(c.set.begin(), c.set.end());
        return c;
    }

    if (s.kind == family_kind::hyperpath || s.kind == family_kind::hypercycle) {
        hypergraph h = generate(s);
        if (every_edge_two_pendants(h))
            return cells_all_but_max(h);
    }

    fail(errc::no_construction_available,
         "no closed-form construction for " + std::string(family_kind_name(s.kind)) +
             " with these parameters");
}

} // namespace ldh
