#include "bei/cutsets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bei/errors.hpp"
#include "bei/gbg.hpp"

namespace bei {

namespace {

// Neighborhood of a vertex set, within the whole graph.
VertexSet set_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet nb;
    for (int v = s.min(); v != 0; v = s.next(v)) nb |= g.neighbors(v);
    nb -= s;
    return nb;
}

// All minimal a-b separators of the connected induced subgraph on `comp`,
// by closure under the Berry-Bordat-Cogis expansion step.
std::vector<VertexSet> minimal_separators_in_component(const Graph& g, const VertexSet& comp) {
    std::set<VertexSet, SetOrderLess> found;
    std::vector<VertexSet> queue;
    auto push = [&](const VertexSet& s) {
        if (s.empty()) return;
        if (found.insert(s).second) queue.push_back(s);
    };
    for (int v = comp.min(); v != 0; v = comp.next(v)) {
        VertexSet rest = comp - g.neighbors(v);
        rest.erase(v);
        for (const VertexSet& c : components_within(g, rest)) push(set_neighborhood(g, c) & comp);
    }
    while (!queue.empty()) {
        VertexSet s = queue.back();
        queue.pop_back();
        for (int x = s.min(); x != 0; x = s.next(x)) {
            VertexSet rest = comp - s;
            rest -= g.neighbors(x);
            rest.erase(x);
            for (const VertexSet& c : components_within(g, rest))
                push(set_neighborhood(g, c) & comp);
        }
    }
    return {found.begin(), found.end()};
}

std::vector<VertexSet> inclusion_minimal(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), SetOrderLess{});  // by size first
    std::vector<VertexSet> out;
    for (const VertexSet& s : sets) {
        bool dominated = false;
        for (const VertexSet& kept : out)
            if (kept.is_subset_of(s)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(s);
    }
    return out;
}

}  // namespace

std::vector<VertexSet> minimal_cut_sets(const Graph& g) {
    std::vector<VertexSet> all;
    for (const VertexSet& comp : connected_components(g)) {
        auto seps = minimal_separators_in_component(g, comp);
        auto mins = inclusion_minimal(std::move(seps));
        all.insert(all.end(), mins.begin(), mins.end());
    }
    std::sort(all.begin(), all.end(), SetOrderLess{});
    return all;
}

std::vector<VertexSet> minimal_cut_sets_gbg(const Graph& g, const CliqueComplex& cc) {
    if (!check_chordal(g).chordal || gbg_triple_violation(cc))
        throw std::invalid_argument("not a generalized block graph");
    return facet_intersection_cut_sets(cc);
}

std::vector<VertexSet> facet_intersection_cut_sets(const CliqueComplex& cc) {
    std::set<VertexSet, SetOrderLess> out;
    const auto& fs = cc.facets;
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            VertexSet a = fs[i] & fs[j];
            if (a.empty() || out.count(a)) continue;
            VertexSet common;
            bool ok = true;
            bool first = true;
            for (const VertexSet& f : fs) {
                if (!f.intersects(a)) continue;
                if (!a.is_subset_of(f)) {
                    ok = false;
                    break;
                }
                if (first) {
                    common = f;
                    first = false;
                } else {
                    common &= f;
                }
            }
            if (ok && common == a) out.insert(a);
        }
    return {out.begin(), out.end()};
}

bool has_cut_point_property(const Graph& g, const VertexSet& t) {
    VertexSet rest = g.vertex_set() - t;
    auto comps = components_within(g, rest);
    std::vector<int> comp_of(static_cast<std::size_t>(g.n()) + 1, -1);
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (int v = comps[i].min(); v != 0; v = comps[i].next(v))
            comp_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    // i is a cut vertex of g[rest u {i}] iff i joins at least two components
    // of g[rest]
    for (int i = t.min(); i != 0; i = t.next(i)) {
        int seen = -1;
        bool splits = false;
        const VertexSet& nb = g.neighbors(i);
        for (int u = nb.min(); u != 0; u = nb.next(u)) {
            if (!rest.contains(u)) continue;
            int c = comp_of[static_cast<std::size_t>(u)];
            if (seen == -1)
                seen = c;
            else if (c != seen) {
                splits = true;
                break;
            }
        }
        if (!splits) return false;
    }
    return true;
}

std::vector<VertexSet> cut_point_sets(const Graph& g, int max_n) {
    if (g.n() > max_n)
        throw resource_limit_error("cut point set enumeration capped at n <= " +
                                   std::to_string(max_n) + " (n = " + std::to_string(g.n()) +
                                   ")");
    std::vector<VertexSet> out;
    int n = g.n();
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        if (mask == (uint64_t(1) << n) - 1) continue;  // T is a proper subset
        VertexSet t;
        for (int v = 1; v <= n; ++v)
            if (mask & (uint64_t(1) << (v - 1))) t.insert(v);
        if (t.empty() || has_cut_point_property(g, t)) out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), SetOrderLess{});
    return out;
}

CutSetFamily cut_set_family(const Graph& g, int max_n) {
    return {minimal_cut_sets(g), cut_point_sets(g, max_n)};
}

MinimalPrimeDescription minimal_prime_description(const Graph& g, const VertexSet& t) {
    if (!t.empty() && !has_cut_point_property(g, t))
        throw std::invalid_argument("set lacks the cut point property: " + t.to_string());
    MinimalPrimeDescription d;
    d.t = t;
    d.component_vertex_sets = components_within(g, g.vertex_set() - t);
    std::string s = "(";
    bool first = true;
    for (int i = t.min(); i != 0; i = t.next(i)) {
        if (!first) s += ", ";
        s += "x" + std::to_string(i) + ", y" + std::to_string(i);
        first = false;
    }
    for (const VertexSet& comp : d.component_vertex_sets) {
        if (comp.size() < 2) continue;  // a single vertex contributes no minors
        auto vs = comp.elements();
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                if (!first) s += ", ";
                s += "x" + std::to_string(vs[a]) + "*y" + std::to_string(vs[b]) + " - x" +
                     std::to_string(vs[b]) + "*y" + std::to_string(vs[a]);
                first = false;
            }
    }
    d.summary = s + ")";
    return d;
}

}  // namespace bei
