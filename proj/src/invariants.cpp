#include "bei/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "bei/cutsets.hpp"
#include "bei/errors.hpp"

namespace bei {

namespace {

std::vector<int> pendant_degree(const Graph& g) {
    std::vector<int> pdeg(static_cast<std::size_t>(g.n()) + 1, 0);
    for (int v = 1; v <= g.n(); ++v)
        if (g.is_pendant(v)) {
            int u = g.neighbors(v).min();
            ++pdeg[static_cast<std::size_t>(u)];
        }
    return pdeg;
}

}  // namespace

bool is_complete_graph(const Graph& g) {
    return g.edge_count() == g.n() * (g.n() - 1) / 2;
}

bool is_star_graph(const Graph& g) {
    // K_{1,m} with m >= 2: a center adjacent to all others, all others pendant
    if (g.n() < 3 || g.edge_count() != g.n() - 1) return false;
    int center = 0;
    for (int v = 1; v <= g.n(); ++v)
        if (g.degree(v) == g.n() - 1)
            center = v;
        else if (g.degree(v) != 1)
            return false;
    return center != 0;
}

int longest_induced_path(const Graph& g, int cap) {
    if (g.n() > cap)
        throw resource_limit_error("induced path search capped at n <= " + std::to_string(cap));
    int best = 0;
    std::vector<int> path;
    VertexSet on_path, blocked;
    // extend with neighbors of the tail that avoid the closed neighborhood of
    // everything before the tail
    auto dfs = [&](auto&& self, int tail) -> void {
        best = std::max(best, static_cast<int>(path.size()) - 1);
        VertexSet cand = g.neighbors(tail) - blocked;
        cand -= on_path;
        for (int u = cand.min(); u != 0; u = cand.next(u)) {
            VertexSet saved = blocked;
            blocked |= g.neighbors(tail);
            on_path.insert(u);
            path.push_back(u);
            self(self, u);
            path.pop_back();
            on_path.erase(u);
            blocked = saved;
        }
    };
    for (int s = 1; s <= g.n(); ++s) {
        path = {s};
        on_path = VertexSet{};
        on_path.insert(s);
        blocked = VertexSet{};
        dfs(dfs, s);
    }
    return best;
}

InvariantReport invariant_report(const Graph& g, const InvariantOptions& opts) {
    InvariantReport r;
    r.n = g.n();
    r.c = count_components(g);
    CliqueComplex cc = clique_complex(g);
    r.cl = static_cast<int>(cc.facets.size());
    for (const VertexSet& f : cc.facets) r.omega = std::max(r.omega, f.size());
    VertexCliqueStats stats = free_and_internal_vertices(g, cc);
    r.f = stats.f;
    r.iv = stats.iv;
    r.cdeg = stats.cdeg;
    r.pdeg = pendant_degree(g);
    r.deg.assign(static_cast<std::size_t>(g.n()) + 1, 0);
    for (int v = 1; v <= g.n(); ++v) r.deg[static_cast<std::size_t>(v)] = g.degree(v);
    r.pv = static_cast<int>(pendant_vertices(g).size());
    for (int v = 1; v <= g.n(); ++v) {
        if (r.pdeg[static_cast<std::size_t>(v)] >= 1) {
            ++r.k_pdeg;
            if (r.cdeg[static_cast<std::size_t>(v)] == r.pdeg[static_cast<std::size_t>(v)] + 1)
                ++r.alpha_type1;
        }
    }
    r.is_star = is_star_graph(g);
    r.certificate = classify_graph(g, cc);

    std::vector<VertexSet> cuts = r.certificate.is_gbg() ? minimal_cut_sets_gbg(g, cc)
                                                         : minimal_cut_sets(g);
    for (const VertexSet& s : cuts) ++r.a[s.size()];
    r.m = static_cast<int>(cuts.size());
    if (r.certificate.is_gbg()) {
        int p = g.n() - r.c;
        for (const auto& [size, count] : r.a)
            if (size >= 2) p += (size - 1) * count;
        r.p = p;
    }
    if (g.n() <= opts.ell_cap) r.ell = longest_induced_path(g, opts.ell_cap);
    return r;
}

Decomposition decompose(const Graph& g) {
    if (!check_chordal(g).chordal)
        throw std::invalid_argument("decomposition implemented for chordal graphs only");
    Decomposition d;
    std::vector<VertexSet> todo = connected_components(g);
    VertexSet glue;
    while (!todo.empty()) {
        VertexSet piece = todo.back();
        todo.pop_back();
        InducedSubgraph sub = induced_subgraph(g, piece);
        CliqueComplex cc = maximal_cliques(sub.graph);
        VertexCliqueStats stats = free_and_internal_vertices(sub.graph, cc);
        // a split point is a cut vertex lying in exactly two maximal cliques
        int split = 0;
        for (int v = 1; v <= sub.graph.n() && split == 0; ++v) {
            if (stats.cdeg[static_cast<std::size_t>(v)] != 2) continue;
            VertexSet rest = sub.graph.vertex_set();
            rest.erase(v);
            if (count_components_within(sub.graph, rest) > 1) split = v;
        }
        if (split == 0) {
            d.component_vertex_sets.push_back(piece);
            continue;
        }
        glue.insert(sub.to_original[static_cast<std::size_t>(split)]);
        VertexSet rest = sub.graph.vertex_set();
        rest.erase(split);
        auto parts = components_within(sub.graph, rest);
        // the two facets at the split vertex land in different components;
        // group everything reachable from the first facet on one side
        VertexSet side1_local = parts[0];
        side1_local.insert(split);
        VertexSet side2_local = sub.graph.vertex_set() - parts[0];
        auto lift = [&](const VertexSet& local) {
            VertexSet out;
            for (int v = local.min(); v != 0; v = local.next(v))
                out.insert(sub.to_original[static_cast<std::size_t>(v)]);
            return out;
        };
        todo.push_back(lift(side1_local));
        todo.push_back(lift(side2_local));
    }
    std::sort(d.component_vertex_sets.begin(), d.component_vertex_sets.end(), SetOrderLess{});
    for (const VertexSet& vs : d.component_vertex_sets)
        d.components.push_back(induced_subgraph(g, vs));
    d.glue_vertices = glue.elements();
    return d;
}

namespace {

struct Petal {
    VertexSet members;
    VertexSet closed;  // members plus their neighborhoods
    bool star = false;
};

std::optional<FlowerWitness> find_flower_at(const Graph& g, int v) {
    std::vector<Petal> petals;
    const VertexSet& nv = g.neighbors(v);
    auto close = [&](const VertexSet& m) {
        VertexSet c = m;
        for (int x = m.min(); x != 0; x = m.next(x)) c |= g.neighbors(x);
        c.erase(v);
        return c;
    };
    // triangle petals: adjacent pairs inside N(v)
    for (int a = nv.min(); a != 0; a = nv.next(a)) {
        VertexSet rest = g.neighbors(a) & nv;
        for (int b = rest.next(a); b != 0; b = rest.next(b)) {
            VertexSet m{a, b};
            petals.push_back({m, close(m), false});
        }
    }
    // star petals: c in N(v) with two nonadjacent private leaves
    for (int c = nv.min(); c != 0; c = nv.next(c)) {
        VertexSet leaves = g.neighbors(c) - nv;
        leaves.erase(v);
        for (int x = leaves.min(); x != 0; x = leaves.next(x))
            for (int y = leaves.next(x); y != 0; y = leaves.next(y)) {
                if (g.has_edge(x, y)) continue;
                VertexSet m{c, x, y};
                petals.push_back({m, close(m), true});
            }
    }
    auto compatible = [&](const Petal& p, const Petal& q) {
        return !p.closed.intersects(q.members);
    };
    for (std::size_t i = 0; i < petals.size(); ++i)
        for (std::size_t j = i + 1; j < petals.size(); ++j) {
            if (!compatible(petals[i], petals[j])) continue;
            for (std::size_t k = j + 1; k < petals.size(); ++k) {
                if (!compatible(petals[i], petals[k]) || !compatible(petals[j], petals[k]))
                    continue;
                FlowerWitness w;
                w.hub = v;
                for (std::size_t idx : {i, j, k}) {
                    w.petals.push_back(petals[idx].members);
                    if (petals[idx].star)
                        ++w.k;
                    else
                        ++w.h;
                }
                return w;
            }
        }
    return std::nullopt;
}

}  // namespace

std::optional<FlowerWitness> find_flower(const Graph& g) {
    for (int v = 1; v <= g.n(); ++v)
        if (auto w = find_flower_at(g, v)) return w;
    return std::nullopt;
}

bool verify_flower(const Graph& g, const FlowerWitness& w) {
    if (w.petals.size() != 3 || w.h + w.k != 3) return false;
    int v = w.hub;
    VertexSet used;
    used.insert(v);
    for (const VertexSet& p : w.petals) {
        if (p.intersects(used)) return false;  // pairwise disjoint, hub excluded
        used |= p;
    }
    int h = 0, k = 0;
    for (const VertexSet& p : w.petals) {
        auto vs = p.elements();
        if (vs.size() == 2) {
            int a = vs[0], b = vs[1];
            if (!g.has_edge(v, a) || !g.has_edge(v, b) || !g.has_edge(a, b)) return false;
            ++h;
        } else if (vs.size() == 3) {
            // star arm: exactly one member adjacent to the hub
            int c = 0;
            std::vector<int> leaves;
            for (int x : vs)
                if (g.has_edge(v, x))
                    c = c == 0 ? x : -1;
                else
                    leaves.push_back(x);
            if (c <= 0 || leaves.size() != 2) return false;
            if (!g.has_edge(c, leaves[0]) || !g.has_edge(c, leaves[1])) return false;
            if (g.has_edge(leaves[0], leaves[1])) return false;
            ++k;
        } else {
            return false;
        }
    }
    if (h != w.h || k != w.k) return false;
    // no edges between distinct petals
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            for (int x = w.petals[i].min(); x != 0; x = w.petals[i].next(x))
                if (g.neighbors(x).intersects(w.petals[j])) return false;
    return true;
}

UniqueExtremalResult classify_unique_extremal(const Graph& g) {
    GbgCertificate cert = classify_graph(g);
    if (!cert.is_gbg()) throw std::invalid_argument("not a generalized block graph");
    if (count_components(g) != 1) throw std::invalid_argument("graph must be connected");
    UniqueExtremalResult res;
    if (g.n() == 1) {
        // a single vertex has the one Betti number beta_{0,0} = 1 and
        // regularity 0
        res.unique = true;
        res.exact_reg = 0;
        return res;
    }
    Decomposition d = decompose(g);
    for (const auto& piece : d.components) {
        if (auto w = find_flower(piece.graph)) {
            // lift the witness back to original labels
            FlowerWitness lifted;
            lifted.hub = piece.to_original[static_cast<std::size_t>(w->hub)];
            lifted.h = w->h;
            lifted.k = w->k;
            for (const VertexSet& p : w->petals) {
                VertexSet lp;
                for (int v = p.min(); v != 0; v = p.next(v))
                    lp.insert(piece.to_original[static_cast<std::size_t>(v)]);
                lifted.petals.push_back(lp);
            }
            res.unique = false;
            res.witness = lifted;
            return res;
        }
    }
    res.unique = true;
    CliqueComplex cc = clique_complex(g);
    res.exact_reg = static_cast<int>(minimal_cut_sets_gbg(g, cc).size()) + 1;
    return res;
}

ExtremalPrediction extremal_prediction(const Graph& g) {
    GbgCertificate cert = classify_graph(g);
    if (!cert.is_gbg()) throw std::invalid_argument("not a generalized block graph");
    ExtremalPrediction pred;
    if (count_components(g) != 1) {
        pred.reason = "graph is disconnected";
        return pred;
    }
    if (g.n() == 1) {
        pred.reason = "single vertex";
        return pred;
    }
    InvariantReport r = invariant_report(g, InvariantOptions{.ell_cap = 0});
    pred.applicable = true;
    pred.position = {*r.p, *r.p + r.m + 1};
    // value claim holds when complete, or when every internal vertex lies in
    // more than two maximal cliques
    bool all_deep = true;
    for (int v = 1; v <= g.n(); ++v)
        if (r.cdeg[static_cast<std::size_t>(v)] == 2) all_deep = false;
    if (is_complete_graph(g) || all_deep) pred.value = r.f - 1;
    pred.unique = classify_unique_extremal(g).unique;
    return pred;
}

BoundsReport bounds_report(const Graph& g, const InvariantOptions& opts) {
    BoundsReport b;
    InvariantReport r = invariant_report(g, opts);
    if (r.ell) {
        b.lower_mm = {static_cast<long long>(*r.ell), true, ""};
    } else {
        b.lower_mm = {std::nullopt, false, "induced path search capped"};
    }
    b.upper_general = {static_cast<long long>(g.n() - 1), true, ""};
    bool chordal = r.certificate.verdict != GraphClass::NotChordal;
    b.upper_cl = chordal ? Bound{static_cast<long long>(r.cl), true, ""}
                         : Bound{std::nullopt, false, "graph is not chordal"};
    if (!r.certificate.is_gbg()) {
        b.lower_gbg = {std::nullopt, false, "not a generalized block graph"};
        b.upper_improved = {std::nullopt, false, "not a generalized block graph"};
        b.exact_reg = {std::nullopt, false, "not a generalized block graph"};
        return b;
    }
    bool trivial_component = false;
    for (const VertexSet& comp : connected_components(g))
        if (comp.size() == 1) trivial_component = true;
    b.lower_gbg = trivial_component
                      ? Bound{std::nullopt, false, "isolated vertices have regularity 0"}
                      : Bound{static_cast<long long>(r.m + r.c), true, ""};

    Decomposition d = decompose(g);
    long long improved = 0;
    for (const auto& piece : d.components) {
        const Graph& h = piece.graph;
        if (h.n() == 1) continue;
        if (is_complete_graph(h)) {
            improved += 1;
        } else if (is_star_graph(h)) {
            improved += 2;
        } else {
            InvariantReport rh = invariant_report(h, InvariantOptions{.ell_cap = 0});
            improved += rh.cl + rh.alpha_type1 - rh.pv;
        }
    }
    b.upper_improved = {improved, true, ""};

    if (r.c == 1) {
        UniqueExtremalResult u = classify_unique_extremal(g);
        if (u.unique)
            b.exact_reg = {static_cast<long long>(*u.exact_reg), true, ""};
        else
            b.exact_reg = {std::nullopt, false, "induced flower present"};
    } else {
        b.exact_reg = {std::nullopt, false, "classification applies to connected graphs"};
    }
    return b;
}

}  // namespace bei
