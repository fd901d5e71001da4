#include "bei/chordal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace bei {

namespace {

// Visit order of maximum cardinality search; ties go to the lowest label.
std::vector<int> mcs_visit_order(const Graph& g) {
    int n = g.n();
    std::vector<int> weight(static_cast<std::size_t>(n) + 1, 0);
    std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1, bestw = -1;
        for (int v = 1; v <= n; ++v)
            if (!visited[v] && weight[v] > bestw) {
                best = v;
                bestw = weight[v];
            }
        visited[best] = true;
        order.push_back(best);
        const VertexSet& nb = g.neighbors(best);
        for (int u = nb.min(); u != 0; u = nb.next(u))
            if (!visited[u]) ++weight[u];
    }
    return order;
}

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // pivot: vertex of P u X with most neighbors in P
    int pivot = 0, best = -1;
    VertexSet px = p | x;
    for (int v = px.min(); v != 0; v = px.next(v)) {
        int cnt = (g.neighbors(v) & p).size();
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    VertexSet cand = p - g.neighbors(pivot);
    for (int v = cand.min(); v != 0; v = cand.next(v)) {
        VertexSet r2 = r;
        r2.insert(v);
        bron_kerbosch(g, r2, p & g.neighbors(v), x & g.neighbors(v), out);
        p.erase(v);
        x.insert(v);
    }
}

}  // namespace

std::optional<std::vector<int>> find_chordless_cycle(const Graph& g) {
    for (auto [e1, e2] : g.edges()) {
        for (int flip = 0; flip < 2; ++flip) {
            int a = flip ? e2 : e1;
            int b = flip ? e1 : e2;
            VertexSet blocked = g.neighbors(b);  // N[b]
            blocked.insert(b);
            VertexSet cands = g.neighbors(b) - g.neighbors(a);
            cands.erase(a);
            for (int c = cands.min(); c != 0; c = cands.next(c)) {
                // shortest c -> a path with all interior vertices outside N[b]
                VertexSet allowed = g.vertex_set() - blocked;
                allowed.insert(a);
                allowed.insert(c);
                std::vector<int> parent(static_cast<std::size_t>(g.n()) + 1, 0);
                std::deque<int> queue{c};
                parent[c] = c;
                bool found = false;
                while (!queue.empty() && !found) {
                    int v = queue.front();
                    queue.pop_front();
                    VertexSet nb = g.neighbors(v) & allowed;
                    for (int u = nb.min(); u != 0; u = nb.next(u)) {
                        if (parent[u] != 0) continue;
                        parent[u] = v;
                        if (u == a) {
                            found = true;
                            break;
                        }
                        queue.push_back(u);
                    }
                }
                if (!found) continue;
                std::vector<int> cycle{b};
                for (int v = a; v != c; v = parent[v]) cycle.push_back(v);
                cycle.push_back(c);
                std::reverse(cycle.begin() + 1, cycle.end());
                return cycle;  // b, c, ..., a
            }
        }
    }
    return std::nullopt;
}

ChordalityResult check_chordal(const Graph& g) {
    ChordalityResult res;
    std::vector<int> visit = mcs_visit_order(g);
    std::vector<int> pos(static_cast<std::size_t>(g.n()) + 1, 0);
    for (int i = 0; i < g.n(); ++i) pos[visit[static_cast<std::size_t>(i)]] = i;
    // reverse visit order is a PEO iff for every v the earlier-visited
    // neighbors form a clique
    for (int v = 1; v <= g.n(); ++v) {
        std::vector<int> earlier;
        const VertexSet& nb = g.neighbors(v);
        for (int u = nb.min(); u != 0; u = nb.next(u))
            if (pos[u] < pos[v]) earlier.push_back(u);
        for (std::size_t i = 0; i < earlier.size(); ++i)
            for (std::size_t j = i + 1; j < earlier.size(); ++j)
                if (!g.has_edge(earlier[i], earlier[j])) {
                    res.chordal = false;
                    auto cyc = find_chordless_cycle(g);
                    if (cyc) res.chordless_cycle = *cyc;
                    return res;
                }
    }
    res.chordal = true;
    res.peo.assign(visit.rbegin(), visit.rend());
    return res;
}

CliqueComplex maximal_cliques(const Graph& g) {
    CliqueComplex cc;
    ChordalityResult ch = check_chordal(g);
    if (ch.chordal) {
        // candidates {v} u (later neighbors in the elimination order),
        // reduced to the inclusion antichain
        std::vector<int> elim_pos(static_cast<std::size_t>(g.n()) + 1, 0);
        for (int i = 0; i < g.n(); ++i) elim_pos[ch.peo[static_cast<std::size_t>(i)]] = i;
        std::vector<VertexSet> cands;
        for (int v = 1; v <= g.n(); ++v) {
            VertexSet c;
            c.insert(v);
            const VertexSet& nb = g.neighbors(v);
            for (int u = nb.min(); u != 0; u = nb.next(u))
                if (elim_pos[u] > elim_pos[v]) c.insert(u);
            cands.push_back(std::move(c));
        }
        for (std::size_t i = 0; i < cands.size(); ++i) {
            bool maximal = true;
            for (std::size_t j = 0; j < cands.size() && maximal; ++j)
                if (i != j && cands[i].is_subset_of(cands[j]) &&
                    (cands[i] != cands[j] || j < i))
                    maximal = false;
            if (maximal) cc.facets.push_back(cands[i]);
        }
    } else {
        bron_kerbosch(g, VertexSet{}, g.vertex_set(), VertexSet{}, cc.facets);
    }
    std::sort(cc.facets.begin(), cc.facets.end(), SetOrderLess{});
    return cc;
}

int verify_leaf_order(const std::vector<VertexSet>& facets, const std::vector<int>& order) {
    if (order.size() != facets.size()) return 0;
    for (std::size_t i = 1; i < order.size(); ++i) {
        const VertexSet& f = facets[static_cast<std::size_t>(order[i])];
        bool has_branch = false;
        for (std::size_t b = 0; b < i && !has_branch; ++b) {
            const VertexSet& br = facets[static_cast<std::size_t>(order[b])];
            bool ok = true;
            for (std::size_t h = 0; h < i && ok; ++h)
                if (!((facets[static_cast<std::size_t>(order[h])] & f)).is_subset_of(br & f))
                    ok = false;
            has_branch = ok;
        }
        if (!has_branch) return static_cast<int>(i);
    }
    return -1;
}

LeafOrderResult compute_leaf_order(const CliqueComplex& cc) {
    LeafOrderResult res;
    int r = static_cast<int>(cc.facets.size());
    if (r == 0) return res;
    if (r == 1) {
        res.ok = true;
        res.order = {0};
        return res;
    }
    // Kruskal on the facet intersection graph, heaviest overlaps first. For a
    // chordal graph any maximum-weight spanning tree is a clique tree; zero
    // weight edges only join different components, where the leaf property is
    // vacuous.
    struct WeightedEdge {
        int w, i, j;
    };
    std::vector<WeightedEdge> wedges;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            wedges.push_back({(cc.facets[static_cast<std::size_t>(i)] &
                               cc.facets[static_cast<std::size_t>(j)])
                                  .size(),
                              i, j});
    std::stable_sort(wedges.begin(), wedges.end(),
                     [](const WeightedEdge& a, const WeightedEdge& b) { return a.w > b.w; });
    std::vector<int> uf(static_cast<std::size_t>(r));
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[static_cast<std::size_t>(x)] != x) x = uf[static_cast<std::size_t>(x)] =
            uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
        return x;
    };
    std::vector<std::vector<int>> tree(static_cast<std::size_t>(r));
    for (const auto& e : wedges) {
        int a = find(e.i), b = find(e.j);
        if (a == b) continue;
        uf[static_cast<std::size_t>(a)] = b;
        tree[static_cast<std::size_t>(e.i)].push_back(e.j);
        tree[static_cast<std::size_t>(e.j)].push_back(e.i);
    }
    // preorder from facet 0: parents precede children, so the tree neighbor
    // towards the root serves as the branch
    std::vector<int> order;
    std::vector<bool> seen(static_cast<std::size_t>(r), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        order.push_back(f);
        std::vector<int> kids;
        for (int t : tree[static_cast<std::size_t>(f)])
            if (!seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = true;
                kids.push_back(t);
            }
        std::sort(kids.rbegin(), kids.rend());
        for (int k : kids) stack.push_back(k);
    }
    int bad = verify_leaf_order(cc.facets, order);
    if (bad >= 0) {
        res.failed_facet = order[static_cast<std::size_t>(bad)];
        return res;
    }
    res.ok = true;
    res.order = std::move(order);
    return res;
}

CliqueComplex clique_complex(const Graph& g) {
    CliqueComplex cc = maximal_cliques(g);
    LeafOrderResult lo = compute_leaf_order(cc);
    if (lo.ok) cc.leaf_order = lo.order;
    return cc;
}

VertexCliqueStats free_and_internal_vertices(const Graph& g, const CliqueComplex& cc) {
    VertexCliqueStats s;
    s.cdeg.assign(static_cast<std::size_t>(g.n()) + 1, 0);
    for (const VertexSet& f : cc.facets)
        for (int v = f.min(); v != 0; v = f.next(v)) ++s.cdeg[static_cast<std::size_t>(v)];
    for (int v = 1; v <= g.n(); ++v) {
        if (s.cdeg[static_cast<std::size_t>(v)] == 1)
            s.free_vertices.insert(v);
        else
            s.internal_vertices.insert(v);
    }
    s.f = s.free_vertices.size();
    s.iv = s.internal_vertices.size();
    return s;
}

}  // namespace bei
