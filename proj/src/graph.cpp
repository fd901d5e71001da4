#include "bei/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bei {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (auto& [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(u) +
                                        "," + std::to_string(v) + "}");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);
    adj_.assign(static_cast<std::size_t>(n) + 1, VertexSet{});
    for (auto [u, v] : edges_) {
        adj_[u].insert(v);
        adj_[v].insert(u);
    }
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& a) {
    std::vector<int> to_original{0};
    std::vector<int> to_local(static_cast<std::size_t>(g.n()) + 1, 0);
    for (int v = a.min(); v != 0; v = a.next(v)) {
        if (v > g.n()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        to_local[v] = static_cast<int>(to_original.size());
        to_original.push_back(v);
    }
    int m = static_cast<int>(to_original.size()) - 1;
    if (m == 0) throw std::invalid_argument("induced subgraph on empty vertex set");
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        if (a.contains(u) && a.contains(v)) es.emplace_back(to_local[u], to_local[v]);
    return {Graph(m, std::move(es)), std::move(to_original)};
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
    std::vector<VertexSet> out;
    VertexSet todo = within;
    while (!todo.empty()) {
        int start = todo.min();
        VertexSet comp;
        std::vector<int> stack{start};
        comp.insert(start);
        todo.erase(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            VertexSet nb = g.neighbors(v) & todo;
            for (int u = nb.min(); u != 0; u = nb.next(u)) {
                comp.insert(u);
                todo.erase(u);
                stack.push_back(u);
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return components_within(g, g.vertex_set());
}

int count_components_within(const Graph& g, const VertexSet& within) {
    return static_cast<int>(components_within(g, within).size());
}

int count_components(const Graph& g) { return count_components_within(g, g.vertex_set()); }

Graph saturate_vertex(const Graph& g, int v) {
    if (v < 1 || v > g.n()) throw std::invalid_argument("vertex out of range");
    auto es = g.edges();
    auto nb = g.neighbors(v).elements();
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) es.emplace_back(nb[i], nb[j]);
    return Graph(g.n(), std::move(es));
}

bool is_cut_set(const Graph& g, const VertexSet& a) {
    if (a.empty() || a.size() >= g.n()) return false;
    VertexSet rest = g.vertex_set() - a;
    return count_components_within(g, rest) > count_components(g);
}

bool is_minimal_cut_set(const Graph& g, const VertexSet& a) {
    if (!is_cut_set(g, a)) return false;
    auto elems = a.elements();
    int k = static_cast<int>(elems.size());
    // every proper nonempty subset must fail to be a cut set
    for (uint32_t mask = 1; mask + 1 < (uint32_t(1) << k); ++mask) {
        VertexSet sub;
        for (int i = 0; i < k; ++i)
            if (mask & (uint32_t(1) << i)) sub.insert(elems[static_cast<std::size_t>(i)]);
        if (is_cut_set(g, sub)) return false;
    }
    return true;
}

Graph merge_at_cutset(const Graph& g, const VertexSet& a) {
    if (!is_minimal_cut_set(g, a))
        throw std::invalid_argument("not a minimal cut set: " + a.to_string());
    // Vertices of the merged clique: a together with every vertex adjacent to
    // all of a. A maximal clique contains a iff it sits inside this set.
    VertexSet u = a;
    for (int v = 1; v <= g.n(); ++v) {
        if (a.contains(v)) continue;
        if (a.is_subset_of(g.neighbors(v))) u.insert(v);
    }
    auto es = g.edges();
    auto elems = u.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j) es.emplace_back(elems[i], elems[j]);
    return Graph(g.n(), std::move(es));
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("edge not present");
    if (u > v) std::swap(u, v);
    std::vector<std::pair<int, int>> es;
    for (auto e : g.edges())
        if (e != std::make_pair(u, v)) es.push_back(e);
    return Graph(g.n(), std::move(es));
}

Graph edge_closure(const Graph& h, int u, int v) {
    if (h.has_edge(u, v)) throw std::invalid_argument("edge closure expects a non-edge");
    auto es = h.edges();
    for (int w : {u, v}) {
        auto nb = h.neighbors(w).elements();
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) es.emplace_back(nb[i], nb[j]);
    }
    return Graph(h.n(), std::move(es));
}

std::pair<Graph, Graph> cut_edge_constructions(const Graph& g, int u, int v) {
    Graph without = delete_edge(g, u, v);
    Graph closed = edge_closure(without, u, v);
    return {std::move(without), std::move(closed)};
}

InducedSubgraph delete_vertex(const Graph& g, int v) {
    VertexSet rest = g.vertex_set();
    rest.erase(v);
    return induced_subgraph(g, rest);
}

std::vector<int> pendant_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 1; v <= g.n(); ++v)
        if (g.is_pendant(v)) out.push_back(v);
    return out;
}

}  // namespace bei
