#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "bei/chordal.hpp"
#include "bei/graph.hpp"
#include "bei/oracle.hpp"
#include "bei/rng.hpp"
#include "bei/vertex_set.hpp"

// Independent reference implementations the production code is tested
// against. These stay deliberately naive.
namespace ref {

using bei::Graph;
using bei::VertexSet;

// Every inclusion-minimal cut set, by enumerating all 2^n vertex subsets.
inline std::vector<VertexSet> minimal_cut_sets_bruteforce(const Graph& g) {
    int n = g.n();
    int base = bei::count_components(g);
    std::vector<VertexSet> cuts;
    for (uint64_t mask = 1; mask < (uint64_t(1) << n) - 1; ++mask) {
        VertexSet t;
        for (int v = 1; v <= n; ++v)
            if (mask & (uint64_t(1) << (v - 1))) t.insert(v);
        if (bei::count_components_within(g, g.vertex_set() - t) > base) cuts.push_back(t);
    }
    std::vector<VertexSet> minimal;
    for (const VertexSet& c : cuts) {
        bool dominated = false;
        for (const VertexSet& other : cuts)
            if (other != c && other.is_subset_of(c)) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end(), bei::SetOrderLess{});
    return minimal;
}

// Generalized block condition checked literally over all facet triples.
inline bool gbg_triples_bruteforce(const std::vector<VertexSet>& facets) {
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = i + 1; j < facets.size(); ++j)
            for (std::size_t k = j + 1; k < facets.size(); ++k) {
                if ((facets[i] & facets[j] & facets[k]).empty()) continue;
                VertexSet ij = facets[i] & facets[j];
                VertexSet ik = facets[i] & facets[k];
                VertexSet jk = facets[j] & facets[k];
                if (ij != ik || ij != jk) return false;
            }
    return true;
}

// A tree is a caterpillar when deleting every pendant vertex leaves a path
// (possibly empty or a point).
inline bool is_caterpillar(const Graph& g) {
    if (g.edge_count() != g.n() - 1 || bei::count_components(g) != 1) return false;
    VertexSet spine = g.vertex_set();
    for (int v = 1; v <= g.n(); ++v)
        if (g.degree(v) <= 1) spine.erase(v);
    if (spine.size() <= 1) return true;
    int ends = 0;
    for (int v = spine.min(); v != 0; v = spine.next(v)) {
        int d = (g.neighbors(v) & spine).size();
        if (d > 2) return false;
        if (d == 0) return false;  // spine disconnected
        if (d == 1) ++ends;
    }
    return ends == 2;
}

// K-polynomial (numerator of the Hilbert series) of a squarefree monomial
// ideal by inclusion-exclusion over generator subsets: sum over subsets of
// (-1)^|subset| t^|lcm|. Hochster output must satisfy
// sum_i (-1)^i beta_{i,j} = coefficient of t^j.
inline std::map<int, long long> k_polynomial(const std::vector<bei::VarMask>& gens) {
    std::map<int, long long> coeff;
    std::size_t m = gens.size();
    for (uint64_t sub = 0; sub < (uint64_t(1) << m); ++sub) {
        bei::VarMask lcm = 0;
        int bits = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (sub & (uint64_t(1) << i)) {
                lcm |= gens[i];
                ++bits;
            }
        coeff[std::popcount(lcm)] += (bits % 2 == 0) ? 1 : -1;
    }
    for (auto it = coeff.begin(); it != coeff.end();)
        it = it->second == 0 ? coeff.erase(it) : std::next(it);
    return coeff;
}

// Random graph on n vertices with the given edge probability (percent).
inline Graph random_graph(bei::SplitMix64& rng, int n, int percent) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng.bounded(100) < static_cast<uint64_t>(percent)) es.emplace_back(i, j);
    return Graph(n, std::move(es));
}

// Random labeled tree from a random parent assignment.
inline Graph random_tree(bei::SplitMix64& rng, int n) {
    std::vector<std::pair<int, int>> es;
    for (int v = 2; v <= n; ++v) es.emplace_back(v, rng.range(1, v - 1));
    return Graph(n, std::move(es));
}

// Relabel a graph by the permutation perm (perm[v] is the new label of v).
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        es.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph(g.n(), std::move(es));
}

inline std::vector<int> random_permutation(bei::SplitMix64& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = n; i > 1; --i)
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[static_cast<std::size_t>(rng.range(1, i))]);
    return perm;
}

}  // namespace ref
