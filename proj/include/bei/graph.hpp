#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bei/vertex_set.hpp"

namespace bei {

// Simple undirected graph on vertices 1..n. Edges are kept both as a sorted
// pair list (deterministic iteration) and as adjacency bitsets (fast set
// queries). Immutable after construction; all operations below return new
// graphs.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on out-of-range endpoints or self-loops.
    // Duplicate pairs are collapsed silently; parsers that need to report
    // duplicates check before constructing.
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const { return u >= 1 && u <= n_ && adj_[u].contains(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].size(); }
    bool is_pendant(int v) const { return degree(v) == 1; }
    VertexSet vertex_set() const { return VertexSet::full(n_); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<VertexSet> adj_;  // index 0 unused
};

// Induced subgraph relabeled onto 1..|a| in sorted order. to_original[k] is
// the source label of the new vertex k (index 0 unused), so statements about
// the original labeling stay addressable.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& a);

// Connected components as vertex sets in original labels, ordered by smallest
// element. Restricted variants stay within `within`.
std::vector<VertexSet> connected_components(const Graph& g);
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within);
int count_components_within(const Graph& g, const VertexSet& within);
int count_components(const Graph& g);

// G_v: complete the open neighborhood of v. Returns g unchanged when v is
// simplicial (in particular for free vertices).
Graph saturate_vertex(const Graph& g, int v);

// Whether a is a cut set (removing it increases the component count), and
// whether no proper nonempty subset is. The minimality check enumerates the
// 2^|a| subsets; cut sets at play here are small cliques.
bool is_cut_set(const Graph& g, const VertexSet& a);
bool is_minimal_cut_set(const Graph& g, const VertexSet& a);

// G_A for a minimal cut set A: replace the maximal cliques containing A with
// one clique on their union. That union is exactly A plus the common
// neighborhood of A, which avoids materializing the clique complex here.
// Throws std::invalid_argument if a is not a minimal cut set.
Graph merge_at_cutset(const Graph& g, const VertexSet& a);

// G \ e (edge removed, vertex set unchanged).
Graph delete_edge(const Graph& g, int u, int v);

// H_e for a non-edge e = {u,v} of H: add all pairs inside N_H(u) and all
// pairs inside N_H(v).
Graph edge_closure(const Graph& h, int u, int v);

// For e in E(G): the pair (G \ e, (G \ e)_e).
std::pair<Graph, Graph> cut_edge_constructions(const Graph& g, int u, int v);

// Induced subgraph on V \ {v} relabeled; plain vertex deletion.
InducedSubgraph delete_vertex(const Graph& g, int v);

std::vector<int> pendant_vertices(const Graph& g);

}  // namespace bei
