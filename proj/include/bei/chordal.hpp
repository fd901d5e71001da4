#pragma once

#include <optional>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

// Facet list of the clique complex of a graph: exactly the maximal cliques,
// sorted by set_order_less. leaf_order, when present, is a permutation of
// facet indices such that each facet is a leaf of the complex spanned by its
// predecessors (a quasi-forest witness; exists iff the graph is chordal).
struct CliqueComplex {
    std::vector<VertexSet> facets;
    std::optional<std::vector<int>> leaf_order;
};

struct ChordalityResult {
    bool chordal = false;
    // Perfect elimination order (first eliminated first) when chordal.
    std::vector<int> peo;
    // Chordless cycle of length >= 4 when not chordal.
    std::vector<int> chordless_cycle;
};

// Maximum cardinality search with lowest-label tie breaking, followed by a
// direct check that the reverse visit order eliminates simplicially. The
// non-chordal witness comes from find_chordless_cycle.
ChordalityResult check_chordal(const Graph& g);

// Brute-force search for an induced cycle of length >= 4; none iff chordal.
// For each ordered adjacent pair (a, b) and each c in N(b) \ N[a], a shortest
// a--c path avoiding N[b] closes a chordless cycle through b.
std::optional<std::vector<int>> find_chordless_cycle(const Graph& g);

// All maximal cliques via the elimination order when the graph is chordal,
// via pivoting Bron-Kerbosch otherwise.
CliqueComplex maximal_cliques(const Graph& g);

struct LeafOrderResult {
    bool ok = false;
    std::vector<int> order;   // facet indices into cc.facets
    int failed_facet = -1;    // index witnessing failure when !ok
};

// Leaf order from a maximum-weight spanning tree of the facet intersection
// graph, read off in preorder. The leaf property of every prefix is
// re-verified against the definition rather than trusted from construction.
LeafOrderResult compute_leaf_order(const CliqueComplex& cc);

// Checks that order is a valid leaf order of the given facets; returns the
// offending position, or -1 when valid.
int verify_leaf_order(const std::vector<VertexSet>& facets, const std::vector<int>& order);

// Clique complex with a leaf order attached when one exists.
CliqueComplex clique_complex(const Graph& g);

struct VertexCliqueStats {
    VertexSet free_vertices;
    VertexSet internal_vertices;
    std::vector<int> cdeg;  // index 0 unused; number of facets containing v
    int f = 0;              // |free|
    int iv = 0;             // |internal|
};

VertexCliqueStats free_and_internal_vertices(const Graph& g, const CliqueComplex& cc);

}  // namespace bei
