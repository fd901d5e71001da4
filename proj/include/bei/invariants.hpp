#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bei/betti.hpp"
#include "bei/chordal.hpp"
#include "bei/gbg.hpp"
#include "bei/graph.hpp"

namespace bei {

// Scalar invariants of a graph relevant to its binomial edge ideal. a[i]
// counts minimal cut sets of size i and m is their total; p is the projective
// dimension n - c + sum_{i>=2} (i-1) a_i, only asserted for generalized block
// graphs. alpha_type1 counts vertices v with pdeg(v) >= 1 and
// cdeg(v) = pdeg(v) + 1; k_pdeg counts vertices with a pendant neighbor.
struct InvariantReport {
    int n = 0;
    int c = 0;                   // connected components
    int omega = 0;               // clique number
    int cl = 0;                  // number of maximal cliques
    std::map<int, int> a;        // size -> count of minimal cut sets
    int m = 0;                   // total minimal cut sets
    std::optional<int> p;        // projective dimension (generalized block only)
    int f = 0;                   // free vertices
    int iv = 0;                  // internal vertices
    int pv = 0;                  // pendant vertices
    int alpha_type1 = 0;
    int k_pdeg = 0;
    std::optional<int> ell;      // longest induced path length, absent if capped out
    std::vector<int> cdeg, pdeg, deg;  // per vertex, index 0 unused
    bool is_star = false;
    GbgCertificate certificate;
};

struct InvariantOptions {
    int ell_cap = 24;  // skip the exponential induced-path search above this n
};

InvariantReport invariant_report(const Graph& g, const InvariantOptions& opts = {});

// Length (in edges) of a longest induced path. Exponential-time DFS over
// induced paths; refuses n above cap.
int longest_induced_path(const Graph& g, int cap = 24);

bool is_star_graph(const Graph& g);
bool is_complete_graph(const Graph& g);

// Decomposition into indecomposable induced subgraphs. Components of the
// decomposition are listed per connected component of g; pieces meet only in
// glue vertices, each a cut vertex lying in exactly two maximal cliques, and
// each glue vertex is free in both pieces containing it.
struct Decomposition {
    std::vector<VertexSet> component_vertex_sets;  // original labels
    std::vector<InducedSubgraph> components;       // relabeled pieces
    std::vector<int> glue_vertices;
};

// Throws std::invalid_argument on non-chordal input.
Decomposition decompose(const Graph& g);

// Induced flower F_{h,k}(v): h triangle petals {a,b} inside N(v) and k star
// petals {c,x,y} with c in N(v) and leaves x,y outside N[v], all petals
// pairwise disjoint with no edges between them. Any induced flower with
// h + k >= 3 petals restricts to one with exactly three, so the search stops
// there.
struct FlowerWitness {
    int hub = 0;
    int h = 0, k = 0;
    std::vector<VertexSet> petals;  // size 2 entries are triangles, size 3 star arms
};

std::optional<FlowerWitness> find_flower(const Graph& g);

// Re-checks a witness against the adjacency requirements; used by tests and
// the classifier's certificate path.
bool verify_flower(const Graph& g, const FlowerWitness& w);

// Whether S/J_G has a unique extremal Betti number, decided combinatorially:
// every indecomposable piece of the decomposition must be flower-free. When
// unique, the regularity is exactly m(G) + 1 (0 for a single vertex).
// Requires a connected generalized block graph.
struct UniqueExtremalResult {
    bool unique = false;
    std::optional<int> exact_reg;
    std::optional<FlowerWitness> witness;  // set when not unique
};

UniqueExtremalResult classify_unique_extremal(const Graph& g);

// Predicted extremal Betti number of S/J_G for a connected generalized block
// graph: position (p, p + m + 1); value f - 1 exactly when the graph is
// complete or every internal vertex lies in more than two maximal cliques.
struct ExtremalPrediction {
    bool applicable = false;
    std::string reason;  // why not, when inapplicable
    std::pair<int, int> position{0, 0};
    std::optional<long long> value;
    bool unique = false;
};

ExtremalPrediction extremal_prediction(const Graph& g);

// Regularity bounds with applicability flags. upper_improved sums over the
// indecomposable pieces: cl + alpha - pv for each piece that is neither a
// star nor complete, 2 per star, 1 per complete piece on >= 2 vertices, 0 per
// isolated vertex.
struct Bound {
    std::optional<long long> value;
    bool applicable = false;
    std::string reason;
};

struct BoundsReport {
    Bound lower_mm;        // longest induced path (all graphs)
    Bound lower_gbg;       // m + c (generalized block graphs)
    Bound upper_general;   // n - 1 (all graphs)
    Bound upper_cl;        // number of maximal cliques (chordal graphs)
    Bound upper_improved;  // componentwise cl + alpha - pv (generalized block)
    Bound exact_reg;       // m + 1 via the unique-extremal classification
};

BoundsReport bounds_report(const Graph& g, const InvariantOptions& opts = {});

}  // namespace bei
