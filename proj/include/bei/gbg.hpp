#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "bei/chordal.hpp"
#include "bei/graph.hpp"

namespace bei {

enum class GraphClass { BlockGraph, GeneralizedBlock, ChordalNotGbg, NotChordal };

const char* to_string(GraphClass c);

struct GbgCertificate {
    GraphClass verdict = GraphClass::NotChordal;
    // For ChordalNotGbg: indices of three facets sharing a vertex whose
    // pairwise intersections are not all equal.
    std::optional<std::array<int, 3>> facet_triple;
    // For NotChordal: an induced cycle of length >= 4.
    std::vector<int> chordless_cycle;

    bool is_gbg() const {
        return verdict == GraphClass::BlockGraph || verdict == GraphClass::GeneralizedBlock;
    }
};

// First violating facet triple of the generalized block condition (three
// facets through one vertex whose pairwise intersections differ), if any.
std::optional<std::array<int, 3>> gbg_triple_violation(const CliqueComplex& cc);

GbgCertificate classify_graph(const Graph& g);
GbgCertificate classify_graph(const Graph& g, const CliqueComplex& cc);

struct GeneratedGraph {
    Graph graph;
    bool star = false;  // stars are excluded from several regularity bounds
};

// Seeded generator of connected generalized block graphs: start from one
// clique, then repeatedly either glue a fresh clique onto an existing
// junction set, or carve a new junction (disjoint from all previous ones)
// out of an existing facet and glue a fresh clique there. Junction
// disjointness makes every output satisfy the generalized block condition;
// the classifier re-checks rather than assumes this.
// Throws std::invalid_argument for infeasible parameters.
GeneratedGraph random_gbg(uint64_t seed, int facet_count, int max_clique);

}  // namespace bei
