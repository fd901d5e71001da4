#pragma once

#include <string>
#include <vector>

#include "bei/chordal.hpp"
#include "bei/graph.hpp"

namespace bei {

// All inclusion-minimal cut sets of g, ordered by set_order_less. Works on
// arbitrary graphs: per connected component, all minimal a-b separators are
// generated by neighborhood expansion (Berry-Bordat-Cogis), then reduced to
// the inclusion-minimal antichain.
std::vector<VertexSet> minimal_cut_sets(const Graph& g);

// Fast path for generalized block graphs: a set is a minimal cut set iff it
// is the common intersection of the facets meeting it (and there are at least
// two of them). Candidates are the pairwise facet intersections.
// Throws std::invalid_argument when g is not a generalized block graph.
std::vector<VertexSet> minimal_cut_sets_gbg(const Graph& g, const CliqueComplex& cc);

// The facet-intersection computation itself, assuming the generalized block
// condition already holds for these facets.
std::vector<VertexSet> facet_intersection_cut_sets(const CliqueComplex& cc);

// Whether every i in t is a cut vertex of g[complement(t) u {i}].
bool has_cut_point_property(const Graph& g, const VertexSet& t);

// The family C(G): the empty set plus every T with the cut point property.
// Subset enumeration is exponential, so refuse n above the cap.
std::vector<VertexSet> cut_point_sets(const Graph& g, int max_n = 16);

struct CutSetFamily {
    std::vector<VertexSet> minimal_cut_sets;
    std::vector<VertexSet> cut_point_sets;
};

CutSetFamily cut_set_family(const Graph& g, int max_n = 16);

// Description of the minimal prime P_T(G): the 2|T| killed variables and the
// connected components of g minus T (each contributing the 2x2 minors of its
// completed vertex set). No symbolic algebra, just the shape.
struct MinimalPrimeDescription {
    VertexSet t;
    std::vector<VertexSet> component_vertex_sets;
    std::string summary;
};

// Throws std::invalid_argument when t lacks the cut point property.
MinimalPrimeDescription minimal_prime_description(const Graph& g, const VertexSet& t);

}  // namespace bei
