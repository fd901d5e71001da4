#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "bei/betti.hpp"
#include "bei/graph.hpp"

namespace bei {

// The polynomial ring behind a graph on [n] is K[x_1..x_n, y_1..y_n] with the
// lexicographic order induced by x_1 > ... > x_n > y_1 > ... > y_n. Variables
// are addressed by column ids 0..2n-1: x_i at i-1, y_i at n+i-1, so smaller
// id means higher precedence.
struct RingVariable {
    enum Kind { X, Y };
    Kind kind;
    int index;  // 1..n

    static RingVariable from_column(int col, int n) {
        return col < n ? RingVariable{X, col + 1} : RingVariable{Y, col - n + 1};
    }
    int column(int n) const { return kind == X ? index - 1 : n + index - 1; }
    std::string name() const {
        return (kind == X ? "x" : "y") + std::to_string(index);
    }
};

// Squarefree monomials over 2n variables, as bitmasks over column ids.
using VarMask = uint64_t;

std::string monomial_name(VarMask m, int n);

// A path between i < j whose interior vertices are each smaller than i or
// larger than j, minimal in the sense that no proper subset of the interior
// can be rearranged into such a path. It contributes the leading monomial
// x_i y_j * prod(x_k : interior k > j) * prod(y_l : interior l < i) of its
// Groebner basis element.
struct AdmissiblePath {
    int i = 0, j = 0;
    std::vector<int> interior;  // one realizing sequence, in path order
    VarMask monomial = 0;       // support, including x_i and y_j
};

// All admissible paths, one representative per minimal interior set, ordered
// by (i, j, interior size, interior).
std::vector<AdmissiblePath> admissible_paths(const Graph& g);

// Minimal generators of the lex initial ideal of the binomial edge ideal: the
// supports above, reduced to an inclusion antichain. Always squarefree.
struct MonomialIdeal {
    int n = 0;  // ring has 2n variables
    std::vector<VarMask> gens;

    std::vector<std::string> generator_names() const;
};

MonomialIdeal initial_ideal(const Graph& g);

struct OracleOptions {
    long field_char = 0;
    int max_vars = 20;        // refuse rings with more than this many variables
    bool prune = true;        // cone pruning + closed-subset enumeration
    int threads = 0;          // 0 = hardware default (capped), 1 = sequential
    double wall_limit = 900;  // seconds
    uint64_t max_faces = 50'000'000;  // total faces across all subcomplexes
};

// Graded Betti table of S/I over K of the given characteristic, by Hochster's
// formula: beta_{i,j} = sum over |W| = j of dim H~_{j-i-1} of the restriction
// of the Stanley-Reisner complex to W. Reduced homology ranks come from exact
// boundary-matrix elimination. Throws resource_limit_error when a cap or
// budget is exceeded (never returns a partial table).
BettiTable betti_table(const MonomialIdeal& mi, const OracleOptions& opts = {});

struct OracleSummary {
    BettiTable table;
    int reg = 0;
    int pd = 0;
    std::vector<std::tuple<int, int, long long>> extremal;
};

// End-to-end run on a graph. For a squarefree lex degeneration, regularity,
// projective dimension, and the extremal Betti positions and values of the
// initial ideal agree with those of the binomial edge ideal itself, so these
// summaries are comparable with statements about S/J_G.
OracleSummary oracle_summary(const Graph& g, const OracleOptions& opts = {});

}  // namespace bei
