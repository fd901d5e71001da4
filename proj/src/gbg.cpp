#include "bei/gbg.hpp"

#include <stdexcept>

#include "bei/cutsets.hpp"
#include "bei/rng.hpp"

namespace bei {

const char* to_string(GraphClass c) {
    switch (c) {
        case GraphClass::BlockGraph: return "BlockGraph";
        case GraphClass::GeneralizedBlock: return "GBG";
        case GraphClass::ChordalNotGbg: return "ChordalNotGBG";
        case GraphClass::NotChordal: return "NotChordal";
    }
    return "?";
}

std::optional<std::array<int, 3>> gbg_triple_violation(const CliqueComplex& cc) {
    // Three facets have a common vertex iff they all appear among the facets
    // of some vertex, so checking per vertex covers every relevant triple.
    int maxv = 0;
    for (const VertexSet& f : cc.facets) maxv = std::max(maxv, f.max());
    std::vector<std::vector<int>> at_vertex(static_cast<std::size_t>(maxv) + 1);
    for (std::size_t i = 0; i < cc.facets.size(); ++i)
        for (int v = cc.facets[i].min(); v != 0; v = cc.facets[i].next(v))
            at_vertex[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    for (int v = 1; v <= maxv; ++v) {
        const auto& fs = at_vertex[static_cast<std::size_t>(v)];
        if (fs.size() < 3) continue;
        for (std::size_t a = 0; a < fs.size(); ++a)
            for (std::size_t b = a + 1; b < fs.size(); ++b)
                for (std::size_t c = b + 1; c < fs.size(); ++c) {
                    const VertexSet& fa = cc.facets[static_cast<std::size_t>(fs[a])];
                    const VertexSet& fb = cc.facets[static_cast<std::size_t>(fs[b])];
                    const VertexSet& fc = cc.facets[static_cast<std::size_t>(fs[c])];
                    VertexSet ab = fa & fb, ac = fa & fc, bc = fb & fc;
                    if (ab != ac || ab != bc) return std::array<int, 3>{fs[a], fs[b], fs[c]};
                }
    }
    return std::nullopt;
}

GbgCertificate classify_graph(const Graph& g) { return classify_graph(g, maximal_cliques(g)); }

GbgCertificate classify_graph(const Graph& g, const CliqueComplex& cc) {
    GbgCertificate cert;
    ChordalityResult ch = check_chordal(g);
    if (!ch.chordal) {
        cert.verdict = GraphClass::NotChordal;
        cert.chordless_cycle = ch.chordless_cycle;
        return cert;
    }
    if (auto bad = gbg_triple_violation(cc)) {
        cert.verdict = GraphClass::ChordalNotGbg;
        cert.facet_triple = bad;
        return cert;
    }
    bool block = true;
    for (const VertexSet& a : facet_intersection_cut_sets(cc))
        if (a.size() > 1) {
            block = false;
            break;
        }
    cert.verdict = block ? GraphClass::BlockGraph : GraphClass::GeneralizedBlock;
    return cert;
}

GeneratedGraph random_gbg(uint64_t seed, int facet_count, int max_clique) {
    if (facet_count < 1 || max_clique < 2)
        throw std::invalid_argument("random_gbg needs facet_count >= 1 and max_clique >= 2");
    SplitMix64 rng(seed);
    int n = rng.range(2, max_clique);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> facets;  // as sorted vertex lists
    std::vector<std::vector<int>> junctions;
    VertexSet junction_vertices;
    std::vector<int> first;
    for (int v = 1; v <= n; ++v) first.push_back(v);
    for (std::size_t i = 0; i < first.size(); ++i)
        for (std::size_t j = i + 1; j < first.size(); ++j)
            edges.emplace_back(first[i], first[j]);
    facets.push_back(first);

    for (int t = 1; t < facet_count; ++t) {
        std::vector<int> base;  // junction to glue along
        bool reuse = !junctions.empty() && rng.coin();
        if (reuse) {
            base = junctions[rng.bounded(junctions.size())];
        } else {
            // carve a new junction out of a facet, disjoint from all others
            std::vector<std::pair<int, std::vector<int>>> pool;  // (facet idx, free spots)
            for (std::size_t f = 0; f < facets.size(); ++f) {
                std::vector<int> spots;
                for (int v : facets[f])
                    if (!junction_vertices.contains(v)) spots.push_back(v);
                int cap = std::min<int>(static_cast<int>(spots.size()),
                                        static_cast<int>(facets[f].size()) - 1);
                if (cap >= 1) pool.emplace_back(static_cast<int>(f), std::move(spots));
            }
            if (pool.empty()) {
                if (junctions.empty())
                    throw std::invalid_argument("random_gbg: parameters leave no junction room");
                base = junctions[rng.bounded(junctions.size())];
            } else {
                auto& [fidx, spots] = pool[rng.bounded(pool.size())];
                int cap = std::min<int>(static_cast<int>(spots.size()),
                                        static_cast<int>(facets[static_cast<std::size_t>(fidx)].size()) - 1);
                int a = rng.range(1, cap);
                // random a-subset of spots
                for (int pick = 0; pick < a; ++pick) {
                    std::size_t k = rng.bounded(spots.size());
                    base.push_back(spots[k]);
                    spots.erase(spots.begin() + static_cast<std::ptrdiff_t>(k));
                }
                std::sort(base.begin(), base.end());
                junctions.push_back(base);
                for (int v : base) junction_vertices.insert(v);
            }
        }
        int size = rng.range(static_cast<int>(base.size()) + 1, std::max(max_clique, static_cast<int>(base.size()) + 1));
        std::vector<int> clique = base;
        while (static_cast<int>(clique.size()) < size) clique.push_back(++n);
        std::sort(clique.begin(), clique.end());
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                edges.emplace_back(clique[i], clique[j]);
        facets.push_back(clique);
    }

    GeneratedGraph out{Graph(n, std::move(edges)), false};
    // star: >= 2 facets, all of them edges through one common vertex
    if (facets.size() >= 2) {
        bool all_edges = true;
        for (const auto& f : facets) all_edges = all_edges && f.size() == 2;
        if (all_edges) {
            VertexSet common;
            bool first_f = true;
            for (const auto& f : facets) {
                VertexSet fs;
                for (int v : f) fs.insert(v);
                if (first_f) {
                    common = fs;
                    first_f = false;
                } else {
                    common &= fs;
                }
            }
            out.star = !common.empty();
        }
    }
    return out;
}

}  // namespace bei
