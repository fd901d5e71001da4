#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "bei/chordal.hpp"
#include "bei/rng.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace bei;

namespace {

bool is_cycle_chordless(const Graph& g, const std::vector<int>& cyc) {
    if (cyc.size() < 4) return false;
    std::size_t k = cyc.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(cyc[i], cyc[j]) != consecutive) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("chordality fixtures") {
    CHECK(check_chordal(fx::chordal_5_overlap()).chordal);
    CHECK(check_chordal(fx::chordal_6_nongbg()).chordal);
    Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    auto res = check_chordal(c4);
    CHECK(!res.chordal);
    CHECK(is_cycle_chordless(c4, res.chordless_cycle));
}

TEST_CASE("chordality agrees with brute-force chordless cycle search") {
    bei::SplitMix64 rng(101);
    for (int it = 0; it < 300; ++it) {
        Graph g = ref::random_graph(rng, rng.range(1, 12), rng.range(15, 70));
        auto res = check_chordal(g);
        auto cyc = find_chordless_cycle(g);
        CHECK(res.chordal == !cyc.has_value());
        if (cyc) CHECK(is_cycle_chordless(g, *cyc));
        if (!res.chordal) CHECK(is_cycle_chordless(g, res.chordless_cycle));
        if (res.chordal) {
            // verify the PEO directly
            std::vector<int> pos(static_cast<std::size_t>(g.n()) + 1, 0);
            for (int i = 0; i < g.n(); ++i) pos[res.peo[static_cast<std::size_t>(i)]] = i;
            for (int v = 1; v <= g.n(); ++v) {
                auto later = std::vector<int>{};
                for (int u : g.neighbors(v).elements())
                    if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)])
                        later.push_back(u);
                for (std::size_t i = 0; i < later.size(); ++i)
                    for (std::size_t j = i + 1; j < later.size(); ++j)
                        CHECK(g.has_edge(later[i], later[j]));
            }
        }
    }
}

TEST_CASE("maximal cliques of the fixtures") {
    auto cc = maximal_cliques(fx::chordal_5_overlap());
    REQUIRE(cc.facets.size() == 3);
    CHECK(cc.facets[0] == VertexSet{1, 2, 3});
    CHECK(cc.facets[1] == VertexSet{2, 3, 4});
    CHECK(cc.facets[2] == VertexSet{3, 4, 5});

    auto cc2 = maximal_cliques(fx::chordal_6_nongbg());
    REQUIRE(cc2.facets.size() == 4);
    CHECK(cc2.facets[0] == VertexSet{1, 2, 3});
    CHECK(cc2.facets[1] == VertexSet{2, 3, 5});
    CHECK(cc2.facets[2] == VertexSet{2, 4, 5});
    CHECK(cc2.facets[3] == VertexSet{3, 5, 6});

    auto cc3 = maximal_cliques(fx::star(3));
    REQUIRE(cc3.facets.size() == 3);
    for (const auto& f : cc3.facets) CHECK(f.size() == 2);
}

TEST_CASE("maximal cliques: elimination method agrees with Bron-Kerbosch") {
    // maximal_cliques dispatches on chordality, so compare the chordal method
    // against the general one by enumerating cliques of random graphs both
    // ways; for non-chordal graphs compare against a naive subset check
    bei::SplitMix64 rng(55);
    for (int it = 0; it < 120; ++it) {
        Graph g = ref::random_graph(rng, rng.range(1, 9), rng.range(20, 80));
        auto cc = maximal_cliques(g);
        // reference: all maximal cliques by subset enumeration
        std::vector<VertexSet> cliques;
        for (uint64_t mask = 1; mask < (uint64_t(1) << g.n()); ++mask) {
            VertexSet s;
            for (int v = 1; v <= g.n(); ++v)
                if (mask & (uint64_t(1) << (v - 1))) s.insert(v);
            auto vs = s.elements();
            bool clique = true;
            for (std::size_t i = 0; i < vs.size() && clique; ++i)
                for (std::size_t j = i + 1; j < vs.size() && clique; ++j)
                    if (!g.has_edge(vs[i], vs[j])) clique = false;
            if (!clique) continue;
            bool maximal = true;
            for (int v = 1; v <= g.n() && maximal; ++v) {
                if (s.contains(v)) continue;
                if (s.is_subset_of(g.neighbors(v))) maximal = false;
            }
            if (maximal) cliques.push_back(s);
        }
        std::sort(cliques.begin(), cliques.end(), SetOrderLess{});
        REQUIRE(cc.facets.size() == cliques.size());
        for (std::size_t i = 0; i < cliques.size(); ++i) CHECK(cc.facets[i] == cliques[i]);
    }
}

TEST_CASE("leaf orders") {
    SUBCASE("overlap fixture admits a leaf order") {
        auto cc = maximal_cliques(fx::chordal_5_overlap());
        auto lo = compute_leaf_order(cc);
        REQUIRE(lo.ok);
        CHECK(verify_leaf_order(cc.facets, lo.order) == -1);
    }
    SUBCASE("single facet") {
        auto cc = maximal_cliques(fx::complete(4));
        auto lo = compute_leaf_order(cc);
        REQUIRE(lo.ok);
        CHECK(lo.order == std::vector<int>{0});
    }
    SUBCASE("two triangles sharing an edge: either order verifies") {
        auto cc = maximal_cliques(fx::shared_edge_triangles());
        REQUIRE(cc.facets.size() == 2);
        CHECK(verify_leaf_order(cc.facets, {0, 1}) == -1);
        CHECK(verify_leaf_order(cc.facets, {1, 0}) == -1);
    }
}

TEST_CASE("chordal iff a leaf order exists") {
    bei::SplitMix64 rng(77);
    for (int it = 0; it < 250; ++it) {
        Graph g = ref::random_graph(rng, rng.range(1, 12), rng.range(15, 75));
        auto cc = maximal_cliques(g);
        auto lo = compute_leaf_order(cc);
        CHECK(lo.ok == check_chordal(g).chordal);
        if (lo.ok) CHECK(verify_leaf_order(cc.facets, lo.order) == -1);
    }
}

TEST_CASE("free and internal vertices") {
    SUBCASE("complete graphs are all free") {
        auto g = fx::complete(6);
        auto s = free_and_internal_vertices(g, maximal_cliques(g));
        CHECK(s.f == 6);
        CHECK(s.iv == 0);
    }
    SUBCASE("three triangles glued at a vertex") {
        auto g = fx::flower(3, 0);
        auto s = free_and_internal_vertices(g, maximal_cliques(g));
        CHECK(s.f == 6);
        CHECK(s.iv == 1);
        CHECK(s.cdeg[1] == 3);
    }
    SUBCASE("path") {
        auto g = fx::path(3);
        auto s = free_and_internal_vertices(g, maximal_cliques(g));
        CHECK(s.free_vertices == VertexSet{1, 3});
        CHECK(s.internal_vertices == VertexSet{2});
        CHECK(s.cdeg[2] == 2);
    }
    SUBCASE("cdeg sums to total facet size; f + iv = n") {
        bei::SplitMix64 rng(9);
        for (int it = 0; it < 80; ++it) {
            Graph g = ref::random_graph(rng, rng.range(1, 10), 40);
            auto cc = maximal_cliques(g);
            auto s = free_and_internal_vertices(g, cc);
            int total = 0;
            for (const auto& f : cc.facets) total += f.size();
            int cdeg_sum = 0;
            for (int v = 1; v <= g.n(); ++v) cdeg_sum += s.cdeg[static_cast<std::size_t>(v)];
            CHECK(cdeg_sum == total);
            CHECK(s.f + s.iv == g.n());
            // facet list is an inclusion antichain
            for (std::size_t i = 0; i < cc.facets.size(); ++i)
                for (std::size_t j = 0; j < cc.facets.size(); ++j)
                    if (i != j) CHECK(!cc.facets[i].is_subset_of(cc.facets[j]));
        }
    }
}
