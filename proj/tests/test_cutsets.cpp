#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bei/cutsets.hpp"
#include "bei/errors.hpp"
#include "bei/gbg.hpp"
#include "bei/rng.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace bei;

TEST_CASE("minimal cut sets of the fixtures") {
    SUBCASE("overlap fixture") {
        auto cuts = minimal_cut_sets(fx::chordal_5_overlap());
        REQUIRE(cuts.size() == 2);
        CHECK(cuts[0] == VertexSet{2, 3});
        CHECK(cuts[1] == VertexSet{3, 4});
    }
    SUBCASE("6-vertex fixture") {
        auto cuts = minimal_cut_sets(fx::chordal_6_nongbg());
        REQUIRE(cuts.size() == 3);
        CHECK(cuts[0] == VertexSet{2, 3});
        CHECK(cuts[1] == VertexSet{2, 5});
        CHECK(cuts[2] == VertexSet{3, 5});
    }
    SUBCASE("complete graphs have none") {
        CHECK(minimal_cut_sets(fx::complete(5)).empty());
        CHECK(minimal_cut_sets(fx::complete(2)).empty());
    }
}

TEST_CASE("minimal cut sets agree with subset enumeration") {
    bei::SplitMix64 rng(2024);
    for (int it = 0; it < 200; ++it) {
        Graph g = ref::random_graph(rng, rng.range(1, 10), rng.range(15, 80));
        auto fast = minimal_cut_sets(g);
        auto slow = ref::minimal_cut_sets_bruteforce(g);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
    }
    // a few larger sparse ones
    for (int it = 0; it < 20; ++it) {
        Graph g = ref::random_tree(rng, 12);
        auto fast = minimal_cut_sets(g);
        auto slow = ref::minimal_cut_sets_bruteforce(g);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
    }
}

TEST_CASE("facet-intersection cut sets on generalized block graphs") {
    SUBCASE("two triangles sharing an edge") {
        Graph g = fx::shared_edge_triangles();
        auto cuts = minimal_cut_sets_gbg(g, maximal_cliques(g));
        REQUIRE(cuts.size() == 1);
        CHECK(cuts[0] == VertexSet{2, 3});
    }
    SUBCASE("bowtie") {
        Graph g = fx::bowtie();
        auto cuts = minimal_cut_sets_gbg(g, maximal_cliques(g));
        REQUIRE(cuts.size() == 1);
        CHECK(cuts[0] == VertexSet{3});
    }
    SUBCASE("chain of three triangles glued at vertices") {
        Graph g(7, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {5, 6}, {5, 7}, {6, 7}});
        auto cuts = minimal_cut_sets_gbg(g, maximal_cliques(g));
        REQUIRE(cuts.size() == 2);
        CHECK(cuts[0] == VertexSet{3});
        CHECK(cuts[1] == VertexSet{5});
    }
    SUBCASE("rejects the non-GBG fixture") {
        Graph g = fx::chordal_5_overlap();
        CHECK_THROWS_AS(minimal_cut_sets_gbg(g, maximal_cliques(g)), std::invalid_argument);
    }
}

TEST_CASE("facet route equals general route on random generalized block graphs") {
    bei::SplitMix64 rng(5150);
    int done = 0;
    for (uint64_t seed = 0; done < 150; ++seed) {
        auto gen = random_gbg(rng.next(), rng.range(1, 6), rng.range(2, 5));
        if (gen.graph.n() > 14) continue;
        ++done;
        auto fast = minimal_cut_sets_gbg(gen.graph, maximal_cliques(gen.graph));
        auto general = minimal_cut_sets(gen.graph);
        REQUIRE(fast.size() == general.size());
        for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == general[i]);
    }
}

TEST_CASE("cut point sets") {
    SUBCASE("overlap fixture has exactly the two minimal cut sets") {
        auto fam = cut_point_sets(fx::chordal_5_overlap());
        REQUIRE(fam.size() == 3);
        CHECK(fam[0] == VertexSet{});
        CHECK(fam[1] == VertexSet{2, 3});
        CHECK(fam[2] == VertexSet{3, 4});
    }
    SUBCASE("triangle has only the empty set") {
        auto fam = cut_point_sets(fx::complete(3));
        REQUIRE(fam.size() == 1);
        CHECK(fam[0].empty());
    }
    SUBCASE("path on three vertices") {
        auto fam = cut_point_sets(fx::path(3));
        REQUIRE(fam.size() == 2);
        CHECK(fam[1] == VertexSet{2});
    }
    SUBCASE("cap is enforced") {
        CHECK_THROWS_AS(cut_point_sets(fx::path(17)), resource_limit_error);
        CHECK_NOTHROW(cut_point_sets(fx::path(17), 17));
    }
}

TEST_CASE("every minimal cut set has the cut point property") {
    bei::SplitMix64 rng(31);
    for (int it = 0; it < 120; ++it) {
        Graph g = ref::random_graph(rng, rng.range(2, 11), rng.range(20, 70));
        auto family = cut_point_sets(g);
        for (const VertexSet& a : minimal_cut_sets(g)) {
            CHECK(has_cut_point_property(g, a));
            bool in_family = false;
            for (const VertexSet& t : family) in_family = in_family || t == a;
            CHECK(in_family);
        }
    }
}

TEST_CASE("containment-or-disjointness of minimal cut sets inside C(G)") {
    // holds on generalized block graphs; the overlap fixture is the stored
    // counterexample for chordal graphs in general
    bei::SplitMix64 rng(32);
    int done = 0;
    for (uint64_t seed = 0; done < 60; ++seed) {
        auto gen = random_gbg(rng.next(), rng.range(1, 5), rng.range(2, 5));
        if (gen.graph.n() > 13) continue;
        ++done;
        auto family = cut_point_sets(gen.graph, 14);
        auto cuts = minimal_cut_sets_gbg(gen.graph, maximal_cliques(gen.graph));
        for (const VertexSet& a : cuts)
            for (const VertexSet& t : family) {
                bool contained = a.is_subset_of(t);
                bool disjoint = !a.intersects(t);
                CHECK((contained || disjoint));
            }
    }
    SUBCASE("fails for the overlap fixture") {
        Graph g = fx::chordal_5_overlap();
        VertexSet a{2, 3}, b{3, 4};
        CHECK(a.intersects(b));
        CHECK(!a.is_subset_of(b));
        CHECK(!b.is_subset_of(a));
    }
}

TEST_CASE("C(G) partition property at a minimal cut set") {
    // For a generalized block graph and minimal cut set A:
    // T in C(G_A) iff A and T are disjoint and T in C(G_A[rest]).
    bei::SplitMix64 rng(33);
    int done = 0;
    for (uint64_t seed = 0; done < 40; ++seed) {
        auto gen = random_gbg(rng.next(), rng.range(2, 5), rng.range(2, 4));
        const Graph& g = gen.graph;
        if (g.n() > 12) continue;
        auto cuts = minimal_cut_sets_gbg(g, maximal_cliques(g));
        if (cuts.empty()) continue;
        ++done;
        const VertexSet& a = cuts.front();
        Graph ga = merge_at_cutset(g, a);
        auto family_ga = cut_point_sets(ga, 14);
        auto rest_sub = induced_subgraph(ga, g.vertex_set() - a);
        auto family_rest = cut_point_sets(rest_sub.graph, 14);
        // lift the restricted family back to original labels
        std::vector<VertexSet> lifted;
        for (const VertexSet& t : family_rest) {
            VertexSet l;
            for (int v = t.min(); v != 0; v = t.next(v))
                l.insert(rest_sub.to_original[static_cast<std::size_t>(v)]);
            lifted.push_back(l);
        }
        std::sort(lifted.begin(), lifted.end(), SetOrderLess{});
        for (const VertexSet& t : family_ga) {
            bool disjoint = !t.intersects(a);
            bool in_lifted = false;
            for (const VertexSet& l : lifted) in_lifted = in_lifted || l == t;
            CHECK(disjoint == true);  // no T in C(G_A) meets A
            CHECK(in_lifted);
        }
        for (const VertexSet& l : lifted) {
            bool in_ga = false;
            for (const VertexSet& t : family_ga) in_ga = in_ga || t == l;
            CHECK(in_ga);
        }
    }
}

TEST_CASE("minimal prime descriptions") {
    SUBCASE("overlap fixture at {2,3}") {
        auto d = minimal_prime_description(fx::chordal_5_overlap(), VertexSet{2, 3});
        REQUIRE(d.component_vertex_sets.size() == 2);
        CHECK(d.component_vertex_sets[0] == VertexSet{1});
        CHECK(d.component_vertex_sets[1] == VertexSet{4, 5});
        CHECK(d.summary == "(x2, y2, x3, y3, x4*y5 - x5*y4)");
    }
    SUBCASE("6-vertex fixture at {2,3}") {
        auto d = minimal_prime_description(fx::chordal_6_nongbg(), VertexSet{2, 3});
        REQUIRE(d.component_vertex_sets.size() == 2);
        CHECK(d.component_vertex_sets[0] == VertexSet{1});
        CHECK(d.component_vertex_sets[1] == VertexSet{4, 5, 6});
    }
    SUBCASE("empty set lists the components, no variables") {
        auto d = minimal_prime_description(fx::chordal_5_overlap(), VertexSet{});
        REQUIRE(d.component_vertex_sets.size() == 1);
        CHECK(d.component_vertex_sets[0] == VertexSet{1, 2, 3, 4, 5});
    }
    SUBCASE("rejects sets without the cut point property") {
        CHECK_THROWS_AS(minimal_prime_description(fx::chordal_5_overlap(), VertexSet{3}),
                        std::invalid_argument);
    }
}
