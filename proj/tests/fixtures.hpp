#pragma once

#include "bei/graph.hpp"

// Fixture graphs used across the test suites. The two chordal non-GBG
// examples and the 14-vertex tree also ship as files under fixtures/.
namespace fx {

using bei::Graph;

// Five vertices, facets {1,2,3},{2,3,4},{3,4,5}; chordal, not a generalized
// block graph, with the overlapping minimal cut sets {2,3} and {3,4}.
inline Graph chordal_5_overlap() {
    return Graph(5, {{2, 3}, {3, 4}, {4, 5}, {3, 5}, {1, 3}, {1, 2}, {2, 4}});
}

// Six vertices, facets {1,2,3},{2,3,5},{2,4,5},{3,5,6}; chordal, not a
// generalized block graph; minimal cut sets {2,3},{2,5},{3,5}.
inline Graph chordal_6_nongbg() {
    return Graph(6, {{2, 5}, {3, 5}, {3, 6}, {5, 6}, {4, 5}, {2, 4}, {2, 3}, {1, 3}, {1, 2}});
}

// 14-vertex tree whose internal vertices all have degree 3; cl = 13,
// alpha = 4, pv = 8.
inline Graph tree_14() {
    return Graph(14, {{1, 2},
                      {2, 4},
                      {4, 5},
                      {5, 7},
                      {4, 8},
                      {8, 9},
                      {9, 10},
                      {9, 11},
                      {8, 12},
                      {12, 13},
                      {12, 14},
                      {2, 3},
                      {5, 6}});
}

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) es.emplace_back(i, j);
    return Graph(n, std::move(es));
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, std::move(es));
}

// K_{1,m}: center 1, leaves 2..m+1.
inline Graph star(int m) {
    std::vector<std::pair<int, int>> es;
    for (int i = 2; i <= m + 1; ++i) es.emplace_back(1, i);
    return Graph(m + 1, std::move(es));
}

// Flower F_{h,k}(1): h triangles and k three-leaf star arms glued at the
// vertex 1, which is free in each piece.
inline Graph flower(int h, int k) {
    std::vector<std::pair<int, int>> es;
    int next = 2;
    for (int t = 0; t < h; ++t) {
        int a = next++, b = next++;
        es.emplace_back(1, a);
        es.emplace_back(1, b);
        es.emplace_back(a, b);
    }
    for (int t = 0; t < k; ++t) {
        int c = next++, x = next++, y = next++;
        es.emplace_back(1, c);
        es.emplace_back(c, x);
        es.emplace_back(c, y);
    }
    return Graph(next - 1, std::move(es));
}

// Two triangles sharing the single vertex 3.
inline Graph bowtie() {
    return Graph(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

// Two triangles sharing the edge {2,3}.
inline Graph shared_edge_triangles() {
    return Graph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
}

// Triangle {1,2,3} with the pendant edge {3,4}; the initial ideal splits over
// disjoint variables with this labeling.
inline Graph triangle_with_tail() {
    return Graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

}  // namespace fx
