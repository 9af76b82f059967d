#pragma once

// Shared graph fixtures for the test suites.

#include <utility>
#include <vector>

#include "toricnp/graph.hpp"

namespace toricnp::testing {

// Even cycle C_len = x1 y1 x2 y2 ... x_{len/2} y_{len/2} x1.
inline BipartiteGraph cycle_graph(int len) {
    int half = len / 2;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < half; ++i) {
        edges.emplace_back(i, i);
        edges.emplace_back((i + 1) % half, i);
    }
    return BipartiteGraph::from_index_edges(half, half, std::move(edges));
}

// Complete bipartite graph minus the single edge {x_m, y_n}.  For (3,3) this
// is the Gorenstein 6-vertex example with Betti rows (5,5,-),(-,-,1).
inline BipartiteGraph complete_minus_corner(int m, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (!(i == m - 1 && j == n - 1)) edges.emplace_back(i, j);
    return BipartiteGraph::from_index_edges(m, n, std::move(edges));
}

// Three 4x4 hosts with small complements used as Betti golden cases:
//   a: complement is a path of diameter 4    -> (b02,b13,b14) = (10,16,3)
//   b: complement is disconnected            -> (14,29,9)
//   c: complement is a 4-cycle               -> (11,20,1)
inline BipartiteGraph host_complement_path() {
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < 4; ++j) edges.emplace_back(0, j);
    edges.emplace_back(1, 2);
    edges.emplace_back(1, 3);
    edges.emplace_back(2, 0);
    edges.emplace_back(2, 3);
    for (int j = 0; j < 4; ++j) edges.emplace_back(3, j);
    return BipartiteGraph::from_index_edges(4, 4, std::move(edges));
}

inline BipartiteGraph host_complement_split() {
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < 4; ++j) edges.emplace_back(0, j);
    edges.emplace_back(1, 2);
    edges.emplace_back(1, 3);
    edges.emplace_back(2, 0);
    edges.emplace_back(2, 1);
    edges.emplace_back(2, 3);
    for (int j = 0; j < 4; ++j) edges.emplace_back(3, j);
    return BipartiteGraph::from_index_edges(4, 4, std::move(edges));
}

inline BipartiteGraph host_complement_square() {
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < 4; ++j) edges.emplace_back(0, j);
    edges.emplace_back(1, 0);
    edges.emplace_back(1, 3);
    edges.emplace_back(2, 0);
    edges.emplace_back(2, 3);
    for (int j = 0; j < 4; ++j) edges.emplace_back(3, j);
    return BipartiteGraph::from_index_edges(4, 4, std::move(edges));
}

// 7-vertex graph made of a 6-cycle x1 z1 z2 z3 x2 z5 plus the vertex z4
// joined to x1 and z2; contains two 4-cycles sharing the vertex z2.
inline BipartiteGraph seven_vertex_shared_square() {
    return BipartiteGraph(
        {"x1", "x2", "z2"}, {"z1", "z3", "z4", "z5"},
        {{"x1", "z1"}, {"x1", "z4"}, {"z2", "z1"}, {"z2", "z3"},
         {"z2", "z4"}, {"z2", "z5"}, {"x2", "z3"}, {"x2", "z5"}});
}

// Path on n vertices starting on the X side.
inline BipartiteGraph path_graph(int n) {
    int m = (n + 1) / 2, k = n / 2;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) {
        int x = (v % 2 == 0) ? v / 2 : (v + 1) / 2;
        int y = v / 2;
        edges.emplace_back(x, y);
    }
    return BipartiteGraph::from_index_edges(m, k, std::move(edges));
}

// Double star: central edge {x1,y1}, a extra leaves on x1, b on y1.
// A tree of diameter 3 when a,b >= 1 (diameter 2 if one side has none).
inline BipartiteGraph double_star(int a, int b) {
    std::vector<std::pair<int, int>> edges{{0, 0}};
    for (int j = 1; j <= a; ++j) edges.emplace_back(0, j);
    for (int i = 1; i <= b; ++i) edges.emplace_back(i, 0);
    return BipartiteGraph::from_index_edges(1 + b, 1 + a, std::move(edges));
}

}  // namespace toricnp::testing
