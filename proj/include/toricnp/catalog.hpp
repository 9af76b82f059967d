#pragma once

#include <array>

#include "toricnp/graph.hpp"

namespace toricnp {

// The eight minimal obstructions to the linearly-presented case: chordal
// bipartite graphs of minimum degree 2 whose bipartite complement is not
// essentially a tree of diameter <= 3.  Every chordal bipartite graph of
// minimum degree 2 that fails that complement condition contains one of
// these as an induced subgraph (up to swapping sides).
//
// Index i here is 0-based; reports number them 1..8.  All are built from two
// 4-cycles x1y1x2y2 and (depending on the entry) x3y3x4y4 or a shared piece:
//   1: the 4-cycles share the edge {x2,y2}        (6 vertices, 7 edges)
//   2: disjoint 4-cycles                          (8 vertices, 8 edges)
//   3: disjoint 4-cycles plus bridge x2y3         (8 vertices, 9 edges)
//   4: bridges x1y3, x2y3                         (8 vertices, 10 edges)
//   5: bridges x1y3, x2y4                         (8 vertices, 10 edges)
//   6: bridges x1y3, x1y4, x2y3                   (8 vertices, 11 edges)
//   7: bridges x1y3, x1y4, x2y3, x2y4             (8 vertices, 12 edges)
//   8: the 4-cycles share the vertex y2           (7 vertices, 8 edges)
const std::array<BipartiteGraph, 8>& n2_obstructions();

}  // namespace toricnp
