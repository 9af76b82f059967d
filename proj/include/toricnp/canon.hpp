#pragma once

#include <string>

#include "toricnp/fiber.hpp"
#include "toricnp/graph.hpp"

namespace toricnp {

// Canonical byte key for the pair (induced subgraph on supp(alpha), alpha
// restricted to its support).  The fiber of alpha, and hence its divisor
// complex, depends only on that pair, so equal keys imply equal homology over
// every field.  Equal keys always come from isomorphic pairs (the encoding
// fixes sizes, exponents and the full adjacency matrix under a
// refinement-derived vertex order, minimized over the two side orientations);
// distinct keys may still be isomorphic when color refinement leaves ties,
// which only costs a cache miss.
std::string fiber_memo_key(const BipartiteGraph& g, const Multidegree& alpha);

}  // namespace toricnp
