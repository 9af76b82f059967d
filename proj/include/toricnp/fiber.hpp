#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toricnp/graph.hpp"

namespace toricnp {

// Exponent vector over the vertices of a fixed graph: X block then Y block,
// following the graph's global vertex indices.
using Multidegree = std::vector<int>;

int multidegree_total(const Multidegree& alpha);

// Human-readable form "x1 y1^2 y2" (exponent 1 omitted, zeros skipped).
std::string format_multidegree(const BipartiteGraph& g, const Multidegree& alpha);

// Thrown when a computation would exceed a configured size bound.  The caller
// can retry with a larger cap; partial results are never returned.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Multiset of edges of a fixed graph; entries are (edge index, multiplicity)
// with positive multiplicities, sorted by edge index.
struct EdgeMultiset {
    std::vector<std::pair<int, int>> entries;

    int size() const;  // sum of multiplicities
    Multidegree degree_vector(const BipartiteGraph& g) const;
    std::vector<int> support() const;  // edge indices, ascending

    bool operator==(const EdgeMultiset&) const = default;
};

// Simplicial complex on a subset of the edges of a host graph: complex vertex
// t stands for host edge vertex_edges[t].  Facets are bitmasks over those
// positions, sorted ascending and pairwise incomparable; every subset of a
// facet is a face.
struct DivisorComplex {
    std::vector<int> vertex_edges;
    std::vector<uint64_t> facets;
};

// All alpha with |alpha| = 2j, side sums both equal to j, and a nonempty
// fiber (certified by an integral flow feasibility check).  Ascending
// lexicographic order of the exponent vector.
std::vector<Multidegree> relevant_multidegrees(const BipartiteGraph& g, int j);

// All edge multisets whose vertex-degree vector equals alpha; empty when
// infeasible.  Sorted by entry list.
std::vector<EdgeMultiset> fiber(const BipartiteGraph& g, const Multidegree& alpha);

// Complex whose facets are the maximal supports of fiber(g, alpha).  Throws
// ResourceLimitError if the supports touch more than 64 distinct edges.
DivisorComplex divisor_complex(const BipartiteGraph& g, const Multidegree& alpha);

}  // namespace toricnp
