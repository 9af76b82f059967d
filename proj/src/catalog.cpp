#include "toricnp/catalog.hpp"

namespace toricnp {

namespace {

using E = std::vector<std::pair<int, int>>;

std::array<BipartiteGraph, 8> build_catalog() {
    const E two_squares = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}};
    auto with_bridges = [&](const E& extra) {
        E e = two_squares;
        e.insert(e.end(), extra.begin(), extra.end());
        return BipartiteGraph::from_index_edges(4, 4, e);
    };
    return {
        BipartiteGraph::from_index_edges(
            3, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}}),
        with_bridges({}),
        with_bridges({{1, 2}}),
        with_bridges({{0, 2}, {1, 2}}),
        with_bridges({{0, 2}, {1, 3}}),
        with_bridges({{0, 2}, {0, 3}, {1, 2}}),
        with_bridges({{0, 2}, {0, 3}, {1, 2}, {1, 3}}),
        BipartiteGraph::from_index_edges(
            4, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}}),
    };
}

}  // namespace

const std::array<BipartiteGraph, 8>& n2_obstructions() {
    static const std::array<BipartiteGraph, 8> catalog = build_catalog();
    return catalog;
}

}  // namespace toricnp
