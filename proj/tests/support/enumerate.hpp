#pragma once

// Exhaustive enumeration oracles, independent of the library's search code:
// free polyominoes grown cell by cell, and connected bipartite graphs with
// minimum degree >= 2, both reduced to canonical representatives by brute
// minimization over their symmetry groups.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "toricnp/graph.hpp"
#include "toricnp/polyomino.hpp"

namespace toricnp::testing {

inline std::vector<std::pair<int, int>> canonical_cells(const Polyomino& p) {
    std::vector<std::pair<int, int>> best;
    for (int s = 0; s < 8; ++s) {
        auto c = transformed(p, s).cells();
        if (s == 0 || c < best) best = c;
    }
    return best;
}

// result[k-1] = canonical representatives of the free polyominoes with k
// cells (expected sizes 1, 1, 2, 5, 12, 35, ...).
inline std::vector<std::vector<Polyomino>> free_polyominoes(int max_cells) {
    std::vector<std::vector<Polyomino>> out;
    out.push_back({parse_polyomino({{1, 1}})});
    for (int k = 2; k <= max_cells; ++k) {
        std::set<std::vector<std::pair<int, int>>> seen;
        std::vector<Polyomino> next;
        for (const auto& p : out.back())
            for (auto [x, y] : p.cells())
                for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
                    if (p.has_cell(x + dx, y + dy)) continue;
                    auto cells = p.cells();
                    cells.emplace_back(x + dx, y + dy);
                    auto key = canonical_cells(parse_polyomino(std::move(cells)));
                    if (seen.insert(key).second) next.push_back(parse_polyomino(key));
                }
        out.push_back(std::move(next));
    }
    return out;
}

inline std::vector<Polyomino> convex_polyominoes(int max_cells) {
    std::vector<Polyomino> out;
    for (const auto& level : free_polyominoes(max_cells))
        for (const auto& p : level)
            if (is_convex(p)) out.push_back(p);
    return out;
}

namespace detail {

inline std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> ident(static_cast<size_t>(n));
    std::iota(ident.begin(), ident.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(ident);
    while (std::next_permutation(ident.begin(), ident.end()));
    return out;
}

// Adjacency packed row-major: bit i*n + j set iff x_i ~ y_j.
inline uint64_t pack(const std::vector<uint32_t>& rows, int n) {
    uint64_t key = 0;
    for (size_t i = 0; i < rows.size(); ++i) key |= uint64_t{rows[i]} << (i * static_cast<size_t>(n));
    return key;
}

inline uint64_t min_relabeling(const std::vector<uint32_t>& rows, int m, int n,
                               const std::vector<std::vector<int>>& pm,
                               const std::vector<std::vector<int>>& pn, bool transpose_too) {
    uint64_t best = ~uint64_t{0};
    std::vector<uint32_t> r(static_cast<size_t>(m));
    for (const auto& sx : pm)
        for (const auto& sy : pn) {
            for (int i = 0; i < m; ++i) {
                uint32_t row = rows[static_cast<size_t>(sx[static_cast<size_t>(i)])], permuted = 0;
                for (int j = 0; j < n; ++j)
                    if (row & (1u << sy[static_cast<size_t>(j)])) permuted |= 1u << j;
                r[static_cast<size_t>(i)] = permuted;
            }
            best = std::min(best, pack(r, n));
        }
    if (transpose_too) {
        std::vector<uint32_t> cols(static_cast<size_t>(n), 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (rows[static_cast<size_t>(i)] & (1u << j)) cols[static_cast<size_t>(j)] |= 1u << i;
        best = std::min(best, min_relabeling(cols, n, m, pn, pm, false));
    }
    return best;
}

inline bool connected_mask(const std::vector<uint32_t>& rows, int m, int n) {
    uint32_t seen_x = 1, seen_y = 0;
    for (bool grew = true; grew;) {
        grew = false;
        for (int i = 0; i < m; ++i)
            if (seen_x & (1u << i)) {
                uint32_t add = rows[static_cast<size_t>(i)] & ~seen_y;
                if (add) {
                    seen_y |= add;
                    grew = true;
                }
            }
        for (int i = 0; i < m; ++i)
            if (!(seen_x & (1u << i)) && (rows[static_cast<size_t>(i)] & seen_y)) {
                seen_x |= 1u << i;
                grew = true;
            }
    }
    return seen_x == (1u << m) - 1 && seen_y == (1u << n) - 1;
}

}  // namespace detail

// Connected bipartite graphs with both sides of size >= 2, every degree >= 2,
// and m + n <= max_vertices, one canonical representative per isomorphism
// class (label permutations, plus side swap when m = n).
inline std::vector<BipartiteGraph> core_graph_corpus(int max_vertices) {
    std::vector<BipartiteGraph> out;
    for (int m = 2; 2 * m <= max_vertices; ++m)
        for (int n = m; m + n <= max_vertices; ++n) {
            const auto pm = detail::permutations(m), pn = detail::permutations(n);
            std::vector<uint32_t> row_choices;
            for (uint32_t r = 0; r < (1u << n); ++r)
                if (__builtin_popcount(r) >= 2) row_choices.push_back(r);
            std::vector<uint32_t> rows(static_cast<size_t>(m));
            std::vector<size_t> idx(static_cast<size_t>(m), 0);
            while (true) {
                for (int i = 0; i < m; ++i)
                    rows[static_cast<size_t>(i)] = row_choices[idx[static_cast<size_t>(i)]];
                bool cols_ok = true;
                for (int j = 0; j < n && cols_ok; ++j) {
                    int deg = 0;
                    for (int i = 0; i < m; ++i)
                        if (rows[static_cast<size_t>(i)] & (1u << j)) ++deg;
                    cols_ok = deg >= 2;
                }
                if (cols_ok && detail::connected_mask(rows, m, n) &&
                    detail::pack(rows, n) == detail::min_relabeling(rows, m, n, pm, pn, m == n)) {
                    std::vector<std::pair<int, int>> edges;
                    for (int i = 0; i < m; ++i)
                        for (int j = 0; j < n; ++j)
                            if (rows[static_cast<size_t>(i)] & (1u << j)) edges.emplace_back(i, j);
                    out.push_back(BipartiteGraph::from_index_edges(m, n, edges));
                }
                size_t pos = 0;
                while (pos < idx.size() && ++idx[pos] == row_choices.size()) idx[pos++] = 0;
                if (pos == idx.size()) break;
            }
        }
    return out;
}

}  // namespace toricnp::testing
