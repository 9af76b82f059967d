#include "toricnp/polyomino.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toricnp {

namespace {

bool contains(const std::vector<std::pair<int, int>>& sorted, int x, int y) {
    return std::binary_search(sorted.begin(), sorted.end(), std::make_pair(x, y));
}

}  // namespace

bool Polyomino::has_cell(int x, int y) const { return contains(cells_, x, y); }

bool Polyomino::has_lattice_point(int x, int y) const { return contains(points_, x, y); }

std::vector<std::pair<int, int>> Polyomino::missing_cells() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 1; x <= width_; ++x)
        for (int y = 1; y <= height_; ++y)
            if (!has_cell(x, y)) out.emplace_back(x, y);
    return out;
}

Polyomino parse_polyomino(std::vector<std::pair<int, int>> cells) {
    if (cells.empty()) throw std::invalid_argument("polyomino needs at least one cell");
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    std::set<std::pair<int, int>> pending(cells.begin() + 1, cells.end());
    std::vector<std::pair<int, int>> frontier = {cells.front()};
    while (!frontier.empty()) {
        auto [x, y] = frontier.back();
        frontier.pop_back();
        for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
            auto it = pending.find({x + dx, y + dy});
            if (it != pending.end()) {
                frontier.push_back(*it);
                pending.erase(it);
            }
        }
    }
    if (!pending.empty()) {
        auto [x, y] = *pending.begin();
        std::ostringstream os;
        os << "cells are not edge-connected: (" << x << "," << y << ") is unreachable";
        throw std::invalid_argument(os.str());
    }

    int min_x = cells.front().first, min_y = cells.front().second;
    for (auto [x, y] : cells) {
        min_x = std::min(min_x, x);
        min_y = std::min(min_y, y);
    }
    Polyomino p;
    for (auto [x, y] : cells) {
        p.cells_.emplace_back(x - min_x + 1, y - min_y + 1);
        p.width_ = std::max(p.width_, x - min_x + 1);
        p.height_ = std::max(p.height_, y - min_y + 1);
    }
    std::sort(p.cells_.begin(), p.cells_.end());
    for (auto [x, y] : p.cells_)
        for (auto [dx, dy] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}})
            p.points_.emplace_back(x + dx, y + dy);
    std::sort(p.points_.begin(), p.points_.end());
    p.points_.erase(std::unique(p.points_.begin(), p.points_.end()), p.points_.end());
    return p;
}

Polyomino transformed(const Polyomino& p, int symmetry) {
    if (symmetry < 0 || symmetry > 7) throw std::invalid_argument("symmetry must be in 0..7");
    std::vector<std::pair<int, int>> cells;
    for (auto [x, y] : p.cells()) {
        if (symmetry >= 4) y = -y;
        for (int r = 0; r < (symmetry & 3); ++r) {
            int t = x;
            x = -y;
            y = t;
        }
        cells.emplace_back(x, y);
    }
    return parse_polyomino(std::move(cells));
}

std::string describe(const ConvexityViolation& v) {
    std::ostringstream os;
    os << "not " << (v.in_row ? "row" : "column") << " convex at "
       << (v.in_row ? "row" : "column") << " " << v.line << ": cells (" << v.first.first << ","
       << v.first.second << ") and (" << v.second.first << "," << v.second.second
       << ") present but (" << v.missing.first << "," << v.missing.second << ") absent";
    return os.str();
}

std::optional<ConvexityViolation> convexity_violation(const Polyomino& p) {
    for (int y = 1; y <= p.height(); ++y) {
        int prev = 0;
        for (int x = 1; x <= p.width(); ++x) {
            if (!p.has_cell(x, y)) continue;
            if (prev != 0 && x > prev + 1)
                return ConvexityViolation{true, y, {prev, y}, {x, y}, {prev + 1, y}};
            prev = x;
        }
    }
    for (int x = 1; x <= p.width(); ++x) {
        int prev = 0;
        for (int y = 1; y <= p.height(); ++y) {
            if (!p.has_cell(x, y)) continue;
            if (prev != 0 && y > prev + 1)
                return ConvexityViolation{false, x, {x, prev}, {x, y}, {x, prev + 1}};
            prev = y;
        }
    }
    return std::nullopt;
}

bool is_convex(const Polyomino& p) { return !convexity_violation(p).has_value(); }

BipartiteGraph poly_to_graph(const Polyomino& p) {
    if (auto v = convexity_violation(p)) throw std::invalid_argument(describe(*v));
    std::vector<std::pair<int, int>> edges;
    for (auto [x, y] : p.lattice_points()) edges.emplace_back(x - 1, y - 1);
    return BipartiteGraph::from_index_edges(p.width() + 1, p.height() + 1, edges);
}

PolyVerdict classify_polyomino(const Polyomino& p, FieldSpec field) {
    if (auto v = convexity_violation(p)) throw std::invalid_argument(describe(*v));

    const auto missing = p.missing_cells();
    if (missing.empty()) {
        if (p.width() == 1 || p.height() == 1) return {NpLevel::NInf, field, PolyCertificate{}};
        if (field.characteristic == 3 && std::min(p.width(), p.height()) >= 4) {
            PolyCertificate cert;
            cert.char3_exception = true;
            return {NpLevel::N2, field, cert};
        }
        return {NpLevel::N3, field, PolyCertificate{}};
    }

    for (int s = 0; s < 8; ++s) {
        Polyomino q = transformed(p, s);
        const auto miss = q.missing_cells();
        bool in_frame = true, row_bite = false, column_bite = false, corner = false;
        for (auto [x, y] : miss) {
            if (x != 1 && y != 1) {
                in_frame = false;
                break;
            }
            if (x > 1) row_bite = true;
            if (y > 1) column_bite = true;
            if (x == 1 && y == 1) corner = true;
        }
        if (!in_frame) continue;
        // Bites on both sides must meet at the corner, or the two star
        // centers of the complement graph come apart.
        if (row_bite && column_bite && !corner) continue;
        PolyCertificate cert;
        cert.symmetry = s;
        cert.missing_cells = miss;
        cert.corner_missing = corner;
        return {NpLevel::N2, field, cert};
    }
    return {NpLevel::N1, field, std::nullopt};
}

}  // namespace toricnp
