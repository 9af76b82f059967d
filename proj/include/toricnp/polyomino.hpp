#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricnp/classifier.hpp"
#include "toricnp/field.hpp"
#include "toricnp/graph.hpp"

namespace toricnp {

// Edge-connected set of unit lattice cells, named by lower-left corners and
// normalized so the bounding cell rectangle is [1..width] x [1..height].
class Polyomino {
  public:
    int width() const { return width_; }
    int height() const { return height_; }
    int cell_count() const { return static_cast<int>(cells_.size()); }
    const std::vector<std::pair<int, int>>& cells() const { return cells_; }
    // Union of the four corners of every cell; spans [1..width+1] x [1..height+1].
    const std::vector<std::pair<int, int>>& lattice_points() const { return points_; }
    bool has_cell(int x, int y) const;
    bool has_lattice_point(int x, int y) const;
    // Cells of the bounding rectangle that are absent, ascending.
    std::vector<std::pair<int, int>> missing_cells() const;
    bool operator==(const Polyomino&) const = default;

  private:
    friend Polyomino parse_polyomino(std::vector<std::pair<int, int>> cells);
    int width_ = 0;
    int height_ = 0;
    std::vector<std::pair<int, int>> cells_;
    std::vector<std::pair<int, int>> points_;
};

// Deduplicates, requires edge-connectivity, translates so the smallest cell
// coordinates become (1,1). Throws std::invalid_argument on empty or
// disconnected input.
Polyomino parse_polyomino(std::vector<std::pair<int, int>> cells);

// Dihedral image, re-normalized: rotate by 90 degrees (symmetry & 3) times,
// after a vertical flip when symmetry >= 4.
Polyomino transformed(const Polyomino& p, int symmetry);

struct ConvexityViolation {
    bool in_row = true;           // false: the gap sits in a column
    int line = 0;                 // y of the row (resp. x of the column)
    std::pair<int, int> first;    // present cell
    std::pair<int, int> second;   // present cell further along the line
    std::pair<int, int> missing;  // absent cell strictly between them
};

std::string describe(const ConvexityViolation& v);

// A polyomino is convex when every row and every column of present cells is
// contiguous; the first gap found (rows scanned before columns) is reported.
std::optional<ConvexityViolation> convexity_violation(const Polyomino& p);
bool is_convex(const Polyomino& p);

// X = vertical lattice lines 1..width+1, Y = horizontal lines 1..height+1;
// x_i is joined to y_j exactly when (i,j) is a lattice point of p. Requires
// convexity (the ideal dictionary is only valid there).
BipartiteGraph poly_to_graph(const Polyomino& p);

struct PolyCertificate {
    // Transform index exhibiting the canonical placement below; 0 when no
    // placement is needed (full rectangles and strips).
    int symmetry = 0;
    // Missing cells of transformed(p, symmetry): all in cell-row 1 or
    // cell-column 1, with (1,1) among them whenever both sides are bitten --
    // otherwise the two bites sever the complement graph.
    std::vector<std::pair<int, int>> missing_cells;
    bool corner_missing = false;
    bool char3_exception = false;  // rectangle demoted in characteristic 3
};

struct PolyVerdict {
    NpLevel level = NpLevel::N1;
    FieldSpec field;
    std::optional<PolyCertificate> certificate;  // present for levels >= N2
};

// Geometric classification: N1 always; >= N2 iff some dihedral image confines
// the missing cells to the first row/column with the corner rule above;
// >= N3 iff a full rectangle (demoted to N2 when char = 3 and both cell
// dimensions are >= 4); N_inf iff a width-1 strip. Requires convexity.
PolyVerdict classify_polyomino(const Polyomino& p, FieldSpec field);

}  // namespace toricnp
