#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "toricnp/betti.hpp"
#include "toricnp/classifier.hpp"
#include "toricnp/graph.hpp"
#include "toricnp/polyomino.hpp"

namespace toricnp {

// File formats and report rendering shared by the CLI and its tests.
// Graph text format:
//   X: x1 x2 ...
//   Y: y1 y2 ...
//   x1 y1          (one edge per line, X label then Y label)
// Graph JSON format: {"X":[...], "Y":[...], "edges":[["x1","y1"], ...]}.
// Polyomino ASCII: '#' cell / '.' empty, rows top-to-bottom = decreasing y.
// Polyomino JSON: {"cells":[[x,y], ...]}.
// All parsers throw std::invalid_argument with a line-level diagnostic.

BipartiteGraph parse_graph_text(std::istream& in);
BipartiteGraph parse_graph_json(const nlohmann::json& j);
// Sniffs the format: leading '{' means JSON, anything else the text format.
BipartiteGraph parse_graph(const std::string& content);

std::string graph_to_text(const BipartiteGraph& g);
nlohmann::json graph_to_json(const BipartiteGraph& g);

Polyomino parse_poly_ascii(const std::string& content);
Polyomino parse_poly_json(const nlohmann::json& j);
Polyomino parse_poly(const std::string& content);

// Rows top-to-bottom (decreasing y), '#'/'.'; inverse of parse_poly_ascii.
std::vector<std::string> poly_to_ascii(const Polyomino& p);
nlohmann::json poly_to_json(const Polyomino& p);

// Certificate rendering needs the graph the verdict's indices refer to (the
// 2-core the classifier ran on).
nlohmann::json verdict_to_json(const BipartiteGraph& core, const NpVerdict& v);
std::string certificate_summary(const BipartiteGraph& core, const NpVerdict& v);
// Extra lines printed under --witness: embedding maps, tree edges, cycles.
std::vector<std::string> certificate_detail(const BipartiteGraph& core, const NpVerdict& v);

nlohmann::json poly_verdict_to_json(const PolyVerdict& v);
std::string poly_certificate_summary(const PolyVerdict& v);

// Table rows in the style "2: 5 5 -": label r = j-i, one column per i,
// zeros as "-", cells beyond the window as ".".
std::vector<std::string> betti_text_rows(const BettiTable& t);
nlohmann::json betti_to_json(const BettiTable& t);

}  // namespace toricnp
