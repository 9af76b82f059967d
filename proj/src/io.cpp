#include "toricnp/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "toricnp/catalog.hpp"

namespace toricnp {

using nlohmann::json;

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string t;
    while (in >> t) tokens.push_back(t);
    return tokens;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

BipartiteGraph parse_graph_text(std::istream& in) {
    std::vector<std::string> x_labels, y_labels;
    std::vector<std::pair<std::string, std::string>> edges;
    bool have_x = false, have_y = false;
    std::set<std::string> x_set, y_set;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto tokens = split_tokens(strip_cr(raw));
        if (tokens.empty()) continue;
        if (tokens[0] == "X:") {
            if (have_x)
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": duplicate X: header");
            x_labels.assign(tokens.begin() + 1, tokens.end());
            x_set.insert(x_labels.begin(), x_labels.end());
            have_x = true;
            continue;
        }
        if (tokens[0] == "Y:") {
            if (have_y)
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": duplicate Y: header");
            y_labels.assign(tokens.begin() + 1, tokens.end());
            y_set.insert(y_labels.begin(), y_labels.end());
            have_y = true;
            continue;
        }
        if (!have_x || !have_y)
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected the X: and Y: headers before edge lines");
        if (tokens.size() != 2)
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": edge lines have the form '<x-label> <y-label>'");
        if (!x_set.count(tokens[0]))
            throw std::invalid_argument("line " + std::to_string(line_no) + ": '" + tokens[0] +
                                        "' is not an X-side label");
        if (!y_set.count(tokens[1]))
            throw std::invalid_argument("line " + std::to_string(line_no) + ": '" + tokens[1] +
                                        "' is not a Y-side label");
        edges.emplace_back(tokens[0], tokens[1]);
    }
    if (!have_x || !have_y) throw std::invalid_argument("missing X: or Y: header line");
    return BipartiteGraph(std::move(x_labels), std::move(y_labels), edges);
}

BipartiteGraph parse_graph_json(const json& j) {
    if (!j.is_object() || !j.contains("X") || !j.contains("Y") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs the keys \"X\", \"Y\", \"edges\"");
    auto side = [](const json& arr, const char* key) {
        if (!arr.is_array())
            throw std::invalid_argument(std::string("graph JSON: \"") + key +
                                        "\" must be an array of labels");
        std::vector<std::string> labels;
        for (const auto& v : arr) {
            if (!v.is_string())
                throw std::invalid_argument(std::string("graph JSON: \"") + key +
                                            "\" entries must be strings");
            labels.push_back(v.get<std::string>());
        }
        return labels;
    };
    auto x_labels = side(j.at("X"), "X");
    auto y_labels = side(j.at("Y"), "Y");
    if (!j.at("edges").is_array())
        throw std::invalid_argument("graph JSON: \"edges\" must be an array of label pairs");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw std::invalid_argument(
                "graph JSON: each edge must be a [\"x-label\",\"y-label\"] pair");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return BipartiteGraph(std::move(x_labels), std::move(y_labels), edges);
}

BipartiteGraph parse_graph(const std::string& content) {
    auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') {
        json j;
        try {
            j = json::parse(content);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(std::string("graph JSON: ") + e.what());
        }
        return parse_graph_json(j);
    }
    std::istringstream in(content);
    return parse_graph_text(in);
}

std::string graph_to_text(const BipartiteGraph& g) {
    std::ostringstream out;
    out << "X:";
    for (const auto& l : g.x_labels()) out << ' ' << l;
    out << "\nY:";
    for (const auto& l : g.y_labels()) out << ' ' << l;
    out << '\n';
    for (auto [xi, yj] : g.edges())
        out << g.label(xi) << ' ' << g.label(g.y_global(yj)) << '\n';
    return out.str();
}

json graph_to_json(const BipartiteGraph& g) {
    json j;
    j["X"] = g.x_labels();
    j["Y"] = g.y_labels();
    j["edges"] = json::array();
    for (auto [xi, yj] : g.edges())
        j["edges"].push_back({g.label(xi), g.label(g.y_global(yj))});
    return j;
}

Polyomino parse_poly_ascii(const std::string& content) {
    std::vector<std::string> rows;
    std::istringstream in(content);
    std::string raw;
    while (std::getline(in, raw)) rows.push_back(strip_cr(raw));
    while (!rows.empty() && rows.back().find('#') == std::string::npos) rows.pop_back();
    if (rows.empty()) throw std::invalid_argument("polyomino grid has no '#' cells");

    std::vector<std::pair<int, int>> cells;
    const int height = static_cast<int>(rows.size());
    for (int r = 0; r < height; ++r) {
        for (size_t c = 0; c < rows[r].size(); ++c) {
            char ch = rows[r][c];
            if (ch == '#')
                cells.emplace_back(static_cast<int>(c) + 1, height - r);
            else if (ch != '.')
                throw std::invalid_argument("polyomino grid line " + std::to_string(r + 1) +
                                            ": expected '#' or '.', got '" + std::string(1, ch) +
                                            "'");
        }
    }
    return parse_polyomino(cells);
}

Polyomino parse_poly_json(const json& j) {
    if (!j.is_object() || !j.contains("cells") || !j.at("cells").is_array())
        throw std::invalid_argument("polyomino JSON needs a \"cells\" array");
    std::vector<std::pair<int, int>> cells;
    for (const auto& c : j.at("cells")) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
            !c[1].is_number_integer())
            throw std::invalid_argument("polyomino JSON: each cell must be an [x,y] integer pair");
        cells.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    return parse_polyomino(cells);
}

Polyomino parse_poly(const std::string& content) {
    auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') {
        json j;
        try {
            j = json::parse(content);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(std::string("polyomino JSON: ") + e.what());
        }
        return parse_poly_json(j);
    }
    return parse_poly_ascii(content);
}

std::vector<std::string> poly_to_ascii(const Polyomino& p) {
    std::vector<std::string> rows;
    for (int y = p.height(); y >= 1; --y) {
        std::string row(static_cast<size_t>(p.width()), '.');
        for (int x = 1; x <= p.width(); ++x)
            if (p.has_cell(x, y)) row[static_cast<size_t>(x - 1)] = '#';
        rows.push_back(std::move(row));
    }
    return rows;
}

json poly_to_json(const Polyomino& p) {
    json j;
    j["width"] = p.width();
    j["height"] = p.height();
    j["cells"] = json::array();
    for (auto [x, y] : p.cells()) j["cells"].push_back({x, y});
    j["ascii"] = poly_to_ascii(p);
    return j;
}

namespace {

std::string join_labels(const std::vector<std::string>& labels) {
    std::string out;
    for (const auto& l : labels) {
        if (!out.empty()) out += ' ';
        out += l;
    }
    return out;
}

}  // namespace

json verdict_to_json(const BipartiteGraph& core, const NpVerdict& v) {
    json j;
    j["level"] = to_string(v.level);
    j["reduction"] = v.reduction_note;
    json cert;
    if (const auto* w = std::get_if<CycleWitness>(&v.certificate)) {
        cert["type"] = "chordless_cycle";
        cert["length"] = w->length();
        cert["vertices"] = w->labels(core);
    } else if (const auto* o = std::get_if<ObstructionHit>(&v.certificate)) {
        cert["type"] = "catalog_obstruction";
        cert["index"] = o->catalog_index;
        cert["swapped"] = o->embedding.swapped;
        const BipartiteGraph& pattern = n2_obstructions()[static_cast<size_t>(o->catalog_index - 1)];
        json map = json::object();
        for (int p = 0; p < pattern.vertex_count(); ++p)
            map[pattern.label(p)] = core.label(o->embedding.map[static_cast<size_t>(p)]);
        cert["embedding"] = std::move(map);
    } else if (const auto* t = std::get_if<ComplementTreeCertificate>(&v.certificate)) {
        cert["type"] = "complement_tree";
        cert["diameter"] = t->diameter;
        cert["tree_edges"] = json::array();
        for (const auto& [x, y] : t->tree_edges) cert["tree_edges"].push_back({x, y});
    } else if (const auto* c = std::get_if<CompleteBipartiteCertificate>(&v.certificate)) {
        cert["type"] = "complete_bipartite";
        cert["m"] = c->m;
        cert["n"] = c->n;
        cert["char3_exception"] = c->char3_exception;
    } else if (const auto* r = std::get_if<LinearResolutionCertificate>(&v.certificate)) {
        cert["type"] = "linear_resolution";
        cert["m"] = r->m;
        cert["n"] = r->n;
    }
    j["certificate"] = std::move(cert);
    return j;
}

std::string certificate_summary(const BipartiteGraph& core, const NpVerdict& v) {
    if (const auto* w = std::get_if<CycleWitness>(&v.certificate))
        return "chordless cycle of length " + std::to_string(w->length()) + ": " +
               join_labels(w->labels(core));
    if (const auto* o = std::get_if<ObstructionHit>(&v.certificate))
        return "induced copy of catalog obstruction " + std::to_string(o->catalog_index) +
               " blocks linear presentation";
    if (const auto* t = std::get_if<ComplementTreeCertificate>(&v.certificate))
        return "bipartite complement of the 2-core is a tree of diameter " +
               std::to_string(t->diameter);
    if (const auto* c = std::get_if<CompleteBipartiteCertificate>(&v.certificate)) {
        std::string base =
            "complete bipartite K_{" + std::to_string(c->m) + "," + std::to_string(c->n) + "}";
        if (c->char3_exception)
            return base + ": next syzygy degree jumps in characteristic 3, so N3 fails";
        return base + " with min side >= 3 (N4 fails)";
    }
    if (const auto* r = std::get_if<LinearResolutionCertificate>(&v.certificate))
        return "K_{" + std::to_string(r->m) + "," + std::to_string(r->n) +
               "}: the ideal has a linear resolution";
    return {};
}

std::vector<std::string> certificate_detail(const BipartiteGraph& core, const NpVerdict& v) {
    std::vector<std::string> lines;
    if (const auto* w = std::get_if<CycleWitness>(&v.certificate)) {
        lines.push_back("cycle: " + join_labels(w->labels(core)));
    } else if (const auto* o = std::get_if<ObstructionHit>(&v.certificate)) {
        const BipartiteGraph& pattern = n2_obstructions()[static_cast<size_t>(o->catalog_index - 1)];
        for (int p = 0; p < pattern.vertex_count(); ++p)
            lines.push_back("  " + pattern.label(p) + " -> " +
                            core.label(o->embedding.map[static_cast<size_t>(p)]));
        if (o->embedding.swapped) lines.push_back("  (pattern sides swapped)");
    } else if (const auto* t = std::get_if<ComplementTreeCertificate>(&v.certificate)) {
        std::string edges;
        for (const auto& [x, y] : t->tree_edges) {
            if (!edges.empty()) edges += ", ";
            edges += "{" + x + "," + y + "}";
        }
        lines.push_back("complement tree edges: " + (edges.empty() ? "(none)" : edges));
    }
    return lines;
}

json poly_verdict_to_json(const PolyVerdict& v) {
    json j;
    j["level"] = to_string(v.level);
    if (v.certificate) {
        json cert;
        cert["symmetry"] = v.certificate->symmetry;
        cert["missing_cells"] = json::array();
        for (auto [x, y] : v.certificate->missing_cells) cert["missing_cells"].push_back({x, y});
        cert["corner_missing"] = v.certificate->corner_missing;
        cert["char3_exception"] = v.certificate->char3_exception;
        j["certificate"] = std::move(cert);
    } else {
        j["certificate"] = nullptr;
    }
    return j;
}

std::string poly_certificate_summary(const PolyVerdict& v) {
    if (!v.certificate) return "no dihedral image confines the missing cells to one row and column";
    const PolyCertificate& c = *v.certificate;
    if (c.char3_exception)
        return "full rectangle with both sides >= 4: drops to N2 in characteristic 3";
    if (c.missing_cells.empty()) return "full rectangle or strip";
    std::string cells;
    for (auto [x, y] : c.missing_cells) {
        if (!cells.empty()) cells += ' ';
        cells += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    }
    return "after symmetry " + std::to_string(c.symmetry) +
           " the missing cells lie in the first row/column: " + cells;
}

std::vector<std::string> betti_text_rows(const BettiTable& t) {
    std::vector<std::string> rows;
    for (int r = 2; r <= t.j_max; ++r) {
        std::string row = std::to_string(r) + ":";
        for (int i = 0; i <= t.i_max; ++i) {
            if (i + r > t.j_max) {
                row += " .";
            } else {
                long long v = t.entry(i, i + r);
                row += v == 0 ? " -" : " " + std::to_string(v);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json betti_to_json(const BettiTable& t) {
    json j;
    j["i_max"] = t.i_max;
    j["j_max"] = t.j_max;
    j["characteristic"] = t.field.characteristic;
    j["entries"] = json::array();
    for (int i = 0; i <= t.i_max; ++i)
        for (int jj = 0; jj <= t.j_max; ++jj)
            if (t.entry(i, jj) != 0) j["entries"].push_back({{"i", i}, {"j", jj}, {"value", t.entry(i, jj)}});
    j["rows"] = betti_text_rows(t);
    j["window_limited_regularity"] =
        t.window_limited_regularity ? json(*t.window_limited_regularity) : json(nullptr);
    j["window_limited_pd"] = t.window_limited_pd ? json(*t.window_limited_pd) : json(nullptr);
    j["row_complete"] = t.row_complete;
    j["col_complete"] = t.col_complete;
    return j;
}

}  // namespace toricnp
