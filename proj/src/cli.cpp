#include "toricnp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "toricnp/betti.hpp"
#include "toricnp/classifier.hpp"
#include "toricnp/fiber.hpp"
#include "toricnp/io.hpp"
#include "toricnp/polyomino.hpp"

namespace toricnp {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw std::invalid_argument("cannot open input file: " + path);
        buf << f.rdbuf();
    }
    return buf.str();
}

FieldSpec field_for(uint32_t characteristic) {
    return characteristic == 0 ? FieldSpec::rationals() : FieldSpec::prime(characteristic);
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", ms);
    return buf;
}

json base_report(const char* command, uint32_t characteristic) {
    json rep;
    rep["engine_version"] = kEngineVersion;
    rep["command"] = command;
    rep["characteristic"] = characteristic;
    return rep;
}

struct CommonArgs {
    std::string path;
    uint32_t characteristic = 0;
    std::string format = "text";
};

int cmd_classify(const CommonArgs& a, bool witness, std::ostream& out) {
    const auto t0 = Clock::now();
    const FieldSpec field = field_for(a.characteristic);
    const BipartiteGraph g = parse_graph(read_input(a.path));
    const ClassifyOutcome outcome = classify_np(g, field);
    const BipartiteGraph core = degree_k_subgraph(g, 2);

    json rep = base_report("classify", a.characteristic);
    rep["input"] = {{"type", "graph"}, {"graph", graph_to_json(g)}};
    if (outcome.zero_ideal())
        rep["verdict"] = {{"level", "zero_ideal"},
                          {"reduction", outcome.reduction_note},
                          {"certificate", nullptr}};
    else
        rep["verdict"] = verdict_to_json(core, *outcome.verdict);
    rep["timing_ms"] = ms_since(t0);

    if (a.format == "json") {
        out << rep.dump(2) << '\n';
        return 0;
    }
    if (outcome.zero_ideal()) {
        out << "level: zero_ideal\n";
        if (!outcome.reduction_note.empty()) out << "reduction: " << outcome.reduction_note << '\n';
        out << "note: the 2-core is empty, so the toric edge ideal is zero\n";
    } else {
        const NpVerdict& v = *outcome.verdict;
        out << "level: " << to_string(v.level) << '\n';
        if (!v.reduction_note.empty()) out << "reduction: " << v.reduction_note << '\n';
        out << "certificate: " << certificate_summary(core, v) << '\n';
        if (witness)
            for (const auto& line : certificate_detail(core, v)) out << line << '\n';
    }
    out << "time: " << format_ms(ms_since(t0)) << " ms\n";
    return 0;
}

struct BettiArgs {
    int max_i = 0;
    int max_j = 0;
    int threads = 1;
    uint64_t face_cap = BettiOptions{}.face_cap;
};

int cmd_betti(const CommonArgs& a, const BettiArgs& b, std::ostream& out) {
    const auto t0 = Clock::now();
    const FieldSpec field = field_for(a.characteristic);
    const BipartiteGraph g = parse_graph(read_input(a.path));
    const BettiTable t = betti_table(g, b.max_i, b.max_j, field, {b.threads, b.face_cap});

    json rep = base_report("betti", a.characteristic);
    rep["input"] = {{"type", "graph"}, {"graph", graph_to_json(g)}};
    rep["betti"] = betti_to_json(t);
    rep["timing_ms"] = ms_since(t0);

    if (a.format == "json") {
        out << rep.dump(2) << '\n';
        return 0;
    }
    out << "characteristic: " << a.characteristic << '\n';
    out << "window: i <= " << t.i_max << ", j <= " << t.j_max << '\n';
    for (const auto& row : betti_text_rows(t)) out << row << '\n';
    out << "window-limited regularity: ";
    if (t.window_limited_regularity)
        out << *t.window_limited_regularity << '\n';
    else
        out << "none (no nonzero entry in the window)\n";
    out << "window-limited projective dimension: ";
    if (t.window_limited_pd)
        out << *t.window_limited_pd << '\n';
    else
        out << "none (no nonzero entry in the window)\n";
    out << "time: " << format_ms(ms_since(t0)) << " ms\n";
    return 0;
}

// Inclusive j-window; empty when hi < lo.
struct Window {
    int lo = 0;
    int hi = -1;
    bool contains(int j) const { return lo <= j && j <= hi; }
};

int cmd_verify(const CommonArgs& a, int max_vertices, std::ostream& out) {
    const auto t0 = Clock::now();
    const FieldSpec field = field_for(a.characteristic);
    const BipartiteGraph g = parse_graph(read_input(a.path));
    if (g.vertex_count() > max_vertices)
        throw ResourceLimitError("graph has " + std::to_string(g.vertex_count()) +
                                 " vertices; the verify cap is " + std::to_string(max_vertices) +
                                 " (raise --max-vertices)");

    const ClassifyOutcome outcome = classify_np(g, field);
    const BipartiteGraph core = degree_k_subgraph(g, 2);

    // Windows that decide the verdict from homology alone.  Generators of the
    // ideal are chordless cycles, so their degrees stop at |V(core)|/2; first
    // syzygy degrees stop at 2 + min side by the regularity bound.
    Window gen, syz;
    if (outcome.zero_ideal()) {
        gen = {2, g.vertex_count() / 2};
    } else {
        gen = {3, core.vertex_count() / 2};
        syz = {4, 2 + std::min(core.x_count(), core.y_count())};
    }

    BettiEngine engine(g, field);
    std::vector<std::pair<int, long long>> beta0, beta1;
    for (int j = gen.lo; j <= std::max(gen.hi, syz.hi); ++j) {
        const bool in_gen = gen.contains(j), in_syz = syz.contains(j);
        if (!in_gen && !in_syz) continue;
        const auto row = engine.graded_row(j, in_syz ? 1 : 0);
        if (in_gen) beta0.emplace_back(j, row[0]);
        if (in_syz) beta1.emplace_back(j, row[1]);
    }
    const bool gens_clean =
        std::all_of(beta0.begin(), beta0.end(), [](const auto& p) { return p.second == 0; });
    const bool syz_clean =
        std::all_of(beta1.begin(), beta1.end(), [](const auto& p) { return p.second == 0; });

    std::string cls_bucket, hom_bucket, cls_level;
    if (outcome.zero_ideal()) {
        cls_bucket = "zero_ideal";
        cls_level = "zero_ideal";
        hom_bucket = gens_clean ? "zero_ideal" : "nonzero_ideal";
    } else {
        const NpLevel level = outcome.verdict->level;
        cls_level = to_string(level);
        cls_bucket = level == NpLevel::FailsN1 ? "Fails_N1"
                     : level == NpLevel::N1    ? "N1"
                                               : "N2_or_higher";
        hom_bucket = !gens_clean ? "Fails_N1" : (!syz_clean ? "N1" : "N2_or_higher");
    }
    const bool agree = cls_bucket == hom_bucket;

    json rep = base_report("verify", a.characteristic);
    rep["input"] = {{"type", "graph"}, {"graph", graph_to_json(g)}};
    json windows;
    auto window_json = [](const Window& w, const std::vector<std::pair<int, long long>>& vals) {
        json jw;
        jw["j_min"] = w.lo;
        jw["j_max"] = w.hi;
        jw["values"] = json::array();
        for (auto [j, v] : vals) jw["values"].push_back({{"j", j}, {"value", v}});
        return jw;
    };
    windows["beta0"] = window_json(gen, beta0);
    windows["beta1"] = window_json(syz, beta1);
    rep["verdict"] = {{"agree", agree},
                      {"classifier_level", cls_level},
                      {"classifier_bucket", cls_bucket},
                      {"homology_bucket", hom_bucket},
                      {"windows", std::move(windows)}};
    rep["timing_ms"] = ms_since(t0);

    if (a.format == "json") {
        out << rep.dump(2) << '\n';
        return agree ? 0 : 4;
    }
    out << "classifier: " << cls_level;
    if (!outcome.zero_ideal())
        out << " (" << certificate_summary(core, *outcome.verdict) << ")";
    out << '\n';
    for (auto [j, v] : beta0) out << "beta_{0," << j << "} = " << v << '\n';
    for (auto [j, v] : beta1) out << "beta_{1," << j << "} = " << v << '\n';
    out << "windowed homology verdict: " << hom_bucket << '\n';
    out << (agree ? "AGREE" : "DISAGREE") << '\n';
    out << "time: " << format_ms(ms_since(t0)) << " ms\n";
    return agree ? 0 : 4;
}

int cmd_poly(const CommonArgs& a, const std::string& graph_out, std::ostream& out) {
    const auto t0 = Clock::now();
    const FieldSpec field = field_for(a.characteristic);
    const Polyomino p = parse_poly(read_input(a.path));
    const PolyVerdict v = classify_polyomino(p, field);
    const BipartiteGraph g = poly_to_graph(p);
    if (!graph_out.empty()) {
        std::ofstream f(graph_out);
        if (!f) throw std::invalid_argument("cannot write graph file: " + graph_out);
        f << graph_to_text(g);
    }

    json rep = base_report("poly", a.characteristic);
    rep["input"] = {{"type", "polyomino"}, {"polyomino", poly_to_json(p)}};
    rep["graph"] = graph_to_json(g);
    rep["verdict"] = poly_verdict_to_json(v);
    rep["timing_ms"] = ms_since(t0);

    if (a.format == "json") {
        out << rep.dump(2) << '\n';
        return 0;
    }
    out << "polyomino: " << p.cell_count() << " cell" << (p.cell_count() == 1 ? "" : "s")
        << " in a " << p.width() << " x " << p.height() << " box\n";
    out << "level: " << to_string(v.level) << '\n';
    out << "certificate: " << poly_certificate_summary(v) << '\n';
    if (!graph_out.empty()) out << "graph written to: " << graph_out << '\n';
    out << "time: " << format_ms(ms_since(t0)) << " ms\n";
    return 0;
}

void add_common(CLI::App* sc, CommonArgs& a) {
    sc->add_option("input", a.path, "input file, or '-' for stdin")->required();
    sc->add_option("--char", a.characteristic, "field characteristic, 0 or a prime (default 0)");
    sc->add_option("--format", a.format, "output format (default text)")
        ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"N_p classification and graded Betti numbers for toric edge ideals of "
                 "bipartite graphs"};
    app.name("toricnp");
    app.set_version_flag("--version", std::string(kEngineVersion));
    app.require_subcommand(1);

    CommonArgs classify_args;
    bool witness = false;
    CLI::App* classify =
        app.add_subcommand("classify", "largest N_p satisfied by the toric edge ideal");
    add_common(classify, classify_args);
    classify->add_flag("--witness", witness, "print the certificate in full");

    CommonArgs betti_args;
    BettiArgs betti_window;
    CLI::App* betti = app.add_subcommand("betti", "graded Betti numbers in a window");
    add_common(betti, betti_args);
    betti->add_option("--max-i", betti_window.max_i, "largest homological degree i")
        ->required()
        ->check(CLI::NonNegativeNumber);
    betti->add_option("--max-j", betti_window.max_j, "largest internal degree j")
        ->required()
        ->check(CLI::NonNegativeNumber);
    betti->add_option("--threads", betti_window.threads, "worker threads (default 1)");
    betti->add_option("--face-cap", betti_window.face_cap,
                      "abort any fiber whose predicted face count exceeds this");

    CommonArgs verify_args;
    int max_vertices = 10;
    CLI::App* verify =
        app.add_subcommand("verify", "cross-check the classifier against windowed homology");
    add_common(verify, verify_args);
    verify->add_option("--max-vertices", max_vertices, "size cap for the homology run (default 10)")
        ->check(CLI::PositiveNumber);

    CommonArgs poly_args;
    std::string graph_out;
    CLI::App* poly = app.add_subcommand("poly", "classify a convex polyomino ideal");
    add_common(poly, poly_args);
    poly->add_option("--graph-out", graph_out, "write the associated bipartite graph here");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return cmd_classify(classify_args, witness, out);
        if (betti->parsed()) return cmd_betti(betti_args, betti_window, out);
        if (verify->parsed()) return cmd_verify(verify_args, max_vertices, out);
        if (poly->parsed()) return cmd_poly(poly_args, graph_out, out);
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace toricnp
