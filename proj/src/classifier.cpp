#include "toricnp/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "toricnp/catalog.hpp"

namespace toricnp {

const char* to_string(NpLevel level) {
    switch (level) {
        case NpLevel::FailsN1: return "Fails_N1";
        case NpLevel::N1: return "N1";
        case NpLevel::N2: return "N2";
        case NpLevel::N3: return "N3";
        case NpLevel::NInf: return "N_inf";
    }
    return "?";
}

namespace {

std::string reduction_note_for(const BipartiteGraph& g, const BipartiteGraph& core) {
    int removed = g.vertex_count() - core.vertex_count();
    if (removed == 0) return {};
    return "peeled " + std::to_string(removed) + (removed == 1 ? " vertex" : " vertices") +
           " of degree < 2; verdict computed on the remaining " +
           std::to_string(core.vertex_count()) + "-vertex core";
}

}  // namespace

ClassifyOutcome classify_np(const BipartiteGraph& g, FieldSpec field) {
    BipartiteGraph core = degree_k_subgraph(g, 2);
    std::string note = reduction_note_for(g, core);
    if (core.edge_count() == 0) return ClassifyOutcome{std::nullopt, std::move(note)};

    ChordalCheck chordal = is_chordal_bipartite(core);
    if (!chordal.chordal)
        return ClassifyOutcome{NpVerdict{NpLevel::FailsN1, *chordal.witness, note}, note};

    if (auto sides = is_complete_bipartite(core)) {
        auto [m, n] = *sides;
        if (std::min(m, n) == 2)
            return ClassifyOutcome{
                NpVerdict{NpLevel::NInf, LinearResolutionCertificate{m, n}, note}, note};
        if (field.characteristic == 3 && std::min(m, n) >= 5)
            return ClassifyOutcome{
                NpVerdict{NpLevel::N2, CompleteBipartiteCertificate{m, n, true}, note}, note};
        return ClassifyOutcome{
            NpVerdict{NpLevel::N3, CompleteBipartiteCertificate{m, n, false}, note}, note};
    }

    BipartiteGraph comp = degree_k_subgraph(bipartite_complement(core), 1);
    if (is_essentially_tree_diameter_le3(comp)) {
        ComplementTreeCertificate cert;
        for (auto [i, j] : comp.edges())
            cert.tree_edges.emplace_back(comp.x_labels()[static_cast<size_t>(i)],
                                         comp.y_labels()[static_cast<size_t>(j)]);
        cert.diameter = comp.vertex_count() == 0 ? 0 : diameter(comp);
        return ClassifyOutcome{NpVerdict{NpLevel::N2, std::move(cert), note}, note};
    }

    std::optional<ObstructionHit> hit = find_n2_obstruction(core);
    if (!hit)
        throw std::logic_error(
            "no catalog obstruction in a chordal core whose complement is not a small tree");
    return ClassifyOutcome{NpVerdict{NpLevel::N1, std::move(*hit), note}, note};
}

std::optional<ObstructionHit> find_n2_obstruction(const BipartiteGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < 2)
            throw std::invalid_argument("find_n2_obstruction requires minimum degree >= 2");
    if (!is_chordal_bipartite(g).chordal)
        throw std::invalid_argument("find_n2_obstruction requires a chordal bipartite graph");
    const auto& catalog = n2_obstructions();
    for (size_t i = 0; i < catalog.size(); ++i) {
        if (auto e = find_induced_copy(g, catalog[i]))
            return ObstructionHit{static_cast<int>(i) + 1, std::move(*e)};
    }
    return std::nullopt;
}

}  // namespace toricnp
