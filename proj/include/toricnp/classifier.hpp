#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "toricnp/field.hpp"
#include "toricnp/graph.hpp"

namespace toricnp {

enum class NpLevel { FailsN1, N1, N2, N3, NInf };

// Largest p with N_p known to hold at this level; NInf means all p.
const char* to_string(NpLevel level);

// Certificates attached to each verdict level.

// FailsN1: a chordless cycle of length >= 6 (its edge binomial is a minimal
// generator of degree >= 3).
// N1: an induced copy of a catalog obstruction (so the ideal is not linearly
// presented); catalog_index is 1-based.
struct ObstructionHit {
    int catalog_index = 0;
    InducedEmbedding embedding;
};

// N2: the bipartite complement of the reduced graph, after dropping isolated
// vertices, is a tree of diameter <= 3 (and the graph is not complete
// bipartite, which would classify higher).
struct ComplementTreeCertificate {
    std::vector<std::pair<std::string, std::string>> tree_edges;
    int diameter = 0;
};

// N3: complete bipartite K_{m,n} with min(m,n) >= 3.  When char3_exception is
// set the verdict is only N2: over characteristic 3 with min(m,n) >= 5 the
// next syzygy degree jumps, so N3 fails even though the shape is complete.
struct CompleteBipartiteCertificate {
    int m = 0, n = 0;
    bool char3_exception = false;
};

// NInf: K_{2,n} (or K_{m,2}); the ideal has a linear resolution.
struct LinearResolutionCertificate {
    int m = 0, n = 0;
};

using NpCertificate = std::variant<CycleWitness, ObstructionHit, ComplementTreeCertificate,
                                   CompleteBipartiteCertificate, LinearResolutionCertificate>;

struct NpVerdict {
    NpLevel level = NpLevel::FailsN1;
    NpCertificate certificate;
    // Human-readable note when vertices of degree < 2 were peeled first;
    // empty when the input already had minimum degree 2.
    std::string reduction_note;
};

// classify_np result.  verdict is empty exactly when the 2-core is empty
// (forest input): the toric ideal is zero after the reduction and there is
// nothing to classify.
struct ClassifyOutcome {
    std::optional<NpVerdict> verdict;
    std::string reduction_note;

    bool zero_ideal() const { return !verdict.has_value(); }
};

// Exact classification of the largest Green-Lazarsfeld condition N_p that
// the toric edge ideal of g satisfies over the given field:
//   FailsN1 - quadratic generation fails (chordless cycle of length >= 6)
//   N1      - quadratically generated, not linearly presented
//   N2      - linearly presented, N3 fails (or the char-3 complete exception)
//   N3      - complete bipartite, min side >= 3 (N4 fails)
//   NInf    - K_{2,n}: linear resolution, N_p for every p
// The input is reduced to its 2-core first; the verdict applies verbatim to
// the original graph.  Disconnected 2-cores are classified as a whole.
ClassifyOutcome classify_np(const BipartiteGraph& g, FieldSpec field);

// First induced catalog obstruction in scan order 1..8, or nullopt.
// Precondition: g has minimum degree >= 2 and is chordal bipartite; throws
// std::invalid_argument otherwise.
std::optional<ObstructionHit> find_n2_obstruction(const BipartiteGraph& g);

}  // namespace toricnp
