#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "toricnp/fiber.hpp"
#include "toricnp/field.hpp"
#include "toricnp/graph.hpp"

namespace toricnp {

struct BettiOptions {
    int threads = 1;
    uint64_t face_cap = 5'000'000;
};

// Cross-graph cache of fiber homology dims, keyed by the canonical form of
// (support subgraph, restricted multidegree) plus the field characteristic.
// Insert-if-absent under a mutex; entries are immutable once long enough.
class BettiMemo {
  public:
    std::optional<std::vector<int>> lookup(const std::string& key, int i_max) const;
    void store(const std::string& key, const std::vector<int>& dims);
    size_t size() const;

  private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, std::vector<int>> map_;
};

// Graded Betti numbers of I_G over a window, I_G indexing: i = 0 counts the
// minimal generators, and beta_{i,j}(S/I_G) = beta_{i-1,j}(I_G).
struct BettiTable {
    int i_max = 0;
    int j_max = 0;
    FieldSpec field;
    std::vector<std::vector<long long>> entries;    // entries[i][j]
    std::optional<int> window_limited_regularity;   // max j-i over nonzero entries
    std::optional<int> window_limited_pd;           // max i over nonzero entries
    std::vector<bool> row_complete;                 // rows r = j-i, index 0..j_max
    std::vector<bool> col_complete;                 // columns i = 0..i_max

    long long entry(int i, int j) const;  // 0 outside the window
};

// beta_{i,j}(S/I_G) read off a table of I_G.
long long quotient_betti(const BettiTable& t, int i, int j);

class BettiEngine {
  public:
    BettiEngine(BipartiteGraph g, FieldSpec field, BettiOptions opt = {},
                std::shared_ptr<BettiMemo> memo = nullptr);

    // beta_{i,j}(I_G) for i = 0..i_max, one fiber pass over all alpha with
    // |alpha| = 2j; the alpha sum is order-independent and may be spread over
    // opt.threads workers with bit-identical results.
    std::vector<long long> graded_row(int j, int i_max);
    long long graded(int i, int j);
    BettiTable table(int i_max, int j_max);

    const BipartiteGraph& graph() const { return g_; }

  private:
    std::vector<int> alpha_dims(const Multidegree& alpha, int i_max);

    BipartiteGraph g_;
    FieldSpec field_;
    BettiOptions opt_;
    std::shared_ptr<BettiMemo> memo_;
};

long long betti_graded(const BipartiteGraph& g, int i, int j, FieldSpec field);
BettiTable betti_table(const BipartiteGraph& g, int i_max, int j_max, FieldSpec field,
                       BettiOptions opt = {});

}  // namespace toricnp
