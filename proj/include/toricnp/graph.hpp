#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace toricnp {

// Simple bipartite graph with named vertices on two sides X and Y.
// Labels are only for I/O; all algorithms run on dense indices.
// Global vertex numbering: X vertices first (0..m-1), then Y (m..m+n-1).
// Sides are capped at 64 vertices so adjacency rows fit in one word.
class BipartiteGraph {
public:
    static constexpr int kMaxSide = 64;

    BipartiteGraph() = default;

    // Validates: distinct labels per side, edges join an X label to a Y label,
    // no duplicate edges.  Throws std::invalid_argument otherwise.
    BipartiteGraph(std::vector<std::string> x_labels,
                   std::vector<std::string> y_labels,
                   const std::vector<std::pair<std::string, std::string>>& edges);

    // K_{m,n} with labels x1..xm / y1..yn.
    static BipartiteGraph complete(int m, int n);

    // Build from index pairs (xi, yj), 0-based, with generated labels
    // x1..xm / y1..yn.  Convenience for fixtures and internal construction.
    static BipartiteGraph from_index_edges(int m, int n,
                                           std::vector<std::pair<int, int>> edges);

    // Same, but keeping the given labels.
    static BipartiteGraph with_labels(std::vector<std::string> x_labels,
                                      std::vector<std::string> y_labels,
                                      const std::vector<std::pair<int, int>>& edges);

    int x_count() const { return static_cast<int>(x_labels_.size()); }
    int y_count() const { return static_cast<int>(y_labels_.size()); }
    int vertex_count() const { return x_count() + y_count(); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& x_labels() const { return x_labels_; }
    const std::vector<std::string>& y_labels() const { return y_labels_; }

    bool is_x(int v) const { return v < x_count(); }
    // Global index of the j-th Y vertex.
    int y_global(int j) const { return x_count() + j; }

    const std::string& label(int v) const;
    std::optional<int> index_of(std::string_view label) const;

    bool has_edge(int xi, int yj) const {
        return (adj_x_[static_cast<size_t>(xi)] >> yj) & 1u;
    }
    // Adjacency between two global indices (false when on the same side).
    bool adjacent(int u, int v) const;

    uint64_t adj_x(int xi) const { return adj_x_[static_cast<size_t>(xi)]; }
    uint64_t adj_y(int yj) const { return adj_y_[static_cast<size_t>(yj)]; }

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;  // global indices, ascending

    // Edges sorted by (xi, yj); the position in this list is the edge index
    // used by the fiber machinery.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::optional<int> edge_index(int xi, int yj) const;

    bool operator==(const BipartiteGraph& o) const = default;

private:
    std::vector<std::string> x_labels_;
    std::vector<std::string> y_labels_;
    std::vector<std::pair<int, int>> edges_;  // (x index, y index), sorted
    std::vector<uint64_t> adj_x_;             // per X vertex, bitmask over Y
    std::vector<uint64_t> adj_y_;             // per Y vertex, bitmask over X

    void finish_init();  // builds edges_ from masks, checks side caps
};

// Closed walk v0, v1, ..., v_{t-1}, v0 with consecutive edges and no chord.
struct CycleWitness {
    std::vector<int> vertices;  // global indices in cycle order
    int length() const { return static_cast<int>(vertices.size()); }
    std::vector<std::string> labels(const BipartiteGraph& g) const;
};

// Injective map pattern vertex -> host vertex preserving edges and non-edges.
// map[p] is the host global index of pattern global vertex p.  swapped means
// the pattern's X side landed on the host's Y side.
struct InducedEmbedding {
    std::vector<int> map;
    bool swapped = false;
};

struct ChordalCheck {
    bool chordal = true;
    std::optional<CycleWitness> witness;  // a chordless cycle of minimum length
};

// Complement within the complete bipartite graph on the same sides:
// edge {x,y} present iff absent in g.  Involution.
BipartiteGraph bipartite_complement(const BipartiteGraph& g);

// Unique maximal induced subgraph of minimum degree >= k, obtained by
// iterated deletion.  k=1 strips isolated vertices, k=2 is the 2-core.
BipartiteGraph degree_k_subgraph(const BipartiteGraph& g, int k);

// Subgraph induced on the given global vertex indices (any order, no dups).
BipartiteGraph induced_subgraph(const BipartiteGraph& g, const std::vector<int>& vertices);

// Chordal bipartite = every cycle of length >= 6 has a chord.  On failure the
// witness is a chordless cycle of minimum length found by per-edge BFS in the
// graph with both endpoint neighborhoods masked out.
ChordalCheck is_chordal_bipartite(const BipartiteGraph& g);

// True iff the graph obtained by dropping isolated vertices is a (possibly
// empty) tree of diameter <= 3.  The edgeless graph passes vacuously.
bool is_essentially_tree_diameter_le3(const BipartiteGraph& g);

// Occurrence of pattern in host as an induced subgraph, mapping sides to
// sides either directly or with the pattern's sides swapped.  Deterministic:
// returns the lexicographically least embedding (as the tuple of host indices
// in pattern vertex order), trying the direct orientation and the swapped one.
std::optional<InducedEmbedding> find_induced_copy(const BipartiteGraph& host,
                                                  const BipartiteGraph& pattern);

// After stripping isolated vertices: the side sizes (m, n) if every remaining
// pair is an edge, otherwise nullopt.  The edgeless graph is not complete.
std::optional<std::pair<int, int>> is_complete_bipartite(const BipartiteGraph& g);

// Number of connected components (isolated vertices count as components).
int component_count(const BipartiteGraph& g);

// True for the 1-vertex-or-larger graph where every vertex pair is linked by
// a path; the empty graph counts as connected.
bool is_connected(const BipartiteGraph& g);

// Largest finite BFS distance between any two vertices; requires connected.
int diameter(const BipartiteGraph& g);

// Checks that w is a genuine chordless cycle of g: even length >= 6 here is
// not enforced, only cycle structure and chordlessness.  Test helper.
bool verify_chordless_cycle(const BipartiteGraph& g, const CycleWitness& w);

// Checks that e is a valid induced embedding of pattern into host.
bool verify_induced_embedding(const BipartiteGraph& host, const BipartiteGraph& pattern,
                              const InducedEmbedding& e);

}  // namespace toricnp
