#include "toricnp/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace toricnp {

namespace {

void check_side(size_t count, const char* side) {
    if (count > static_cast<size_t>(BipartiteGraph::kMaxSide))
        throw std::invalid_argument(std::string(side) + " side exceeds " +
                                    std::to_string(BipartiteGraph::kMaxSide) + " vertices");
}

std::vector<std::string> numbered_labels(const char* prefix, int count) {
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

}  // namespace

void BipartiteGraph::finish_init() {
    check_side(x_labels_.size(), "X");
    check_side(y_labels_.size(), "Y");
    adj_x_.resize(x_labels_.size(), 0);
    adj_y_.resize(y_labels_.size(), 0);
    edges_.clear();
    for (int i = 0; i < x_count(); ++i) {
        uint64_t row = adj_x_[static_cast<size_t>(i)];
        while (row) {
            int j = std::countr_zero(row);
            row &= row - 1;
            edges_.emplace_back(i, j);
        }
    }
}

BipartiteGraph::BipartiteGraph(std::vector<std::string> x_labels,
                               std::vector<std::string> y_labels,
                               const std::vector<std::pair<std::string, std::string>>& edges)
    : x_labels_(std::move(x_labels)), y_labels_(std::move(y_labels)) {
    check_side(x_labels_.size(), "X");
    check_side(y_labels_.size(), "Y");
    std::unordered_map<std::string, int> xi, yi;
    for (int i = 0; i < x_count(); ++i)
        if (!xi.emplace(x_labels_[static_cast<size_t>(i)], i).second)
            throw std::invalid_argument("duplicate X label: " + x_labels_[static_cast<size_t>(i)]);
    for (int j = 0; j < y_count(); ++j) {
        const std::string& lab = y_labels_[static_cast<size_t>(j)];
        if (xi.count(lab))
            throw std::invalid_argument("label on both sides: " + lab);
        if (!yi.emplace(lab, j).second)
            throw std::invalid_argument("duplicate Y label: " + lab);
    }
    adj_x_.assign(x_labels_.size(), 0);
    adj_y_.assign(y_labels_.size(), 0);
    for (const auto& [a, b] : edges) {
        auto ia = xi.find(a);
        auto jb = yi.find(b);
        // Accept either endpoint order.
        if (ia == xi.end() || jb == yi.end()) {
            ia = xi.find(b);
            jb = yi.find(a);
        }
        if (ia == xi.end() || jb == yi.end())
            throw std::invalid_argument("edge {" + a + ", " + b +
                                        "} does not join an X label to a Y label");
        int i = ia->second, j = jb->second;
        if ((adj_x_[static_cast<size_t>(i)] >> j) & 1u)
            throw std::invalid_argument("duplicate edge {" + a + ", " + b + "}");
        adj_x_[static_cast<size_t>(i)] |= uint64_t{1} << j;
        adj_y_[static_cast<size_t>(j)] |= uint64_t{1} << i;
    }
    finish_init();
}

BipartiteGraph BipartiteGraph::complete(int m, int n) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m) * static_cast<size_t>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, j);
    return from_index_edges(m, n, std::move(edges));
}

BipartiteGraph BipartiteGraph::from_index_edges(int m, int n,
                                                std::vector<std::pair<int, int>> edges) {
    return with_labels(numbered_labels("x", m), numbered_labels("y", n), edges);
}

BipartiteGraph BipartiteGraph::with_labels(std::vector<std::string> x_labels,
                                           std::vector<std::string> y_labels,
                                           const std::vector<std::pair<int, int>>& edges) {
    BipartiteGraph g;
    g.x_labels_ = std::move(x_labels);
    g.y_labels_ = std::move(y_labels);
    check_side(g.x_labels_.size(), "X");
    check_side(g.y_labels_.size(), "Y");
    g.adj_x_.assign(g.x_labels_.size(), 0);
    g.adj_y_.assign(g.y_labels_.size(), 0);
    for (auto [i, j] : edges) {
        if (i < 0 || i >= g.x_count() || j < 0 || j >= g.y_count())
            throw std::invalid_argument("edge index out of range");
        g.adj_x_[static_cast<size_t>(i)] |= uint64_t{1} << j;
        g.adj_y_[static_cast<size_t>(j)] |= uint64_t{1} << i;
    }
    g.finish_init();
    return g;
}

const std::string& BipartiteGraph::label(int v) const {
    if (v < x_count()) return x_labels_[static_cast<size_t>(v)];
    return y_labels_[static_cast<size_t>(v - x_count())];
}

std::optional<int> BipartiteGraph::index_of(std::string_view label) const {
    for (int i = 0; i < x_count(); ++i)
        if (x_labels_[static_cast<size_t>(i)] == label) return i;
    for (int j = 0; j < y_count(); ++j)
        if (y_labels_[static_cast<size_t>(j)] == label) return y_global(j);
    return std::nullopt;
}

bool BipartiteGraph::adjacent(int u, int v) const {
    if (is_x(u) == is_x(v)) return false;
    if (is_x(v)) std::swap(u, v);
    return has_edge(u, v - x_count());
}

int BipartiteGraph::degree(int v) const {
    if (v < x_count()) return std::popcount(adj_x_[static_cast<size_t>(v)]);
    return std::popcount(adj_y_[static_cast<size_t>(v - x_count())]);
}

std::vector<int> BipartiteGraph::neighbors(int v) const {
    std::vector<int> out;
    if (v < x_count()) {
        uint64_t row = adj_x_[static_cast<size_t>(v)];
        while (row) {
            out.push_back(y_global(std::countr_zero(row)));
            row &= row - 1;
        }
    } else {
        uint64_t row = adj_y_[static_cast<size_t>(v - x_count())];
        while (row) {
            out.push_back(std::countr_zero(row));
            row &= row - 1;
        }
    }
    return out;
}

std::optional<int> BipartiteGraph::edge_index(int xi, int yj) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair<int, int>{xi, yj});
    if (it == edges_.end() || *it != std::pair<int, int>{xi, yj}) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

std::vector<std::string> CycleWitness::labels(const BipartiteGraph& g) const {
    std::vector<std::string> out;
    out.reserve(vertices.size());
    for (int v : vertices) out.push_back(g.label(v));
    return out;
}

BipartiteGraph bipartite_complement(const BipartiteGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.x_count(); ++i)
        for (int j = 0; j < g.y_count(); ++j)
            if (!g.has_edge(i, j)) edges.emplace_back(i, j);
    return BipartiteGraph::with_labels(g.x_labels(), g.y_labels(), edges);
}

BipartiteGraph degree_k_subgraph(const BipartiteGraph& g, int k) {
    if (k < 0) throw std::invalid_argument("degree bound must be >= 0");
    std::vector<bool> alive(static_cast<size_t>(g.vertex_count()), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!alive[static_cast<size_t>(v)]) continue;
            int d = 0;
            for (int w : g.neighbors(v))
                if (alive[static_cast<size_t>(w)]) ++d;
            if (d < k) {
                alive[static_cast<size_t>(v)] = false;
                changed = true;
            }
        }
    }
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (alive[static_cast<size_t>(v)]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

BipartiteGraph induced_subgraph(const BipartiteGraph& g, const std::vector<int>& vertices) {
    std::vector<int> w = vertices;
    std::sort(w.begin(), w.end());
    if (std::adjacent_find(w.begin(), w.end()) != w.end())
        throw std::invalid_argument("duplicate vertex in induced subgraph request");
    std::vector<std::string> xs, ys;
    std::vector<int> new_x(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<int> new_y(static_cast<size_t>(g.vertex_count()), -1);
    for (int v : w) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex index out of range");
        if (g.is_x(v)) {
            new_x[static_cast<size_t>(v)] = static_cast<int>(xs.size());
            xs.push_back(g.label(v));
        } else {
            new_y[static_cast<size_t>(v)] = static_cast<int>(ys.size());
            ys.push_back(g.label(v));
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [i, j] : g.edges()) {
        int gi = i, gj = g.y_global(j);
        if (new_x[static_cast<size_t>(gi)] >= 0 && new_y[static_cast<size_t>(gj)] >= 0)
            edges.emplace_back(new_x[static_cast<size_t>(gi)], new_y[static_cast<size_t>(gj)]);
    }
    return BipartiteGraph::with_labels(std::move(xs), std::move(ys), edges);
}

namespace {

// BFS over the vertices enabled in `allowed`; fills dist (-1 = unreachable).
void bfs_restricted(const BipartiteGraph& g, int start, const std::vector<bool>& allowed,
                    std::vector<int>& dist, std::vector<int>& parent) {
    dist.assign(static_cast<size_t>(g.vertex_count()), -1);
    parent.assign(static_cast<size_t>(g.vertex_count()), -1);
    if (!allowed[static_cast<size_t>(start)]) return;
    std::vector<int> queue{start};
    dist[static_cast<size_t>(start)] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u)) {
            if (!allowed[static_cast<size_t>(w)] || dist[static_cast<size_t>(w)] >= 0) continue;
            dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
            parent[static_cast<size_t>(w)] = u;
            queue.push_back(w);
        }
    }
}

}  // namespace

ChordalCheck is_chordal_bipartite(const BipartiteGraph& g) {
    // A chordless cycle through edge {u,v} decomposes as u - v - b - ... - a - u
    // where a ranges over N(u)\{v}, b over N(v)\{u}, and the b..a part lives
    // outside N(u) u N(v).  A shortest such path is induced, so minimizing the
    // BFS distance over all (edge, a, b) yields a minimum-length chordless
    // cycle.  Length 6 is the global minimum, so we can stop early there.
    ChordalCheck out;
    int best_len = std::numeric_limits<int>::max();
    std::vector<int> best_cycle;
    std::vector<int> dist, parent;
    std::vector<bool> allowed;
    for (auto [xi, yj] : g.edges()) {
        int u = xi;               // X side
        int v = g.y_global(yj);   // Y side
        for (int a : g.neighbors(u)) {
            if (a == v) continue;
            // Exclude u, v, N(u), N(v); re-admit a as the BFS source.
            allowed.assign(static_cast<size_t>(g.vertex_count()), true);
            allowed[static_cast<size_t>(u)] = false;
            allowed[static_cast<size_t>(v)] = false;
            for (int w : g.neighbors(u)) allowed[static_cast<size_t>(w)] = false;
            for (int w : g.neighbors(v)) allowed[static_cast<size_t>(w)] = false;
            allowed[static_cast<size_t>(a)] = true;
            bfs_restricted(g, a, allowed, dist, parent);
            for (int b : g.neighbors(v)) {
                if (b == u) continue;
                // b itself is excluded from the BFS region; close the cycle
                // through its best reachable neighbor.
                int via = -1, via_dist = std::numeric_limits<int>::max();
                for (int w : g.neighbors(b)) {
                    if (!allowed[static_cast<size_t>(w)]) continue;
                    int dw = dist[static_cast<size_t>(w)];
                    if (dw >= 0 && dw < via_dist) {
                        via_dist = dw;
                        via = w;
                    }
                }
                if (via < 0 || via_dist + 1 < 3) continue;
                int len = via_dist + 4;  // edges: a-u, u-v, v-b, then the path
                if (len < best_len) {
                    best_len = len;
                    best_cycle.clear();
                    best_cycle.push_back(u);
                    best_cycle.push_back(v);
                    best_cycle.push_back(b);
                    for (int w = via; w >= 0; w = parent[static_cast<size_t>(w)])
                        best_cycle.push_back(w);
                }
            }
            if (best_len == 6) break;
        }
        if (best_len == 6) break;
    }
    if (best_len < std::numeric_limits<int>::max()) {
        out.chordal = false;
        out.witness = CycleWitness{std::move(best_cycle)};
    }
    return out;
}

int component_count(const BipartiteGraph& g) {
    std::vector<bool> seen(static_cast<size_t>(g.vertex_count()), false);
    int comps = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        ++comps;
        std::vector<int> queue{s};
        seen[static_cast<size_t>(s)] = true;
        for (size_t head = 0; head < queue.size(); ++head)
            for (int w : g.neighbors(queue[head]))
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    queue.push_back(w);
                }
    }
    return comps;
}

bool is_connected(const BipartiteGraph& g) {
    return g.vertex_count() == 0 || component_count(g) == 1;
}

int diameter(const BipartiteGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("diameter of a disconnected graph");
    int best = 0;
    std::vector<int> dist, parent;
    std::vector<bool> allowed(static_cast<size_t>(g.vertex_count()), true);
    for (int s = 0; s < g.vertex_count(); ++s) {
        bfs_restricted(g, s, allowed, dist, parent);
        for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, dist[static_cast<size_t>(v)]);
    }
    return best;
}

bool is_essentially_tree_diameter_le3(const BipartiteGraph& g) {
    BipartiteGraph core = degree_k_subgraph(g, 1);
    if (core.vertex_count() == 0) return true;
    if (!is_connected(core)) return false;
    if (core.edge_count() != core.vertex_count() - 1) return false;  // connected + this = tree
    return diameter(core) <= 3;
}

namespace {

// Depth-first search for the least embedding in one orientation.  Pattern
// vertices are assigned in global order; host candidates are tried in
// ascending global order, so the first full assignment is lexicographically
// least.  `swap_sides` sends pattern X to host Y.
bool embed_ordered(const BipartiteGraph& host, const BipartiteGraph& pattern, bool swap_sides,
                   std::vector<int>& map, std::vector<bool>& used, int p) {
    int pv = pattern.vertex_count();
    if (p == pv) return true;
    bool p_is_x = pattern.is_x(p);
    bool host_x = swap_sides ? !p_is_x : p_is_x;
    int lo = host_x ? 0 : host.x_count();
    int hi = host_x ? host.x_count() : host.vertex_count();
    for (int h = lo; h < hi; ++h) {
        if (used[static_cast<size_t>(h)]) continue;
        if (host.degree(h) < pattern.degree(p)) continue;
        bool ok = true;
        for (int q = 0; q < p && ok; ++q)
            if (pattern.adjacent(p, q) != host.adjacent(h, map[static_cast<size_t>(q)])) ok = false;
        if (!ok) continue;
        map[static_cast<size_t>(p)] = h;
        used[static_cast<size_t>(h)] = true;
        if (embed_ordered(host, pattern, swap_sides, map, used, p + 1)) return true;
        used[static_cast<size_t>(h)] = false;
    }
    return false;
}

}  // namespace

std::optional<InducedEmbedding> find_induced_copy(const BipartiteGraph& host,
                                                  const BipartiteGraph& pattern) {
    if (pattern.vertex_count() == 0) return InducedEmbedding{{}, false};
    std::optional<InducedEmbedding> best;
    for (bool swapped : {false, true}) {
        if (!swapped && (pattern.x_count() > host.x_count() || pattern.y_count() > host.y_count()))
            continue;
        if (swapped && (pattern.x_count() > host.y_count() || pattern.y_count() > host.x_count()))
            continue;
        std::vector<int> map(static_cast<size_t>(pattern.vertex_count()), -1);
        std::vector<bool> used(static_cast<size_t>(host.vertex_count()), false);
        if (embed_ordered(host, pattern, swapped, map, used, 0)) {
            InducedEmbedding cand{std::move(map), swapped};
            if (!best || cand.map < best->map) best = std::move(cand);
        }
    }
    return best;
}

std::optional<std::pair<int, int>> is_complete_bipartite(const BipartiteGraph& g) {
    BipartiteGraph core = degree_k_subgraph(g, 1);
    if (core.edge_count() == 0) return std::nullopt;
    if (core.edge_count() == core.x_count() * core.y_count())
        return std::make_pair(core.x_count(), core.y_count());
    return std::nullopt;
}

bool verify_chordless_cycle(const BipartiteGraph& g, const CycleWitness& w) {
    int t = w.length();
    if (t < 4) return false;
    std::vector<int> sorted = w.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int k = 0; k < t; ++k) {
        int u = w.vertices[static_cast<size_t>(k)];
        int v = w.vertices[static_cast<size_t>((k + 1) % t)];
        if (!g.adjacent(u, v)) return false;
    }
    for (int k = 0; k < t; ++k)
        for (int l = k + 2; l < t; ++l) {
            if (k == 0 && l == t - 1) continue;
            if (g.adjacent(w.vertices[static_cast<size_t>(k)], w.vertices[static_cast<size_t>(l)]))
                return false;
        }
    return true;
}

bool verify_induced_embedding(const BipartiteGraph& host, const BipartiteGraph& pattern,
                              const InducedEmbedding& e) {
    int pv = pattern.vertex_count();
    if (static_cast<int>(e.map.size()) != pv) return false;
    std::vector<bool> used(static_cast<size_t>(host.vertex_count()), false);
    for (int p = 0; p < pv; ++p) {
        int h = e.map[static_cast<size_t>(p)];
        if (h < 0 || h >= host.vertex_count() || used[static_cast<size_t>(h)]) return false;
        used[static_cast<size_t>(h)] = true;
        bool want_x = e.swapped ? !pattern.is_x(p) : pattern.is_x(p);
        if (host.is_x(h) != want_x) return false;
    }
    for (int p = 0; p < pv; ++p)
        for (int q = p + 1; q < pv; ++q)
            if (pattern.adjacent(p, q) !=
                host.adjacent(e.map[static_cast<size_t>(p)], e.map[static_cast<size_t>(q)]))
                return false;
    return true;
}

}  // namespace toricnp
