#include "toricnp/fiber.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace toricnp {

namespace {

void validate_alpha(const BipartiteGraph& g, const Multidegree& alpha) {
    if (static_cast<int>(alpha.size()) != g.vertex_count())
        throw std::invalid_argument("multidegree length must match the vertex count");
    for (int v : alpha)
        if (v < 0) throw std::invalid_argument("multidegree entries must be nonnegative");
}

// Max-flow feasibility of the transportation problem: route j units from the
// X side (supplies ax) to the Y side (demands ay) along the edges of g.
// Edge capacities are unbounded, so feasible iff max flow == j.
bool flow_feasible(const BipartiteGraph& g, const std::vector<int>& ax,
                   const std::vector<int>& ay, int j) {
    const int m = g.x_count(), n = g.y_count();
    const int source = m + n, sink = m + n + 1, nodes = m + n + 2;
    // cap[u][v]: residual capacities; vertex u in [0,m) is x_u, [m,m+n) is y.
    std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
    for (int x = 0; x < m; ++x) cap[source][x] = ax[static_cast<size_t>(x)];
    for (int y = 0; y < n; ++y) cap[m + y][sink] = ay[static_cast<size_t>(y)];
    for (const auto& [x, y] : g.edges()) cap[static_cast<size_t>(x)][static_cast<size_t>(m + y)] = j;
    int flow = 0;
    std::vector<int> prev(static_cast<size_t>(nodes));
    while (flow < j) {
        std::fill(prev.begin(), prev.end(), -1);
        prev[static_cast<size_t>(source)] = source;
        std::queue<int> q;
        q.push(source);
        while (!q.empty() && prev[static_cast<size_t>(sink)] < 0) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < nodes; ++v)
                if (prev[static_cast<size_t>(v)] < 0 && cap[static_cast<size_t>(u)][static_cast<size_t>(v)] > 0) {
                    prev[static_cast<size_t>(v)] = u;
                    q.push(v);
                }
        }
        if (prev[static_cast<size_t>(sink)] < 0) return false;
        int aug = j - flow;
        for (int v = sink; v != source; v = prev[static_cast<size_t>(v)])
            aug = std::min(aug, cap[static_cast<size_t>(prev[static_cast<size_t>(v)])][static_cast<size_t>(v)]);
        for (int v = sink; v != source; v = prev[static_cast<size_t>(v)]) {
            cap[static_cast<size_t>(prev[static_cast<size_t>(v)])][static_cast<size_t>(v)] -= aug;
            cap[static_cast<size_t>(v)][static_cast<size_t>(prev[static_cast<size_t>(v)])] += aug;
        }
        flow += aug;
    }
    return true;
}

// Ascending lexicographic compositions of total into parts slots; parts with
// skip[i] set are pinned to zero.
void for_each_composition(int total, const std::vector<char>& skip,
                          const std::function<void(const std::vector<int>&)>& fn) {
    const int parts = static_cast<int>(skip.size());
    std::vector<int> cur(static_cast<size_t>(parts), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == parts) {
            if (left == 0) fn(cur);
            return;
        }
        if (skip[static_cast<size_t>(pos)]) {
            self(self, pos + 1, left);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, total);
}

}  // namespace

int multidegree_total(const Multidegree& alpha) {
    return std::accumulate(alpha.begin(), alpha.end(), 0);
}

std::string format_multidegree(const BipartiteGraph& g, const Multidegree& alpha) {
    std::string out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int e = alpha[static_cast<size_t>(v)];
        if (e == 0) continue;
        if (!out.empty()) out += ' ';
        out += g.label(v);
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

int EdgeMultiset::size() const {
    int s = 0;
    for (const auto& [e, c] : entries) s += c;
    return s;
}

Multidegree EdgeMultiset::degree_vector(const BipartiteGraph& g) const {
    Multidegree a(static_cast<size_t>(g.vertex_count()), 0);
    for (const auto& [e, c] : entries) {
        const auto& [x, y] = g.edges()[static_cast<size_t>(e)];
        a[static_cast<size_t>(x)] += c;
        a[static_cast<size_t>(g.x_count() + y)] += c;
    }
    return a;
}

std::vector<int> EdgeMultiset::support() const {
    std::vector<int> s;
    s.reserve(entries.size());
    for (const auto& [e, c] : entries) s.push_back(e);
    return s;
}

std::vector<Multidegree> relevant_multidegrees(const BipartiteGraph& g, int j) {
    if (j < 1) throw std::invalid_argument("fiber degree must be >= 1");
    const int m = g.x_count(), n = g.y_count();
    std::vector<Multidegree> out;
    if (g.edge_count() == 0) return out;
    // Vertices of degree 0 cannot carry a positive exponent.
    std::vector<char> skip_x(static_cast<size_t>(m)), skip_y(static_cast<size_t>(n));
    for (int x = 0; x < m; ++x) skip_x[static_cast<size_t>(x)] = g.degree(x) == 0;
    for (int y = 0; y < n; ++y) skip_y[static_cast<size_t>(y)] = g.degree(m + y) == 0;
    for_each_composition(j, skip_x, [&](const std::vector<int>& ax) {
        for_each_composition(j, skip_y, [&](const std::vector<int>& ay) {
            if (!flow_feasible(g, ax, ay, j)) return;
            Multidegree a;
            a.reserve(static_cast<size_t>(m + n));
            a.insert(a.end(), ax.begin(), ax.end());
            a.insert(a.end(), ay.begin(), ay.end());
            out.push_back(std::move(a));
        });
    });
    return out;
}

std::vector<EdgeMultiset> fiber(const BipartiteGraph& g, const Multidegree& alpha) {
    validate_alpha(g, alpha);
    const int m = g.x_count(), n = g.y_count();
    std::vector<EdgeMultiset> out;
    int sx = 0, sy = 0;
    for (int x = 0; x < m; ++x) sx += alpha[static_cast<size_t>(x)];
    for (int y = 0; y < n; ++y) sy += alpha[static_cast<size_t>(m + y)];
    if (sx != sy) return out;

    std::vector<int> rem(alpha.begin() + m, alpha.end());  // y capacities left
    std::vector<int> mult(static_cast<size_t>(g.edge_count()), 0);

    auto emit = [&]() {
        EdgeMultiset ms;
        for (int e = 0; e < g.edge_count(); ++e)
            if (mult[static_cast<size_t>(e)] > 0) ms.entries.emplace_back(e, mult[static_cast<size_t>(e)]);
        out.push_back(std::move(ms));
    };

    // Distribute alpha[x] over the edges at x, X vertices in index order.
    auto place = [&](auto&& self, int x) -> void {
        if (x == m) {
            emit();
            return;
        }
        int need = alpha[static_cast<size_t>(x)];
        std::vector<int> ys = g.neighbors(x);  // global Y indices, ascending
        int reach = 0;
        for (int yg : ys) reach += rem[static_cast<size_t>(yg - m)];
        if (need > reach) return;
        auto dist = [&](auto&& dself, size_t t, int left) -> void {
            if (t == ys.size()) {
                if (left == 0) self(self, x + 1);
                return;
            }
            int yg = ys[t];
            int cap = std::min(left, rem[static_cast<size_t>(yg - m)]);
            int e = *g.edge_index(x, yg - m);
            for (int c = 0; c <= cap; ++c) {
                if (c > 0) {
                    mult[static_cast<size_t>(e)] = c;
                    rem[static_cast<size_t>(yg - m)] -= c;
                }
                dself(dself, t + 1, left - c);
                if (c > 0) {
                    mult[static_cast<size_t>(e)] = 0;
                    rem[static_cast<size_t>(yg - m)] += c;
                }
            }
        };
        dist(dist, 0, need);
    };
    place(place, 0);

    std::sort(out.begin(), out.end(),
              [](const EdgeMultiset& a, const EdgeMultiset& b) { return a.entries < b.entries; });
    return out;
}

DivisorComplex divisor_complex(const BipartiteGraph& g, const Multidegree& alpha) {
    DivisorComplex dc;
    std::vector<std::vector<int>> sups;
    for (const EdgeMultiset& ms : fiber(g, alpha)) sups.push_back(ms.support());
    if (sups.empty()) return dc;

    std::vector<int> verts;
    for (const auto& s : sups) verts.insert(verts.end(), s.begin(), s.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() > 64)
        throw ResourceLimitError("divisor complex would need " + std::to_string(verts.size()) +
                                 " edge-vertices; the per-complex bound is 64");
    dc.vertex_edges = std::move(verts);

    std::vector<uint64_t> masks;
    masks.reserve(sups.size());
    for (const auto& s : sups) {
        uint64_t mk = 0;
        for (int e : s) {
            size_t pos = static_cast<size_t>(
                std::lower_bound(dc.vertex_edges.begin(), dc.vertex_edges.end(), e) -
                dc.vertex_edges.begin());
            mk |= uint64_t{1} << pos;
        }
        masks.push_back(mk);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    for (uint64_t mk : masks) {
        bool maximal = true;
        for (uint64_t other : masks)
            if (other != mk && (mk & other) == mk) {
                maximal = false;
                break;
            }
        if (maximal) dc.facets.push_back(mk);
    }
    return dc;
}

}  // namespace toricnp
