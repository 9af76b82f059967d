#include "toricnp/canon.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>

namespace toricnp {

namespace {

void push_u32(std::string& s, uint32_t v) {
    for (int k = 0; k < 4; ++k) s += static_cast<char>((v >> (8 * k)) & 0xff);
}

void push_u64(std::string& s, uint64_t v) {
    for (int k = 0; k < 8; ++k) s += static_cast<char>((v >> (8 * k)) & 0xff);
}

// Encoding for one orientation: side A listed first.  adj[a] has bit t set
// iff A-vertex a is adjacent to B-vertex t.  The vertex order is derived from
// color refinement seeded by (side, exponent), with original index as the
// final tiebreaker, so isomorphic inputs whose refinement separates the same
// orbits serialize identically.
std::string encode_oriented(const std::vector<int>& alpha_a, const std::vector<int>& alpha_b,
                            const std::vector<uint64_t>& adj) {
    const int na = static_cast<int>(alpha_a.size());
    const int nb = static_cast<int>(alpha_b.size());
    const int total = na + nb;

    std::vector<std::vector<int>> nbr(static_cast<size_t>(total));
    for (int a = 0; a < na; ++a) {
        uint64_t row = adj[static_cast<size_t>(a)];
        while (row) {
            int t = std::countr_zero(row);
            row &= row - 1;
            nbr[static_cast<size_t>(a)].push_back(na + t);
            nbr[static_cast<size_t>(na + t)].push_back(a);
        }
    }

    std::vector<int> color(static_cast<size_t>(total));
    {
        std::map<std::pair<int, int>, int> seed;
        for (int a = 0; a < na; ++a) seed[{0, alpha_a[static_cast<size_t>(a)]}] = 0;
        for (int b = 0; b < nb; ++b) seed[{1, alpha_b[static_cast<size_t>(b)]}] = 0;
        int next = 0;
        for (auto& [k, v] : seed) v = next++;
        for (int a = 0; a < na; ++a) color[static_cast<size_t>(a)] = seed[{0, alpha_a[static_cast<size_t>(a)]}];
        for (int b = 0; b < nb; ++b) color[static_cast<size_t>(na + b)] = seed[{1, alpha_b[static_cast<size_t>(b)]}];
    }

    int classes = 0;
    {
        std::vector<int> c = color;
        std::sort(c.begin(), c.end());
        classes = static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
    }
    for (int round = 0; round < total; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> sig_rank;
        std::vector<std::pair<int, std::vector<int>>> sigs(static_cast<size_t>(total));
        for (int v = 0; v < total; ++v) {
            std::vector<int> around;
            around.reserve(nbr[static_cast<size_t>(v)].size());
            for (int w : nbr[static_cast<size_t>(v)]) around.push_back(color[static_cast<size_t>(w)]);
            std::sort(around.begin(), around.end());
            sigs[static_cast<size_t>(v)] = {color[static_cast<size_t>(v)], std::move(around)};
            sig_rank[sigs[static_cast<size_t>(v)]] = 0;
        }
        int next = 0;
        for (auto& [k, r] : sig_rank) r = next++;
        if (next == classes) break;
        classes = next;
        for (int v = 0; v < total; ++v) color[static_cast<size_t>(v)] = sig_rank[sigs[static_cast<size_t>(v)]];
    }

    std::vector<int> order_a(static_cast<size_t>(na)), order_b(static_cast<size_t>(nb));
    std::iota(order_a.begin(), order_a.end(), 0);
    std::iota(order_b.begin(), order_b.end(), 0);
    std::sort(order_a.begin(), order_a.end(), [&](int p, int q) {
        return std::pair{color[static_cast<size_t>(p)], p} < std::pair{color[static_cast<size_t>(q)], q};
    });
    std::sort(order_b.begin(), order_b.end(), [&](int p, int q) {
        return std::pair{color[static_cast<size_t>(na + p)], p} <
               std::pair{color[static_cast<size_t>(na + q)], q};
    });

    std::string s;
    push_u32(s, static_cast<uint32_t>(na));
    push_u32(s, static_cast<uint32_t>(nb));
    for (int a : order_a) push_u32(s, static_cast<uint32_t>(alpha_a[static_cast<size_t>(a)]));
    for (int b : order_b) push_u32(s, static_cast<uint32_t>(alpha_b[static_cast<size_t>(b)]));
    for (int a : order_a) {
        uint64_t row = 0;
        for (int t = 0; t < nb; ++t)
            if (adj[static_cast<size_t>(a)] >> order_b[static_cast<size_t>(t)] & 1)
                row |= uint64_t{1} << t;
        push_u64(s, row);
    }
    return s;
}

}  // namespace

std::string fiber_memo_key(const BipartiteGraph& g, const Multidegree& alpha) {
    const int m = g.x_count();
    std::vector<int> sx, sy;
    for (int x = 0; x < m; ++x)
        if (alpha[static_cast<size_t>(x)] > 0) sx.push_back(x);
    for (int y = 0; y < g.y_count(); ++y)
        if (alpha[static_cast<size_t>(m + y)] > 0) sy.push_back(y);

    std::vector<int> ax, ay;
    for (int x : sx) ax.push_back(alpha[static_cast<size_t>(x)]);
    for (int y : sy) ay.push_back(alpha[static_cast<size_t>(m + y)]);

    std::vector<uint64_t> adj(sx.size(), 0), adj_t(sy.size(), 0);
    for (size_t i = 0; i < sx.size(); ++i)
        for (size_t t = 0; t < sy.size(); ++t)
            if (g.has_edge(sx[i], sy[t])) {
                adj[i] |= uint64_t{1} << t;
                adj_t[t] |= uint64_t{1} << i;
            }

    return std::min(encode_oriented(ax, ay, adj), encode_oriented(ay, ax, adj_t));
}

}  // namespace toricnp
