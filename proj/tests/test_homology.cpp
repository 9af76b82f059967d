#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "support/homology_oracle.hpp"
#include "toricnp/catalog.hpp"
#include "toricnp/fiber.hpp"
#include "toricnp/homology.hpp"
#include "toricnp/rank.hpp"

using namespace toricnp;
using namespace toricnp::testing;

namespace {

SparseIntMatrix make_matrix(const std::vector<std::vector<long long>>& dense) {
    SparseIntMatrix m;
    m.rows = static_cast<int>(dense.size());
    m.cols = dense.empty() ? 0 : static_cast<int>(dense[0].size());
    m.row_data.resize(dense.size());
    for (size_t r = 0; r < dense.size(); ++r)
        for (size_t c = 0; c < dense[r].size(); ++c)
            if (dense[r][c] != 0) m.row_data[r].emplace_back(static_cast<int>(c), dense[r][c]);
    return m;
}

DivisorComplex make_complex(int vertices, const std::vector<uint64_t>& facets) {
    DivisorComplex dc;
    for (int v = 0; v < vertices; ++v) dc.vertex_edges.push_back(v);
    dc.facets = facets;
    return dc;
}

const std::vector<FieldSpec> kFields = {FieldSpec::rationals(), FieldSpec::prime(2),
                                        FieldSpec::prime(3), FieldSpec::prime(5)};

}  // namespace

TEST_CASE("sparse rank basics") {
    CHECK(sparse_rank(make_matrix({}), FieldSpec::rationals()) == 0);
    CHECK(sparse_rank(make_matrix({{0, 0}, {0, 0}}), FieldSpec::rationals()) == 0);
    CHECK(sparse_rank(make_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), FieldSpec::rationals()) == 3);
    CHECK(sparse_rank(make_matrix({{6, 4}, {3, 2}}), FieldSpec::rationals()) == 1);
    CHECK(sparse_rank(make_matrix({{2}}), FieldSpec::prime(2)) == 0);
    // det = -10: invertible over Q, singular exactly mod 2 and mod 5.
    auto m = make_matrix({{1, 4}, {3, 2}});
    CHECK(sparse_rank(m, FieldSpec::rationals()) == 2);
    CHECK(sparse_rank(m, FieldSpec::prime(2)) == 1);
    CHECK(sparse_rank(m, FieldSpec::prime(3)) == 2);
    CHECK(sparse_rank(m, FieldSpec::prime(5)) == 1);
}

TEST_CASE("sparse rank survives 64-bit overflow via big integers") {
    const long long big = 1LL << 40;
    CHECK(sparse_rank(make_matrix({{1, big}, {big, 1}}), FieldSpec::rationals()) == 2);
    CHECK(sparse_rank(make_matrix({{big, big * 2}, {big * 2, big * 4}}),
                      FieldSpec::rationals()) == 1);
}

TEST_CASE("sparse rank agrees with dense elimination on random matrices") {
    std::mt19937_64 rng(501);
    for (int t = 0; t < 120; ++t) {
        const int rows = 1 + static_cast<int>(rng() % 8);
        const int cols = 1 + static_cast<int>(rng() % 8);
        std::vector<std::vector<long long>> dense(static_cast<size_t>(rows),
                                                  std::vector<long long>(static_cast<size_t>(cols)));
        for (auto& row : dense)
            for (auto& v : row) v = static_cast<long long>(rng() % 7) - 3;
        auto m = make_matrix(dense);
        std::vector<std::vector<BigInt>> big(dense.size());
        for (size_t r = 0; r < dense.size(); ++r)
            big[r] = std::vector<BigInt>(dense[r].begin(), dense[r].end());
        CHECK(sparse_rank(m, FieldSpec::rationals()) == dense_rank_char0(big));
        for (long long p : {2, 3, 5, 7})
            CHECK(sparse_rank(m, FieldSpec::prime(static_cast<uint32_t>(p))) ==
                  dense_rank_mod_p(dense, p));
    }
}

TEST_CASE("homology of tiny fixed complexes") {
    for (const auto& field : kFields) {
        // Hollow triangle: a circle.
        CHECK(reduced_homology_dims(make_complex(3, {0b011, 0b101, 0b110}), field, 1) ==
              std::vector<int>{0, 1});
        // Square boundary: also a circle.
        CHECK(reduced_homology_dims(make_complex(4, {0b0011, 0b0110, 0b1100, 0b1001}), field, 2) ==
              std::vector<int>{0, 1, 0});
        // Full simplex on 5 vertices: contractible.
        CHECK(reduced_homology_dims(make_complex(5, {0b11111}), field, 3) ==
              std::vector<int>{0, 0, 0, 0});
        // Three-edge path: contractible but not a cone, exercises the ranks.
        CHECK(reduced_homology_dims(make_complex(4, {0b0011, 0b0110, 0b1100}), field, 1) ==
              std::vector<int>{0, 0});
        // Two disjoint segments.
        CHECK(reduced_homology_dims(make_complex(4, {0b0011, 0b1100}), field, 1) ==
              std::vector<int>{1, 0});
        // Hollow tetrahedron: a 2-sphere.
        CHECK(reduced_homology_dims(make_complex(4, {0b0111, 0b1011, 0b1101, 0b1110}), field, 2) ==
              std::vector<int>{0, 0, 1});
    }
}

TEST_CASE("six-vertex projective plane separates characteristic 2") {
    // Triangulation with 10 facets; every edge lies in exactly two of them.
    const std::vector<std::vector<int>> tris = {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5},
                                                {0, 4, 5}, {1, 2, 5}, {1, 3, 4}, {1, 4, 5},
                                                {2, 3, 4}, {2, 3, 5}};
    std::map<std::pair<int, int>, int> edge_use;
    std::vector<uint64_t> facets;
    for (const auto& t : tris) {
        facets.push_back((uint64_t{1} << t[0]) | (uint64_t{1} << t[1]) | (uint64_t{1} << t[2]));
        ++edge_use[{t[0], t[1]}];
        ++edge_use[{t[0], t[2]}];
        ++edge_use[{t[1], t[2]}];
    }
    REQUIRE(edge_use.size() == 15);
    for (const auto& [e, n] : edge_use) REQUIRE(n == 2);

    auto complex = make_complex(6, facets);
    CHECK(reduced_homology_dims(complex, FieldSpec::rationals(), 2) == std::vector<int>{0, 0, 0});
    CHECK(reduced_homology_dims(complex, FieldSpec::prime(2), 2) == std::vector<int>{0, 1, 1});
    CHECK(reduced_homology_dims(complex, FieldSpec::prime(3), 2) == std::vector<int>{0, 0, 0});
    CHECK(reduced_homology_dims(complex, FieldSpec::prime(5), 2) == std::vector<int>{0, 0, 0});
}

TEST_CASE("four-matchings complex has a single loop over every field") {
    const auto& cat = n2_obstructions();
    const Multidegree ones(8, 1);
    for (size_t i = 1; i <= 6; ++i) {
        auto dc = divisor_complex(cat[i], ones);
        REQUIRE(dc.facets.size() == 4);
        for (const auto& field : kFields)
            CHECK(reduced_homology_dims(dc, field, 1) == std::vector<int>{0, 1});
    }
}

TEST_CASE("entries beyond the top dimension are zero") {
    auto dims = reduced_homology_dims(make_complex(3, {0b011, 0b101, 0b110}), FieldSpec::prime(3), 5);
    CHECK(dims == std::vector<int>{0, 1, 0, 0, 0, 0});
    CHECK_THROWS_AS(
        reduced_homology_dims(make_complex(3, {0b011, 0b101, 0b110}), FieldSpec::rationals(), -1),
        std::invalid_argument);
}

TEST_CASE("face cap aborts cleanly") {
    // Three large facets with empty common intersection (no cone shortcut);
    // hundreds of predicted faces at i_max = 4.
    auto dc = make_complex(10, {0b0011111111, 0b1111111100, 0b1100000011});
    CHECK_THROWS_AS(reduced_homology_dims(dc, FieldSpec::rationals(), 4, 100), ResourceLimitError);
    CHECK_NOTHROW(reduced_homology_dims(dc, FieldSpec::rationals(), 4, 5'000'000));
}

TEST_CASE("homology agrees with the dense oracle on random complexes") {
    std::mt19937_64 rng(502);
    for (int t = 0; t < 80; ++t) {
        const int verts = 4 + static_cast<int>(rng() % 4);
        const int nf = 2 + static_cast<int>(rng() % 5);
        std::set<std::set<int>> supports;
        for (int f = 0; f < nf; ++f) {
            std::set<int> s;
            const int card = 2 + static_cast<int>(rng() % 3);
            while (static_cast<int>(s.size()) < card) s.insert(static_cast<int>(rng() % verts));
            supports.insert(std::move(s));
        }
        // Production input: maximal supports as masks.
        std::vector<uint64_t> masks;
        for (const auto& s : supports) {
            uint64_t mask = 0;
            for (int v : s) mask |= uint64_t{1} << v;
            masks.push_back(mask);
        }
        std::vector<uint64_t> maximal;
        for (uint64_t mk : masks) {
            bool keep = true;
            for (uint64_t other : masks)
                if (other != mk && (mk & other) == mk) keep = false;
            if (keep) maximal.push_back(mk);
        }
        std::sort(maximal.begin(), maximal.end());
        maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
        auto dc = make_complex(verts, maximal);
        for (const auto& field :
             {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
            auto got = reduced_homology_dims(dc, field, 2);
            auto want = oracle_homology(supports, field, 2);
            CHECK(got == want);
        }
    }
}

TEST_CASE("euler characteristic identity on fiber complexes") {
    std::mt19937_64 rng(503);
    int checked = 0;
    for (int t = 0; t < 25; ++t) {
        BipartiteGraph g = BipartiteGraph::from_index_edges(3, 3, {});
        {
            std::vector<std::pair<int, int>> edges;
            for (int x = 0; x < 3; ++x)
                for (int y = 0; y < 3; ++y)
                    if (rng() % 100 < 65) edges.emplace_back(x, y);
            g = BipartiteGraph::from_index_edges(3, 3, edges);
        }
        if (g.edge_count() == 0) continue;
        for (int j = 1; j <= 3; ++j)
            for (const auto& alpha : relevant_multidegrees(g, j)) {
                auto fib = fiber(g, alpha);
                std::set<std::set<int>> supports;
                for (const auto& m : fib) {
                    auto s = m.support();
                    supports.insert(std::set<int>(s.begin(), s.end()));
                }
                auto counts = oracle_face_counts(supports);
                const int top = static_cast<int>(counts.size()) - 1;
                auto dims = reduced_homology_dims(divisor_complex(g, alpha),
                                                  FieldSpec::rationals(), std::max(top, 0));
                long long lhs = -1, rhs = 0;  // f_{-1} = 1 contributes -1
                for (int d = 0; d <= top; ++d) {
                    lhs += (d % 2 == 0 ? 1 : -1) * counts[static_cast<size_t>(d)];
                    rhs += (d % 2 == 0 ? 1 : -1) * dims[static_cast<size_t>(d)];
                }
                CHECK(lhs == rhs);
                ++checked;
            }
    }
    CHECK(checked > 100);
}
