#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "support/fixtures.hpp"
#include "support/homology_oracle.hpp"
#include "support/oracle.hpp"
#include "toricnp/catalog.hpp"
#include "toricnp/fiber.hpp"

using namespace toricnp;
using namespace toricnp::testing;

TEST_CASE("multidegree helpers") {
    CHECK(multidegree_total({1, 2, 0, 3}) == 6);
    BipartiteGraph k22 = BipartiteGraph::complete(2, 2);
    CHECK(format_multidegree(k22, {1, 0, 2, 0}) == "x1 y1^2");
    CHECK(format_multidegree(k22, {0, 0, 0, 0}) == "1");
}

TEST_CASE("single-edge graph: one multidegree per fiber degree") {
    BipartiteGraph g = BipartiteGraph::from_index_edges(1, 1, {{0, 0}});
    auto ms = relevant_multidegrees(g, 1);
    REQUIRE(ms.size() == 1);
    CHECK(ms[0] == Multidegree{1, 1});
    auto fib = fiber(g, {1, 1});
    REQUIRE(fib.size() == 1);
    CHECK(fib[0].entries == std::vector<std::pair<int, int>>{{0, 1}});

    // The squared monomial: support is still the single edge.
    auto dc = divisor_complex(g, {2, 2});
    CHECK(dc.vertex_edges == std::vector<int>{0});
    CHECK(dc.facets == std::vector<uint64_t>{1});
}

TEST_CASE("parity and balance kill fibers") {
    BipartiteGraph k22 = BipartiteGraph::complete(2, 2);
    CHECK(fiber(k22, {1, 0, 0, 0}).empty());      // odd total
    CHECK(fiber(k22, {2, 0, 1, 1}).empty() == false);
    CHECK(fiber(k22, {1, 1, 2, 2}).empty());      // side sums differ
    CHECK_THROWS_AS(fiber(k22, {1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(fiber(k22, {1, 1, 1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(relevant_multidegrees(k22, 0), std::invalid_argument);
}

TEST_CASE("K_{2,2} frozen fiber data") {
    BipartiteGraph g = BipartiteGraph::complete(2, 2);
    auto ms = relevant_multidegrees(g, 2);
    CHECK(ms.size() == 9);
    CHECK(std::is_sorted(ms.begin(), ms.end()));
    // The all-ones multidegree is the only one whose fiber has two elements.
    int big = 0;
    for (const auto& a : ms) {
        auto fib = fiber(g, a);
        CHECK(!fib.empty());
        for (const auto& m : fib) CHECK(m.degree_vector(g) == a);
        if (fib.size() >= 2) {
            ++big;
            CHECK(a == Multidegree{1, 1, 1, 1});
        }
    }
    CHECK(big == 1);

    // Two perfect matchings, two disjoint facets.
    auto dc = divisor_complex(g, {1, 1, 1, 1});
    CHECK(dc.vertex_edges == std::vector<int>{0, 1, 2, 3});
    CHECK(dc.facets == std::vector<uint64_t>{0b0110, 0b1001});
}

TEST_CASE("C6 multidegrees match brute-force multiset enumeration") {
    BipartiteGraph g = cycle_graph(6);
    auto ms = relevant_multidegrees(g, 2);
    CHECK(ms.size() == 21);
    auto brute = oracle_fibers(g, 2);
    REQUIRE(brute.size() == ms.size());
    for (const auto& a : ms) CHECK(brute.count(a) == 1);
}

TEST_CASE("obstruction catalog all-ones fiber is the four-matchings set") {
    // Entries 2..7 share the vertex set of two disjoint squares, and their
    // perfect matchings are exactly the squares' matchings regardless of the
    // bridge edges present.
    const auto& cat = n2_obstructions();
    const Multidegree ones(8, 1);
    auto fib2 = fiber(cat[1], ones);
    REQUIRE(fib2.size() == 4);
    std::set<std::set<std::pair<std::string, std::string>>> labeled;
    for (size_t i = 1; i <= 6; ++i) {
        auto fib = fiber(cat[i], ones);
        REQUIRE(fib.size() == 4);
        std::set<std::set<std::pair<std::string, std::string>>> cur;
        for (const auto& m : fib) {
            std::set<std::pair<std::string, std::string>> edges;
            for (int e : m.support()) {
                const auto& [x, y] = cat[i].edges()[static_cast<size_t>(e)];
                edges.insert({cat[i].x_labels()[static_cast<size_t>(x)],
                              cat[i].y_labels()[static_cast<size_t>(y)]});
            }
            cur.insert(std::move(edges));
        }
        if (labeled.empty())
            labeled = cur;
        else
            CHECK(labeled == cur);
    }
    // Explicit matching list for the disjoint-squares entry.
    std::set<std::set<std::pair<std::string, std::string>>> expected = {
        {{"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}, {"x4", "y4"}},
        {{"x1", "y1"}, {"x2", "y2"}, {"x3", "y4"}, {"x4", "y3"}},
        {{"x1", "y2"}, {"x2", "y1"}, {"x3", "y3"}, {"x4", "y4"}},
        {{"x1", "y2"}, {"x2", "y1"}, {"x3", "y4"}, {"x4", "y3"}}};
    CHECK(labeled == expected);
}

TEST_CASE("relevant multidegrees equal brute force on random graphs") {
    std::mt19937_64 rng(401);
    for (int t = 0; t < 60; ++t) {
        BipartiteGraph g = random_bipartite(rng, 2 + static_cast<int>(rng() % 3),
                                            2 + static_cast<int>(rng() % 3), 0.6);
        const int j = 1 + static_cast<int>(rng() % 3);
        auto brute = oracle_fibers(g, j);
        auto ms = relevant_multidegrees(g, j);
        REQUIRE(ms.size() == brute.size());
        CHECK(std::is_sorted(ms.begin(), ms.end()));
        for (const auto& a : ms) {
            REQUIRE(brute.count(a) == 1);
            // Fibers agree as support sets and multiset counts.
            auto fib = fiber(g, a);
            std::set<std::set<int>> sups;
            for (const auto& m : fib) {
                auto s = m.support();
                sups.insert(std::set<int>(s.begin(), s.end()));
                CHECK(m.degree_vector(g) == a);
                CHECK(m.size() == j);
            }
            CHECK(sups == brute.at(a));
        }
    }
}

TEST_CASE("fiber list is sorted and duplicate-free") {
    BipartiteGraph g = BipartiteGraph::complete(3, 3);
    auto fib = fiber(g, {1, 1, 1, 1, 1, 1});
    CHECK(fib.size() == 6);  // permanent of the 3x3 all-ones matrix
    for (size_t t = 1; t < fib.size(); ++t) CHECK(fib[t - 1].entries < fib[t].entries);
}

TEST_CASE("divisor complex facets are maximal and canonical") {
    std::mt19937_64 rng(402);
    for (int t = 0; t < 40; ++t) {
        BipartiteGraph g = random_bipartite(rng, 3, 3, 0.7);
        if (g.edge_count() == 0) continue;
        for (const auto& a : relevant_multidegrees(g, 2)) {
            auto dc = divisor_complex(g, a);
            CHECK(std::is_sorted(dc.vertex_edges.begin(), dc.vertex_edges.end()));
            CHECK(std::is_sorted(dc.facets.begin(), dc.facets.end()));
            for (uint64_t f : dc.facets)
                for (uint64_t h : dc.facets)
                    if (f != h) CHECK((f & h) != f);  // pairwise incomparable
        }
    }
}
