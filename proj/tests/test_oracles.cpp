#include "doctest.h"

#include "brute.hpp"
#include "cfree/error.hpp"
#include "cfree/graphcore.hpp"
#include "cfree/hypergen.hpp"
#include "cfree/oracles.hpp"

using namespace cfree;

namespace {

bool bipartite_girth_ok(const Graph& g, int girth_gt) {
    if (!brute::two_colorable(g)) return false;
    for (int L = 3; L <= std::min(girth_gt, g.vertex_count()); ++L)
        if (brute::has_cycle(g, L)) return false;
    return true;
}

} // namespace

TEST_CASE("max_c4free_subgraph examples") {
    CHECK(max_c4free_subgraph(brute::cycle(4)).size == 3);
    CHECK(max_c4free_subgraph(complete_bipartite(2, 3)).size == 4);
    CHECK(max_c4free_subgraph(complete_bipartite(3, 3)).size == 6);
    // ex(n, C4) for small n
    const std::size_t ex[] = {0, 0, 1, 3, 4, 6, 7, 9};
    for (int n = 1; n <= 7; ++n) CHECK(max_c4free_subgraph(brute::complete(n)).size == ex[n]);
}

TEST_CASE("max_c4free_subgraph against subset enumeration") {
    for (std::uint64_t s = 0; s < 25; ++s) {
        Graph g = brute::random_graph(7, 0.45, 200 + s);
        if (g.edge_count() > 14) continue;
        auto r = max_c4free_subgraph(g);
        CHECK(r.optimal);
        CHECK(r.size == brute::max_subgraph(g, [](const Graph& h) { return brute::c4free(brute::matrix(h)); }));
        CHECK(r.size == r.edges.size());
        CHECK(r.subgraph.edge_count() == r.size);
        CHECK(brute::c4free(brute::matrix(r.subgraph)));
        auto heur = max_c4free_subgraph(g, {}, true);
        CHECK(heur.size <= r.size);
        CHECK(brute::c4free(brute::matrix(heur.subgraph)));
    }
}

TEST_CASE("K_{u,w} closed form and witness") {
    for (int u = 1; u <= 3; ++u) {
        for (int w = u; w <= 5; ++w) {
            auto b = complete_bipartite_c4free_bound(u, w);
            CHECK(b.bound == static_cast<std::size_t>(w + u * (u - 1) / 2));
            if (w >= u * (u - 1) / 2) {
                REQUIRE(b.witness.has_value());
                CHECK(b.witness->edge_count() == b.bound);
                CHECK(brute::c4free(brute::matrix(*b.witness)));
                CHECK(max_c4free_subgraph(complete_bipartite(u, w)).size == b.bound);
            }
        }
    }
    CHECK(complete_bipartite_c4free_bound(2, 3).bound == 4);
    CHECK(complete_bipartite_c4free_bound(1, 7).bound == 7);
    CHECK(complete_bipartite_c4free_bound(3, 4).bound == 7);
}

TEST_CASE("max_bipartite_girth_subgraph examples") {
    CHECK(max_bipartite_girth_subgraph(brute::complete(3), 4).size == 2);
    auto k5 = max_bipartite_girth_subgraph(brute::complete(5), 6);
    CHECK(k5.size == 4);
    CHECK(k5.optimal);
    CHECK(max_bipartite_girth_subgraph(brute::cycle(6), 6).size == 5);
    CHECK(max_bipartite_girth_subgraph(brute::cycle(6), 4).size == 6);
}

TEST_CASE("max_bipartite_girth_subgraph against subset enumeration") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        Graph g = brute::random_graph(7, 0.4, 600 + s);
        if (g.edge_count() > 13) continue;
        for (int gg : {4, 6}) {
            auto r = max_bipartite_girth_subgraph(g, gg);
            CHECK(r.size == brute::max_subgraph(g, [&](const Graph& h) { return bipartite_girth_ok(h, gg); }));
            CHECK(bipartite_girth_ok(r.subgraph, gg));
            REQUIRE(r.coloring.size() == static_cast<std::size_t>(g.vertex_count()));
            for (const auto& e : r.subgraph.edges()) CHECK(r.coloring[e.u] != r.coloring[e.v]);
        }
    }
}

TEST_CASE("bipartite with girth above 4 is bipartite and C4-free") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        Graph g = brute::random_graph(8, 0.4, 800 + s);
        auto r = max_bipartite_girth_subgraph(g, 4);
        CHECK(r.size == brute::max_subgraph(g, [](const Graph& h) {
                  return brute::two_colorable(h) && brute::c4free(brute::matrix(h));
              }));
    }
}

TEST_CASE("max_cut") {
    CHECK(max_cut(brute::complete(4)).size == 4);
    CHECK(max_cut(brute::complete(5)).size == 6);
    CHECK(max_cut(complete_bipartite(3, 4)).size == 12);
    CHECK(max_cut(Graph(0)).size == 0);
    for (std::uint64_t s = 0; s < 30; ++s) {
        Graph g = brute::random_graph(10, 0.4, 900 + s);
        auto r = max_cut(g);
        CHECK(r.size == brute::max_cut(g));
        CHECK(r.side[0] == 0);
        std::size_t c = 0;
        for (const auto& e : g.edges()) c += r.side[e.u] != r.side[e.v];
        CHECK(c == r.size);
    }
    CHECK_THROWS_AS(max_cut(Graph(64)), Error);
}

TEST_CASE("certify_c2k_free") {
    CHECK(certify_c2k_free(brute::complete(5), 3));
    CHECK_FALSE(certify_c2k_free(brute::cycle(8), 4));
    CHECK(certify_c2k_free(complete_bipartite(2, 3), 3));
    CHECK_FALSE(certify_c2k_free(complete_bipartite(3, 3), 3));
}

TEST_CASE("count_berge_cycles") {
    UniformHypergraph tri(3, 7, {{1, 2, 3}, {3, 4, 5}, {5, 6, 1}});
    auto c = count_berge_cycles(tri, 4);
    REQUIRE(c.size() == 5);
    CHECK(c[2] == 0);
    CHECK(c[3] == 1);
    CHECK(c[4] == 0);
    UniformHypergraph pair(3, 5, {{1, 2, 3}, {1, 2, 4}});
    // defining vertex pairs (1,2) and (2,1) give the same cycle up to reflection
    CHECK(count_berge_cycles(pair, 2)[2] == 1);
    // graphs: Berge cycles are ordinary cycles
    Graph k4 = brute::complete(4);
    std::vector<Hyperedge> es;
    for (const auto& e : k4.edges()) es.push_back({e.u, e.v});
    auto g = count_berge_cycles(UniformHypergraph(2, 4, es), 4);
    CHECK(g[3] == 4);
    CHECK(g[4] == 3);
}
