#include "doctest.h"

#include <set>

#include "brute.hpp"
#include "cfree/constructions.hpp"
#include "cfree/error.hpp"
#include "cfree/graphcore.hpp"
#include "cfree/hypergen.hpp"
#include "cfree/oracles.hpp"

using namespace cfree;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::invalid_input;
}

UniformHypergraph linear3(Vertex n, std::size_t m, std::uint64_t seed, int k = 2) {
    GenConfig c;
    c.a = 3;
    c.n = n;
    c.m = m;
    c.k = k;
    c.seed = seed;
    return random_high_girth_hypergraph(c, 4 * m);
}

BipartiteGraph c2n(int n) { return BipartiteGraph::from_graph(brute::cycle(2 * n)); }

} // namespace

TEST_CASE("clique blowup") {
    auto k5 = clique_blowup(UniformHypergraph(5, 5, {{0, 1, 2, 3, 4}}));
    CHECK(k5.graph.edge_count() == 10);
    auto bow = clique_blowup(UniformHypergraph(3, 6, {{1, 2, 3}, {3, 4, 5}}));
    CHECK(bow.graph.edge_count() == 6);
    CHECK(bow.graph.vertex_count() == 6);

    UniformHypergraph tree(3, 9, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 8}});
    REQUIRE(berge_girth(tree).is_infinite());
    auto g = clique_blowup(tree);
    CHECK(g.graph.edge_count() == 12);
    CHECK(brute::c4free(brute::matrix(g.graph)));

    CHECK(kind_of([] { clique_blowup(UniformHypergraph(3, 4, {{0, 1, 2}, {0, 1, 3}})); }) == ErrorKind::not_linear);
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto h = linear3(30, 20, s);
        CHECK(clique_blowup(h).graph.edge_count() == 3 * h.edge_count());
    }
}

TEST_CASE("bipartite blowup") {
    auto one = bipartite_blowup(OrientedHypergraph(6, 6, {{0, 1, 2, 3, 4, 5}}), 3, 4);
    CHECK(one.graph.edge_count() == 8);
    CHECK(one.graph.has_edge(0, 5));
    CHECK_FALSE(one.graph.has_edge(0, 1));
    auto two = bipartite_blowup(OrientedHypergraph(5, 10, {{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}), 3, 3);
    CHECK(two.graph.edge_count() == 12);

    OrientedHypergraph path(5, 13, {{0, 1, 2, 3, 4}, {4, 5, 6, 7, 8}, {8, 9, 10, 11, 12}});
    REQUIRE(berge_girth(path.underlying()).is_infinite());
    auto g = bipartite_blowup(path, 3, 3);
    CHECK(g.graph.edge_count() == 18);
    CHECK_FALSE(brute::has_cycle(g.graph, 6));

    CHECK(kind_of([] { bipartite_blowup(OrientedHypergraph(4, 4, {{0, 1, 2, 3}}), 3, 3); }) ==
          ErrorKind::uniformity_mismatch);
}

TEST_CASE("paste_doubled on C10") {
    auto p = paste_doubled(c2n(5), 3);
    CHECK(p.graph.vertex_count() == 20);
    CHECK(p.graph.edge_count() == 25);
    CHECK_FALSE(has_cycle_of_length(p.graph, 8));
    CHECK(verify_pasted(p.graph, 3).pasted);
    std::size_t conn = 0;
    for (auto l : p.labels) conn += l == EdgeLabel::connector;
    CHECK(conn == 5);

    auto p4 = paste_doubled(c2n(5), 4);
    CHECK(p4.graph.vertex_count() == 25);
    CHECK(p4.graph.edge_count() == 30);
    CHECK(verify_pasted(p4.graph, 4).pasted);
}

TEST_CASE("paste_doubled edge-count identity and errors") {
    for (std::uint64_t s = 0; s < 4; ++s) {
        auto g1 = high_girth_bipartite(12, 10, 2, s);
        std::size_t nb = 0;
        for (auto side : g1.sides()) nb += side == Side::b;
        for (int l = 3; l <= 5; ++l) {
            auto p = paste_doubled(g1, l);
            CHECK(p.graph.edge_count() == 2 * g1.graph().edge_count() + static_cast<std::size_t>(l - 2) * nb);
        }
    }
    CHECK(kind_of([] { paste_doubled(BipartiteGraph::from_graph(Graph(3, {{0, 1}, {1, 2}})), 3); }) ==
          ErrorKind::min_degree);
    auto two = Graph(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}});
    CHECK(kind_of([&] { paste_doubled(BipartiteGraph::from_graph(two), 3); }) == ErrorKind::not_connected);
}

TEST_CASE("general pasting is not C2k-free when k - l is even") {
    // girth 12 exceeds 2k for k = 5, yet two B vertices at distance 4 and
    // their mirrors close a 10-cycle through two connectors
    auto p = paste_doubled(c2n(6), 3);
    CHECK(has_cycle_of_length(p.graph, 10));
    // the (4,3) case on the same base stays C8-free
    CHECK_FALSE(has_cycle_of_length(p.graph, 8));
}

TEST_CASE("paste_hyperdouble examples") {
    auto one = paste_hyperdouble(UniformHypergraph(3, 3, {{0, 1, 2}}));
    CHECK(one.graph.edge_count() == 6);
    CHECK(girth(one.graph) == GirthValue::finite(6));
    CHECK(claim_one_thin_between_fat(one));
    CHECK(verify_pasted(one.graph, 3).pasted);

    auto two = paste_hyperdouble(UniformHypergraph(3, 6, {{1, 2, 3}, {3, 4, 5}}));
    CHECK(two.graph.edge_count() == 11);
    std::size_t fat = 0;
    for (auto l : two.labels) fat += l == EdgeLabel::fat;
    CHECK(fat == 5);
    CHECK(two.graph.has_edge(3, 9));
    CHECK(enumerate_cycles(two.graph, 6).size() == 2);
    CHECK(claim_one_thin_between_fat(two));
    CHECK(verify_pasted(two.graph, 3).pasted);

    CHECK(kind_of([] { paste_hyperdouble(UniformHypergraph(2, 3, {{0, 1}})); }) == ErrorKind::not_three_uniform);
    CHECK(kind_of([] { paste_hyperdouble(UniformHypergraph(3, 4, {{0, 1, 2}, {0, 1, 3}})); }) ==
          ErrorKind::not_linear);
}

TEST_CASE("paste_hyperdouble never repeats a thin edge") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto h = linear3(25, 15, 7000 + s);
        auto p = paste_hyperdouble(h);
        std::set<Edge> thin;
        std::set<Vertex> covered;
        for (const auto& e : h.hyperedges()) covered.insert(e.begin(), e.end());
        for (std::size_t i = 0; i < p.labels.size(); ++i)
            if (p.labels[i] == EdgeLabel::thin) CHECK(thin.insert(p.graph.edges()[i]).second);
        CHECK(thin.size() == 3 * h.edge_count());
        CHECK(p.graph.edge_count() == 3 * h.edge_count() + covered.size());
    }
}

TEST_CASE("verify_pasted") {
    CHECK(verify_pasted(brute::cycle(6), 3).pasted);
    Graph two(12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5},
                   {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11}, {6, 11}});
    auto cert = verify_pasted(two, 3);
    CHECK_FALSE(cert.pasted);
    CHECK_FALSE(cert.reason.empty());
    // pendant edge is on no C6
    Graph tail(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {5, 6}});
    CHECK_FALSE(verify_pasted(tail, 3).pasted);
    // build order: each cycle after the first shares an edge with an earlier one
    auto k33 = verify_pasted(complete_bipartite(3, 3), 3);
    CHECK(k33.pasted);
    CHECK(k33.build_order.size() == k33.cycles.size());
}

TEST_CASE("claim_one_thin_between_fat negative control") {
    PastedGraph pg;
    // fat edges 0-2 and 1-3, thin edges 2-1 and 0-3 both between them
    pg.graph = Graph(4, {{0, 2}, {1, 3}, {1, 2}, {0, 3}});
    pg.labels = {EdgeLabel::fat, EdgeLabel::fat, EdgeLabel::thin, EdgeLabel::thin};
    pg.provenance = {0, 1, 0, 0};
    CHECK_FALSE(claim_one_thin_between_fat(pg));
    pg.graph = Graph(4, {{0, 2}, {1, 3}, {1, 2}});
    pg.labels.pop_back();
    pg.provenance.pop_back();
    CHECK(claim_one_thin_between_fat(pg));
}

TEST_CASE("decomposition inequality") {
    UniformHypergraph h(3, 7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
    // star-free bipartite piece inside the blowup
    Graph b(7, {{0, 1}, {0, 2}, {2, 3}, {4, 5}});
    auto d = decomposition_inequality(h, b, {0, 1, 1, 0, 0, 1, 0});
    CHECK(d.proper);
    CHECK(d.non_monochromatic == 3);
    CHECK(d.bound == 6);
    CHECK(d.holds);
    auto bad = decomposition_inequality(h, b, {0, 0, 1, 0, 0, 1, 0});
    CHECK_FALSE(bad.proper);
    CHECK_FALSE(bad.holds);
    CHECK_THROWS_AS(decomposition_inequality(h, b, {0, 1}), Error);
}
