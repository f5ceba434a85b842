#include "doctest.h"

#include <set>

#include "brute.hpp"
#include "cfree/error.hpp"
#include "cfree/graphcore.hpp"
#include "cfree/hypergen.hpp"
#include "cfree/oracles.hpp"

using namespace cfree;

namespace {

GenConfig cfg(int a, Vertex n, std::size_t m, std::uint64_t seed, int k = 2) {
    GenConfig c;
    c.a = a;
    c.n = n;
    c.m = m;
    c.seed = seed;
    c.k = k;
    return c;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::invalid_input;
}

} // namespace

TEST_CASE("SplitMix64 reference stream") {
    // first outputs for seed 0 of the published generator
    SplitMix64 r(0);
    CHECK(r.next() == 0xE220A8397B1DCDAFULL);
    CHECK(r.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(r.next() == 0x06C45D188009454FULL);
    SplitMix64 u(9);
    for (int i = 0; i < 1000; ++i) CHECK(u.uniform(7) < 7);
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(5, 3) == derive_seed(5, 3));
}

TEST_CASE("density cap and config errors") {
    CHECK(kind_of([] { random_hypergraph(cfg(2, 3, 3, 1)); }) == ErrorKind::density_too_high);
    CHECK(kind_of([] { random_hypergraph(cfg(1, 3, 1, 1)); }) == ErrorKind::config_invalid);
    CHECK(kind_of([] { random_oriented(cfg(2, 20, 2000, 1)); }) == ErrorKind::density_too_high);
}

TEST_CASE("random_hypergraph is deterministic and simple") {
    auto h1 = random_hypergraph(cfg(3, 6, 2, 42));
    auto h2 = random_hypergraph(cfg(3, 6, 2, 42));
    CHECK(h1 == h2);
    CHECK(h1.edge_count() == 2);
    CHECK(h1.hyperedge(0) != h1.hyperedge(1));

    auto big = random_hypergraph(cfg(3, 100, 300, 7));
    std::set<Hyperedge> seen(big.hyperedges().begin(), big.hyperedges().end());
    CHECK(seen.size() == 300);
    std::vector<int> deg(100, 0);
    for (const auto& e : big.hyperedges()) {
        CHECK(std::is_sorted(e.begin(), e.end()));
        for (Vertex v : e) ++deg[static_cast<std::size_t>(v)];
    }
    double mean = 0;
    for (int d : deg) mean += d;
    mean /= 100.0;
    CHECK(mean == doctest::Approx(9.0).epsilon(0.17));
}

TEST_CASE("random_oriented shares draws with random_hypergraph") {
    auto c = cfg(3, 30, 40, 11);
    auto o = random_oriented(c);
    CHECK(o.underlying() == random_hypergraph(c));
    auto single = random_oriented(cfg(2, 4, 1, 5));
    CHECK(single.edge_count() == 1);
    CHECK(single == random_oriented(cfg(2, 4, 1, 5)));
    // the large oriented example, at a density the cap allows
    auto big = random_oriented(cfg(2, 100, 2000, 3));
    CHECK(big.edge_count() == 2000);
    // orders should not all be ascending
    std::size_t ascending = 0;
    for (const auto& s : big.sequences()) ascending += s[0] < s[1];
    CHECK(ascending > 800);
    CHECK(ascending < 1200);
}

TEST_CASE("repair_girth examples") {
    UniformHypergraph tri(3, 7, {{1, 2, 3}, {3, 4, 5}, {5, 6, 1}});
    auto r = repair_girth(tri, 3);
    CHECK(r.edge_count() == 2);
    CHECK(berge_girth(r).is_infinite());

    UniformHypergraph pair(3, 5, {{1, 2, 3}, {1, 2, 4}});
    CHECK(repair_girth(pair, 2).edge_count() == 1);

    UniformHypergraph fine(3, 7, {{0, 1, 2}, {2, 3, 4}});
    CHECK(repair_girth(fine, 5) == fine);
}

TEST_CASE("repair deletes no more than the short Berge-cycle count") {
    for (std::uint64_t s = 0; s < 15; ++s) {
        int k = 2 + static_cast<int>(s % 4);
        auto h = random_hypergraph(cfg(3, 30, 40, 900 + s));
        auto log = repair_girth_logged(h, k);
        CHECK(berge_girth(log.hypergraph).exceeds(k));
        auto counts = count_berge_cycles(h, k);
        std::size_t short_cycles = 0;
        for (int L = 2; L <= k; ++L) short_cycles += counts[static_cast<std::size_t>(L)];
        CHECK(log.deleted.size() <= short_cycles);
        CHECK(log.hypergraph.edge_count() + log.deleted.size() == h.edge_count());
    }
}

TEST_CASE("high-girth generation with top-up") {
    auto c = cfg(3, 60, 40, 17, 4);
    auto h = random_high_girth_hypergraph(c, 2000);
    CHECK(berge_girth(h).exceeds(4));
    CHECK(h.edge_count() <= 40);
    CHECK(h == random_high_girth_hypergraph(c, 2000));
    auto o = random_high_girth_oriented(c, 2000);
    CHECK(berge_girth(o.underlying()).exceeds(4));
}

TEST_CASE("hoeffding_sample_size") {
    CHECK(hoeffding_sample_size(0.1, 0.05) == 185);
    CHECK(hoeffding_sample_size(0.05, 0.01) == 1060);
    CHECK(hoeffding_sample_size(1.0, 0.999999) == 1);
    CHECK_THROWS_AS(hoeffding_sample_size(0.0, 0.5), Error);
}

TEST_CASE("high_girth_bipartite") {
    auto c10 = high_girth_bipartite(5, 10, 2, 1);
    CHECK(c10.graph().edge_count() == 10);
    CHECK(c10.graph().min_degree() == 2);
    CHECK(girth(c10.graph()) == GirthValue::finite(10));

    auto big = high_girth_bipartite(100, 10, 2, 3);
    CHECK(big.graph().vertex_count() == 200);
    CHECK(girth(big.graph()).exceeds(9));
    CHECK(is_connected(big.graph()));
    CHECK(big.graph().min_degree() >= 2);
    for (Vertex v = 0; v < 100; ++v) CHECK(big.side(v) == Side::a);

    CHECK(kind_of([] { high_girth_bipartite(2, 10, 3, 1); }) == ErrorKind::infeasible);
}

TEST_CASE("random bipartite generators") {
    auto g = random_bipartite(5, 12, 4);
    CHECK(g.graph().edge_count() == 12);
    for (const auto& e : g.graph().edges()) CHECK(g.side(e.u) != g.side(e.v));

    for (int k = 2; k <= 4; ++k) {
        auto m = random_maximal_c2k_free_bipartite(5, k, 50 + static_cast<std::uint64_t>(k));
        const Graph& gg = m.graph();
        CHECK_FALSE(brute::has_cycle(gg, 2 * k));
        // maximal: every missing cross pair would close a C_{2k}
        for (Vertex a = 0; a < 5; ++a) {
            for (Vertex b = 5; b < 10; ++b) {
                if (gg.has_edge(a, b)) continue;
                auto es = gg.edges();
                es.push_back({a, b});
                CHECK(brute::has_cycle(Graph(10, es), 2 * k));
            }
        }
    }
}
