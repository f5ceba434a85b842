#include "doctest.h"

#include <cmath>

#include "brute.hpp"
#include "cfree/budget.hpp"
#include "cfree/error.hpp"
#include "cfree/hypergen.hpp"
#include "cfree/kernels/coloring_scan.hpp"
#include "cfree/kernels/cycle_search.hpp"
#include "cfree/kernels/max_cut.hpp"

using namespace cfree;
namespace k = cfree::kernels;

TEST_CASE("cycle search: serial and parallel agree") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        Graph g = brute::random_graph(11, 0.3, 3000 + s);
        for (int L = 3; L <= 9; ++L) {
            BudgetMeter m1(SearchBudget{}), m2(SearchBudget{});
            CHECK(k::serial::has_cycle(g, L, m1) == k::parallel::has_cycle(g, L, m2));
            BudgetMeter m3(SearchBudget{}), m4(SearchBudget{});
            auto a = k::serial::enumerate_cycles(g, L, m3, 1'000'000);
            auto b = k::parallel::enumerate_cycles(g, L, m4, 1'000'000);
            CHECK(a == b);
            if (L <= 8 && s < 6) CHECK(!a.empty() == brute::has_cycle(g, L));
        }
    }
}

TEST_CASE("cycle search: budget exhaustion is reported") {
    BudgetMeter m(SearchBudget{50, 0.0});
    // K_{6,9} has no 14-cycle, so the search cannot stop early
    std::vector<Edge> es;
    for (Vertex a = 0; a < 6; ++a)
        for (Vertex b = 6; b < 15; ++b) es.push_back({a, b});
    CHECK_THROWS_AS(k::parallel::has_cycle(Graph(15, es), 14, m), Error);
    CHECK(m.exhausted());
}

TEST_CASE("coloring scan: encoding") {
    auto colors = k::decode_coloring(5, 3, 2);
    CHECK(colors == std::vector<int>{1, 0, 1});
    auto p = k::make_problem(3, 2, 2, k::KeyKind::sequence, {{0, 1}, {2, 1}});
    auto keys = k::keys_of(p, colors);
    // sequence key: sum color * b^position
    CHECK(keys[0] == 1);
    CHECK(keys[1] == 1);
    auto q = k::make_problem(3, 2, 2, k::KeyKind::multiset, {{0, 1}, {0, 2}});
    auto mk = k::keys_of(q, colors);
    CHECK(mk[0] == 1 + 3);
    CHECK(mk[1] == 3 + 3);
    CHECK(p.coloring_count() == 8);
}

TEST_CASE("coloring scan: best agrees") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        GenConfig c;
        c.a = 3;
        c.n = 9;
        c.m = 20;
        c.seed = s;
        auto h = random_hypergraph(c);
        for (int b : {2, 3}) {
            auto p = k::make_problem(h.vertex_count(), b, 3, k::KeyKind::multiset, h.hyperedges());
            std::vector<char> member(p.key_space, 0);
            // non-monochromatic keys: anything not a * (a+1)^c
            for (std::uint32_t key = 0; key < p.key_space; ++key) member[key] = 1;
            for (int col = 0; col < b; ++col) member[3 * static_cast<std::uint32_t>(std::pow(4, col))] = 0;
            auto a = k::serial::best(p, member);
            auto bb = k::parallel::best(p, member);
            CHECK(a.q == bb.q);
            CHECK(a.index == bb.index);
        }
    }
}

TEST_CASE("coloring scan: worst deviation agrees") {
    for (std::uint64_t s = 0; s < 6; ++s) {
        GenConfig c;
        c.a = 2;
        c.n = 10;
        c.m = 15;
        c.seed = 40 + s;
        auto h = random_hypergraph(c);
        auto p = k::make_problem(10, 2, 2, k::KeyKind::sequence, h.hyperedges());
        // slot s checks the sequence with key s; expected = product of class fractions
        std::vector<std::uint32_t> slots{0, 1, 2, 3};
        k::DeviationTable t(p, slots, [&](const std::vector<int>& census, std::size_t slot) {
            double f0 = census[slot & 1] / 10.0;
            double f1 = census[slot >> 1 & 1] / 10.0;
            return f0 * f1 * 15.0;
        });
        auto a = k::serial::worst_deviation(p, t);
        auto b = k::parallel::worst_deviation(p, t);
        CHECK(a.deviation == doctest::Approx(b.deviation));
        CHECK(a.index == b.index);
        CHECK(a.slot == b.slot);
        auto direct = k::deviation_of(p, t, k::decode_coloring(a.index, 10, 2));
        CHECK(direct.deviation == doctest::Approx(a.deviation));
    }
}

TEST_CASE("max cut: serial and parallel agree") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        Graph g = brute::random_graph(14, 0.35, 5000 + s);
        std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
        for (const auto& e : g.edges()) {
            adj[e.u] |= 1ULL << e.v;
            adj[e.v] |= 1ULL << e.u;
        }
        BudgetMeter m1(SearchBudget{}), m2(SearchBudget{});
        auto a = k::serial::max_cut(adj, m1);
        auto b = k::parallel::max_cut(adj, m2);
        CHECK(a.size == b.size);
        CHECK(a.mask == b.mask);
        if (s < 5) CHECK(a.size == brute::max_cut(g));
    }
}
