// Acceptance run: one PASS/FAIL line per criterion. Criterion 10 covers
// asymptotic bounds that cannot be checked at this scale and is only reported.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "cfree/colorstats.hpp"
#include "cfree/constructions.hpp"
#include "cfree/experiment.hpp"
#include "cfree/graphcore.hpp"
#include "cfree/hypergen.hpp"
#include "cfree/kuhn_osthus.hpp"
#include "cfree/oracles.hpp"

using namespace cfree;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

GenConfig gen(int a, Vertex n, std::size_t m, int k, std::uint64_t seed) {
    GenConfig c;
    c.a = a;
    c.n = n;
    c.m = m;
    c.k = k;
    c.seed = seed;
    return c;
}

Outcome kuhn_osthus_guarantee() {
    Outcome o;
    int graphs = 0, bad = 0;
    std::uint64_t seed = 1;
    for (int k = 3; k <= 4; ++k) {
        for (int i = 0; i < 120; ++i, ++seed) {
            Vertex side = 4 + static_cast<Vertex>(i % 5);  // 8..16 vertices
            auto g = random_maximal_c2k_free_bipartite(side, k, derive_seed(seed, 0));
            if (!certify_c2k_free(g.graph(), k)) {
                ++bad;
                continue;
            }
            ++graphs;
            Graph h = extract_c4free(g);
            const std::size_t e = g.graph().edge_count();
            const std::size_t need = (e + static_cast<std::size_t>(k - 2)) / static_cast<std::size_t>(k - 1);
            if (has_cycle_of_length(h, 4) || h.edge_count() < need) ++bad;
        }
    }
    o.pass = bad == 0 && graphs >= 200;
    o.detail = fmt("%d certified graphs, %d violations", graphs, bad);
    return o;
}

Outcome tightness_anchor() {
    Outcome o;
    std::string parts;
    for (auto [u, w] : {std::pair{2, 2}, {2, 3}, {2, 5}, {3, 3}, {3, 4}, {3, 5}}) {
        auto r = max_c4free_subgraph(complete_bipartite(u, w));
        std::size_t want = static_cast<std::size_t>(w + u * (u - 1) / 2);
        o.pass = o.pass && r.optimal && r.size == want;
        parts += fmt("K%d,%d=%zu ", u, w, r.size);
    }
    o.detail = parts;
    return o;
}

Outcome prop1_bound() {
    Outcome o;
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
        int a = 2 + i % 2;
        int b = 2 + (i / 2) % 2;
        Vertex n = a == 2 ? 40 : 30;
        std::size_t m = 1 + static_cast<std::size_t>(SplitMix64(static_cast<std::uint64_t>(i)).uniform(300));
        auto h = random_hypergraph(gen(a, n, m, 2, derive_seed(77, static_cast<std::uint64_t>(i))));
        auto d = derandomized_coloring(h, b);
        std::size_t cap = m / static_cast<std::size_t>(std::pow(b, a - 1));
        if (d.monochromatic > cap) ++bad;
    }
    o.pass = bad == 0;
    o.detail = fmt("500 hypergraphs, %d over the bound", bad);
    return o;
}

Outcome girth_repair() {
    Outcome o;
    int bad = 0;
    std::size_t deleted = 0, cycles = 0;
    for (int i = 0; i < 100; ++i) {
        int k = 2 + i % 4;
        Vertex n = 30 + static_cast<Vertex>(i % 10) * 10;
        std::size_t m = static_cast<std::size_t>(n) + static_cast<std::size_t>(i % 7) * 5;
        auto h = random_hypergraph(gen(3, n, m, k, derive_seed(401, static_cast<std::uint64_t>(i))));
        auto log = repair_girth_logged(h, k);
        auto counts = count_berge_cycles(h, k);
        std::size_t short_cycles = 0;
        for (int L = 2; L <= k; ++L) short_cycles += counts[static_cast<std::size_t>(L)];
        deleted += log.deleted.size();
        cycles += short_cycles;
        if (!berge_girth(log.hypergraph).exceeds(k) || log.deleted.size() > short_cycles) ++bad;
    }
    o.pass = bad == 0;
    o.detail = fmt("100 configs, %zu deletions vs %zu short cycles, %d violations", deleted, cycles, bad);
    return o;
}

Outcome decomposition() {
    Outcome o;
    int checked = 0, bad = 0;
    for (int k = 2; k <= 3; ++k) {
        const int a = 2 * k - 1;
        for (int i = 0; i < 12; ++i) {
            std::size_t m = 3 + static_cast<std::size_t>(i % 6);
            Vertex n = k == 2 ? 15 : 40;
            auto h = random_high_girth_hypergraph(gen(a, n, m, 2 * k, derive_seed(500 + k, static_cast<std::uint64_t>(i))),
                                                  200);
            auto blow = clique_blowup(h);
            auto best = max_bipartite_girth_subgraph(blow.graph, 2 * k);
            auto d = decomposition_inequality(h, best.subgraph, best.coloring);
            ++checked;
            if (!best.optimal || !d.holds) ++bad;
        }
    }
    o.pass = bad == 0;
    o.detail = fmt("%d blowups, %d violations", checked, bad);
    return o;
}

Outcome k5_anchor() {
    Outcome o;
    std::vector<Edge> es;
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v) es.push_back({u, v});
    auto r = max_bipartite_girth_subgraph(Graph(5, es), 6);
    Rational ratio(static_cast<long long>(r.size), 10);
    o.pass = r.optimal && r.size == 4 && ratio == Rational(2, 5);
    o.detail = "size " + std::to_string(r.size) + ", ratio " + to_string(ratio);
    return o;
}

double degree_exponent(const Graph& g) {
    double v = g.vertex_count(), e = static_cast<double>(g.edge_count());
    return std::log(2.0 * e / v) / std::log(v);
}

std::string g_exponents;

Outcome hyperdouble_pasting() {
    Outcome o;
    int bad = 0, built = 0;
    std::size_t hyperedges = 0;
    double expo = 0;
    for (std::uint64_t i = 0; built < 20 && i < 200; ++i) {
        auto h = random_high_girth_hypergraph(gen(3, 60, 30, 8, derive_seed(700, i)), 600);
        auto comp = largest_component(h);
        if (comp.size() < 3) continue;
        auto hc = h.select(comp);
        ++built;
        hyperedges += hc.edge_count();
        auto p = paste_hyperdouble(hc);
        std::size_t covered = 0;
        std::vector<char> seen(static_cast<std::size_t>(hc.vertex_count()), 0);
        for (const auto& e : hc.hyperedges())
            for (Vertex v : e) covered += !seen[static_cast<std::size_t>(v)]++;
        bool ok = berge_girth(hc).exceeds(8) && !has_cycle_of_length(p.graph, 8) &&
                  p.graph.edge_count() == 3 * hc.edge_count() + covered && claim_one_thin_between_fat(p) &&
                  verify_pasted(p.graph, 3).pasted;
        if (!ok) ++bad;
        // exponent over the non-isolated part
        double e = static_cast<double>(p.graph.edge_count());
        double v = 2.0 * static_cast<double>(covered);
        expo += std::log(2.0 * e / v) / std::log(v);
    }
    o.pass = bad == 0 && built == 20;
    o.detail = fmt("%d hypergraphs (mean %.1f hyperedges), %d violations", built,
                   built ? static_cast<double>(hyperedges) / built : 0.0, bad);
    g_exponents += fmt("second pasting mean degree exponent %.4f; ", built ? expo / built : 0.0);
    return o;
}

Outcome doubled_pasting() {
    Outcome o;
    std::vector<Edge> c10;
    for (Vertex v = 0; v < 10; ++v) c10.push_back(Edge::normalized(v, (v + 1) % 10));
    auto base_small = BipartiteGraph::from_graph(Graph(10, c10));
    auto base_big = high_girth_bipartite(100, 10, 2, 8);
    std::string detail;
    for (const auto* base : {&base_small, &base_big}) {
        const Graph& g1 = base->graph();
        bool base_ok = girth(g1).exceeds(9) && is_connected(g1) && g1.min_degree() >= 2;
        auto p = paste_doubled(*base, 3);
        bool c8 = !has_cycle_of_length(p.graph, 8);
        bool pasted = verify_pasted(p.graph, 3).pasted;
        o.pass = o.pass && base_ok && c8 && pasted;
        detail += fmt("base %d: C8-free=%d pasted=%d; ", g1.vertex_count(), c8, pasted);
        g_exponents += fmt("first pasting (n=%d) degree exponent %.4f; ", p.graph.vertex_count(),
                           degree_exponent(p.graph));
    }
    // l = 4 on a girth-12 base: still pasted from C8's; C10 presence reported
    auto base12 = high_girth_bipartite(40, 12, 2, 3);
    auto p4 = paste_doubled(base12, 4);
    bool pasted4 = verify_pasted(p4.graph, 4).pasted;
    o.pass = o.pass && pasted4;
    detail += fmt("l=4 pasted=%d C10-free=%d (not asserted)", pasted4, !has_cycle_of_length(p4.graph, 10));
    o.detail = detail;
    return o;
}

UniformHypergraph complete_uniform(int a, Vertex n) {
    std::vector<Hyperedge> es;
    std::vector<int> pick(static_cast<std::size_t>(n), 0);
    std::fill(pick.begin(), pick.begin() + a, 1);
    do {
        Hyperedge e;
        for (Vertex v = 0; v < n; ++v)
            if (pick[static_cast<std::size_t>(v)]) e.push_back(v);
        es.push_back(e);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return UniformHypergraph(a, n, es);
}

Outcome q_bound_implication() {
    Outcome o;
    int qualifying = 0, tried = 0, bad = 0;
    struct Inst {
        UniformHypergraph h;
        int b;
    };
    std::vector<Inst> insts;
    for (auto [a, b, n] : {std::tuple{2, 2, 8}, {2, 2, 12}, {2, 3, 9}, {3, 2, 10}, {3, 2, 14}, {3, 3, 10}}) {
        insts.push_back({complete_uniform(a, n), b});
        for (std::uint64_t s = 0; s < 3; ++s) {
            std::size_t half = binomial_saturating(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(a)) / 2;
            insts.push_back({random_hypergraph(gen(a, n, half, 2, derive_seed(900, s))), b});
        }
    }
    for (const auto& [h, b] : insts) {
        const int a = h.uniformity();
        for (double eps : {0.5, 1.0}) {
            for (auto fam : {MultisetFamily::non_monochromatic(a, b), MultisetFamily::rainbow(a, b)}) {
                if (fam.members().empty()) continue;
                ++tried;
                const double eps_prime = eps / (2.0 * std::pow(b, a));
                if (!check_randomlike(h, b, eps_prime, CheckMode::exhaustive()).pass) continue;
                ++qualifying;
                auto q = best_subhypergraph(h, b, fam);
                auto cm = max_multiset_probability(h.vertex_count(), b, fam, a);
                double bound = static_cast<double>(cm.probability) * static_cast<double>(h.edge_count()) * (1 + eps);
                if (static_cast<double>(q.q) > bound + 1e-9) ++bad;
            }
        }
    }
    o.pass = bad == 0 && qualifying > 0;
    o.detail = fmt("%d of %d cases random-like, %d violations", qualifying, tried, bad);
    return o;
}

std::string column(const std::string& csv, const std::string& name) {
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    std::vector<std::string> names;
    std::stringstream hs(header);
    for (std::string c; std::getline(hs, c, ',');) names.push_back(c);
    std::string out, line;
    while (std::getline(in, line)) {
        std::stringstream ls(line);
        std::size_t i = 0;
        for (std::string c; std::getline(ls, c, ','); ++i)
            if (names[i] == name) out += (out.empty() ? "" : " ") + c;
    }
    return out;
}

Outcome asymptotic_report() {
    Outcome o;
    std::string d;
    for (auto id : {ExperimentId::thm3, ExperimentId::thm4, ExperimentId::prop1}) {
        ExperimentSpec s;
        s.id = id;
        s.count = 3;
        auto r = run_experiment(s);
        d += to_string(id) + " ratio [" + column(r.csv, "ratio") + "] bound [" + column(r.csv, "bound") + "]; ";
    }
    d += "rainbow b=a=3 bound " + to_string(rainbow_bound(3, 3)) + "; ";
    o.detail = d + g_exponents;
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        std::function<Outcome()> run;
        bool reported;
    };
    const std::vector<Criterion> all{
        {1, kuhn_osthus_guarantee, false}, {2, tightness_anchor, false},    {3, prop1_bound, false},
        {4, girth_repair, false},          {5, decomposition, false},       {6, k5_anchor, false},
        {7, hyperdouble_pasting, false},   {8, doubled_pasting, false},     {9, q_bound_implication, false},
        {10, asymptotic_report, true},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const char* verdict = c.reported ? "REPORT" : (r.pass ? "PASS" : "FAIL");
        if (!c.reported && !r.pass) ++failed;
        std::printf("criterion %d: %s (%.1fs) %s\n", c.id, verdict, secs, r.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
