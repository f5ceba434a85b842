#include "cfree/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "cfree/error.hpp"
#include "cfree/graphcore.hpp"

namespace cfree {

std::string to_string(EdgeLabel label) {
    switch (label) {
    case EdgeLabel::fat: return "fat";
    case EdgeLabel::thin: return "thin";
    case EdgeLabel::first_copy: return "first";
    case EdgeLabel::second_copy: return "second";
    case EdgeLabel::connector: return "connector";
    }
    return "?";
}

BlowupGraph clique_blowup(const UniformHypergraph& h) {
    if (!is_linear(h)) throw Error(ErrorKind::not_linear, "clique blowup needs a linear hypergraph");
    std::vector<Edge> edges;
    for (const auto& e : h.hyperedges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = i + 1; j < e.size(); ++j) edges.push_back(Edge::normalized(e[i], e[j]));
        }
    }
    return {Graph(h.vertex_count(), edges), h.hyperedges(), BlowupKind::clique};
}

BlowupGraph bipartite_blowup(const OrientedHypergraph& o, int k, int l) {
    if (k < 2 || l < 1) throw Error(ErrorKind::invalid_argument, "need k >= 2 and l >= 1");
    if (o.uniformity() != k - 1 + l) {
        throw Error(ErrorKind::uniformity_mismatch, "uniformity " + std::to_string(o.uniformity()) +
                                                        " differs from k - 1 + l = " + std::to_string(k - 1 + l));
    }
    if (!is_linear(o.underlying())) throw Error(ErrorKind::not_linear, "bipartite blowup needs a linear hypergraph");
    std::vector<Edge> edges;
    const auto left = static_cast<std::size_t>(k - 1);
    for (const auto& s : o.sequences()) {
        for (std::size_t i = 0; i < left; ++i) {
            for (std::size_t j = left; j < s.size(); ++j) edges.push_back(Edge::normalized(s[i], s[j]));
        }
    }
    return {Graph(o.vertex_count(), edges), o.sequences(), BlowupKind::bipartite};
}

PastedGraph paste_doubled(const BipartiteGraph& g1, int l) {
    if (l < 3) throw Error(ErrorKind::invalid_argument, "connector paths need l >= 3");
    const Graph& g = g1.graph();
    if (!is_connected(g)) throw Error(ErrorKind::not_connected, "base graph must be connected");
    if (g.vertex_count() > 0 && g.min_degree() < 2) {
        throw Error(ErrorKind::min_degree, "base graph needs minimum degree 2");
    }
    const Vertex n = g.vertex_count();
    const auto& b_side = g1.b_order();
    const Vertex fresh_per_path = l - 3;
    const Vertex total = 2 * n + fresh_per_path * static_cast<Vertex>(b_side.size());

    PastedGraph out;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        edges.push_back(g.edges()[i]);
        out.labels.push_back(EdgeLabel::first_copy);
        out.provenance.push_back(i);
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        edges.push_back({e.u + n, e.v + n});
        out.labels.push_back(EdgeLabel::second_copy);
        out.provenance.push_back(i);
    }
    Vertex next = 2 * n;
    for (Vertex b : b_side) {
        Vertex prev = b;
        for (Vertex step = 0; step < fresh_per_path; ++step) {
            edges.push_back(Edge::normalized(prev, next));
            out.labels.push_back(EdgeLabel::connector);
            out.provenance.push_back(static_cast<std::size_t>(b));
            prev = next++;
        }
        edges.push_back(Edge::normalized(prev, b + n));
        out.labels.push_back(EdgeLabel::connector);
        out.provenance.push_back(static_cast<std::size_t>(b));
    }
    out.graph = Graph(total, edges);
    return out;
}

PastedGraph paste_hyperdouble(const UniformHypergraph& h) {
    if (h.uniformity() != 3) throw Error(ErrorKind::not_three_uniform, "hypergraph doubling needs a = 3");
    if (!is_linear(h)) throw Error(ErrorKind::not_linear, "hypergraph doubling needs a linear hypergraph");
    const Vertex n = h.vertex_count();
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    for (const auto& e : h.hyperedges()) {
        for (Vertex v : e) covered[static_cast<std::size_t>(v)] = 1;
    }
    PastedGraph out;
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        if (!covered[static_cast<std::size_t>(v)]) continue;
        edges.push_back({v, v + n});
        out.labels.push_back(EdgeLabel::fat);
        out.provenance.push_back(static_cast<std::size_t>(v));
    }
    for (std::size_t idx = 0; idx < h.edge_count(); ++idx) {
        const auto& e = h.hyperedge(idx);  // ascending: i < j < k
        const Vertex i = e[0], j = e[1], k = e[2];
        for (auto [from, to] : {std::pair{i, j}, std::pair{j, k}, std::pair{k, i}}) {
            edges.push_back(Edge::normalized(from + n, to));
            out.labels.push_back(EdgeLabel::thin);
            out.provenance.push_back(idx);
        }
    }
    out.graph = Graph(2 * n, edges);
    return out;
}

PastingCertificate verify_pasted(const Graph& g, int l, const SearchBudget& budget, std::size_t max_cycles) {
    if (l < 2) throw Error(ErrorKind::invalid_argument, "need 2l >= 4");
    PastingCertificate cert;
    cert.cycles = enumerate_cycles(g, 2 * l, budget, max_cycles);
    if (cert.cycles.empty()) {
        cert.reason = "no cycle of length " + std::to_string(2 * l);
        return cert;
    }
    // edge -> cycles through it
    std::vector<std::vector<std::size_t>> through(g.edge_count());
    std::vector<std::vector<std::size_t>> cycle_edges(cert.cycles.size());
    for (std::size_t c = 0; c < cert.cycles.size(); ++c) {
        const auto& cyc = cert.cycles[c];
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            std::size_t e = *g.edge_index(cyc[i], cyc[(i + 1) % cyc.size()]);
            through[e].push_back(c);
            cycle_edges[c].push_back(e);
        }
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (through[e].empty()) {
            const Edge& ed = g.edges()[e];
            cert.reason = "edge " + std::to_string(ed.u) + "-" + std::to_string(ed.v) + " lies on no cycle of length " +
                          std::to_string(2 * l);
            return cert;
        }
    }
    std::vector<char> seen(cert.cycles.size(), 0);
    std::vector<char> edge_done(g.edge_count(), 0);
    std::deque<std::size_t> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        std::size_t c = queue.front();
        queue.pop_front();
        cert.build_order.push_back(c);
        for (std::size_t e : cycle_edges[c]) {
            if (edge_done[e]) continue;
            edge_done[e] = 1;
            for (std::size_t d : through[e]) {
                if (seen[d]) continue;
                seen[d] = 1;
                queue.push_back(d);
            }
        }
    }
    if (cert.build_order.size() != cert.cycles.size()) {
        cert.reason = "cycles of length " + std::to_string(2 * l) + " split into several edge-disjoint families";
        cert.build_order.clear();
        return cert;
    }
    cert.pasted = true;
    return cert;
}

bool claim_one_thin_between_fat(const PastedGraph& pg) {
    const auto& edges = pg.graph.edges();
    std::vector<long> fat_of(static_cast<std::size_t>(pg.graph.vertex_count()), -1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (pg.labels[i] != EdgeLabel::fat) continue;
        fat_of[static_cast<std::size_t>(edges[i].u)] = static_cast<long>(i);
        fat_of[static_cast<std::size_t>(edges[i].v)] = static_cast<long>(i);
    }
    std::map<std::pair<long, long>, int> between;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (pg.labels[i] != EdgeLabel::thin) continue;
        long x = fat_of[static_cast<std::size_t>(edges[i].u)];
        long y = fat_of[static_cast<std::size_t>(edges[i].v)];
        if (x < 0 || y < 0 || x == y) continue;
        if (++between[{std::min(x, y), std::max(x, y)}] > 1) return false;
    }
    return true;
}

DecompositionCheck decomposition_inequality(const UniformHypergraph& h, const Graph& b,
                                            const std::vector<int>& coloring) {
    if (static_cast<Vertex>(coloring.size()) != b.vertex_count() || b.vertex_count() != h.vertex_count()) {
        throw Error(ErrorKind::invalid_input, "coloring, subgraph and hypergraph disagree on the vertex count");
    }
    DecompositionCheck out;
    out.edges = b.edge_count();
    for (const Edge& e : b.edges()) {
        if (coloring[static_cast<std::size_t>(e.u)] == coloring[static_cast<std::size_t>(e.v)]) out.proper = false;
    }
    for (const auto& e : h.hyperedges()) {
        int first = coloring[static_cast<std::size_t>(e[0])];
        bool mono = std::all_of(e.begin(), e.end(),
                                [&](Vertex v) { return coloring[static_cast<std::size_t>(v)] == first; });
        if (!mono) ++out.non_monochromatic;
    }
    out.bound = static_cast<std::size_t>(h.uniformity() - 1) * out.non_monochromatic;
    out.holds = out.proper && out.edges <= out.bound;
    return out;
}

} // namespace cfree
