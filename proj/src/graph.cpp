#include "cfree/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "cfree/error.hpp"

namespace cfree {

Graph::Graph(Vertex n) : n_(n) {
    if (n < 0) {
        throw Error(ErrorKind::invalid_input, "negative vertex count");
    }
    adjacency_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(Vertex n, std::span<const Edge> edges) : Graph(n) {
    edges_.reserve(edges.size());
    index_.reserve(edges.size() * 2);
    for (const Edge& raw : edges) {
        if (raw.u < 0 || raw.v < 0 || raw.u >= n || raw.v >= n) {
            throw Error(ErrorKind::invalid_input, "edge endpoint out of range: " + std::to_string(raw.u) + " " +
                                                      std::to_string(raw.v));
        }
        if (raw.u == raw.v) {
            throw Error(ErrorKind::invalid_input, "self-loop at " + std::to_string(raw.u));
        }
        Edge e = Edge::normalized(raw.u, raw.v);
        auto [it, inserted] = index_.emplace(key(e.u, e.v), edges_.size());
        if (!inserted) {
            throw Error(ErrorKind::invalid_input, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        }
        edges_.push_back(e);
        adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
    }
}

std::size_t Graph::min_degree() const {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& list : adjacency_) {
        best = std::min(best, list.size());
    }
    return adjacency_.empty() ? 0 : best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) {
        return false;
    }
    const auto& list = adjacency_[static_cast<std::size_t>(a)];
    return std::binary_search(list.begin(), list.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
    Edge e = Edge::normalized(a, b);
    auto it = index_.find(key(e.u, e.v));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Graph Graph::edge_subgraph(std::span<const std::size_t> edge_indices) const {
    std::vector<Edge> kept;
    kept.reserve(edge_indices.size());
    for (std::size_t i : edge_indices) {
        kept.push_back(edges_.at(i));
    }
    return Graph(n_, kept);
}

// ---------------------------------------------------------------------------

BipartiteGraph::BipartiteGraph(Graph graph, std::vector<Side> side)
    : graph_(std::move(graph)), side_(std::move(side)) {
    if (side_.size() != static_cast<std::size_t>(graph_.vertex_count())) {
        throw Error(ErrorKind::not_bipartite, "class assignment does not cover every vertex");
    }
    for (Vertex v = 0; v < graph_.vertex_count(); ++v) {
        (side_[static_cast<std::size_t>(v)] == Side::a ? a_order_ : b_order_).push_back(v);
    }
    validate();
}

BipartiteGraph::BipartiteGraph(Graph graph, std::vector<Vertex> a_order, std::vector<Vertex> b_order)
    : graph_(std::move(graph)), a_order_(std::move(a_order)), b_order_(std::move(b_order)) {
    const auto n = static_cast<std::size_t>(graph_.vertex_count());
    std::vector<int> seen(n, 0);
    side_.assign(n, Side::a);
    auto mark = [&](Vertex v, Side s) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]++) {
            throw Error(ErrorKind::not_bipartite, "class orders must partition the vertex set");
        }
        side_[static_cast<std::size_t>(v)] = s;
    };
    for (Vertex v : a_order_) mark(v, Side::a);
    for (Vertex v : b_order_) mark(v, Side::b);
    if (a_order_.size() + b_order_.size() != n) {
        throw Error(ErrorKind::not_bipartite, "class orders must partition the vertex set");
    }
    validate();
}

void BipartiteGraph::validate() {
    for (const Edge& e : graph_.edges()) {
        if (side(e.u) == side(e.v)) {
            throw Error(ErrorKind::not_bipartite,
                        "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " lies inside one class");
        }
    }
    rank_.assign(side_.size(), 0);
    for (std::size_t i = 0; i < a_order_.size(); ++i) rank_[static_cast<std::size_t>(a_order_[i])] = i;
    for (std::size_t i = 0; i < b_order_.size(); ++i) rank_[static_cast<std::size_t>(b_order_[i])] = i;
}

BipartiteGraph BipartiteGraph::from_graph(Graph graph) {
    const auto n = static_cast<std::size_t>(graph.vertex_count());
    std::vector<int> color(n, -1);
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < graph.vertex_count(); ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : graph.neighbors(v)) {
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = 1 - color[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (cw == color[static_cast<std::size_t>(v)]) {
                    throw Error(ErrorKind::not_bipartite, "odd cycle through vertex " + std::to_string(w));
                }
            }
        }
    }
    std::vector<Side> side(n);
    for (std::size_t v = 0; v < n; ++v) side[v] = color[v] == 0 ? Side::a : Side::b;
    return BipartiteGraph(std::move(graph), std::move(side));
}

BipartiteGraph BipartiteGraph::with_class_a(Graph graph, std::span<const Vertex> class_a) {
    std::vector<Side> side(static_cast<std::size_t>(graph.vertex_count()), Side::b);
    for (Vertex v : class_a) {
        if (v < 0 || v >= graph.vertex_count()) {
            throw Error(ErrorKind::not_bipartite, "class vertex out of range: " + std::to_string(v));
        }
        side[static_cast<std::size_t>(v)] = Side::a;
    }
    return BipartiteGraph(std::move(graph), std::move(side));
}

BipartiteGraph BipartiteGraph::reordered(std::vector<Vertex> a_order, std::vector<Vertex> b_order) const {
    BipartiteGraph out(graph_, std::move(a_order), std::move(b_order));
    if (out.side_ != side_) {
        throw Error(ErrorKind::not_bipartite, "reordering must keep the classes");
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

void validate_hyperedge(const Hyperedge& sorted, int a, Vertex n) {
    if (static_cast<int>(sorted.size()) != a) {
        throw Error(ErrorKind::invalid_input, "hyperedge of size " + std::to_string(sorted.size()) +
                                                  " in a " + std::to_string(a) + "-uniform hypergraph");
    }
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= n) {
            throw Error(ErrorKind::invalid_input, "hyperedge vertex out of range: " + std::to_string(sorted[i]));
        }
        if (i > 0 && sorted[i] == sorted[i - 1]) {
            throw Error(ErrorKind::invalid_input, "repeated vertex inside a hyperedge");
        }
    }
}

} // namespace

UniformHypergraph::UniformHypergraph(int a, Vertex n) : a_(a), n_(n) {
    if (a < 1 || n < 0) {
        throw Error(ErrorKind::invalid_input, "bad uniformity or vertex count");
    }
}

UniformHypergraph::UniformHypergraph(int a, Vertex n, std::vector<Hyperedge> hyperedges)
    : UniformHypergraph(a, n) {
    std::set<Hyperedge> seen;
    edges_.reserve(hyperedges.size());
    for (Hyperedge& e : hyperedges) {
        std::sort(e.begin(), e.end());
        validate_hyperedge(e, a, n);
        if (!seen.insert(e).second) {
            throw Error(ErrorKind::invalid_input, "duplicate hyperedge");
        }
        edges_.push_back(std::move(e));
    }
}

std::vector<std::vector<std::size_t>> UniformHypergraph::incidence() const {
    std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        for (Vertex v : edges_[i]) out[static_cast<std::size_t>(v)].push_back(i);
    }
    return out;
}

UniformHypergraph UniformHypergraph::without(const std::vector<bool>& drop) const {
    UniformHypergraph out(a_, n_);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i >= drop.size() || !drop[i]) out.edges_.push_back(edges_[i]);
    }
    return out;
}

UniformHypergraph UniformHypergraph::select(std::span<const std::size_t> indices) const {
    std::vector<Hyperedge> kept;
    kept.reserve(indices.size());
    for (std::size_t i : indices) kept.push_back(edges_.at(i));
    return UniformHypergraph(a_, n_, std::move(kept));
}

OrientedHypergraph::OrientedHypergraph(int a, Vertex n, std::vector<Hyperedge> sequences)
    : a_(a), n_(n), sequences_(std::move(sequences)) {
    if (a < 1 || n < 0) {
        throw Error(ErrorKind::invalid_input, "bad uniformity or vertex count");
    }
    std::set<Hyperedge> seen;
    for (const Hyperedge& s : sequences_) {
        Hyperedge sorted = s;
        std::sort(sorted.begin(), sorted.end());
        validate_hyperedge(sorted, a, n);
        if (!seen.insert(sorted).second) {
            throw Error(ErrorKind::invalid_input, "two oriented hyperedges share an underlying set");
        }
    }
}

UniformHypergraph OrientedHypergraph::underlying() const {
    return UniformHypergraph(a_, n_, sequences_);
}

OrientedHypergraph OrientedHypergraph::select(std::span<const std::size_t> indices) const {
    std::vector<Hyperedge> kept;
    kept.reserve(indices.size());
    for (std::size_t i : indices) kept.push_back(sequences_.at(i));
    return OrientedHypergraph(a_, n_, std::move(kept));
}

} // namespace cfree
