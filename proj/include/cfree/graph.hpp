#ifndef CFREE_GRAPH_HPP
#define CFREE_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace cfree {

using Vertex = std::int32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    static Edge normalized(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    auto operator<=>(const Edge&) const = default;
};

/// Length of a shortest (Berge-)cycle, or Infinite when there is none.
class GirthValue {
public:
    static GirthValue infinite() { return GirthValue(); }
    static GirthValue finite(int length) { return GirthValue(length); }

    bool is_infinite() const { return !length_.has_value(); }
    bool is_finite() const { return length_.has_value(); }
    /// Precondition: is_finite().
    int value() const { return *length_; }

    /// True when every cycle is longer than `bound` (also when there is none).
    bool exceeds(int bound) const { return is_infinite() || *length_ > bound; }

    bool operator==(const GirthValue&) const = default;
    std::string to_string() const { return is_infinite() ? "inf" : std::to_string(*length_); }

private:
    GirthValue() = default;
    explicit GirthValue(int length) : length_(length) {}
    std::optional<int> length_;
};

inline std::ostream& operator<<(std::ostream& os, const GirthValue& g) { return os << g.to_string(); }

/// Simple undirected graph on vertices 0..n-1. Immutable once built: the
/// constructor rejects self-loops, duplicate edges and out-of-range ids.
class Graph {
public:
    Graph() = default;
    explicit Graph(Vertex n);
    Graph(Vertex n, std::span<const Edge> edges);
    Graph(Vertex n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    Vertex vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Edges in construction order, each normalized to u < v.
    const std::vector<Edge>& edges() const { return edges_; }
    /// Sorted neighbor list.
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
    std::size_t min_degree() const;

    bool has_edge(Vertex a, Vertex b) const;
    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

    /// Subgraph on the same vertex set keeping the listed edge indices.
    Graph edge_subgraph(std::span<const std::size_t> edge_indices) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    static std::uint64_t key(Vertex a, Vertex b) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
    }

    Vertex n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

enum class Side : std::uint8_t { a = 0, b = 1 };

/// Bipartite graph with classes A and B and a total order on each class.
/// Order positions are what the edge poset compares; by default they follow
/// vertex ids.
class BipartiteGraph {
public:
    /// Classes given explicitly: side[v] for each vertex. Orders default to id order.
    BipartiteGraph(Graph graph, std::vector<Side> side);
    /// Classes and explicit orders: a_order / b_order list the class members
    /// from smallest to largest.
    BipartiteGraph(Graph graph, std::vector<Vertex> a_order, std::vector<Vertex> b_order);

    /// Computes a 2-coloring per component (the smallest vertex of each
    /// component goes to A). Throws not_bipartite on an odd cycle.
    static BipartiteGraph from_graph(Graph graph);
    /// Class A given as a vertex list; everything else is B.
    static BipartiteGraph with_class_a(Graph graph, std::span<const Vertex> class_a);

    const Graph& graph() const { return graph_; }
    Side side(Vertex v) const { return side_[static_cast<std::size_t>(v)]; }
    const std::vector<Side>& sides() const { return side_; }
    /// Position of v within its own class order.
    std::size_t rank(Vertex v) const { return rank_[static_cast<std::size_t>(v)]; }
    const std::vector<Vertex>& a_order() const { return a_order_; }
    const std::vector<Vertex>& b_order() const { return b_order_; }

    /// Edge (a, b) with a in A, b in B.
    std::pair<Vertex, Vertex> oriented(const Edge& e) const {
        return side(e.u) == Side::a ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
    }

    /// Same graph and classes, new class orders.
    BipartiteGraph reordered(std::vector<Vertex> a_order, std::vector<Vertex> b_order) const;

private:
    void validate();

    Graph graph_;
    std::vector<Side> side_;
    std::vector<Vertex> a_order_;
    std::vector<Vertex> b_order_;
    std::vector<std::size_t> rank_;
};

using Hyperedge = std::vector<Vertex>;

/// a-uniform hypergraph on 0..n-1. Hyperedges are stored sorted ascending
/// and kept in construction ("file") order.
class UniformHypergraph {
public:
    UniformHypergraph(int a, Vertex n);
    UniformHypergraph(int a, Vertex n, std::vector<Hyperedge> hyperedges);

    int uniformity() const { return a_; }
    Vertex vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Hyperedge>& hyperedges() const { return edges_; }
    const Hyperedge& hyperedge(std::size_t i) const { return edges_[i]; }

    /// Hyperedges containing each vertex, in hyperedge order.
    std::vector<std::vector<std::size_t>> incidence() const;
    /// Keeps hyperedges whose index is not marked in `drop`.
    UniformHypergraph without(const std::vector<bool>& drop) const;
    /// Keeps the listed hyperedge indices (in the given order).
    UniformHypergraph select(std::span<const std::size_t> indices) const;

    bool operator==(const UniformHypergraph&) const = default;

private:
    int a_;
    Vertex n_;
    std::vector<Hyperedge> edges_;
};

/// Hypergraph whose hyperedges are sequences of distinct vertices; no two
/// hyperedges have the same underlying set.
class OrientedHypergraph {
public:
    OrientedHypergraph(int a, Vertex n, std::vector<Hyperedge> sequences);

    int uniformity() const { return a_; }
    Vertex vertex_count() const { return n_; }
    std::size_t edge_count() const { return sequences_.size(); }
    const std::vector<Hyperedge>& sequences() const { return sequences_; }

    /// Forgets the orders.
    UniformHypergraph underlying() const;
    /// Keeps the listed hyperedge indices.
    OrientedHypergraph select(std::span<const std::size_t> indices) const;

    bool operator==(const OrientedHypergraph&) const = default;

private:
    int a_;
    Vertex n_;
    std::vector<Hyperedge> sequences_;
};

} // namespace cfree

#endif // CFREE_GRAPH_HPP
