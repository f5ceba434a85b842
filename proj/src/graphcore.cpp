#include "cfree/graphcore.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

#include "cfree/kernels/cycle_search.hpp"

namespace cfree {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (y < x) std::swap(x, y);
        parent_[y] = x;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

struct RootCycle {
    int length = std::numeric_limits<int>::max();
    Vertex v = -1;
    Vertex w = -1;
};

// BFS from root; shortest closed walk through a non-tree edge. Stops once
// no shorter candidate can appear than `cutoff`.
RootCycle bfs_cycle(const Graph& g, Vertex root, int cutoff, std::vector<int>& dist, std::vector<Vertex>& parent,
                    std::vector<Vertex>& touched) {
    for (Vertex t : touched) {
        dist[static_cast<std::size_t>(t)] = -1;
        parent[static_cast<std::size_t>(t)] = -1;
    }
    touched.clear();
    RootCycle best;
    best.length = cutoff;
    std::deque<Vertex> queue{root};
    dist[static_cast<std::size_t>(root)] = 0;
    touched.push_back(root);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        const int dv = dist[static_cast<std::size_t>(v)];
        if (2 * dv + 1 >= best.length) break;
        for (Vertex w : g.neighbors(v)) {
            auto& dw = dist[static_cast<std::size_t>(w)];
            if (dw == -1) {
                dw = dv + 1;
                parent[static_cast<std::size_t>(w)] = v;
                touched.push_back(w);
                queue.push_back(w);
            } else if (w != parent[static_cast<std::size_t>(v)]) {
                int len = dv + dw + 1;
                if (len < best.length) {
                    best = {len, v, w};
                }
            }
        }
    }
    return best;
}

} // namespace

GirthValue girth(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> dist(n, -1);
    std::vector<Vertex> parent(n, -1);
    std::vector<Vertex> touched;
    int best = std::numeric_limits<int>::max();
    for (Vertex r = 0; r < g.vertex_count(); ++r) {
        RootCycle c = bfs_cycle(g, r, best, dist, parent, touched);
        if (c.v >= 0) best = std::min(best, c.length);
        if (best == 3) break;
    }
    return best == std::numeric_limits<int>::max() ? GirthValue::infinite() : GirthValue::finite(best);
}

std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> dist(n, -1);
    std::vector<Vertex> parent(n, -1);
    std::vector<Vertex> touched;
    GirthValue target = girth(g);
    if (target.is_infinite()) return std::nullopt;
    for (Vertex r = 0; r < g.vertex_count(); ++r) {
        RootCycle c = bfs_cycle(g, r, target.value() + 1, dist, parent, touched);
        if (c.v < 0 || c.length != target.value()) continue;
        std::vector<Vertex> to_v;
        for (Vertex x = c.v; x != -1; x = parent[static_cast<std::size_t>(x)]) to_v.push_back(x);
        std::vector<Vertex> to_w;
        for (Vertex x = c.w; x != -1; x = parent[static_cast<std::size_t>(x)]) to_w.push_back(x);
        // root .. v, then w .. (child of root)
        std::vector<Vertex> cycle(to_v.rbegin(), to_v.rend());
        for (std::size_t i = 0; i + 1 < to_w.size(); ++i) cycle.push_back(to_w[i]);
        return cycle;
    }
    return std::nullopt;
}

bool has_cycle_of_length(const Graph& g, int length, const SearchBudget& budget) {
    if (length < 3) {
        throw Error(ErrorKind::invalid_argument, "cycle length must be at least 3");
    }
    BudgetMeter meter(budget);
    return kernels::parallel::has_cycle(g, length, meter);
}

std::vector<std::vector<Vertex>> enumerate_cycles(const Graph& g, int length, const SearchBudget& budget,
                                                  std::size_t max_cycles) {
    if (length < 3) {
        throw Error(ErrorKind::invalid_argument, "cycle length must be at least 3");
    }
    BudgetMeter meter(budget);
    return kernels::parallel::enumerate_cycles(g, length, meter, max_cycles);
}

bool is_forest(const Graph& g) {
    DisjointSets sets(static_cast<std::size_t>(g.vertex_count()));
    for (const Edge& e : g.edges()) {
        if (!sets.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) return false;
    }
    return true;
}

std::vector<int> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        comp[static_cast<std::size_t>(s)] = next;
        queue.push_back(s);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(v)) {
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = next;
                    queue.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

bool is_connected(const Graph& g) {
    auto comp = connected_components(g);
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(v)) {
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = 1 - color[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (cw == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

// First (i, j), j minimal then i minimal, with |e_i ∩ e_j| >= 2.
std::optional<std::pair<std::size_t, std::size_t>> first_shared_pair(const UniformHypergraph& h) {
    std::unordered_map<std::uint64_t, std::size_t> owner;
    for (std::size_t j = 0; j < h.edge_count(); ++j) {
        const Hyperedge& e = h.hyperedge(j);
        std::optional<std::size_t> earliest;
        for (std::size_t x = 0; x < e.size(); ++x) {
            for (std::size_t y = x + 1; y < e.size(); ++y) {
                auto it = owner.find(pair_key(e[x], e[y]));
                if (it != owner.end() && (!earliest || it->second < *earliest)) earliest = it->second;
            }
        }
        if (earliest) return std::pair{*earliest, j};
        for (std::size_t x = 0; x < e.size(); ++x) {
            for (std::size_t y = x + 1; y < e.size(); ++y) owner.emplace(pair_key(e[x], e[y]), j);
        }
    }
    return std::nullopt;
}

} // namespace

bool is_linear(const UniformHypergraph& h) { return !first_shared_pair(h).has_value(); }

Graph incidence_graph(const UniformHypergraph& h) {
    std::vector<Edge> edges;
    edges.reserve(h.edge_count() * static_cast<std::size_t>(h.uniformity()));
    const Vertex n = h.vertex_count();
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        for (Vertex v : h.hyperedge(i)) edges.push_back({v, n + static_cast<Vertex>(i)});
    }
    return Graph(n + static_cast<Vertex>(h.edge_count()), edges);
}

GirthValue berge_girth(const UniformHypergraph& h) {
    if (first_shared_pair(h)) return GirthValue::finite(2);
    GirthValue g = girth(incidence_graph(h));
    return g.is_infinite() ? g : GirthValue::finite(g.value() / 2);
}

std::optional<std::vector<std::size_t>> shortest_berge_cycle(const UniformHypergraph& h) {
    if (auto pair = first_shared_pair(h)) {
        return std::vector<std::size_t>{pair->first, pair->second};
    }
    auto cycle = shortest_cycle(incidence_graph(h));
    if (!cycle) return std::nullopt;
    std::vector<std::size_t> out;
    for (Vertex x : *cycle) {
        if (x >= h.vertex_count()) out.push_back(static_cast<std::size_t>(x - h.vertex_count()));
    }
    return out;
}

bool is_connected(const UniformHypergraph& h) {
    DisjointSets sets(static_cast<std::size_t>(h.vertex_count()));
    std::vector<char> covered(static_cast<std::size_t>(h.vertex_count()), 0);
    for (const Hyperedge& e : h.hyperedges()) {
        for (Vertex v : e) {
            covered[static_cast<std::size_t>(v)] = 1;
            sets.unite(static_cast<std::size_t>(e[0]), static_cast<std::size_t>(v));
        }
    }
    std::optional<std::size_t> root;
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        if (!covered[static_cast<std::size_t>(v)]) continue;
        std::size_t r = sets.find(static_cast<std::size_t>(v));
        if (root && *root != r) return false;
        root = r;
    }
    return true;
}

std::vector<std::size_t> largest_component(const UniformHypergraph& h) {
    DisjointSets sets(static_cast<std::size_t>(h.vertex_count()));
    for (const Hyperedge& e : h.hyperedges()) {
        for (Vertex v : e) sets.unite(static_cast<std::size_t>(e[0]), static_cast<std::size_t>(v));
    }
    std::map<std::size_t, std::size_t> size;   // root -> hyperedge count
    std::map<std::size_t, std::size_t> first;  // root -> first hyperedge index
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        std::size_t r = sets.find(static_cast<std::size_t>(h.hyperedge(i)[0]));
        ++size[r];
        first.emplace(r, i);
    }
    std::optional<std::size_t> best;
    for (const auto& [root, count] : size) {
        if (!best || count > size[*best] || (count == size[*best] && first[root] < first[*best])) best = root;
    }
    std::vector<std::size_t> out;
    if (!best) return out;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        if (sets.find(static_cast<std::size_t>(h.hyperedge(i)[0])) == *best) out.push_back(i);
    }
    return out;
}

Graph two_shadow(const UniformHypergraph& h) {
    std::vector<Edge> edges;
    std::unordered_map<std::uint64_t, char> seen;
    for (const Hyperedge& e : h.hyperedges()) {
        for (std::size_t x = 0; x < e.size(); ++x) {
            for (std::size_t y = x + 1; y < e.size(); ++y) {
                if (seen.emplace(pair_key(e[x], e[y]), 1).second) edges.push_back({e[x], e[y]});
            }
        }
    }
    return Graph(h.vertex_count(), edges);
}

} // namespace cfree
