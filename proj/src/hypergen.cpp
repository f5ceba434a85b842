#include "cfree/hypergen.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>
#include <unordered_set>

#include "cfree/error.hpp"
#include "cfree/graphcore.hpp"

namespace cfree {

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t a) {
    if (a > n) return 0;
    a = std::min(a, n - a);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= a; ++i) {
        result = result * (n - a + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(result);
}

void GenConfig::validate() const {
    if (a < 2) throw Error(ErrorKind::config_invalid, "uniformity must be at least 2");
    if (n < a) throw Error(ErrorKind::config_invalid, "need at least a vertices");
    if (k < 2) throw Error(ErrorKind::config_invalid, "girth threshold k must be at least 2");
    if (m < 1) throw Error(ErrorKind::config_invalid, "need at least one hyperedge");
    std::uint64_t total = binomial_saturating(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(a));
    if (m > total / 2) {
        throw Error(ErrorKind::density_too_high,
                    "m = " + std::to_string(m) + " exceeds C(n,a)/2 = " + std::to_string(total / 2));
    }
}

namespace {

Hyperedge draw_sequence(SplitMix64& rng, int a, Vertex n) {
    Hyperedge seq;
    seq.reserve(static_cast<std::size_t>(a));
    while (static_cast<int>(seq.size()) < a) {
        auto v = static_cast<Vertex>(rng.uniform(static_cast<std::uint64_t>(n)));
        if (std::find(seq.begin(), seq.end(), v) == seq.end()) seq.push_back(v);
    }
    return seq;
}

Hyperedge sorted_copy(Hyperedge e) {
    std::sort(e.begin(), e.end());
    return e;
}

std::vector<Hyperedge> draw_distinct(SplitMix64& rng, const GenConfig& cfg) {
    std::set<Hyperedge> seen;
    std::vector<Hyperedge> out;
    out.reserve(cfg.m);
    while (out.size() < cfg.m) {
        Hyperedge seq = draw_sequence(rng, cfg.a, cfg.n);
        if (seen.insert(sorted_copy(seq)).second) out.push_back(std::move(seq));
    }
    return out;
}

// Incremental Berge-girth guard: adding hyperedge e keeps girth > k iff no
// two of its vertices are joined by an incidence path of length <= 2(k-1).
class GirthGuard {
public:
    GirthGuard(Vertex n, int k) : k_(k), vertex_edges_(static_cast<std::size_t>(n)) {}

    void add(const Hyperedge& e) {
        std::size_t id = edges_.size();
        edges_.push_back(e);
        for (Vertex v : e) vertex_edges_[static_cast<std::size_t>(v)].push_back(id);
    }

    bool keeps_girth(const Hyperedge& e) const {
        const int max_steps = 2 * (k_ - 1);  // incidence-graph edges
        std::vector<char> target(vertex_edges_.size(), 0);
        for (Vertex v : e) target[static_cast<std::size_t>(v)] = 1;
        for (Vertex start : e) {
            std::vector<int> vdist(vertex_edges_.size(), -1);
            std::vector<int> edist(edges_.size(), -1);
            std::deque<std::pair<bool, std::size_t>> queue;  // (is_edge, id)
            vdist[static_cast<std::size_t>(start)] = 0;
            queue.push_back({false, static_cast<std::size_t>(start)});
            while (!queue.empty()) {
                auto [is_edge, id] = queue.front();
                queue.pop_front();
                if (is_edge) {
                    int d = edist[id];
                    if (d + 1 > max_steps) continue;
                    for (Vertex w : edges_[id]) {
                        auto& dw = vdist[static_cast<std::size_t>(w)];
                        if (dw != -1) continue;
                        dw = d + 1;
                        if (target[static_cast<std::size_t>(w)]) return false;
                        queue.push_back({false, static_cast<std::size_t>(w)});
                    }
                } else {
                    int d = vdist[id];
                    if (d + 1 > max_steps) continue;
                    for (std::size_t f : vertex_edges_[id]) {
                        if (edist[f] != -1) continue;
                        edist[f] = d + 1;
                        queue.push_back({true, f});
                    }
                }
            }
        }
        return true;
    }

private:
    int k_;
    std::vector<std::vector<std::size_t>> vertex_edges_;
    std::vector<Hyperedge> edges_;
};

std::vector<std::size_t> repair_indices(const UniformHypergraph& h, int k, std::vector<std::size_t>& deleted) {
    std::vector<std::size_t> alive(h.edge_count());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
    UniformHypergraph current = h;
    for (;;) {
        auto cycle = shortest_berge_cycle(current);
        if (!cycle || static_cast<int>(cycle->size()) > k) break;
        std::size_t victim = *std::min_element(cycle->begin(), cycle->end());
        deleted.push_back(alive[victim]);
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(victim));
        std::vector<bool> drop(current.edge_count(), false);
        drop[victim] = true;
        current = current.without(drop);
    }
    return alive;
}

// Tops `edges` up to cfg.m with girth-safe draws from rng.
void top_up(SplitMix64& rng, const GenConfig& cfg, std::vector<Hyperedge>& edges, std::size_t attempts) {
    GirthGuard guard(cfg.n, cfg.k);
    std::set<Hyperedge> seen;
    for (const auto& e : edges) {
        guard.add(e);
        seen.insert(sorted_copy(e));
    }
    for (std::size_t t = 0; t < attempts && edges.size() < cfg.m; ++t) {
        Hyperedge seq = draw_sequence(rng, cfg.a, cfg.n);
        Hyperedge key = sorted_copy(seq);
        if (seen.count(key) || !guard.keeps_girth(seq)) continue;
        guard.add(seq);
        seen.insert(std::move(key));
        edges.push_back(std::move(seq));
    }
}

} // namespace

UniformHypergraph random_hypergraph(const GenConfig& cfg) {
    cfg.validate();
    SplitMix64 rng(cfg.seed);
    return UniformHypergraph(cfg.a, cfg.n, draw_distinct(rng, cfg));
}

OrientedHypergraph random_oriented(const GenConfig& cfg) {
    cfg.validate();
    SplitMix64 rng(cfg.seed);
    return OrientedHypergraph(cfg.a, cfg.n, draw_distinct(rng, cfg));
}

RepairResult repair_girth_logged(const UniformHypergraph& h, int k) {
    if (k < 2) throw Error(ErrorKind::invalid_argument, "girth threshold k must be at least 2");
    std::vector<std::size_t> deleted;
    auto alive = repair_indices(h, k, deleted);
    return {h.select(alive), std::move(deleted)};
}

UniformHypergraph repair_girth(const UniformHypergraph& h, int k) { return repair_girth_logged(h, k).hypergraph; }

OrientedHypergraph repair_girth(const OrientedHypergraph& o, int k) {
    if (k < 2) throw Error(ErrorKind::invalid_argument, "girth threshold k must be at least 2");
    std::vector<std::size_t> deleted;
    auto alive = repair_indices(o.underlying(), k, deleted);
    return o.select(alive);
}

UniformHypergraph random_high_girth_hypergraph(const GenConfig& cfg, std::size_t attempts) {
    return random_high_girth_oriented(cfg, attempts).underlying();
}

OrientedHypergraph random_high_girth_oriented(const GenConfig& cfg, std::size_t attempts) {
    cfg.validate();
    SplitMix64 rng(cfg.seed);
    OrientedHypergraph drawn(cfg.a, cfg.n, draw_distinct(rng, cfg));
    OrientedHypergraph repaired = repair_girth(drawn, cfg.k);
    std::vector<Hyperedge> edges = repaired.sequences();
    top_up(rng, cfg, edges, attempts == 0 ? 20 * cfg.m : attempts);
    return OrientedHypergraph(cfg.a, cfg.n, std::move(edges));
}

std::size_t hoeffding_sample_size(double eps, double delta) {
    if (!(eps > 0.0 && eps <= 1.0)) throw Error(ErrorKind::invalid_argument, "eps must lie in (0, 1]");
    if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorKind::invalid_argument, "delta must lie in (0, 1)");
    auto holds = [&](double m) { return 2.0 * std::exp(-2.0 * eps * eps * m) <= delta; };
    auto m = static_cast<std::size_t>(std::ceil(std::log(2.0 / delta) / (2.0 * eps * eps)));
    if (m == 0) m = 1;
    // guard the ceiling against rounding in either direction
    while (m > 1 && holds(static_cast<double>(m - 1))) --m;
    while (!holds(static_cast<double>(m))) ++m;
    return m;
}

// ---------------------------------------------------------------------------

namespace {

class GrowingBipartite {
public:
    GrowingBipartite(Vertex per_side, int girth) : per_side_(per_side), girth_(girth),
        adj_(static_cast<std::size_t>(2 * per_side)), dist_(adj_.size(), -1) {}

    Vertex size() const { return 2 * per_side_; }
    std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
    bool side_a(Vertex v) const { return v < per_side_; }

    /// Vertices of the other side within distance girth - 2 of v, marked in
    /// dist_ (cleared by the next call).
    void ball(Vertex v) {
        for (Vertex t : touched_) dist_[static_cast<std::size_t>(t)] = -1;
        touched_.clear();
        std::deque<Vertex> queue{v};
        dist_[static_cast<std::size_t>(v)] = 0;
        touched_.push_back(v);
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            int dx = dist_[static_cast<std::size_t>(x)];
            if (dx >= girth_ - 2) continue;
            for (Vertex y : adj_[static_cast<std::size_t>(x)]) {
                if (dist_[static_cast<std::size_t>(y)] != -1) continue;
                dist_[static_cast<std::size_t>(y)] = dx + 1;
                touched_.push_back(y);
                queue.push_back(y);
            }
        }
    }
    bool in_ball(Vertex w) const { return dist_[static_cast<std::size_t>(w)] != -1; }

    void add(Vertex u, Vertex v) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        edges_.push_back(Edge::normalized(u, v));
    }

    const std::vector<Edge>& edges() const { return edges_; }

private:
    Vertex per_side_;
    int girth_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<int> dist_;
    std::vector<Vertex> touched_;
    std::vector<Edge> edges_;
};

std::optional<std::vector<Edge>> attempt_bipartite(Vertex per_side, int girth, int min_degree, bool densify,
                                                   SplitMix64& rng) {
    GrowingBipartite g(per_side, girth);
    const auto target = static_cast<std::size_t>(min_degree);
    for (;;) {
        std::size_t low = std::numeric_limits<std::size_t>::max();
        std::vector<Vertex> lowest;
        for (Vertex v = 0; v < g.size(); ++v) {
            std::size_t d = g.degree(v);
            if (d >= target) continue;
            if (d < low) {
                low = d;
                lowest.clear();
            }
            if (d == low) lowest.push_back(v);
        }
        if (lowest.empty()) break;
        Vertex v = lowest[rng.uniform(lowest.size())];
        g.ball(v);
        std::size_t best = std::numeric_limits<std::size_t>::max();
        std::vector<Vertex> partners;
        Vertex lo = g.side_a(v) ? per_side : 0;
        for (Vertex w = lo; w < lo + per_side; ++w) {
            if (g.in_ball(w)) continue;
            std::size_t d = g.degree(w);
            if (d < best) {
                best = d;
                partners.clear();
            }
            if (d == best) partners.push_back(w);
        }
        if (partners.empty()) return std::nullopt;
        g.add(v, partners[rng.uniform(partners.size())]);
    }
    if (densify) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        pairs.reserve(static_cast<std::size_t>(per_side) * static_cast<std::size_t>(per_side));
        for (Vertex u = 0; u < per_side; ++u) {
            for (Vertex w = per_side; w < 2 * per_side; ++w) pairs.push_back({u, w});
        }
        rng.shuffle(std::span(pairs));
        for (auto [u, w] : pairs) {
            g.ball(u);
            if (!g.in_ball(w)) g.add(u, w);
        }
    }
    std::vector<Edge> edges = g.edges();
    // Tree edges between components never close a cycle.
    Graph current(g.size(), edges);
    auto comp = connected_components(current);
    int count = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<Vertex> a_rep(static_cast<std::size_t>(count), -1);
    std::vector<Vertex> b_rep(static_cast<std::size_t>(count), -1);
    for (Vertex v = 0; v < g.size(); ++v) {
        auto& rep = g.side_a(v) ? a_rep : b_rep;
        if (rep[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] == -1) {
            rep[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] = v;
        }
    }
    for (int c = 1; c < count; ++c) {
        Vertex b = b_rep[static_cast<std::size_t>(c)];
        if (a_rep[0] == -1 || b == -1) return std::nullopt;
        edges.push_back(Edge::normalized(a_rep[0], b));
    }
    return edges;
}

} // namespace

BipartiteGraph high_girth_bipartite(Vertex n_per_side, int target_girth, int min_degree, std::uint64_t seed,
                                    bool densify, int retries) {
    if (n_per_side < 1) throw Error(ErrorKind::invalid_argument, "need at least one vertex per side");
    if (target_girth < 4) throw Error(ErrorKind::invalid_argument, "target girth must be at least 4");
    if (min_degree < 1) throw Error(ErrorKind::invalid_argument, "minimum degree must be at least 1");
    if (min_degree > n_per_side) {
        throw Error(ErrorKind::infeasible, "minimum degree exceeds the class size");
    }
    for (int t = 0; t < retries; ++t) {
        SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        auto edges = attempt_bipartite(n_per_side, target_girth, min_degree, densify, rng);
        if (!edges) continue;
        Graph g(2 * n_per_side, *edges);
        std::vector<Side> side(static_cast<std::size_t>(2 * n_per_side), Side::a);
        for (Vertex v = n_per_side; v < 2 * n_per_side; ++v) side[static_cast<std::size_t>(v)] = Side::b;
        return BipartiteGraph(std::move(g), std::move(side));
    }
    throw Error(ErrorKind::infeasible, "could not reach the minimum degree within the retry budget");
}

namespace {

BipartiteGraph split_classes(Vertex n_per_side, const std::vector<Edge>& edges) {
    std::vector<Side> side(static_cast<std::size_t>(2 * n_per_side), Side::a);
    for (Vertex v = n_per_side; v < 2 * n_per_side; ++v) side[static_cast<std::size_t>(v)] = Side::b;
    return BipartiteGraph(Graph(2 * n_per_side, edges), std::move(side));
}

std::vector<Edge> all_pairs(Vertex n_per_side) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n_per_side; ++u) {
        for (Vertex w = n_per_side; w < 2 * n_per_side; ++w) pairs.push_back({u, w});
    }
    return pairs;
}

// Is there a path with exactly `steps` edges from u to v through distinct vertices?
bool has_path(const std::vector<std::vector<Vertex>>& adj, Vertex u, Vertex v, int steps, std::vector<char>& used) {
    if (steps == 0) return u == v;
    if (u == v) return false;
    used[static_cast<std::size_t>(u)] = 1;
    bool found = false;
    for (Vertex w : adj[static_cast<std::size_t>(u)]) {
        if (used[static_cast<std::size_t>(w)]) continue;
        if (has_path(adj, w, v, steps - 1, used)) {
            found = true;
            break;
        }
    }
    used[static_cast<std::size_t>(u)] = 0;
    return found;
}

} // namespace

BipartiteGraph random_bipartite(Vertex n_per_side, std::size_t m, std::uint64_t seed) {
    if (n_per_side < 1) throw Error(ErrorKind::invalid_argument, "need at least one vertex per side");
    auto pairs = all_pairs(n_per_side);
    if (m > pairs.size()) throw Error(ErrorKind::density_too_high, "more edges than vertex pairs");
    SplitMix64 rng(seed);
    rng.shuffle(std::span(pairs));
    pairs.resize(m);
    return split_classes(n_per_side, pairs);
}

BipartiteGraph random_maximal_c2k_free_bipartite(Vertex n_per_side, int k, std::uint64_t seed) {
    if (n_per_side < 1) throw Error(ErrorKind::invalid_argument, "need at least one vertex per side");
    if (k < 2) throw Error(ErrorKind::invalid_argument, "need k >= 2");
    auto pairs = all_pairs(n_per_side);
    SplitMix64 rng(seed);
    rng.shuffle(std::span(pairs));
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(2 * n_per_side));
    std::vector<char> used(adj.size(), 0);
    std::vector<Edge> kept;
    for (const Edge& e : pairs) {
        // uv closes a C_{2k} iff a path of 2k - 1 edges joins u and v
        if (has_path(adj, e.u, e.v, 2 * k - 1, used)) continue;
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
        kept.push_back(e);
    }
    return split_classes(n_per_side, kept);
}

} // namespace cfree
