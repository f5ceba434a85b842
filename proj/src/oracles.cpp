#include "cfree/oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "cfree/error.hpp"
#include "cfree/graphcore.hpp"
#include "cfree/kernels/max_cut.hpp"

namespace cfree {

namespace {

// Edge sets of the biconnected blocks (bridges are blocks of one edge).
std::vector<std::vector<std::size_t>> edge_blocks(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> blocks;
    int timer = 0;
    std::function<void(Vertex, long)> dfs = [&](Vertex v, long parent_edge) {
        disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
        for (Vertex w : g.neighbors(v)) {
            std::size_t e = *g.edge_index(v, w);
            if (static_cast<long>(e) == parent_edge) continue;
            if (disc[static_cast<std::size_t>(w)] == -1) {
                stack.push_back(e);
                dfs(w, static_cast<long>(e));
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
                if (low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(v)]) {
                    std::vector<std::size_t> block;
                    for (;;) {
                        std::size_t top = stack.back();
                        stack.pop_back();
                        block.push_back(top);
                        if (top == e) break;
                    }
                    std::sort(block.begin(), block.end());
                    blocks.push_back(std::move(block));
                }
            } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(v)]) {
                stack.push_back(e);
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
            }
        }
    };
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (disc[static_cast<std::size_t>(v)] == -1) dfs(v, -1);
    }
    return blocks;
}

enum class Rule { c4free, bipartite_girth };

// Largest C4-free subgraph of K_s, s <= 10.
constexpr int kCliqueC4Free[] = {0, 0, 1, 3, 4, 6, 7, 9, 11, 13, 16};

class BlockSearch {
public:
    BlockSearch(const Graph& g, const std::vector<std::size_t>& block, Rule rule, int girth_gt, BudgetMeter& meter)
        : rule_(rule), girth_gt_(girth_gt), meter_(meter) {
        // local ids
        std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()), -1);
        for (std::size_t e : block) {
            for (Vertex x : {g.edges()[e].u, g.edges()[e].v}) {
                if (local[static_cast<std::size_t>(x)] == -1) {
                    local[static_cast<std::size_t>(x)] = static_cast<Vertex>(n_++);
                }
            }
        }
        std::vector<std::size_t> degree(n_, 0);
        for (std::size_t e : block) {
            ++degree[static_cast<std::size_t>(local[static_cast<std::size_t>(g.edges()[e].u)])];
            ++degree[static_cast<std::size_t>(local[static_cast<std::size_t>(g.edges()[e].v)])];
        }
        std::vector<std::size_t> order(block.size());
        std::iota(order.begin(), order.end(), 0);
        auto dsum = [&](std::size_t i) {
            const Edge& e = g.edges()[block[i]];
            return degree[static_cast<std::size_t>(local[static_cast<std::size_t>(e.u)])] +
                   degree[static_cast<std::size_t>(local[static_cast<std::size_t>(e.v)])];
        };
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return dsum(x) > dsum(y); });
        for (std::size_t i : order) {
            const Edge& e = g.edges()[block[i]];
            global_.push_back(block[i]);
            ends_.push_back({local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)]});
        }
        build_groups();
        adj_.assign(n_ * n_, 0);
        nbrs_.assign(n_, {});
        parent_.resize(n_);
        std::iota(parent_.begin(), parent_.end(), Vertex{0});
        size_.assign(n_, 1);
        parity_.assign(n_, 0);
        dist_.assign(n_, -1);
    }

    std::vector<std::size_t> run(bool heuristic) {
        heuristic_ = heuristic;
        dfs(0);
        std::vector<std::size_t> out;
        for (std::size_t i : best_set_) out.push_back(global_[i]);
        return out;
    }

private:
    // Greedy partition of the block's edges into cliques; each clique caps how
    // many of its edges a feasible subgraph can keep.
    void build_groups() {
        const std::size_t m = ends_.size();
        std::vector<std::vector<long>> edge_at(n_, std::vector<long>(n_, -1));
        for (std::size_t i = 0; i < m; ++i) {
            edge_at[static_cast<std::size_t>(ends_[i].u)][static_cast<std::size_t>(ends_[i].v)] = static_cast<long>(i);
            edge_at[static_cast<std::size_t>(ends_[i].v)][static_cast<std::size_t>(ends_[i].u)] = static_cast<long>(i);
        }
        group_.assign(m, -1);
        for (std::size_t i = 0; i < m; ++i) {
            if (group_[i] != -1) continue;
            std::vector<Vertex> clique{ends_[i].u, ends_[i].v};
            for (Vertex w = 0; w < static_cast<Vertex>(n_); ++w) {
                bool ok = std::find(clique.begin(), clique.end(), w) == clique.end();
                for (Vertex x : clique) {
                    if (!ok) break;
                    long e = edge_at[static_cast<std::size_t>(x)][static_cast<std::size_t>(w)];
                    ok = e != -1 && group_[static_cast<std::size_t>(e)] == -1;
                }
                if (ok) clique.push_back(w);
            }
            const int id = static_cast<int>(cap_.size());
            std::size_t count = 0;
            for (std::size_t x = 0; x < clique.size(); ++x) {
                for (std::size_t y = x + 1; y < clique.size(); ++y) {
                    long e = edge_at[static_cast<std::size_t>(clique[x])][static_cast<std::size_t>(clique[y])];
                    group_[static_cast<std::size_t>(e)] = id;
                    ++count;
                }
            }
            const auto s = static_cast<long>(clique.size());
            long cap = static_cast<long>(count);
            if (rule_ == Rule::c4free) {
                if (s <= 10) cap = kCliqueC4Free[s];
            } else {
                cap = s <= girth_gt_ ? s - 1 : (s * s) / 4;
            }
            cap_.push_back(cap);
            remaining_.push_back(static_cast<long>(count));
            chosen_.push_back(0);
            contribution_.push_back(std::min(static_cast<long>(count), cap));
            bound_ += contribution_.back();
        }
    }

    void touch(int gid) {
        long c = std::max(0L, std::min(remaining_[static_cast<std::size_t>(gid)],
                                       cap_[static_cast<std::size_t>(gid)] - chosen_[static_cast<std::size_t>(gid)]));
        bound_ += c - contribution_[static_cast<std::size_t>(gid)];
        contribution_[static_cast<std::size_t>(gid)] = c;
    }

    bool edge(Vertex x, Vertex y) const { return adj_[static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(y)] != 0; }

    bool closes_c4(Vertex u, Vertex v) const {
        for (Vertex x : nbrs_[static_cast<std::size_t>(u)]) {
            for (Vertex y : nbrs_[static_cast<std::size_t>(v)]) {
                if (x != y && x != v && y != u && edge(x, y)) return true;
            }
        }
        return false;
    }

    std::pair<Vertex, int> find(Vertex x) const {
        int p = 0;
        while (parent_[static_cast<std::size_t>(x)] != x) {
            p ^= parity_[static_cast<std::size_t>(x)];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return {x, p};
    }

    // Is v within distance girth_gt - 1 of u?
    bool near(Vertex u, Vertex v) {
        std::vector<Vertex> touched{u};
        std::deque<Vertex> queue{u};
        dist_[static_cast<std::size_t>(u)] = 0;
        bool hit = false;
        while (!queue.empty() && !hit) {
            Vertex x = queue.front();
            queue.pop_front();
            int d = dist_[static_cast<std::size_t>(x)];
            if (d + 1 > girth_gt_ - 1) continue;
            for (Vertex y : nbrs_[static_cast<std::size_t>(x)]) {
                if (dist_[static_cast<std::size_t>(y)] != -1) continue;
                if (y == v) {
                    hit = true;
                    break;
                }
                dist_[static_cast<std::size_t>(y)] = d + 1;
                touched.push_back(y);
                queue.push_back(y);
            }
        }
        for (Vertex t : touched) dist_[static_cast<std::size_t>(t)] = -1;
        return hit;
    }

    struct Undo {
        Vertex child = -1;  // -1: no union happened
        Vertex root = -1;
    };

    bool feasible(Vertex u, Vertex v) {
        if (rule_ == Rule::c4free) return !closes_c4(u, v);
        auto [ru, pu] = find(u);
        auto [rv, pv] = find(v);
        if (ru != rv) return true;
        if (pu == pv) return false;  // odd cycle
        return !near(u, v);
    }

    Undo link(Vertex u, Vertex v) {
        adj_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)] = 1;
        adj_[static_cast<std::size_t>(v) * n_ + static_cast<std::size_t>(u)] = 1;
        nbrs_[static_cast<std::size_t>(u)].push_back(v);
        nbrs_[static_cast<std::size_t>(v)].push_back(u);
        if (rule_ != Rule::bipartite_girth) return {};
        auto [ru, pu] = find(u);
        auto [rv, pv] = find(v);
        if (ru == rv) return {};
        if (size_[static_cast<std::size_t>(ru)] < size_[static_cast<std::size_t>(rv)]) std::swap(ru, rv);
        parent_[static_cast<std::size_t>(rv)] = ru;
        parity_[static_cast<std::size_t>(rv)] = pu ^ pv ^ 1;
        size_[static_cast<std::size_t>(ru)] += size_[static_cast<std::size_t>(rv)];
        return {rv, ru};
    }

    void unlink(Vertex u, Vertex v, Undo undo) {
        adj_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)] = 0;
        adj_[static_cast<std::size_t>(v) * n_ + static_cast<std::size_t>(u)] = 0;
        nbrs_[static_cast<std::size_t>(u)].pop_back();
        nbrs_[static_cast<std::size_t>(v)].pop_back();
        if (undo.child != -1) {
            parent_[static_cast<std::size_t>(undo.child)] = undo.child;
            parity_[static_cast<std::size_t>(undo.child)] = 0;
            size_[static_cast<std::size_t>(undo.root)] -= size_[static_cast<std::size_t>(undo.child)];
        }
    }

    void dfs(std::size_t i) {
        if (done_) return;
        if (!meter_.charge()) throw Error(ErrorKind::budget_exceeded, "exact subgraph search ran out of budget");
        if (static_cast<long>(current_.size()) + bound_ <= best_) return;
        if (i == ends_.size()) {
            best_ = static_cast<long>(current_.size());
            best_set_ = current_;
            if (heuristic_) done_ = true;
            return;
        }
        const auto [u, v] = ends_[i];
        const int gid = group_[i];
        --remaining_[static_cast<std::size_t>(gid)];
        if (feasible(u, v)) {
            Undo undo = link(u, v);
            ++chosen_[static_cast<std::size_t>(gid)];
            touch(gid);
            current_.push_back(i);
            dfs(i + 1);
            current_.pop_back();
            --chosen_[static_cast<std::size_t>(gid)];
            unlink(u, v, undo);
        }
        touch(gid);
        dfs(i + 1);
        ++remaining_[static_cast<std::size_t>(gid)];
        touch(gid);
    }

    Rule rule_;
    int girth_gt_;
    BudgetMeter& meter_;
    std::size_t n_ = 0;
    std::vector<std::size_t> global_;
    std::vector<Edge> ends_;  // local endpoints, search order
    std::vector<int> group_;
    std::vector<long> cap_, remaining_, chosen_, contribution_;
    long bound_ = 0;
    std::vector<char> adj_;
    std::vector<std::vector<Vertex>> nbrs_;
    std::vector<Vertex> parent_;
    std::vector<std::size_t> size_;
    std::vector<int> parity_;
    std::vector<int> dist_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_set_;
    long best_ = -1;
    bool heuristic_ = false;
    bool done_ = false;
};

SubgraphOptimum solve(const Graph& g, Rule rule, int girth_gt, const SearchBudget& budget, bool heuristic) {
    BudgetMeter meter(budget);
    SubgraphOptimum out;
    for (const auto& block : edge_blocks(g)) {
        BlockSearch search(g, block, rule, girth_gt, meter);
        auto chosen = search.run(heuristic);
        out.edges.insert(out.edges.end(), chosen.begin(), chosen.end());
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.size = out.edges.size();
    out.subgraph = g.edge_subgraph(out.edges);
    out.optimal = !heuristic;
    return out;
}

} // namespace

SubgraphOptimum max_c4free_subgraph(const Graph& g, const SearchBudget& budget, bool heuristic) {
    return solve(g, Rule::c4free, 4, budget, heuristic);
}

BipartiteGirthOptimum max_bipartite_girth_subgraph(const Graph& g, int girth_gt, const SearchBudget& budget,
                                                   bool heuristic) {
    if (girth_gt < 2) throw Error(ErrorKind::invalid_argument, "girth bound must be at least 2");
    BipartiteGirthOptimum out;
    static_cast<SubgraphOptimum&>(out) = solve(g, Rule::bipartite_girth, girth_gt, budget, heuristic);
    out.coloring = *two_coloring(out.subgraph);
    return out;
}

CutOptimum max_cut(const Graph& g, const SearchBudget& budget) {
    const Vertex n = g.vertex_count();
    if (n > kernels::kMaxCutVertices) {
        throw Error(ErrorKind::state_space_too_large, "exact max cut supports at most 63 vertices");
    }
    std::vector<std::uint64_t> adjacency(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        adjacency[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
        adjacency[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    BudgetMeter meter(budget);
    auto r = kernels::parallel::max_cut(adjacency, meter);
    meter.throw_if_exhausted("max cut enumeration ran out of budget");
    CutOptimum out;
    out.size = r.size;
    out.side.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) out.side[static_cast<std::size_t>(v)] = static_cast<int>(r.mask >> v & 1);
    return out;
}

Graph complete_bipartite(int u, int w) {
    if (u < 0 || w < 0) throw Error(ErrorKind::invalid_argument, "class sizes must be non-negative");
    std::vector<Edge> edges;
    for (Vertex a = 0; a < u; ++a) {
        for (Vertex b = u; b < u + w; ++b) edges.push_back({a, b});
    }
    return Graph(u + w, edges);
}

C4FreeBound complete_bipartite_c4free_bound(int u, int w) {
    if (u < 1 || w < 1) throw Error(ErrorKind::invalid_argument, "class sizes must be positive");
    const auto pairs = static_cast<std::size_t>(u) * static_cast<std::size_t>(u - 1) / 2;
    C4FreeBound out{static_cast<std::size_t>(w) + pairs, std::nullopt};
    if (static_cast<std::size_t>(w) < pairs) return out;
    std::vector<Edge> edges;
    Vertex b = u;
    for (Vertex x = 0; x < u; ++x) {
        for (Vertex y = x + 1; y < u; ++y) {
            edges.push_back({x, b});
            edges.push_back({y, b});
            ++b;
        }
    }
    for (; b < u + w; ++b) edges.push_back({0, b});
    out.witness = Graph(u + w, edges);
    return out;
}

bool certify_c2k_free(const Graph& g, int k, const SearchBudget& budget) {
    if (k < 2) throw Error(ErrorKind::invalid_argument, "need k >= 2");
    return !has_cycle_of_length(g, 2 * k, budget);
}

std::vector<std::size_t> count_berge_cycles(const UniformHypergraph& h, int max_len, const SearchBudget& budget) {
    if (max_len < 2) throw Error(ErrorKind::invalid_argument, "Berge-cycles have length at least 2");
    BudgetMeter meter(budget);
    const auto incidence = h.incidence();
    const std::size_t m = h.edge_count();
    std::vector<std::size_t> directed(static_cast<std::size_t>(max_len) + 1, 0);
    std::vector<char> edge_used(m, 0);
    std::vector<char> vertex_used(static_cast<std::size_t>(h.vertex_count()), 0);

    // Walk e_1 v_1 e_2 v_2 ... with e_1 the smallest hyperedge index.
    std::function<void(std::size_t, std::size_t, int)> walk = [&](std::size_t first, std::size_t cur, int len) {
        if (!meter.charge()) throw Error(ErrorKind::budget_exceeded, "Berge-cycle count ran out of budget");
        for (Vertex v : h.hyperedge(cur)) {
            if (vertex_used[static_cast<std::size_t>(v)]) continue;
            vertex_used[static_cast<std::size_t>(v)] = 1;
            // close the cycle back to e_1
            if (len >= 2 && cur != first) {
                const auto& e1 = h.hyperedge(first);
                if (std::find(e1.begin(), e1.end(), v) != e1.end()) ++directed[static_cast<std::size_t>(len)];
            }
            if (len < max_len) {
                for (std::size_t next : incidence[static_cast<std::size_t>(v)]) {
                    if (next <= first || edge_used[next]) continue;
                    edge_used[next] = 1;
                    walk(first, next, len + 1);
                    edge_used[next] = 0;
                }
            }
            vertex_used[static_cast<std::size_t>(v)] = 0;
        }
    };
    for (std::size_t first = 0; first < m; ++first) {
        edge_used[first] = 1;
        for (Vertex v1 : h.hyperedge(first)) {
            vertex_used[static_cast<std::size_t>(v1)] = 1;
            for (std::size_t next : incidence[static_cast<std::size_t>(v1)]) {
                if (next <= first) continue;
                edge_used[next] = 1;
                walk(first, next, 2);
                edge_used[next] = 0;
            }
            vertex_used[static_cast<std::size_t>(v1)] = 0;
        }
        edge_used[first] = 0;
    }
    std::vector<std::size_t> out(directed.size(), 0);
    for (std::size_t L = 2; L < directed.size(); ++L) out[L] = directed[L] / 2;
    return out;
}

} // namespace cfree
