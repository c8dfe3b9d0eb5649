#pragma once

// Unit-capacity max-flow / min-cut on the network DAG. Every cut returned is
// the primary one: the edges leaving the residual-reachable set of the
// origin side after a maximum flow, i.e. the minimum cut closest to the
// origin.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "snfc/error.hpp"
#include "snfc/network.hpp"

namespace snfc {

namespace detail {

class FlowGraph {
public:
    static constexpr std::int64_t kInf = std::int64_t(1) << 40;

    explicit FlowGraph(std::size_t n) : adj_(n) {}

    std::size_t add_node() {
        adj_.emplace_back();
        return adj_.size() - 1;
    }

    void add_arc(std::size_t u, std::size_t v, std::int64_t cap, long tag) {
        adj_[u].push_back({v, cap, adj_[v].size(), tag});
        adj_[v].push_back({u, 0, adj_[u].size() - 1, -1});
    }

    /// BFS augmenting paths; capped at kInf.
    std::int64_t max_flow(std::size_t s, std::size_t t) {
        std::int64_t flow = 0;
        const std::size_t n = adj_.size();
        while (flow < kInf) {
            std::vector<std::pair<std::size_t, std::size_t>> parent(n, {n, 0});
            parent[s] = {s, 0};
            std::queue<std::size_t> bfs;
            bfs.push(s);
            while (!bfs.empty() && parent[t].first == n) {
                const std::size_t u = bfs.front();
                bfs.pop();
                for (std::size_t k = 0; k < adj_[u].size(); ++k) {
                    const Arc& a = adj_[u][k];
                    if (a.cap > 0 && parent[a.to].first == n) {
                        parent[a.to] = {u, k};
                        bfs.push(a.to);
                    }
                }
            }
            if (parent[t].first == n) break;
            std::int64_t push = kInf;
            for (std::size_t v = t; v != s; v = parent[v].first)
                push = std::min(push, adj_[parent[v].first][parent[v].second].cap);
            for (std::size_t v = t; v != s; v = parent[v].first) {
                Arc& a = adj_[parent[v].first][parent[v].second];
                a.cap -= push;
                adj_[v][a.rev].cap += push;
            }
            flow += push;
        }
        return flow;
    }

    std::vector<bool> residual_reachable(std::size_t s) const {
        std::vector<bool> seen(adj_.size(), false);
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (const Arc& a : adj_[u])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = true;
                    stack.push_back(a.to);
                }
        }
        return seen;
    }

    /// Tags of forward arcs leaving the `side` set.
    std::vector<long> crossing_tags(const std::vector<bool>& side) const {
        std::vector<long> tags;
        for (std::size_t u = 0; u < adj_.size(); ++u) {
            if (!side[u]) continue;
            for (const Arc& a : adj_[u])
                if (a.tag >= 0 && !side[a.to]) tags.push_back(a.tag);
        }
        return tags;
    }

private:
    struct Arc {
        std::size_t to;
        std::int64_t cap;
        std::size_t rev;
        long tag;
    };
    std::vector<std::vector<Arc>> adj_;
};

struct CutQuery {
    const Graph* graph = nullptr;
    std::vector<std::size_t> from;        // origin node set U
    std::optional<std::size_t> to_node;   // target node, or
    EdgeSet to_edges;                     // target edge set (subdivided)
    std::vector<bool> removed;            // edges deleted from the graph
    std::vector<bool> infinite;           // edges that may not be cut
};

struct RawCut {
    bool finite = true;
    std::size_t capacity = 0;
    EdgeSet cut;
    std::vector<bool> origin_side;  // over graph nodes
};

inline RawCut solve_cut(const CutQuery& q) {
    const Graph& g = *q.graph;
    const std::size_t nv = g.num_nodes();
    FlowGraph fg(nv);
    std::vector<bool> in_target(g.num_edges(), false);
    for (std::size_t e : q.to_edges) in_target[e] = true;
    const std::size_t super_source = fg.add_node();
    const std::size_t super_sink = fg.add_node();
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        if (!q.removed.empty() && q.removed[e]) continue;
        const std::int64_t cap = (!q.infinite.empty() && q.infinite[e]) ? FlowGraph::kInf : 1;
        const auto& ed = g.edges[e];
        if (in_target[e]) {
            // e -> e1 (tail -> v_e), e2 (v_e -> head); v_e feeds the super sink.
            const std::size_t ve = fg.add_node();
            fg.add_arc(ed.tail, ve, cap, static_cast<long>(e));
            fg.add_arc(ve, ed.head, cap, static_cast<long>(e));
            fg.add_arc(ve, super_sink, FlowGraph::kInf, -1);
        } else {
            fg.add_arc(ed.tail, ed.head, cap, static_cast<long>(e));
        }
    }
    for (std::size_t u : q.from) fg.add_arc(super_source, u, FlowGraph::kInf, -1);
    if (q.to_node) fg.add_arc(*q.to_node, super_sink, FlowGraph::kInf, -1);

    RawCut out;
    const std::int64_t flow = fg.max_flow(super_source, super_sink);
    if (flow >= FlowGraph::kInf) {
        out.finite = false;
        return out;
    }
    const auto side = fg.residual_reachable(super_source);
    for (long t : fg.crossing_tags(side)) out.cut.push_back(static_cast<std::size_t>(t));
    std::sort(out.cut.begin(), out.cut.end());
    out.cut.erase(std::unique(out.cut.begin(), out.cut.end()), out.cut.end());
    out.capacity = static_cast<std::size_t>(flow);
    out.origin_side.assign(side.begin(), side.begin() + static_cast<std::ptrdiff_t>(nv));
    return out;
}

}  // namespace detail

struct CutReport {
    std::size_t capacity = 0;
    EdgeSet cut_edges;
    std::vector<std::string> source_side;
};

namespace detail {

inline CutReport to_report(const Graph& g, const RawCut& raw) {
    CutReport r;
    r.capacity = raw.capacity;
    r.cut_edges = raw.cut;
    for (std::size_t v = 0; v < g.num_nodes(); ++v)
        if (raw.origin_side[v]) r.source_side.push_back(g.nodes[v]);
    return r;
}

inline void check_nodes(const Network& n, const std::vector<std::size_t>& nodes) {
    for (std::size_t v : nodes)
        if (v >= n.num_nodes()) throw Error(ErrorCode::UnknownNode, "node index " + std::to_string(v));
}

}  // namespace detail

/// Primary minimum cut separating `target` from the node set u.
inline CutReport min_cut(const Network& n, const std::vector<std::size_t>& u, std::size_t target) {
    detail::check_nodes(n, u);
    detail::check_nodes(n, {target});
    if (std::find(u.begin(), u.end(), target) != u.end())
        throw Error(ErrorCode::TargetInU, "target '" + n.nodes()[target] + "' is in the origin set");
    detail::CutQuery q;
    q.graph = &n.graph();
    q.from = u;
    q.to_node = target;
    return detail::to_report(n.graph(), detail::solve_cut(q));
}

/// Primary minimum cut separating the edge set w from the node set u, via
/// edge subdivision. Subdivided halves map back to the original edge.
inline CutReport min_cut_edge_target(const Network& n, const std::vector<std::size_t>& u, const EdgeSet& w) {
    detail::check_nodes(n, u);
    n.check_edges(w);
    if (w.empty()) throw Error(ErrorCode::EmptyTarget, "edge target is empty");
    detail::CutQuery q;
    q.graph = &n.graph();
    q.from = u;
    q.to_edges = w;
    return detail::to_report(n.graph(), detail::solve_cut(q));
}

inline EdgeSet primary_min_cut(const Network& n, const std::vector<std::size_t>& u, const EdgeSet& w) {
    return min_cut_edge_target(n, u, w).cut_edges;
}

inline EdgeSet primary_min_cut(const Network& n, const std::vector<std::size_t>& u, std::size_t target) {
    return min_cut(n, u, target).cut_edges;
}

/// Node indices of the given sources.
inline std::vector<std::size_t> source_nodes(const Network& n, const SourceSet& s) {
    std::vector<std::size_t> out;
    for (std::size_t i : s) out.push_back(n.source(i));
    return out;
}

/// W is primary iff it equals the primary minimum cut separating W from D_W.
inline bool is_primary(const Network& n, const EdgeSet& w) {
    n.check_edges(w);
    if (w.empty()) throw Error(ErrorCode::EmptyTarget, "primary test needs a nonempty edge set");
    const auto rs = reach_sets(n, w);
    if (rs.d.empty()) return false;
    return primary_min_cut(n, source_nodes(n, rs.d), w) == w;
}

/// G with the edges of w deleted; edge ids preserved, no validation.
inline Graph residual(const Network& n, const EdgeSet& w) {
    n.check_edges(w);
    Graph g;
    g.nodes = n.nodes();
    std::vector<bool> drop(n.num_edges(), false);
    for (std::size_t e : w) drop[e] = true;
    for (std::size_t e = 0; e < n.num_edges(); ++e)
        if (!drop[e]) g.edges.push_back(n.edge(e));
    return g;
}

/// min over sources of mincut(sigma_i, rho).
inline std::size_t c_min(const Network& n) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < n.num_sources(); ++i)
        best = std::min(best, min_cut(n, {n.source(i)}, n.sink()).capacity);
    return best;
}

struct CminBar {
    std::size_t value = 0;
    EdgeSet witness;
    SourceSet sources;  // D_C = I_C of the witness
};

/// Smallest cut set C with D_C = I_C. For each nonempty T of sources, edges
/// reachable from S \ T are made uncuttable and the min cut from T to the
/// sink is taken.
inline CminBar c_min_bar_report(const Network& n) {
    const std::size_t s = n.num_sources();
    if (s >= 24) throw Error(ErrorCode::TooLarge, "too many sources for the subset sweep");
    std::optional<CminBar> best;
    for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
        detail::CutQuery q;
        q.graph = &n.graph();
        q.to_node = n.sink();
        q.infinite.assign(n.num_edges(), false);
        SourceSet t;
        for (std::size_t i = 0; i < s; ++i) {
            if (mask & (1u << i)) {
                q.from.push_back(n.source(i));
                t.push_back(i);
            } else {
                for (std::size_t e = 0; e < n.num_edges(); ++e)
                    if (n.source_reaches_edge(i, e)) q.infinite[e] = true;
            }
        }
        const auto raw = detail::solve_cut(q);
        if (!raw.finite) continue;
        if (!best || raw.capacity < best->value) best = CminBar{raw.capacity, raw.cut, t};
    }
    if (!best) throw Error(ErrorCode::NoFeasibleCut, "no cut set with D_C = I_C");
    return *best;
}

inline std::size_t c_min_bar(const Network& n) { return c_min_bar_report(n).value; }

}  // namespace snfc
