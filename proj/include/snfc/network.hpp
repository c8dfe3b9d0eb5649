#pragma once

// The DAG network (G, S, rho): parsing, validation, the fixed topological
// edge order, source reachability, reversal and linear-to-sum reduction.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "snfc/error.hpp"
#include "snfc/gf.hpp"

namespace snfc {

struct Edge {
    std::string id;
    std::size_t tail = 0;
    std::size_t head = 0;
};

/// Edge indices, ascending; index = position in the input edge list.
using EdgeSet = std::vector<std::size_t>;
/// Source ordinals (0-based position in the source list), ascending.
using SourceSet = std::vector<std::size_t>;

/// A plain directed multigraph. Used for residual and reversed graphs,
/// which need not satisfy the network rules.
struct Graph {
    std::vector<std::string> nodes;
    std::vector<Edge> edges;

    std::size_t num_nodes() const { return nodes.size(); }
    std::size_t num_edges() const { return edges.size(); }

    /// Nodes reachable from `from` (inclusive) using edges not masked out.
    std::vector<bool> reachable(const std::vector<std::size_t>& from,
                                const std::vector<bool>& removed = {}) const {
        std::vector<std::vector<std::size_t>> out(nodes.size());
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (removed.empty() || !removed[e]) out[edges[e].tail].push_back(e);
        std::vector<bool> seen(nodes.size(), false);
        std::vector<std::size_t> stack;
        for (std::size_t v : from)
            if (!seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t e : out[v]) {
                const std::size_t h = edges[e].head;
                if (!seen[h]) {
                    seen[h] = true;
                    stack.push_back(h);
                }
            }
        }
        return seen;
    }
};

struct ReversedNetwork;

class Network {
public:
    struct EdgeSpec {
        std::string id, tail, head;
    };

    /// Builds and validates a network. Edge list order breaks ties in the
    /// topological edge order.
    static Network build(std::vector<std::string> nodes, const std::vector<std::string>& sources,
                         const std::string& sink, const std::vector<EdgeSpec>& edges) {
        Network n;
        n.g_.nodes = std::move(nodes);
        for (std::size_t i = 0; i < n.g_.nodes.size(); ++i) {
            if (!n.node_ix_.emplace(n.g_.nodes[i], i).second)
                throw Error(ErrorCode::MalformedInput, "duplicate node '" + n.g_.nodes[i] + "'");
        }
        auto lookup = [&](const std::string& name, const char* what) {
            auto it = n.node_ix_.find(name);
            if (it == n.node_ix_.end())
                throw Error(ErrorCode::MalformedInput, std::string(what) + " refers to unknown node '" + name + "'");
            return it->second;
        };
        if (sources.empty()) throw Error(ErrorCode::MalformedInput, "no source nodes");
        for (const auto& s : sources) {
            const std::size_t v = lookup(s, "source");
            if (std::find(n.sources_.begin(), n.sources_.end(), v) != n.sources_.end())
                throw Error(ErrorCode::MalformedInput, "duplicate source '" + s + "'");
            n.sources_.push_back(v);
        }
        n.sink_ = lookup(sink, "sink");
        if (std::find(n.sources_.begin(), n.sources_.end(), n.sink_) != n.sources_.end())
            throw Error(ErrorCode::MalformedInput, "sink '" + sink + "' is also a source");
        for (const auto& e : edges) {
            if (e.id.empty()) throw Error(ErrorCode::MalformedInput, "edge with empty id");
            if (!n.edge_ix_.emplace(e.id, n.g_.edges.size()).second)
                throw Error(ErrorCode::MalformedInput, "duplicate edge id '" + e.id + "'");
            n.g_.edges.push_back({e.id, lookup(e.tail, "edge tail"), lookup(e.head, "edge head")});
        }
        n.validate_and_index();
        return n;
    }

    /// Parses the network JSON format:
    /// {"nodes":[...], "sources":[...], "sink":"rho", "edges":[{"id","tail","head"}, ...]}
    static Network parse(std::string_view text) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& ex) {
            throw Error(ErrorCode::MalformedInput, std::string("network JSON: ") + ex.what());
        }
        return from_json(j);
    }

    static Network from_json(const nlohmann::json& j) {
        try {
            std::vector<EdgeSpec> edges;
            for (const auto& e : j.at("edges"))
                edges.push_back({e.at("id").get<std::string>(), e.at("tail").get<std::string>(),
                                 e.at("head").get<std::string>()});
            return build(j.at("nodes").get<std::vector<std::string>>(),
                         j.at("sources").get<std::vector<std::string>>(), j.at("sink").get<std::string>(), edges);
        } catch (const nlohmann::json::exception& ex) {
            throw Error(ErrorCode::MalformedInput, std::string("network JSON: ") + ex.what());
        }
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["nodes"] = g_.nodes;
        std::vector<std::string> src;
        for (std::size_t v : sources_) src.push_back(g_.nodes[v]);
        j["sources"] = src;
        j["sink"] = g_.nodes[sink_];
        j["edges"] = nlohmann::json::array();
        for (const auto& e : g_.edges)
            j["edges"].push_back({{"id", e.id}, {"tail", g_.nodes[e.tail]}, {"head", g_.nodes[e.head]}});
        return j;
    }

    std::string to_dot() const {
        std::ostringstream os;
        os << "digraph network {\n  rankdir=TB;\n";
        for (std::size_t v = 0; v < g_.nodes.size(); ++v) {
            os << "  \"" << g_.nodes[v] << "\"";
            if (v == sink_) os << " [shape=doublecircle]";
            else if (source_ordinal(v)) os << " [shape=box]";
            os << ";\n";
        }
        for (const auto& e : g_.edges)
            os << "  \"" << g_.nodes[e.tail] << "\" -> \"" << g_.nodes[e.head] << "\" [label=\"" << e.id << "\"];\n";
        os << "}\n";
        return os.str();
    }

    const Graph& graph() const { return g_; }
    const std::vector<std::string>& nodes() const { return g_.nodes; }
    const std::vector<Edge>& edges() const { return g_.edges; }
    const Edge& edge(std::size_t e) const { return g_.edges[e]; }
    std::size_t num_nodes() const { return g_.nodes.size(); }
    std::size_t num_edges() const { return g_.edges.size(); }
    std::size_t num_sources() const { return sources_.size(); }
    /// Node index of the i-th source.
    std::size_t source(std::size_t i) const { return sources_[i]; }
    const std::vector<std::size_t>& sources() const { return sources_; }
    std::size_t sink() const { return sink_; }

    /// Edge indices in the order: source out-edges grouped by source, then
    /// the rest topologically, ties by input order.
    const std::vector<std::size_t>& order() const { return order_; }
    std::size_t position(std::size_t e) const { return pos_[e]; }

    /// In/out edges of a node, sorted by the edge order.
    const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }
    const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }

    std::optional<std::size_t> source_ordinal(std::size_t v) const {
        for (std::size_t i = 0; i < sources_.size(); ++i)
            if (sources_[i] == v) return i;
        return std::nullopt;
    }

    std::size_t node_index(const std::string& name) const {
        auto it = node_ix_.find(name);
        if (it == node_ix_.end()) throw Error(ErrorCode::UnknownNode, "no node '" + name + "'");
        return it->second;
    }

    std::size_t edge_index(const std::string& id) const {
        auto it = edge_ix_.find(id);
        if (it == edge_ix_.end()) throw Error(ErrorCode::UnknownEdge, "no edge '" + id + "'");
        return it->second;
    }

    EdgeSet edge_set(const std::vector<std::string>& ids) const {
        EdgeSet s;
        for (const auto& id : ids) s.push_back(edge_index(id));
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    }

    std::vector<std::string> edge_ids(const EdgeSet& s) const {
        std::vector<std::string> ids;
        for (std::size_t e : s) ids.push_back(g_.edges[e].id);
        return ids;
    }

    std::vector<std::string> source_names(const SourceSet& s) const {
        std::vector<std::string> out;
        for (std::size_t i : s) out.push_back(g_.nodes[sources_[i]]);
        return out;
    }

    void check_edges(const EdgeSet& s) const {
        for (std::size_t e : s)
            if (e >= g_.edges.size()) throw Error(ErrorCode::UnknownEdge, "edge index " + std::to_string(e));
    }

    /// True iff the i-th source has a directed path to tail(e) (so it can
    /// influence the symbol on e).
    bool source_reaches_edge(std::size_t i, std::size_t e) const { return reach_[i][g_.edges[e].tail]; }
    bool source_reaches_node(std::size_t i, std::size_t v) const { return reach_[i][v]; }

    friend bool operator==(const Network& a, const Network& b) {
        if (a.g_.nodes != b.g_.nodes || a.sources_ != b.sources_ || a.sink_ != b.sink_) return false;
        if (a.g_.edges.size() != b.g_.edges.size()) return false;
        for (std::size_t e = 0; e < a.g_.edges.size(); ++e) {
            const auto &x = a.g_.edges[e], &y = b.g_.edges[e];
            if (x.id != y.id || x.tail != y.tail || x.head != y.head) return false;
        }
        return true;
    }

private:
    void validate_and_index() {
        const std::size_t nv = g_.nodes.size(), ne = g_.edges.size();
        in_.assign(nv, {});
        out_.assign(nv, {});
        for (std::size_t e = 0; e < ne; ++e) {
            out_[g_.edges[e].tail].push_back(e);
            in_[g_.edges[e].head].push_back(e);
        }
        for (std::size_t v : sources_)
            if (!in_[v].empty())
                throw Error(ErrorCode::SourceHasInEdge,
                            "source '" + g_.nodes[v] + "' has in-edge '" + g_.edges[in_[v].front()].id + "'");
        if (!out_[sink_].empty())
            throw Error(ErrorCode::SinkHasOutEdge,
                        "sink '" + g_.nodes[sink_] + "' has out-edge '" + g_.edges[out_[sink_].front()].id + "'");

        // Edge order: an edge is ready once every in-edge of its tail is placed.
        std::vector<std::size_t> waiting(nv, 0);
        for (std::size_t v = 0; v < nv; ++v) waiting[v] = in_[v].size();
        order_.clear();
        std::vector<bool> placed(ne, false);
        auto place = [&](std::size_t e) {
            placed[e] = true;
            order_.push_back(e);
        };
        std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
        auto release = [&](std::size_t e) {
            if (--waiting[g_.edges[e].head] == 0)
                for (std::size_t d : out_[g_.edges[e].head]) ready.push(d);
        };
        for (std::size_t v : sources_)
            for (std::size_t e : out_[v]) place(e);
        for (std::size_t v = 0; v < nv; ++v)
            if (waiting[v] == 0 && !source_ordinal(v))
                for (std::size_t e : out_[v]) ready.push(e);
        for (std::size_t v : sources_)
            for (std::size_t e : out_[v]) release(e);
        while (!ready.empty()) {
            const std::size_t e = ready.top();
            ready.pop();
            if (placed[e]) continue;
            place(e);
            release(e);
        }
        if (order_.size() != ne) {
            for (std::size_t e = 0; e < ne; ++e)
                if (!placed[e]) throw Error(ErrorCode::Cycle, "edge '" + g_.edges[e].id + "' lies on a cycle");
        }
        pos_.assign(ne, 0);
        for (std::size_t k = 0; k < ne; ++k) pos_[order_[k]] = k;
        auto by_pos = [&](std::size_t a, std::size_t b) { return pos_[a] < pos_[b]; };
        for (auto& l : in_) std::sort(l.begin(), l.end(), by_pos);
        for (auto& l : out_) std::sort(l.begin(), l.end(), by_pos);

        // Every node must reach the sink.
        Graph rev = g_;
        for (auto& e : rev.edges) std::swap(e.tail, e.head);
        const auto to_sink = rev.reachable({sink_});
        for (std::size_t v = 0; v < nv; ++v)
            if (!to_sink[v]) throw Error(ErrorCode::UnreachableSink, "node '" + g_.nodes[v] + "' cannot reach the sink");

        reach_.clear();
        for (std::size_t v : sources_) reach_.push_back(g_.reachable({v}));
    }

    Graph g_;
    std::vector<std::size_t> sources_;
    std::size_t sink_ = 0;
    std::map<std::string, std::size_t> node_ix_, edge_ix_;
    std::vector<std::vector<std::size_t>> in_, out_;
    std::vector<std::size_t> order_, pos_;
    std::vector<std::vector<bool>> reach_;
};

struct ReachSets {
    SourceSet d;  // sources with a path to some edge of C
    SourceSet i;  // sources cut off from the sink once C is deleted
    SourceSet j;  // d minus i
};

inline ReachSets reach_sets(const Network& n, const EdgeSet& c) {
    n.check_edges(c);
    ReachSets out;
    std::vector<bool> removed(n.num_edges(), false);
    for (std::size_t e : c) removed[e] = true;
    for (std::size_t s = 0; s < n.num_sources(); ++s) {
        const bool reaches = std::any_of(c.begin(), c.end(), [&](std::size_t e) { return n.source_reaches_edge(s, e); });
        if (reaches) out.d.push_back(s);
        if (!c.empty() && !n.graph().reachable({n.source(s)}, removed)[n.sink()]) out.i.push_back(s);
    }
    std::set_difference(out.d.begin(), out.d.end(), out.i.begin(), out.i.end(), std::back_inserter(out.j));
    return out;
}

struct CutSetStatus {
    bool cut = false;     // I_C nonempty
    bool global = false;  // I_C = S
};

inline CutSetStatus is_cut_set(const Network& n, const EdgeSet& c) {
    const auto rs = reach_sets(n, c);
    return {!rs.i.empty(), rs.i.size() == n.num_sources()};
}

/// Edge-reversed network: the sink becomes the single multicast source and
/// the original sources become the sinks. Edge ids and indices are kept.
struct ReversedNetwork {
    Graph graph;
    std::size_t source = 0;
    std::vector<std::size_t> sinks;
};

inline ReversedNetwork reverse(const Network& n) {
    ReversedNetwork r;
    r.graph = n.graph();
    for (auto& e : r.graph.edges) std::swap(e.tail, e.head);
    r.source = n.sink();
    r.sinks = n.sources();
    return r;
}

inline Network reverse(const ReversedNetwork& r) {
    std::vector<Network::EdgeSpec> edges;
    for (const auto& e : r.graph.edges) edges.push_back({e.id, r.graph.nodes[e.head], r.graph.nodes[e.tail]});
    std::vector<std::string> sources;
    for (std::size_t v : r.sinks) sources.push_back(r.graph.nodes[v]);
    return Network::build(r.graph.nodes, sources, r.graph.nodes[r.source], edges);
}

struct KeptSource {
    std::string name;
    std::size_t original_ordinal = 0;
    gf::Elem coeff = 0;
};

struct SumReduction {
    Network network;
    std::vector<KeptSource> kept;
};

/// Reduces computing sum_i a_i m_i to computing an algebraic sum: sources
/// with a_i = 0 are dropped with their out-edges; the survivors scale their
/// inputs by a_i.
inline SumReduction reduce_linear_to_sum(const Network& n, const std::vector<gf::Fe>& coeffs) {
    if (coeffs.size() != n.num_sources())
        throw Error(ErrorCode::DimensionMismatch,
                    std::to_string(coeffs.size()) + " coefficients for " + std::to_string(n.num_sources()) + " sources");
    std::vector<bool> drop_node(n.num_nodes(), false);
    SumReduction out;
    std::vector<std::string> sources;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) {
            drop_node[n.source(i)] = true;
        } else {
            out.kept.push_back({n.nodes()[n.source(i)], i, coeffs[i].value()});
            sources.push_back(n.nodes()[n.source(i)]);
        }
    }
    if (out.kept.empty()) throw Error(ErrorCode::AllZeroFunction, "every coefficient is zero; the target is constant");
    std::vector<std::string> nodes;
    for (std::size_t v = 0; v < n.num_nodes(); ++v)
        if (!drop_node[v]) nodes.push_back(n.nodes()[v]);
    std::vector<Network::EdgeSpec> edges;
    for (const auto& e : n.edges())
        if (!drop_node[e.tail]) edges.push_back({e.id, n.nodes()[e.tail], n.nodes()[e.head]});
    try {
        out.network = Network::build(nodes, sources, n.nodes()[n.sink()], edges);
    } catch (const Error& ex) {
        throw Error(ErrorCode::ValidationFailure, ex.what());
    }
    return out;
}

}  // namespace snfc
