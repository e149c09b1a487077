#include "sandlat/state_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace sandlat {

namespace {

void validate_rule_for_seed(const RuleSet& rule, const Composition& seed) {
    for (const auto& r : rule.rules) {
        if (r.kind == RuleKind::Cfg) {
            if (r.m < 1 || r.m > seed.n() - 1) {
                fail(Err::InvalidRule, "cfg width m = " + std::to_string(r.m) +
                                           " outside [1, n-1] for n = " + std::to_string(seed.n()));
            }
        }
        if ((r.kind == RuleKind::Horizontal || r.kind == RuleKind::Cfg) && !seed.is_partition()) {
            fail(Err::NotAPartition, "rule set '" + rule.name + "' requires a partition seed");
        }
    }
}

} // namespace

StateGraph StateGraph::generate(const Composition& seed, RuleSet rule, std::size_t node_cap) {
    validate_rule_for_seed(rule, seed);
    StateGraph g(std::move(rule), seed);

    struct RawEdge {
        std::int32_t from, to;
        std::int16_t pos;
        RuleKind kind;
    };
    std::unordered_map<Composition, std::int32_t, CompositionHash> seen;
    std::vector<Composition> disc;  // discovery order
    std::vector<RawEdge> raw_edges;
    std::deque<std::int32_t> queue;

    seen.emplace(seed, 0);
    disc.push_back(seed);
    queue.push_back(0);

    while (!queue.empty()) {
        const std::int32_t u = queue.front();
        queue.pop_front();
        const Composition current = disc[static_cast<std::size_t>(u)];
        for (const auto& r : g.rule_.rules) {
            for (const Move& mv : successors(current, r)) {
                auto [it, inserted] =
                    seen.emplace(mv.result, static_cast<std::int32_t>(disc.size()));
                if (inserted) {
                    if (disc.size() >= node_cap) {
                        fail(Err::CapacityExceeded,
                             "node cap " + std::to_string(node_cap) + " exceeded");
                    }
                    disc.push_back(mv.result);
                    queue.push_back(it->second);
                }
                raw_edges.push_back({u, it->second, static_cast<std::int16_t>(mv.position), r.kind});
            }
        }
    }

    // Canonical order: (energy offset, lexicographic). Node indices then form
    // a topological order because every edge strictly increases energy.
    const long long seed_energy = seed.energy();
    std::vector<long long> disc_energy(disc.size());
    for (std::size_t i = 0; i < disc.size(); ++i) disc_energy[i] = disc[i].energy() - seed_energy;

    std::vector<std::int32_t> order(disc.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::int32_t x, std::int32_t y) {
        auto ex = disc_energy[static_cast<std::size_t>(x)];
        auto ey = disc_energy[static_cast<std::size_t>(y)];
        if (ex != ey) return ex < ey;
        return disc[static_cast<std::size_t>(x)] < disc[static_cast<std::size_t>(y)];
    });
    std::vector<std::int32_t> rank(disc.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        rank[static_cast<std::size_t>(order[i])] = static_cast<std::int32_t>(i);

    g.nodes_.reserve(disc.size());
    g.energy_.reserve(disc.size());
    for (std::int32_t old_id : order) {
        g.nodes_.push_back(std::move(disc[static_cast<std::size_t>(old_id)]));
        g.energy_.push_back(disc_energy[static_cast<std::size_t>(old_id)]);
    }

    g.edges_.reserve(raw_edges.size());
    for (const RawEdge& e : raw_edges) {
        g.edges_.push_back({rank[static_cast<std::size_t>(e.from)],
                            rank[static_cast<std::size_t>(e.to)], e.pos, e.kind});
    }
    std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
        if (a.from != b.from) return a.from < b.from;
        return a.pos < b.pos;
    });
    g.build_index();
    return g;
}

StateGraph StateGraph::from_parts(RuleSet rule, Composition seed, std::vector<Composition> nodes,
                                  std::vector<Edge> edges) {
    if (nodes.empty()) fail(Err::ParseError, "graph must contain at least one node");
    if (nodes.front() != seed) fail(Err::ParseError, "seed must be the first node");
    const int n = seed.n();
    for (const auto& c : nodes) {
        if (c.n() != n) fail(Err::MismatchedN, "node size differs from seed");
    }
    StateGraph g(std::move(rule), std::move(seed));
    const long long seed_energy = g.seed_.energy();
    g.energy_.reserve(nodes.size());
    for (const auto& c : nodes) g.energy_.push_back(c.energy() - seed_energy);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (g.energy_[i] > g.energy_[i + 1] ||
            (g.energy_[i] == g.energy_[i + 1] && !(nodes[i] < nodes[i + 1]))) {
            fail(Err::ParseError, "nodes not in canonical (energy, lexicographic) order");
        }
    }
    const auto count = static_cast<std::int32_t>(nodes.size());
    for (const Edge& e : edges) {
        if (e.from < 0 || e.from >= count || e.to < 0 || e.to >= count)
            fail(Err::ParseError, "edge index out of range");
        bool matched = false;
        for (const auto& r : g.rule_.rules) {
            auto res = try_apply_rule(nodes[static_cast<std::size_t>(e.from)], e.pos, r);
            if (res && *res == nodes[static_cast<std::size_t>(e.to)]) {
                matched = true;
                break;
            }
        }
        if (!matched) {
            fail(Err::ParseError, "edge " + std::to_string(e.from) + " -> " + std::to_string(e.to) +
                                      " at position " + std::to_string(e.pos) +
                                      " is not a legal rule application");
        }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.from != b.from) return a.from < b.from;
        return a.pos < b.pos;
    });
    g.nodes_ = std::move(nodes);
    g.edges_ = std::move(edges);
    g.build_index();
    return g;
}

void StateGraph::build_index() {
    // Edge kinds are derivable from (from, pos, to); recompute uniformly so
    // imported graphs and generated graphs serialize identically.
    for (Edge& e : edges_) {
        for (const auto& r : rule_.rules) {
            auto res = try_apply_rule(nodes_[static_cast<std::size_t>(e.from)], e.pos, r);
            if (res && *res == nodes_[static_cast<std::size_t>(e.to)]) {
                e.kind = r.kind;
                break;
            }
        }
    }
    out_offsets_.assign(nodes_.size() + 1, 0);
    for (const Edge& e : edges_) out_offsets_[static_cast<std::size_t>(e.from) + 1]++;
    for (std::size_t i = 1; i < out_offsets_.size(); ++i) out_offsets_[i] += out_offsets_[i - 1];
    index_.reserve(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        index_.emplace(nodes_[i], static_cast<std::int32_t>(i));
}

int StateGraph::index_of(const Composition& c) const {
    auto it = index_.find(c);
    return it == index_.end() ? -1 : it->second;
}

int StateGraph::require(const Composition& c) const {
    int id = index_of(c);
    if (id < 0) fail(Err::NodeNotInGraph, c.to_string() + " is not a node of this graph");
    return id;
}

long long StateGraph::max_level() const {
    return nodes_.empty() ? 0 : level(static_cast<int>(nodes_.size()) - 1);
}

std::span<const Edge> StateGraph::out_edges(int v) const {
    auto lo = static_cast<std::size_t>(out_offsets_[static_cast<std::size_t>(v)]);
    auto hi = static_cast<std::size_t>(out_offsets_[static_cast<std::size_t>(v) + 1]);
    return {edges_.data() + lo, hi - lo};
}

bool StateGraph::reachable(const Composition& a, const Composition& b) const {
    const int src = require(a);
    const int dst = require(b);
    if (src == dst) return true;
    const long long limit = energy_offset(dst);
    if (energy_offset(src) >= limit) return false;
    std::vector<bool> visited(nodes_.size(), false);
    std::vector<int> stack{src};
    visited[static_cast<std::size_t>(src)] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Edge& e : out_edges(v)) {
            if (e.to == dst) return true;
            if (energy_offset(e.to) >= limit) continue;
            if (!visited[static_cast<std::size_t>(e.to)]) {
                visited[static_cast<std::size_t>(e.to)] = true;
                stack.push_back(e.to);
            }
        }
    }
    return false;
}

std::vector<Composition> StateGraph::terminals() const {
    std::vector<Composition> out;
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
        if (out_degree(static_cast<int>(v)) == 0) out.push_back(nodes_[v]);
    }
    return out;
}

bool same_order(const StateGraph& a, const StateGraph& b) {
    if (a.nodes() != b.nodes() || a.edges().size() != b.edges().size()) return false;
    for (std::size_t i = 0; i < a.edges().size(); ++i) {
        const Edge& x = a.edges()[i];
        const Edge& y = b.edges()[i];
        if (x.from != y.from || x.to != y.to || x.pos != y.pos) return false;
    }
    return true;
}

std::vector<long long> longest_dist_from_seed(const StateGraph& g) {
    std::vector<long long> dist(g.size(), -1);
    if (g.size() == 0) return dist;
    const int seed = g.require(g.seed());
    dist[static_cast<std::size_t>(seed)] = 0;
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
        if (dist[static_cast<std::size_t>(v)] < 0) continue;
        for (const Edge& e : g.out_edges(v)) {
            auto& d = dist[static_cast<std::size_t>(e.to)];
            d = std::max(d, dist[static_cast<std::size_t>(v)] + 1);
        }
    }
    return dist;
}

} // namespace sandlat
