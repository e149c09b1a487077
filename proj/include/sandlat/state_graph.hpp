#pragma once

#include "sandlat/rules.hpp"

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace sandlat {

inline constexpr std::size_t kDefaultNodeCap = 10'000'000;

/// An edge of the reachability order: `from` fires position `pos` and lands
/// on `to`. Indices refer to StateGraph::nodes(); `kind` records which rule
/// of the set labelled the edge (vertical vs horizontal in lb graphs).
struct Edge {
    std::int32_t from;
    std::int32_t to;
    std::int16_t pos;
    RuleKind kind;

    bool operator==(const Edge&) const = default;
};

/// The order reachable from a seed under one rule set: a DAG whose nodes are
/// compositions and whose edges strictly increase energy. b is below a in the
/// order iff a directed path a -> b exists.
///
/// Nodes are stored sorted by (energy offset, lexicographic), so node indices
/// form a topological order; edges are sorted by (from, pos). Two runs of
/// generate() produce identical graphs.
class StateGraph {
public:
    /// Breadth-first closure of `seed` under the rule set, levels processed
    /// in energy order. Throws CapacityExceeded past `node_cap`, InvalidRule
    /// for parameters that do not fit the seed's n, NotAPartition when the
    /// rule set needs a partition seed.
    static StateGraph generate(const Composition& seed, RuleSet rule,
                               std::size_t node_cap = kDefaultNodeCap);

    /// Rebuilds a graph from its parts (JSON import, hand-built test graphs).
    /// Validates node ordering, edge indices and that every edge is a legal
    /// rule application; does NOT require every node to be seed-reachable.
    static StateGraph from_parts(RuleSet rule, Composition seed, std::vector<Composition> nodes,
                                 std::vector<Edge> edges);

    const RuleSet& rule() const { return rule_; }
    const Composition& seed() const { return seed_; }
    int n() const { return seed_.n(); }

    std::size_t size() const { return nodes_.size(); }
    const std::vector<Composition>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Composition& node(int v) const { return nodes_[static_cast<std::size_t>(v)]; }

    /// Index of a composition, or -1 when absent.
    int index_of(const Composition& c) const;
    /// Index, throwing NodeNotInGraph when absent.
    int require(const Composition& c) const;

    /// E(v) - E(seed).
    long long energy_offset(int v) const { return energy_[static_cast<std::size_t>(v)]; }
    /// Energy offset divided by the rule's uniform step (graded sets); raw
    /// offset for lb.
    long long level(int v) const { return energy_offset(v) / rule_.energy_step(); }
    long long max_level() const;

    std::span<const Edge> out_edges(int v) const;
    int out_degree(int v) const { return static_cast<int>(out_edges(v).size()); }

    /// True iff a directed path a -> b exists (a >= b in the order).
    /// Level-bounded DFS; use OrderIndex for bulk all-pairs workloads.
    bool reachable(const Composition& a, const Composition& b) const;

    /// All fixed points of the rule inside the graph, in node order.
    std::vector<Composition> terminals() const;

private:
    StateGraph(RuleSet rule, Composition seed) : rule_(std::move(rule)), seed_(std::move(seed)) {}
    void build_index();

    RuleSet rule_;
    Composition seed_;
    std::vector<Composition> nodes_;
    std::vector<long long> energy_;
    std::vector<Edge> edges_;
    std::vector<std::int32_t> out_offsets_;
    std::unordered_map<Composition, std::int32_t, CompositionHash> index_;
};

/// Longest edge-count distance from the seed to every node (-1 when a node is
/// not seed-reachable). Independent of energy grading, so it doubles as the
/// chain-length oracle.
std::vector<long long> longest_dist_from_seed(const StateGraph& g);

/// Node-and-transition equality, ignoring which rule variant labelled each
/// edge (the vertical rule and theta=2 label the same transitions).
bool same_order(const StateGraph& a, const StateGraph& b);

} // namespace sandlat
