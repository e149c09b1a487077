#pragma once

#include "sandlat/state_graph.hpp"

#include <optional>
#include <utility>

namespace sandlat {

/// Verdict of the brute-force lattice check (greatest element + every pair
/// has a greatest lower bound, the one-sided criterion).
struct LatticeReport {
    bool is_lattice = false;
    std::optional<std::pair<Composition, Composition>> witness;
    std::size_t checked_pairs = 0;
    std::string detail;
};

/// Precomputed reachability closure of a StateGraph (bitset rows for the
/// down-set and up-set of every node). Intended for all-pairs workloads;
/// throws CapacityExceeded for graphs past 20000 nodes.
class OrderIndex {
public:
    explicit OrderIndex(const StateGraph& g);

    const StateGraph& graph() const { return *g_; }

    /// True iff a directed path from -> to exists (from >= to in the order).
    bool reachable(int from, int to) const {
        return (down_row(from)[static_cast<std::size_t>(to) >> 6] >>
                (static_cast<std::size_t>(to) & 63)) & 1U;
    }

    /// Greatest lower bound of the pair, when the common-lower-bound set has
    /// a unique maximal element; nullopt otherwise (the lattice-failure
    /// witness).
    std::optional<int> inf(int a, int b) const;
    std::optional<int> sup(int a, int b) const;

    /// Scratch-buffer variants for tight loops.
    std::optional<int> inf(int a, int b, std::vector<std::uint64_t>& scratch) const;
    std::optional<int> sup(int a, int b, std::vector<std::uint64_t>& scratch) const;

    std::size_t words() const { return words_; }
    const std::uint64_t* down_row(int v) const {
        return down_.data() + static_cast<std::size_t>(v) * words_;
    }
    const std::uint64_t* up_row(int v) const {
        return up_.data() + static_cast<std::size_t>(v) * words_;
    }

private:
    const StateGraph* g_;
    std::size_t words_;
    std::vector<std::uint64_t> down_;
    std::vector<std::uint64_t> up_;
    // Nodes sharing a level occupy one contiguous index range.
    std::vector<std::pair<int, int>> level_range_of_node_;
};

/// Brute-force greatest lower bound over the generated graph: the unique
/// maximal element of { c : a -> c and b -> c }, or nullopt when no unique
/// maximum exists. O(nodes + edges) per call; use OrderIndex for bulk work.
std::optional<Composition> inf_oracle(const StateGraph& g, const Composition& a,
                                      const Composition& b);
std::optional<Composition> sup_oracle(const StateGraph& g, const Composition& a,
                                      const Composition& b);

/// Checks the graph order for lattice structure via OrderIndex.
LatticeReport is_lattice(const StateGraph& g);

/// Closed-form inf: the composition whose prefix sums are the pointwise
/// minima of the two operands' prefix sums. Total on compositions of equal n.
Composition inf_prefix_min(const Composition& a, const Composition& b);

/// True iff nodes(sub) is contained in nodes(super) and the two reachability
/// relations agree on every pair of sub nodes. Throws MismatchedN.
bool suborder_check(const StateGraph& sub, const StateGraph& super);

} // namespace sandlat
