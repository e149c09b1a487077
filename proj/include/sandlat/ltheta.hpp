#pragma once

#include "sandlat/composition.hpp"
#include "sandlat/state_graph.hpp"

#include <optional>
#include <vector>

namespace sandlat {

/// A forbidden window inside a composition: starting at 1-based column
/// `start`, the l+2 entries carry the gap signature
/// (theta-2, theta-1 x (l-1), theta-2).
struct ThetaPattern {
    int start = 0;
    int length = 0; // the parameter l >= 1; the window spans length+2 entries
};

/// The canonical writing n = k(k+1)/2 * |1-theta| + l(k+1) + p with
/// 0 <= l < |1-theta| and 0 <= p <= k (k maximal, then l).
struct ThetaDecomposition {
    int n = 0;
    int theta = 0;
    int k = 0;
    int l = 0;
    int p = 0;
};

/// theta clamped to the range where the dynamics still change: every value
/// below -n+2 generates the same order as -n+2.
int clamp_theta(int n, int theta);

/// Smallest (start, length) window matching the forbidden gap signature, or
/// nullopt. For theta >= 2 the scan covers the positive prefix only (the
/// trimming convention); for theta <= 1 the full vector.
std::optional<ThetaPattern> find_theta_pattern(const Composition& a, int theta);

/// Membership characterization of the order generated from the seed: every
/// scanned gap >= theta-2 and no forbidden window. For theta >= 2 the state
/// must additionally be a partition (the trimmed scan cannot see mass after
/// an interior zero).
bool theta_member(const Composition& a, int theta);

/// All compositions of n passing theta_member, lexicographically ascending.
/// This is the filter route, independent of breadth-first generation.
std::vector<Composition> generate_by_filter(int n, int theta,
                                            std::size_t cap = kDefaultNodeCap);

/// Throws ThetaOneDegenerate for theta = 1 (|1-theta| = 0 voids the
/// constraints). Pure arithmetic; callers clamp theta first.
ThetaDecomposition decompose(int n, int theta);

/// The unique fixed point of the order: closed form from the decomposition
/// for theta != 1, breadth-first terminal for theta = 1. Postcondition
/// checked: the result is a member and admits no transition.
Composition theta_fixed_point(int n, int theta);

/// Length of every maximal chain: closed form for theta != 1, energy of the
/// simulated fixed point for theta = 1.
long long max_chain_length(int n, int theta);

struct ThetaChainRow {
    int theta = 0;
    std::size_t size = 0;
    Composition fixed_point;
    long long chain_length = 0;
    bool lattice_pass = false;
    bool suborder_pass = false;      // L(n,theta+1) is a suborder of L(n,theta)
    bool filter_matches_bfs = false; // membership filter equals generated node set
    bool fixed_point_is_terminal = false;
    bool chain_matches_depth = false;
};

struct ThetaChainReport {
    int n = 0;
    std::vector<ThetaChainRow> rows; // theta from n down to -n+2
    bool spm_equals_theta2 = false;  // vertical-rule graph == theta:2 graph
    bool lb_suborder_of_theta1 = false;
    bool endpoint_count_ok = false;  // |L(n,-n+2)| == C(2n-1,n)
    bool all_ok() const;
};

/// Sweeps theta from n down to -n+2, generating each order, evaluating the
/// closed forms and running the structural assertions.
ThetaChainReport theta_chain_report(int n, std::size_t node_cap = kDefaultNodeCap);

} // namespace sandlat
