#pragma once

#include "sandlat/composition.hpp"

#include <vector>

namespace sandlat {

/// The fixed points of the vertical rule inside L_B(n) paired with the strict
/// partitions of n via the dual map. Both lists are sorted lexicographically
/// descending, so the extremes sit at the ends.
struct FixedPointAtlas {
    int n = 0;
    std::vector<Composition> phi;
    std::vector<Composition> strict_partitions;
    /// strict_partitions[pairing[i]] == phi[i].dual()
    std::vector<int> pairing;
    Composition p0;   // greatest fixed point, reached from the seed
    Composition ones; // least fixed point (1,...,1)
};

/// One reachability class of L_B(n): the elements that normalize to this
/// fixed point under the vertical rule.
struct SpmClass {
    Composition fixed_point;
    std::vector<Composition> members;
};

struct ClassPartition {
    int n = 0;
    std::vector<SpmClass> classes; // keyed by fixed point, lex descending
    std::size_t total_members() const;
};

/// Repeatedly fires the lowest legal position of the vertical rule until none
/// applies. Any firing order reaches the same fixed point; the lowest-first
/// policy makes traces reproducible. Throws NotAPartition.
Composition spm_normalize(const Composition& a);

/// Enumerates the fixed points directly from the all-gaps-at-most-1
/// characterization (not by dualizing strict partitions, so the pairing is a
/// genuine cross-check) and pairs them with the strict partitions.
FixedPointAtlas enumerate_fixed_points(int n);

/// True iff the dual restricted to the fixed points reverses dominance on
/// every pair, and the prefix-min inf of any two strict partitions is strict.
bool check_duality(int n);

/// Assigns every partition of n to the class of its vertical-rule fixed
/// point. The classes partition L_B(n).
ClassPartition partition_classes(int n);

/// Closed form for the dominance-least strict partition of n, defined for
/// n = k(k+1)/2 + k' with 0 < k' <= k. Throws TriangularCase otherwise.
Composition smallest_strict_partition(int n);

/// Total version: the closed form when defined, the enumeration minimum for
/// triangular n (the staircase).
Composition minimal_strict_partition(int n);

} // namespace sandlat
