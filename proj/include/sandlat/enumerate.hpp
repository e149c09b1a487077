#pragma once

#include "sandlat/composition.hpp"

#include <functional>
#include <vector>

namespace sandlat {

/// All partitions of n (padded to length n), lexicographically descending,
/// so the seed (n,0,...,0) comes first.
std::vector<Composition> all_partitions(int n);

/// All strict partitions of n, lexicographically descending.
std::vector<Composition> all_strict_partitions(int n);

/// Visits every composition of n (all C(2n-1,n) of them) in lexicographically
/// ascending order. The callback receives a scratch vector valid only during
/// the call.
void for_each_composition(int n, const std::function<void(const std::vector<int>&)>& fn);

unsigned long long binomial(int a, int b);

/// C(2n-1, n), the number of compositions of n into n non-negative parts.
unsigned long long composition_count(int n);

} // namespace sandlat
