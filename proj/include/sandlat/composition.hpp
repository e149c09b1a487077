#pragma once

#include "sandlat/error.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sandlat {

enum class CompositionKind { General, Partition, StrictPartition };

const char* to_string(CompositionKind k);

/// A composition of n: exactly n non-negative column heights summing to n.
///
/// Canonical storage is always the full length-n vector (trailing zeros kept),
/// so one equality/hashing scheme serves all four transition systems. Values
/// are immutable after construction; every rule application returns a fresh
/// composition.
class Composition {
public:
    Composition() = default; // empty sentinel (n = 0), not a valid state

    int n() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }

    /// Column height at 1-based position i (paper-style subscripts).
    int part(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }

    /// E(a) = sum over columns of (i-1) * a_i; zero on the seed, strictly
    /// increasing along every transition.
    long long energy() const;

    /// Conjugate partition: dual_i = |{ j : a_j >= i }|. Involution on
    /// partitions. Throws NotAPartition otherwise.
    Composition dual() const;

    CompositionKind kind() const;
    bool is_partition() const;
    bool is_strict_partition() const;

    /// Number of leading strictly positive entries (the paper's trimming
    /// convention for theta >= 2).
    int positive_prefix_length() const;

    /// Text form "[3,1,0,0]".
    std::string to_string() const;

    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default; // lexicographic

private:
    friend Composition make_composition(std::vector<int> parts, int n);
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {}

    std::vector<int> parts_;
};

/// Canonical constructor/validator. Shorter input is right-padded with zeros;
/// longer input is accepted only when every entry beyond position n is zero.
/// Throws NegativePart, TooLong, SumMismatch, InvalidN.
Composition make_composition(std::vector<int> parts, int n);

/// The seed N = (n,0,...,0). Throws InvalidN for n < 1.
Composition staircase_seed(int n);

/// Parses "[3,1]" (missing trailing zeros allowed) into a composition of n.
Composition parse_composition(std::string_view text, int n);

/// Dominance: every prefix sum of a is <= the matching prefix sum of b,
/// extended to all compositions of n. Throws MismatchedN.
bool dominance_leq(const Composition& a, const Composition& b);

struct CompositionHash {
    std::size_t operator()(const Composition& c) const noexcept;
};

} // namespace sandlat
