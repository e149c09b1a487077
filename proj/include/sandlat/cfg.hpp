#pragma once

#include "sandlat/composition.hpp"

#include <optional>
#include <vector>

namespace sandlat {

/// Per-column firing counts k(O,a) of any transition sequence O -> a; the
/// counts are sequence-independent, so they identify the node.
struct ShotVector {
    Composition origin;
    int m = 1;
    std::vector<long long> k; // k[i-1] is the count for 1-based column i

    long long total() const; // |k(O,a)|, the length of any realizing sequence
};

/// Solves k_i = (O_i - a_i + k_{i-m} + ... + k_{i-1}) / m left to right.
/// Integrality and non-negativity of every entry is necessary for a to be
/// reachable from O (not assumed sufficient). Throws NonIntegral(i) /
/// NegativeShot(i) with the failing 1-based column.
ShotVector shot_vector(const Composition& origin, const Composition& a, int m);

/// Non-throwing variant: nullopt when the recurrence fails.
std::optional<ShotVector> try_shot_vector(const Composition& origin, const Composition& a, int m);

/// Inverse of the recurrence: a_i = O_i - m*k_i + sum of the m previous
/// counts. Throws NegativeHeight when a column would go negative.
Composition reconstruct(const Composition& origin, const ShotVector& k);

/// The reachability order via shot vectors: a >= b iff k(O,a) <= k(O,b)
/// componentwise.
bool cfg_leq(const Composition& origin, const Composition& a, const Composition& b, int m);

/// Greatest lower bound via the pointwise maximum of the two shot vectors.
Composition cfg_inf(const Composition& origin, const Composition& a, const Composition& b, int m);

struct ConvergenceReport {
    bool ok = false;
    Composition terminal;
    long long moves = 0; // |k(O, terminal)|
    long long sequences_checked = 0;
    bool exhaustive = false;
    std::string detail;
};

/// Verifies the strong-convergence property from O: a unique terminal, every
/// maximal play sequence reaching it in |k(O,terminal)| moves. Enumerates all
/// maximal sequences when their count is at most `max_sequences`; larger
/// games fall back to the grading argument (unique terminal + uniform energy
/// step per move).
ConvergenceReport strong_convergence_check(const Composition& origin, int m,
                                           long long max_sequences = 200'000);

/// A play word: 1-based fired positions in order.
struct Word {
    std::vector<int> letters;

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;
    std::string to_string() const;
};

/// True iff firing the word's positions in order is legal at every step.
/// Illegal mid-word steps (including out-of-range letters) yield false.
bool word_valid(const Composition& origin, const Word& w, int m);

struct GreedoidReport {
    bool ok = false;
    std::size_t words = 0;
    std::size_t pairs_checked = 0;
    std::optional<std::pair<Word, Word>> counterexample;
    std::string detail;
};

/// Enumerates every valid word up to length `max_len` and verifies the
/// greedoid axioms: left-hereditary (every prefix valid, re-checked through
/// word_valid) and the exchange condition (for |beta| > |alpha| some distinct
/// letter of beta extends alpha). Throws CapacityExceeded past `word_cap`.
GreedoidReport greedoid_check(const Composition& origin, int m, int max_len,
                              std::size_t word_cap = 200'000);

} // namespace sandlat
