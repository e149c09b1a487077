#pragma once

#include "sandlat/composition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sandlat {

enum class RuleKind : std::uint8_t { Vertical, Horizontal, Theta, Cfg };

const char* to_string(RuleKind k);

/// One transition rule. Positions are 1-based throughout, matching the
/// paper-style subscripts.
struct TransitionRule {
    RuleKind kind;
    int theta = 0; // Theta only
    int m = 0;     // Cfg only

    static TransitionRule vertical() { return {RuleKind::Vertical, 0, 0}; }
    static TransitionRule horizontal() { return {RuleKind::Horizontal, 0, 0}; }
    static TransitionRule theta_rule(int theta) { return {RuleKind::Theta, theta, 0}; }
    static TransitionRule cfg_rule(int m) { return {RuleKind::Cfg, 0, m}; }

    bool operator==(const TransitionRule&) const = default;
};

/// One legal application: the fired 1-based column and the resulting state.
struct Move {
    int position;
    Composition result;
};

/// Moves one grain from column i to i+1 when a_i - a_{i+1} >= 2.
std::optional<Composition> vertical_step(const Composition& a, int i);

/// Slides one grain from the cliff at column i (height p+1) across a plateau
/// of >= 1 columns equal to p onto the first column of height p-1. The
/// plateau-0 case (gap exactly 2) is the vertical rule's territory, so the
/// two rules label disjoint edge sets.
std::optional<Composition> horizontal_step(const Composition& a, int i);

/// Moves one grain from column i to i+1 when a_i - a_{i+1} >= theta and
/// a_i >= 1. The guard keeps states non-negative for theta <= 0; theta = 2
/// coincides with vertical_step.
std::optional<Composition> theta_step(const Composition& a, int i, int theta);

/// Fires column i when a_i - a_{i+1} >= m+1: column i loses m grains and each
/// of the m following columns gains one. Requires i+m <= n so no grain leaves
/// the board; the result is provably still a partition.
std::optional<Composition> cfg_step(const Composition& a, int i, int m);

/// Applies `rule` at position i; error behaviour matches the step functions.
std::optional<Composition> apply_rule(const Composition& a, int i, const TransitionRule& rule);

/// Like apply_rule but never throws: precondition violations return nullopt.
std::optional<Composition> try_apply_rule(const Composition& a, int i,
                                          const TransitionRule& rule) noexcept;

/// All legal applications of one rule, in increasing position. Empty list
/// iff a is a fixed point of the rule.
std::vector<Move> successors(const Composition& a, const TransitionRule& rule);

/// An ordered union of rules driving one state graph. The four named sets
/// mirror the CLI rule-specs: lb (vertical + horizontal), spm (vertical),
/// theta:<v>, cfg:<m>.
struct RuleSet {
    std::string name;
    std::vector<TransitionRule> rules;

    static RuleSet lb();
    static RuleSet spm();
    static RuleSet theta(int theta);
    static RuleSet cfg(int m);
    static RuleSet parse(std::string_view spec);

    /// Uniform energy increase per edge: 1 for spm/theta, m(m+1)/2 for cfg.
    /// The lb union is not graded (horizontal edges gain j-i >= 2).
    bool graded() const;
    long long energy_step() const;
};

} // namespace sandlat
