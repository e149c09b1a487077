#include "sandlat/rules.hpp"

#include <charconv>

namespace sandlat {

const char* to_string(RuleKind k) {
    switch (k) {
        case RuleKind::Vertical: return "vertical";
        case RuleKind::Horizontal: return "horizontal";
        case RuleKind::Theta: return "theta";
        case RuleKind::Cfg: return "cfg";
    }
    return "unknown";
}

namespace {

void check_position(const Composition& a, int i, int span) {
    if (i < 1 || i + span > a.n()) {
        fail(Err::PositionOutOfRange, "position " + std::to_string(i) + " out of range for n = " +
                                          std::to_string(a.n()));
    }
}

Composition shift_grain(const Composition& a, int from, int to) {
    std::vector<int> parts = a.parts();
    parts[static_cast<std::size_t>(from - 1)] -= 1;
    parts[static_cast<std::size_t>(to - 1)] += 1;
    return make_composition(std::move(parts), a.n());
}

} // namespace

std::optional<Composition> vertical_step(const Composition& a, int i) {
    check_position(a, i, 1);
    if (a.part(i) - a.part(i + 1) < 2) return std::nullopt;
    return shift_grain(a, i, i + 1);
}

std::optional<Composition> horizontal_step(const Composition& a, int i) {
    check_position(a, i, 1);
    if (!a.is_partition()) fail(Err::NotAPartition, "horizontal rule requires a partition");
    const int p = a.part(i) - 1;
    if (a.part(i + 1) != p) return std::nullopt; // needs a cliff of exactly 1 into the plateau
    int j = i + 2;
    while (j <= a.n() && a.part(j) == p) ++j;
    if (j > a.n() || a.part(j) != p - 1) return std::nullopt;
    return shift_grain(a, i, j);
}

std::optional<Composition> theta_step(const Composition& a, int i, int theta) {
    check_position(a, i, 1);
    if (a.part(i) < 1) return std::nullopt;
    if (a.part(i) - a.part(i + 1) < theta) return std::nullopt;
    return shift_grain(a, i, i + 1);
}

std::optional<Composition> cfg_step(const Composition& a, int i, int m) {
    if (m < 1) fail(Err::InvalidRule, "cfg firing width must be >= 1, got " + std::to_string(m));
    check_position(a, i, m);
    if (!a.is_partition()) fail(Err::NotAPartition, "cfg rule requires a partition");
    if (a.part(i) - a.part(i + 1) < m + 1) return std::nullopt;
    std::vector<int> parts = a.parts();
    parts[static_cast<std::size_t>(i - 1)] -= m;
    for (int j = i + 1; j <= i + m; ++j) parts[static_cast<std::size_t>(j - 1)] += 1;
    return make_composition(std::move(parts), a.n());
}

std::optional<Composition> apply_rule(const Composition& a, int i, const TransitionRule& rule) {
    switch (rule.kind) {
        case RuleKind::Vertical: return vertical_step(a, i);
        case RuleKind::Horizontal: return horizontal_step(a, i);
        case RuleKind::Theta: return theta_step(a, i, rule.theta);
        case RuleKind::Cfg: return cfg_step(a, i, rule.m);
    }
    return std::nullopt;
}

std::optional<Composition> try_apply_rule(const Composition& a, int i,
                                          const TransitionRule& rule) noexcept {
    try {
        return apply_rule(a, i, rule);
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::vector<Move> successors(const Composition& a, const TransitionRule& rule) {
    std::vector<Move> moves;
    const int last = rule.kind == RuleKind::Cfg ? a.n() - rule.m : a.n() - 1;
    for (int i = 1; i <= last; ++i) {
        if (auto next = apply_rule(a, i, rule)) moves.push_back({i, std::move(*next)});
    }
    return moves;
}

RuleSet RuleSet::lb() {
    return {"lb", {TransitionRule::vertical(), TransitionRule::horizontal()}};
}

RuleSet RuleSet::spm() { return {"spm", {TransitionRule::vertical()}}; }

RuleSet RuleSet::theta(int theta) {
    return {"theta:" + std::to_string(theta), {TransitionRule::theta_rule(theta)}};
}

RuleSet RuleSet::cfg(int m) {
    if (m < 1) fail(Err::InvalidRule, "cfg firing width must be >= 1, got " + std::to_string(m));
    return {"cfg:" + std::to_string(m), {TransitionRule::cfg_rule(m)}};
}

RuleSet RuleSet::parse(std::string_view spec) {
    if (spec == "lb") return lb();
    if (spec == "spm") return spm();
    auto parse_param = [&](std::string_view prefix) -> std::optional<int> {
        if (spec.size() <= prefix.size() || spec.substr(0, prefix.size()) != prefix)
            return std::nullopt;
        std::string_view tail = spec.substr(prefix.size());
        int value = 0;
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), value);
        if (ec != std::errc() || ptr != tail.data() + tail.size()) return std::nullopt;
        return value;
    };
    if (auto v = parse_param("theta:")) return theta(*v);
    if (auto v = parse_param("cfg:")) return cfg(*v);
    fail(Err::ParseError, "unknown rule spec '" + std::string(spec) +
                              "' (expected lb, spm, theta:<int>, cfg:<int>)");
}

bool RuleSet::graded() const {
    for (const auto& r : rules)
        if (r.kind == RuleKind::Horizontal) return false;
    return true;
}

long long RuleSet::energy_step() const {
    if (!graded()) return 1; // lb levels are raw energy offsets
    for (const auto& r : rules)
        if (r.kind == RuleKind::Cfg) return static_cast<long long>(r.m) * (r.m + 1) / 2;
    return 1;
}

} // namespace sandlat
