#include "sandlat/cfg.hpp"

#include "sandlat/rules.hpp"
#include "sandlat/state_graph.hpp"

#include <algorithm>
#include <numeric>

namespace sandlat {

long long ShotVector::total() const { return std::accumulate(k.begin(), k.end(), 0LL); }

namespace {

enum class ShotFail { None, NonIntegral, Negative };

ShotFail compute_shots(const Composition& origin, const Composition& a, int m,
                       std::vector<long long>& k, int& fail_index) {
    const int n = origin.n();
    k.assign(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        long long numerator = origin.part(i) - a.part(i);
        for (int j = std::max(1, i - m); j <= i - 1; ++j)
            numerator += k[static_cast<std::size_t>(j - 1)];
        if (numerator % m != 0) {
            fail_index = i;
            return ShotFail::NonIntegral;
        }
        const long long ki = numerator / m;
        if (ki < 0) {
            fail_index = i;
            return ShotFail::Negative;
        }
        k[static_cast<std::size_t>(i - 1)] = ki;
    }
    return ShotFail::None;
}

void check_same_n(const Composition& origin, const Composition& a) {
    if (origin.n() != a.n()) fail(Err::MismatchedN, "shot vector of compositions with different n");
}

} // namespace

ShotVector shot_vector(const Composition& origin, const Composition& a, int m) {
    if (m < 1) fail(Err::InvalidRule, "firing width must be >= 1");
    check_same_n(origin, a);
    ShotVector sv{origin, m, {}};
    int index = -1;
    switch (compute_shots(origin, a, m, sv.k, index)) {
        case ShotFail::NonIntegral:
            fail(Err::NonIntegral,
                 "firing count at column " + std::to_string(index) + " is not an integer", index);
        case ShotFail::Negative:
            fail(Err::NegativeShot,
                 "firing count at column " + std::to_string(index) + " is negative", index);
        case ShotFail::None: break;
    }
    return sv;
}

std::optional<ShotVector> try_shot_vector(const Composition& origin, const Composition& a, int m) {
    if (m < 1) fail(Err::InvalidRule, "firing width must be >= 1");
    check_same_n(origin, a);
    ShotVector sv{origin, m, {}};
    int index = -1;
    if (compute_shots(origin, a, m, sv.k, index) != ShotFail::None) return std::nullopt;
    return sv;
}

Composition reconstruct(const Composition& origin, const ShotVector& k) {
    const int n = origin.n();
    if (static_cast<int>(k.k.size()) != n)
        fail(Err::MismatchedN, "shot vector length differs from origin");
    const int m = k.m;
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        long long height = origin.part(i) - static_cast<long long>(m) * k.k[static_cast<std::size_t>(i - 1)];
        for (int j = std::max(1, i - m); j <= i - 1; ++j)
            height += k.k[static_cast<std::size_t>(j - 1)];
        if (height < 0) {
            fail(Err::NegativeHeight,
                 "column " + std::to_string(i) + " reconstructs to " + std::to_string(height), i);
        }
        parts[static_cast<std::size_t>(i - 1)] = static_cast<int>(height);
    }
    return make_composition(std::move(parts), n);
}

bool cfg_leq(const Composition& origin, const Composition& a, const Composition& b, int m) {
    const ShotVector ka = shot_vector(origin, a, m);
    const ShotVector kb = shot_vector(origin, b, m);
    for (std::size_t i = 0; i < ka.k.size(); ++i) {
        if (ka.k[i] > kb.k[i]) return false;
    }
    return true;
}

Composition cfg_inf(const Composition& origin, const Composition& a, const Composition& b, int m) {
    ShotVector ka = shot_vector(origin, a, m);
    const ShotVector kb = shot_vector(origin, b, m);
    for (std::size_t i = 0; i < ka.k.size(); ++i) ka.k[i] = std::max(ka.k[i], kb.k[i]);
    return reconstruct(origin, ka);
}

namespace {

long long count_maximal_paths(const StateGraph& g, long long cap) {
    // Paths from each node to a sink, reverse topological order, saturating.
    std::vector<long long> paths(g.size(), 0);
    for (int v = static_cast<int>(g.size()) - 1; v >= 0; --v) {
        auto edges = g.out_edges(v);
        if (edges.empty()) {
            paths[static_cast<std::size_t>(v)] = 1;
            continue;
        }
        long long total = 0;
        for (const Edge& e : edges) {
            total += paths[static_cast<std::size_t>(e.to)];
            if (total > cap) {
                total = cap + 1;
                break;
            }
        }
        paths[static_cast<std::size_t>(v)] = total;
    }
    return paths.empty() ? 0 : paths[static_cast<std::size_t>(g.require(g.seed()))];
}

} // namespace

ConvergenceReport strong_convergence_check(const Composition& origin, int m,
                                           long long max_sequences) {
    ConvergenceReport report;
    const StateGraph g = StateGraph::generate(origin, RuleSet::cfg(m));
    const auto terminals = g.terminals();
    if (terminals.size() != 1) {
        report.ok = false;
        report.detail = std::to_string(terminals.size()) + " terminal nodes";
        return report;
    }
    report.terminal = terminals.front();
    const ShotVector k = shot_vector(origin, report.terminal, m);
    report.moves = k.total();
    const int terminal_id = g.require(report.terminal);
    if (g.level(terminal_id) != report.moves) {
        report.ok = false;
        report.detail = "terminal level differs from |k|";
        return report;
    }

    const long long total_paths = count_maximal_paths(g, max_sequences);
    if (total_paths <= max_sequences) {
        // Walk every maximal play sequence and verify its endpoint and length.
        report.exhaustive = true;
        bool all_ok = true;
        std::vector<std::pair<int, int>> stack; // (node, next edge offset)
        stack.emplace_back(g.require(g.seed()), 0);
        while (!stack.empty() && all_ok) {
            auto& [v, next] = stack.back();
            auto edges = g.out_edges(v);
            if (edges.empty()) {
                ++report.sequences_checked;
                if (g.node(v) != report.terminal ||
                    static_cast<long long>(stack.size()) - 1 != report.moves)
                    all_ok = false;
                stack.pop_back();
                continue;
            }
            if (next < static_cast<int>(edges.size())) {
                const int child = edges[static_cast<std::size_t>(next)].to;
                ++next;
                stack.emplace_back(child, 0);
            } else {
                stack.pop_back();
            }
        }
        report.ok = all_ok;
        if (!all_ok) report.detail = "a maximal sequence missed the terminal or its length";
    } else {
        // Grading argument: every edge advances exactly one level, so every
        // maximal sequence ends at the unique sink after level(terminal) moves.
        report.exhaustive = false;
        report.ok = true;
        report.detail = "verified by grading (" + std::to_string(total_paths) + "+ sequences)";
    }
    return report;
}

std::string Word::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(letters[i]);
    }
    return out;
}

bool word_valid(const Composition& origin, const Word& w, int m) {
    Composition current = origin;
    for (int letter : w.letters) {
        if (letter < 1 || letter + m > current.n()) return false;
        auto next = cfg_step(current, letter, m);
        if (!next) return false;
        current = std::move(*next);
    }
    return true;
}

GreedoidReport greedoid_check(const Composition& origin, int m, int max_len,
                              std::size_t word_cap) {
    GreedoidReport report;
    struct Item {
        Word word;
        Composition state;
        std::uint64_t letter_mask; // distinct letters used so far
        std::uint64_t ext_mask;    // positions that legally extend this word
    };
    if (origin.n() > 64) fail(Err::CapacityExceeded, "word language tracking requires n <= 64");

    auto extensions = [&](const Composition& c) {
        std::uint64_t mask = 0;
        for (int i = 1; i + m <= c.n(); ++i) {
            if (c.part(i) - c.part(i + 1) >= m + 1) mask |= 1ULL << (i - 1);
        }
        return mask;
    };

    std::vector<Item> items;
    items.push_back({Word{}, origin, 0, extensions(origin)});
    std::size_t frontier_begin = 0;
    for (int len = 0; len < max_len; ++len) {
        const std::size_t frontier_end = items.size();
        for (std::size_t idx = frontier_begin; idx < frontier_end; ++idx) {
            const std::uint64_t ext = items[idx].ext_mask;
            for (int i = 1; i + m <= origin.n(); ++i) {
                if (!((ext >> (i - 1)) & 1U)) continue;
                Item next;
                next.word = items[idx].word;
                next.word.letters.push_back(i);
                next.state = *cfg_step(items[idx].state, i, m);
                next.letter_mask = items[idx].letter_mask | (1ULL << (i - 1));
                next.ext_mask = extensions(next.state);
                if (items.size() >= word_cap)
                    fail(Err::CapacityExceeded, "word cap " + std::to_string(word_cap) + " hit");
                items.push_back(std::move(next));
            }
        }
        if (items.size() == frontier_end) break; // language exhausted early
        frontier_begin = frontier_end;
    }
    report.words = items.size();

    // (i) left-hereditary, re-driven through word_valid on every proper prefix.
    for (const Item& item : items) {
        Word prefix;
        for (std::size_t cut = 0; cut < item.word.letters.size(); ++cut) {
            prefix.letters.assign(item.word.letters.begin(),
                                  item.word.letters.begin() + static_cast<std::ptrdiff_t>(cut));
            if (!word_valid(origin, prefix, m)) {
                report.ok = false;
                report.counterexample = {prefix, item.word};
                report.detail = "prefix of a valid word is invalid";
                return report;
            }
        }
    }

    // (ii) exchange: some distinct letter of the longer word extends the shorter.
    for (const Item& alpha : items) {
        for (const Item& beta : items) {
            if (beta.word.letters.size() <= alpha.word.letters.size()) continue;
            ++report.pairs_checked;
            if ((alpha.ext_mask & beta.letter_mask) == 0) {
                report.ok = false;
                report.counterexample = {alpha.word, beta.word};
                report.detail = "no letter of the longer word extends the shorter";
                return report;
            }
        }
    }
    report.ok = true;
    return report;
}

} // namespace sandlat
