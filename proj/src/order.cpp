#include "sandlat/order.hpp"

#include <algorithm>
#include <bit>

namespace sandlat {

namespace {
constexpr std::size_t kOrderIndexNodeCap = 20'000;
} // namespace

OrderIndex::OrderIndex(const StateGraph& g) : g_(&g) {
    const std::size_t count = g.size();
    if (count > kOrderIndexNodeCap) {
        fail(Err::CapacityExceeded,
             "order index limited to " + std::to_string(kOrderIndexNodeCap) + " nodes, got " +
                 std::to_string(count));
    }
    words_ = (count + 63) / 64;
    down_.assign(count * words_, 0);
    up_.assign(count * words_, 0);

    // Node indices are a topological order (energy strictly increases along
    // edges), so one sweep in each direction closes the relation.
    for (int v = static_cast<int>(count) - 1; v >= 0; --v) {
        auto* row = down_.data() + static_cast<std::size_t>(v) * words_;
        row[static_cast<std::size_t>(v) >> 6] |= 1ULL << (static_cast<std::size_t>(v) & 63);
        for (const Edge& e : g.out_edges(v)) {
            const auto* succ = down_.data() + static_cast<std::size_t>(e.to) * words_;
            for (std::size_t w = 0; w < words_; ++w) row[w] |= succ[w];
        }
    }
    for (std::size_t v = 0; v < count; ++v) {
        auto* row = up_.data() + v * words_;
        row[v >> 6] |= 1ULL << (v & 63);
    }
    for (const Edge& e : g.edges()) {
        auto* row = up_.data() + static_cast<std::size_t>(e.to) * words_;
        const auto* pred = up_.data() + static_cast<std::size_t>(e.from) * words_;
        for (std::size_t w = 0; w < words_; ++w) row[w] |= pred[w];
    }
    // Wrong for general DAGs, but edges arrive sorted by `from` ascending and
    // from < to always holds here, so predecessors close before use.

    level_range_of_node_.resize(count);
    std::size_t lo = 0;
    while (lo < count) {
        std::size_t hi = lo + 1;
        while (hi < count &&
               g.energy_offset(static_cast<int>(hi)) == g.energy_offset(static_cast<int>(lo)))
            ++hi;
        for (std::size_t v = lo; v < hi; ++v)
            level_range_of_node_[v] = {static_cast<int>(lo), static_cast<int>(hi)};
        lo = hi;
    }
}

namespace {

int first_set(const std::vector<std::uint64_t>& bits) {
    for (std::size_t w = 0; w < bits.size(); ++w) {
        if (bits[w]) return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits[w])));
    }
    return -1;
}

int last_set(const std::vector<std::uint64_t>& bits) {
    for (std::size_t w = bits.size(); w-- > 0;) {
        if (bits[w]) return static_cast<int>(w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(bits[w])));
    }
    return -1;
}

int popcount_range(const std::vector<std::uint64_t>& bits, int lo, int hi) {
    int count = 0;
    for (int v = lo; v < hi; ++v) {
        if ((bits[static_cast<std::size_t>(v) >> 6] >> (static_cast<std::size_t>(v) & 63)) & 1U)
            ++count;
    }
    return count;
}

} // namespace

std::optional<int> OrderIndex::inf(int a, int b, std::vector<std::uint64_t>& scratch) const {
    scratch.assign(words_, 0);
    const auto* ra = down_row(a);
    const auto* rb = down_row(b);
    for (std::size_t w = 0; w < words_; ++w) scratch[w] = ra[w] & rb[w];
    const int c = first_set(scratch);
    if (c < 0) return std::nullopt;
    // Elements at the least level present are all maximal in the common
    // lower-bound set; two of them rule out a greatest one.
    const auto [lo, hi] = level_range_of_node_[static_cast<std::size_t>(c)];
    if (popcount_range(scratch, std::max(lo, c), hi) != 1) return std::nullopt;
    const auto* rc = down_row(c);
    for (std::size_t w = 0; w < words_; ++w) {
        if (scratch[w] & ~rc[w]) return std::nullopt;
    }
    return c;
}

std::optional<int> OrderIndex::sup(int a, int b, std::vector<std::uint64_t>& scratch) const {
    scratch.assign(words_, 0);
    const auto* ra = up_row(a);
    const auto* rb = up_row(b);
    for (std::size_t w = 0; w < words_; ++w) scratch[w] = ra[w] & rb[w];
    const int c = last_set(scratch);
    if (c < 0) return std::nullopt;
    const auto [lo, hi] = level_range_of_node_[static_cast<std::size_t>(c)];
    if (popcount_range(scratch, lo, std::min(hi, c + 1)) != 1) return std::nullopt;
    const auto* rc = up_row(c);
    for (std::size_t w = 0; w < words_; ++w) {
        if (scratch[w] & ~rc[w]) return std::nullopt;
    }
    return c;
}

std::optional<int> OrderIndex::inf(int a, int b) const {
    std::vector<std::uint64_t> scratch;
    return inf(a, b, scratch);
}

std::optional<int> OrderIndex::sup(int a, int b) const {
    std::vector<std::uint64_t> scratch;
    return sup(a, b, scratch);
}

namespace {

std::vector<bool> down_set(const StateGraph& g, int src) {
    std::vector<bool> in(g.size(), false);
    std::vector<int> stack{src};
    in[static_cast<std::size_t>(src)] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Edge& e : g.out_edges(v)) {
            if (!in[static_cast<std::size_t>(e.to)]) {
                in[static_cast<std::size_t>(e.to)] = true;
                stack.push_back(e.to);
            }
        }
    }
    return in;
}

std::vector<bool> up_set(const StateGraph& g, int dst) {
    // Reverse topological sweep: v reaches dst iff some successor does.
    std::vector<bool> result(g.size(), false);
    result[static_cast<std::size_t>(dst)] = true;
    for (int v = static_cast<int>(g.size()) - 1; v >= 0; --v) {
        if (v == dst) continue;
        for (const Edge& e : g.out_edges(v)) {
            if (result[static_cast<std::size_t>(e.to)]) {
                result[static_cast<std::size_t>(v)] = true;
                break;
            }
        }
    }
    return result;
}

std::optional<int> unique_maximal_of_down_set(const StateGraph& g, const std::vector<bool>& in_set) {
    // Maximal elements of a down-set are exactly those with no in-edge from
    // inside the set; a unique maximal element is the maximum.
    std::vector<bool> has_upper(g.size(), false);
    for (const Edge& e : g.edges()) {
        if (in_set[static_cast<std::size_t>(e.from)] && in_set[static_cast<std::size_t>(e.to)])
            has_upper[static_cast<std::size_t>(e.to)] = true;
    }
    int found = -1;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (in_set[v] && !has_upper[v]) {
            if (found >= 0) return std::nullopt;
            found = static_cast<int>(v);
        }
    }
    if (found < 0) return std::nullopt;
    return found;
}

std::optional<int> unique_minimal_of_up_set(const StateGraph& g, const std::vector<bool>& in_set) {
    std::vector<bool> has_lower(g.size(), false);
    for (const Edge& e : g.edges()) {
        if (in_set[static_cast<std::size_t>(e.from)] && in_set[static_cast<std::size_t>(e.to)])
            has_lower[static_cast<std::size_t>(e.from)] = true;
    }
    int found = -1;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (in_set[v] && !has_lower[v]) {
            if (found >= 0) return std::nullopt;
            found = static_cast<int>(v);
        }
    }
    if (found < 0) return std::nullopt;
    return found;
}

} // namespace

std::optional<Composition> inf_oracle(const StateGraph& g, const Composition& a,
                                      const Composition& b) {
    const int ia = g.require(a);
    const int ib = g.require(b);
    auto da = down_set(g, ia);
    auto db = down_set(g, ib);
    std::vector<bool> common(g.size(), false);
    bool any = false;
    for (std::size_t v = 0; v < g.size(); ++v) {
        common[v] = da[v] && db[v];
        any = any || common[v];
    }
    if (!any) return std::nullopt;
    auto best = unique_maximal_of_down_set(g, common);
    if (!best) return std::nullopt;
    return g.node(*best);
}

std::optional<Composition> sup_oracle(const StateGraph& g, const Composition& a,
                                      const Composition& b) {
    const int ia = g.require(a);
    const int ib = g.require(b);
    auto ua = up_set(g, ia);
    auto ub = up_set(g, ib);
    std::vector<bool> common(g.size(), false);
    bool any = false;
    for (std::size_t v = 0; v < g.size(); ++v) {
        common[v] = ua[v] && ub[v];
        any = any || common[v];
    }
    if (!any) return std::nullopt;
    auto best = unique_minimal_of_up_set(g, common);
    if (!best) return std::nullopt;
    return g.node(*best);
}

LatticeReport is_lattice(const StateGraph& g) {
    LatticeReport report;
    OrderIndex oi(g);
    const auto count = static_cast<int>(g.size());
    const std::size_t words = oi.words();

    bool has_greatest = false;
    std::vector<std::uint64_t> full(words, ~0ULL);
    if (count % 64 != 0) full[words - 1] = (1ULL << (count % 64)) - 1;
    for (int v = 0; v < count && !has_greatest; ++v) {
        const auto* row = oi.down_row(v);
        bool all = true;
        for (std::size_t w = 0; w < words && all; ++w) all = row[w] == full[w];
        has_greatest = all;
    }
    if (!has_greatest) {
        report.is_lattice = false;
        report.detail = "no greatest element";
        return report;
    }

    std::vector<std::uint64_t> scratch;
    for (int a = 0; a < count; ++a) {
        for (int b = a + 1; b < count; ++b) {
            ++report.checked_pairs;
            if (!oi.inf(a, b, scratch)) {
                report.is_lattice = false;
                report.witness = {g.node(a), g.node(b)};
                report.detail = "pair has no greatest lower bound";
                return report;
            }
        }
    }
    report.is_lattice = true;
    return report;
}

Composition inf_prefix_min(const Composition& a, const Composition& b) {
    if (a.n() != b.n())
        fail(Err::MismatchedN, "inf_prefix_min on different n");
    std::vector<int> parts(static_cast<std::size_t>(a.n()), 0);
    long long pa = 0, pb = 0, prev = 0;
    for (int i = 1; i <= a.n(); ++i) {
        pa += a.part(i);
        pb += b.part(i);
        const long long now = std::min(pa, pb);
        parts[static_cast<std::size_t>(i - 1)] = static_cast<int>(now - prev);
        prev = now;
    }
    return make_composition(std::move(parts), a.n());
}

bool suborder_check(const StateGraph& sub, const StateGraph& super) {
    if (sub.n() != super.n()) fail(Err::MismatchedN, "suborder_check on different n");
    std::vector<int> map(sub.size(), -1);
    for (std::size_t v = 0; v < sub.size(); ++v) {
        int id = super.index_of(sub.node(static_cast<int>(v)));
        if (id < 0) return false;
        map[v] = id;
    }
    OrderIndex a(sub);
    OrderIndex b(super);
    const auto count = static_cast<int>(sub.size());
    for (int x = 0; x < count; ++x) {
        for (int y = 0; y < count; ++y) {
            if (a.reachable(x, y) !=
                b.reachable(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]))
                return false;
        }
    }
    return true;
}

} // namespace sandlat
