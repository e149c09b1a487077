#include "sandlat/enumerate.hpp"

#include <algorithm>

namespace sandlat {

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Composition>& out, int n) {
    if (remaining == 0) {
        out.push_back(make_composition(acc, n));
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, acc, out, n);
        acc.pop_back();
    }
}

void gen_strict(int remaining, int max_part, std::vector<int>& acc,
                std::vector<Composition>& out, int n) {
    if (remaining == 0) {
        out.push_back(make_composition(acc, n));
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        acc.push_back(p);
        gen_strict(remaining - p, p - 1, acc, out, n);
        acc.pop_back();
    }
}

} // namespace

std::vector<Composition> all_partitions(int n) {
    if (n < 1) fail(Err::InvalidN, "all_partitions requires n >= 1");
    std::vector<Composition> out;
    std::vector<int> acc;
    gen_partitions(n, n, acc, out, n);
    std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) { return b < a; });
    return out;
}

std::vector<Composition> all_strict_partitions(int n) {
    if (n < 1) fail(Err::InvalidN, "all_strict_partitions requires n >= 1");
    std::vector<Composition> out;
    std::vector<int> acc;
    gen_strict(n, n, acc, out, n);
    std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) { return b < a; });
    return out;
}

void for_each_composition(int n, const std::function<void(const std::vector<int>&)>& fn) {
    if (n < 1) fail(Err::InvalidN, "for_each_composition requires n >= 1");
    std::vector<int> acc(static_cast<std::size_t>(n), 0);
    // Ascending lexicographic order: smallest value first at each position.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            acc[static_cast<std::size_t>(pos)] = remaining;
            fn(acc);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            acc[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, n);
}

unsigned long long binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    unsigned long long r = 1;
    for (int i = 1; i <= b; ++i) {
        r = r * static_cast<unsigned long long>(a - b + i) / static_cast<unsigned long long>(i);
    }
    return r;
}

unsigned long long composition_count(int n) { return binomial(2 * n - 1, n); }

} // namespace sandlat
