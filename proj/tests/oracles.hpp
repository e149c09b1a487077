// Test-side oracles, written independently of the library's enumerators and
// graph machinery so the two routes can disagree when one is wrong.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

// Number of partitions of n, by the classic two-argument recursion.
inline long long partition_count(int n) {
    std::map<std::pair<int, int>, long long> memo;
    std::function<long long(int, int)> rec = [&](int rest, int max_part) -> long long {
        if (rest == 0) return 1;
        if (max_part == 0) return 0;
        auto key = std::make_pair(rest, max_part);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        long long total = rec(rest, max_part - 1);
        if (rest >= max_part) total += rec(rest - max_part, max_part);
        return memo[key] = total;
    };
    return rec(n, n);
}

// Number of strict partitions of n, by subset-sum over distinct parts.
inline long long strict_partition_count(int n) {
    long long total = 0;
    const std::uint32_t limit = 1u << n;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        int sum = 0;
        for (int part = 1; part <= n; ++part) {
            if (mask & (1u << (part - 1))) sum += part;
        }
        if (sum == n) ++total;
    }
    return total;
}

inline unsigned long long binom(int a, int b) {
    if (b < 0 || b > a) return 0;
    std::vector<unsigned long long> row(static_cast<std::size_t>(b) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= a; ++i) {
        for (int j = std::min(i, b); j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    }
    return row[static_cast<std::size_t>(b)];
}

// Padded partition lists via a different traversal than the library's
// (ascending part choice, sorted afterwards).
inline std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            std::vector<int> padded = acc;
            padded.resize(static_cast<std::size_t>(n), 0);
            out.push_back(std::move(padded));
            return;
        }
        for (int p = 1; p <= std::min(max_part, rest); ++p) {
            acc.push_back(p);
            rec(rest - p, p);
            acc.pop_back();
        }
    };
    rec(n, n);
    for (auto& p : out) std::sort(p.begin(), p.end(), std::greater<int>());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<std::vector<int>> strict_partitions(int n) {
    std::vector<std::vector<int>> out;
    const std::uint32_t limit = 1u << n;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        int sum = 0;
        std::vector<int> parts;
        for (int part = n; part >= 1; --part) {
            if (mask & (1u << (part - 1))) {
                sum += part;
                parts.push_back(part);
            }
        }
        if (sum == n) {
            parts.resize(static_cast<std::size_t>(n), 0);
            out.push_back(std::move(parts));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All compositions of n into n non-negative parts.
inline std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos == n - 1) {
            acc[static_cast<std::size_t>(pos)] = rest;
            out.push_back(acc);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            acc[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, rest - v);
        }
    };
    rec(0, n);
    return out;
}

// Plain DFS reachability over an explicit edge list (no levels, no pruning).
inline bool dfs_reachable(int count, const std::vector<std::pair<int, int>>& edges, int from,
                          int to) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(count));
    for (auto [a, b] : edges) adj[static_cast<std::size_t>(a)].push_back(b);
    std::vector<bool> seen(static_cast<std::size_t>(count), false);
    std::vector<int> stack{from};
    seen[static_cast<std::size_t>(from)] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == to) return true;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    return false;
}

// Direct term-list matcher for the forbidden window: builds the explicit
// value sequence k, k-theta+2, k-2theta+3, ..., k-l*theta+l+1, k-(l+1)theta+l+3
// and compares it against every window of the scanned span.
inline bool has_theta_window_by_terms(const std::vector<int>& scan, int theta, int max_l) {
    const int len = static_cast<int>(scan.size());
    for (int l = 1; l <= max_l; ++l) {
        for (int start = 0; start + l + 1 < len; ++start) {
            const int k = scan[static_cast<std::size_t>(start)];
            bool match = true;
            for (int j = 1; j <= l && match; ++j) {
                match = scan[static_cast<std::size_t>(start + j)] == k - j * theta + (j + 1);
            }
            if (match) {
                match = scan[static_cast<std::size_t>(start + l + 1)] ==
                        k - (l + 1) * theta + l + 3;
            }
            if (match) return true;
        }
    }
    return false;
}

} // namespace oracle
