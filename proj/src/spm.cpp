#include "sandlat/spm.hpp"

#include "sandlat/enumerate.hpp"
#include "sandlat/order.hpp"
#include "sandlat/rules.hpp"

#include <algorithm>
#include <unordered_map>

namespace sandlat {

std::size_t ClassPartition::total_members() const {
    std::size_t total = 0;
    for (const auto& c : classes) total += c.members.size();
    return total;
}

Composition spm_normalize(const Composition& a) {
    if (!a.is_partition()) fail(Err::NotAPartition, "spm_normalize requires a partition");
    Composition current = a;
    for (;;) {
        bool fired = false;
        for (int i = 1; i <= current.n() - 1; ++i) {
            if (auto next = vertical_step(current, i)) {
                current = std::move(*next);
                fired = true;
                break;
            }
        }
        if (!fired) return current;
    }
}

namespace {

// Fixed points of the vertical rule are the partitions with every gap <= 1,
// including the boundary between the last positive column and the zeros.
void gen_gap_le1(int remaining, std::vector<int>& acc, std::vector<Composition>& out, int n) {
    if (remaining == 0) {
        if (acc.back() == 1) out.push_back(make_composition(acc, n));
        return;
    }
    const int prev = acc.back();
    for (int q = std::min(prev, remaining); q >= std::max(1, prev - 1); --q) {
        acc.push_back(q);
        gen_gap_le1(remaining - q, acc, out, n);
        acc.pop_back();
    }
}

} // namespace

FixedPointAtlas enumerate_fixed_points(int n) {
    if (n < 1) fail(Err::InvalidN, "enumerate_fixed_points requires n >= 1");
    FixedPointAtlas atlas;
    atlas.n = n;

    std::vector<int> acc;
    for (int first = 1; first <= n; ++first) {
        acc.assign(1, first);
        gen_gap_le1(n - first, acc, atlas.phi, n);
    }
    std::sort(atlas.phi.begin(), atlas.phi.end(),
              [](const Composition& a, const Composition& b) { return b < a; });

    atlas.strict_partitions = all_strict_partitions(n);

    std::unordered_map<Composition, int, CompositionHash> strict_index;
    for (std::size_t i = 0; i < atlas.strict_partitions.size(); ++i)
        strict_index.emplace(atlas.strict_partitions[i], static_cast<int>(i));

    atlas.pairing.reserve(atlas.phi.size());
    std::vector<bool> hit(atlas.strict_partitions.size(), false);
    for (const Composition& p : atlas.phi) {
        auto it = strict_index.find(p.dual());
        if (it == strict_index.end() || hit[static_cast<std::size_t>(it->second)]) {
            throw std::logic_error("dual of a fixed point is not a fresh strict partition: " +
                                   p.to_string());
        }
        hit[static_cast<std::size_t>(it->second)] = true;
        atlas.pairing.push_back(it->second);
    }
    if (atlas.phi.size() != atlas.strict_partitions.size()) {
        throw std::logic_error("fixed points and strict partitions differ in count");
    }

    atlas.p0 = spm_normalize(staircase_seed(n));
    atlas.ones = make_composition(std::vector<int>(static_cast<std::size_t>(n), 1), n);
    return atlas;
}

bool check_duality(int n) {
    const FixedPointAtlas atlas = enumerate_fixed_points(n);
    for (const Composition& p1 : atlas.phi) {
        for (const Composition& p2 : atlas.phi) {
            const bool direct = dominance_leq(p2, p1);
            const bool dualized = dominance_leq(p1.dual(), p2.dual());
            if (direct != dualized) return false;
        }
        if (!dominance_leq(p1, atlas.p0)) return false;
        if (!dominance_leq(atlas.ones, p1)) return false;
    }
    for (const Composition& s : atlas.strict_partitions) {
        for (const Composition& t : atlas.strict_partitions) {
            if (!inf_prefix_min(s, t).is_strict_partition()) return false;
        }
    }
    return true;
}

ClassPartition partition_classes(int n) {
    if (n < 1) fail(Err::InvalidN, "partition_classes requires n >= 1");
    ClassPartition result;
    result.n = n;
    std::unordered_map<Composition, std::vector<Composition>, CompositionHash> buckets;
    for (const Composition& a : all_partitions(n)) {
        buckets[spm_normalize(a)].push_back(a);
    }
    result.classes.reserve(buckets.size());
    for (auto& [fp, members] : buckets) {
        std::sort(members.begin(), members.end(),
                  [](const Composition& a, const Composition& b) { return b < a; });
        result.classes.push_back({fp, std::move(members)});
    }
    std::sort(result.classes.begin(), result.classes.end(),
              [](const SpmClass& a, const SpmClass& b) { return b.fixed_point < a.fixed_point; });
    return result;
}

Composition smallest_strict_partition(int n) {
    if (n < 1) fail(Err::InvalidN, "smallest_strict_partition requires n >= 1");
    int k = 0;
    while ((k + 1) * (k + 2) / 2 <= n) ++k;    // largest k with k(k+1)/2 <= n
    const int kp = n - k * (k + 1) / 2;        // n = k(k+1)/2 + k'
    if (kp == 0) {
        fail(Err::TriangularCase,
             "closed form undefined for triangular n = " + std::to_string(n));
    }
    // (k+1, k, ..., k+2-k', k-k', k-k'-1, ..., 1): the value k+1-k' is skipped.
    std::vector<int> parts;
    for (int v = k + 1; v >= k + 2 - kp; --v) parts.push_back(v);
    for (int v = k - kp; v >= 1; --v) parts.push_back(v);
    return make_composition(std::move(parts), n);
}

Composition minimal_strict_partition(int n) {
    try {
        return smallest_strict_partition(n);
    } catch (const Error& e) {
        if (e.code() != Err::TriangularCase) throw;
    }
    // Triangular n = k(k+1)/2: the staircase is the dominance minimum.
    const auto all = all_strict_partitions(n);
    for (const Composition& candidate : all) {
        bool least = true;
        for (const Composition& other : all) {
            if (!dominance_leq(candidate, other)) {
                least = false;
                break;
            }
        }
        if (least) return candidate;
    }
    throw std::logic_error("strict partitions of n have no dominance minimum");
}

} // namespace sandlat
