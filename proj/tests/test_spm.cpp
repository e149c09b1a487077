#include "sandlat/spm.hpp"

#include "sandlat/rules.hpp"
#include "sandlat/state_graph.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <set>

#include <doctest.h>

using namespace sandlat;

namespace {

Composition comp(std::vector<int> parts, int n) { return make_composition(std::move(parts), n); }

} // namespace

TEST_SUITE("spm") {

TEST_CASE("normalize") {
    CHECK(spm_normalize(comp({4, 0, 0, 0}, 4)) == comp({2, 1, 1, 0}, 4));
    CHECK(spm_normalize(comp({2, 1, 1, 0}, 4)) == comp({2, 1, 1, 0}, 4));
    CHECK(spm_normalize(comp({3, 3, 0, 0, 0, 0}, 6)) == comp({3, 2, 1, 0, 0, 0}, 6));
    CHECK_THROWS_AS(spm_normalize(comp({0, 2, 1}, 3)), Error);
}

TEST_CASE("fixed point atlas on pinned cases") {
    const FixedPointAtlas n6 = enumerate_fixed_points(6);
    const std::vector<Composition> expected{
        comp({3, 2, 1, 0, 0, 0}, 6), comp({2, 2, 1, 1, 0, 0}, 6),
        comp({2, 1, 1, 1, 1, 0}, 6), comp({1, 1, 1, 1, 1, 1}, 6)};
    CHECK(n6.phi == expected);
    CHECK(n6.p0 == comp({3, 2, 1, 0, 0, 0}, 6));
    CHECK(n6.ones == comp({1, 1, 1, 1, 1, 1}, 6));

    const FixedPointAtlas n1 = enumerate_fixed_points(1);
    CHECK(n1.phi == std::vector<Composition>{comp({1}, 1)});

    CHECK(enumerate_fixed_points(10).phi.size() == 10);
}

TEST_CASE("atlas counts match the oracle for n up to 12") {
    for (int n = 1; n <= 12; ++n) {
        const FixedPointAtlas atlas = enumerate_fixed_points(n);
        CHECK(static_cast<long long>(atlas.phi.size()) == oracle::strict_partition_count(n));
        CHECK(atlas.phi.size() == atlas.strict_partitions.size());
        // The pairing is the dual, and it is bijective.
        std::set<int> targets;
        for (std::size_t i = 0; i < atlas.phi.size(); ++i) {
            CHECK(atlas.strict_partitions[static_cast<std::size_t>(atlas.pairing[i])] ==
                  atlas.phi[i].dual());
            targets.insert(atlas.pairing[i]);
        }
        CHECK(targets.size() == atlas.phi.size());
    }
}

TEST_CASE("fixed points are exactly the vertical-rule-stuck partitions") {
    for (int n = 1; n <= 9; ++n) {
        std::vector<Composition> stuck;
        for (const auto& parts : oracle::partitions(n)) {
            const Composition a = make_composition(parts, n);
            if (successors(a, TransitionRule::vertical()).empty()) stuck.push_back(a);
        }
        std::sort(stuck.begin(), stuck.end(),
                  [](const Composition& a, const Composition& b) { return b < a; });
        CHECK(enumerate_fixed_points(n).phi == stuck);
    }
}

TEST_CASE("duality holds up to n = 12") {
    for (int n = 1; n <= 12; ++n) CHECK(check_duality(n));
}

TEST_CASE("classes on pinned cases") {
    const ClassPartition n4 = partition_classes(4);
    REQUIRE(n4.classes.size() == 2);
    CHECK(n4.classes[0].fixed_point == comp({2, 1, 1, 0}, 4));
    CHECK(n4.classes[0].members.size() == 4);
    CHECK(n4.classes[1].fixed_point == comp({1, 1, 1, 1}, 4));
    CHECK(n4.classes[1].members.size() == 1);

    const ClassPartition n6 = partition_classes(6);
    CHECK(n6.classes.size() == 4);
    CHECK(n6.total_members() == 11);

    const ClassPartition n1 = partition_classes(1);
    REQUIRE(n1.classes.size() == 1);
    CHECK(n1.classes[0].members == std::vector<Composition>{comp({1}, 1)});
}

TEST_CASE("one fixed point below every partition, exhaustively to n = 10") {
    for (int n = 1; n <= 10; ++n) {
        for (const auto& parts : oracle::partitions(n)) {
            const Composition a = make_composition(parts, n);
            const StateGraph g = StateGraph::generate(a, RuleSet::spm());
            const auto terminals = g.terminals();
            REQUIRE(terminals.size() == 1);
            CHECK(terminals.front() == spm_normalize(a));
        }
    }
}

TEST_CASE("smallest strict partition") {
    CHECK(smallest_strict_partition(4) == comp({3, 1, 0, 0}, 4));
    CHECK(smallest_strict_partition(8) == comp({4, 3, 1, 0, 0, 0, 0, 0}, 8));
    CHECK_THROWS_AS(smallest_strict_partition(10), Error);
    try {
        smallest_strict_partition(10);
    } catch (const Error& e) {
        CHECK(e.code() == Err::TriangularCase);
    }
    CHECK(minimal_strict_partition(10) ==
          comp({4, 3, 2, 1, 0, 0, 0, 0, 0, 0}, 10));

    // The dual of the least strict partition is the seed's fixed point.
    for (int n = 1; n <= 12; ++n) {
        const Composition least = minimal_strict_partition(n);
        CHECK(least.is_strict_partition());
        CHECK(least.dual() == spm_normalize(staircase_seed(n)));
        for (const auto& parts : oracle::strict_partitions(n)) {
            CHECK(dominance_leq(least, make_composition(parts, n)));
        }
    }
}

} // TEST_SUITE
