#include "sandlat/composition.hpp"
#include "sandlat/enumerate.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

using namespace sandlat;

namespace {

Composition comp(std::vector<int> parts, int n) { return make_composition(std::move(parts), n); }

Err code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Err::ParseError;
}

} // namespace

TEST_SUITE("composition") {

TEST_CASE("construction pads, keeps identity and rejects bad input") {
    CHECK(comp({4}, 4).parts() == std::vector<int>{4, 0, 0, 0});
    CHECK(comp({2, 1, 1, 0}, 4).parts() == std::vector<int>{2, 1, 1, 0});
    CHECK(comp({4, 0, 0, 0, 0, 0}, 4).parts() == std::vector<int>{4, 0, 0, 0});

    CHECK(code_of([] { comp({3, 2}, 4); }) == Err::SumMismatch);
    CHECK(code_of([] { comp({5, -1}, 4); }) == Err::NegativePart);
    CHECK(code_of([] { comp({1, 1, 1, 1, 1}, 4); }) == Err::TooLong);
    CHECK(code_of([] { comp({1}, 0); }) == Err::InvalidN);
}

TEST_CASE("seed") {
    CHECK(staircase_seed(1).parts() == std::vector<int>{1});
    CHECK(staircase_seed(4).parts() == std::vector<int>{4, 0, 0, 0});
    const Composition n10 = staircase_seed(10);
    CHECK(n10.part(1) == 10);
    CHECK(std::count(n10.parts().begin(), n10.parts().end(), 0) == 9);
    CHECK(code_of([] { staircase_seed(0); }) == Err::InvalidN);
}

TEST_CASE("energy") {
    CHECK(comp({4, 0, 0, 0}, 4).energy() == 0);
    CHECK(comp({1, 1, 1, 1}, 4).energy() == 6);
    CHECK(comp({2, 1, 1, 0}, 4).energy() == 3);
}

TEST_CASE("dual on pinned examples") {
    CHECK(comp({4, 0, 0, 0}, 4).dual() == comp({1, 1, 1, 1}, 4));
    CHECK(comp({3, 1, 0, 0}, 4).dual() == comp({2, 1, 1, 0}, 4));
    CHECK(comp({2, 1, 1, 0}, 4).dual() == comp({3, 1, 0, 0}, 4));
    CHECK(code_of([] { comp({0, 2, 1}, 3).dual(); }) == Err::NotAPartition);
}

TEST_CASE("dual is an involution on all partitions up to n = 12") {
    for (int n = 1; n <= 12; ++n) {
        for (const auto& parts : oracle::partitions(n)) {
            const Composition a = comp(parts, n);
            const Composition d = a.dual();
            CHECK(d.is_partition());
            CHECK(d.dual() == a);
        }
    }
}

TEST_CASE("dominance on pinned examples") {
    CHECK(dominance_leq(comp({2, 2, 0, 0}, 4), comp({3, 1, 0, 0}, 4)));
    const Composition a = comp({3, 0, 1, 0}, 4);
    const Composition b = comp({2, 2, 0, 0}, 4);
    CHECK_FALSE(dominance_leq(a, b));
    CHECK_FALSE(dominance_leq(b, a));
    CHECK(dominance_leq(a, a));
    CHECK(code_of([] { dominance_leq(staircase_seed(3), staircase_seed(4)); }) ==
          Err::MismatchedN);
}

TEST_CASE("dominance is a partial order on all compositions of n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        const auto all = oracle::compositions(n);
        const std::size_t count = all.size();
        std::vector<Composition> cs;
        cs.reserve(count);
        for (const auto& parts : all) cs.push_back(comp(parts, n));

        // leq[x] = bitset of y with y <= x.
        const std::size_t words = (count + 63) / 64;
        std::vector<std::uint64_t> leq(count * words, 0);
        for (std::size_t x = 0; x < count; ++x) {
            for (std::size_t y = 0; y < count; ++y) {
                if (dominance_leq(cs[y], cs[x])) leq[x * words + (y >> 6)] |= 1ULL << (y & 63);
            }
        }
        // Antisymmetry.
        for (std::size_t x = 0; x < count; ++x) {
            for (std::size_t y = x + 1; y < count; ++y) {
                const bool xy = (leq[y * words + (x >> 6)] >> (x & 63)) & 1U;
                const bool yx = (leq[x * words + (y >> 6)] >> (y & 63)) & 1U;
                CHECK_FALSE((xy && yx));
            }
        }
        // Transitivity: y <= x implies leq[y] subset of leq[x].
        for (std::size_t x = 0; x < count; ++x) {
            for (std::size_t y = 0; y < count; ++y) {
                if (!((leq[x * words + (y >> 6)] >> (y & 63)) & 1U)) continue;
                for (std::size_t w = 0; w < words; ++w) {
                    CHECK((leq[y * words + w] & ~leq[x * words + w]) == 0);
                }
            }
        }
    }
}

TEST_CASE("classification") {
    CHECK(comp({3, 2, 1, 0, 0, 0}, 6).kind() == CompositionKind::StrictPartition);
    CHECK(comp({2, 2, 1, 1, 0, 0}, 6).kind() == CompositionKind::Partition);
    CHECK(comp({0, 2, 1}, 3).kind() == CompositionKind::General);
    CHECK(comp({1}, 1).kind() == CompositionKind::StrictPartition);
    CHECK(comp({1, 1, 1}, 3).kind() == CompositionKind::Partition);
}

TEST_CASE("text form round trip") {
    const Composition a = comp({3, 1, 0, 0}, 4);
    CHECK(a.to_string() == "[3,1,0,0]");
    CHECK(parse_composition("[3,1,0,0]", 4) == a);
    CHECK(parse_composition("[3,1]", 4) == a); // missing trailing zeros
    CHECK(parse_composition(" [ 3 , 1 ] ", 4) == a);
    CHECK(code_of([] { parse_composition("3,1", 4); }) == Err::ParseError);
    CHECK(code_of([] { parse_composition("[3,1", 4); }) == Err::ParseError);
    CHECK(code_of([] { parse_composition("[3,x]", 4); }) == Err::ParseError);
    CHECK(code_of([] { parse_composition("[3,2]", 4); }) == Err::SumMismatch);
}

TEST_CASE("library enumerators agree with the oracle ones") {
    for (int n = 1; n <= 10; ++n) {
        const auto lib = all_partitions(n);
        CHECK(static_cast<long long>(lib.size()) == oracle::partition_count(n));
        const auto strict = all_strict_partitions(n);
        CHECK(static_cast<long long>(strict.size()) == oracle::strict_partition_count(n));
        std::size_t visited = 0;
        for_each_composition(n, [&](const std::vector<int>&) { ++visited; });
        CHECK(visited == oracle::binom(2 * n - 1, n));
        CHECK(composition_count(n) == oracle::binom(2 * n - 1, n));
    }
}

} // TEST_SUITE
