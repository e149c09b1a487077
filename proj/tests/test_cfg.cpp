#include "sandlat/cfg.hpp"

#include "sandlat/rules.hpp"
#include "sandlat/state_graph.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <map>

using namespace sandlat;

namespace {

Composition comp(std::vector<int> parts, int n) { return make_composition(std::move(parts), n); }

} // namespace

TEST_SUITE("cfg") {

TEST_CASE("shot vector on pinned examples") {
    const Composition o4 = staircase_seed(4);
    CHECK(shot_vector(o4, comp({2, 1, 1, 0}, 4), 2).k == std::vector<long long>{1, 0, 0, 0});
    CHECK(shot_vector(o4, o4, 2).k == std::vector<long long>{0, 0, 0, 0});
    const Composition o6 = staircase_seed(6);
    CHECK(shot_vector(o6, comp({4, 1, 1, 0, 0, 0}, 6), 1).k ==
          std::vector<long long>{2, 1, 0, 0, 0, 0});
}

TEST_CASE("shot vector failure modes") {
    const Composition o4 = staircase_seed(4);
    try {
        shot_vector(o4, comp({3, 1, 0, 0}, 4), 2); // (4-3)/2 is not integral
        FAIL("expected NonIntegral");
    } catch (const Error& e) {
        CHECK(e.code() == Err::NonIntegral);
        CHECK(e.index() == 1);
    }
    try {
        shot_vector(comp({3, 1, 0, 0}, 4), o4, 1); // 3-4 < 0
        FAIL("expected NegativeShot");
    } catch (const Error& e) {
        CHECK(e.code() == Err::NegativeShot);
        CHECK(e.index() == 1);
    }
    CHECK_FALSE(try_shot_vector(o4, comp({3, 1, 0, 0}, 4), 2).has_value());
    CHECK(try_shot_vector(o4, comp({3, 1, 0, 0}, 4), 1).has_value());
    CHECK_THROWS_AS(shot_vector(o4, staircase_seed(5), 1), Error);
}

TEST_CASE("reconstruct") {
    const Composition o6 = staircase_seed(6);
    CHECK(reconstruct(o6, ShotVector{o6, 1, {3, 1, 0, 0, 0, 0}}) ==
          comp({3, 2, 1, 0, 0, 0}, 6));
    CHECK(reconstruct(o6, ShotVector{o6, 1, {0, 0, 0, 0, 0, 0}}) == o6);
    const Composition o4 = staircase_seed(4);
    CHECK(reconstruct(o4, ShotVector{o4, 2, {1, 0, 0, 0}}) == comp({2, 1, 1, 0}, 4));
    try {
        reconstruct(o4, ShotVector{o4, 2, {3, 0, 0, 0}});
        FAIL("expected NegativeHeight");
    } catch (const Error& e) {
        CHECK(e.code() == Err::NegativeHeight);
    }
}

TEST_CASE("reconstruct inverts shot_vector on every generated node") {
    for (int n = 2; n <= 7; ++n) {
        for (int m = 1; m <= 3 && m <= n - 1; ++m) {
            const Composition origin = staircase_seed(n);
            const StateGraph g = StateGraph::generate(origin, RuleSet::cfg(m));
            for (const Composition& node : g.nodes()) {
                const ShotVector k = shot_vector(origin, node, m);
                CHECK(reconstruct(origin, k) == node);
            }
        }
    }
}

TEST_CASE("shot order on pinned examples") {
    const Composition o6 = staircase_seed(6);
    CHECK(cfg_leq(o6, comp({4, 2, 0, 0, 0, 0}, 6), comp({3, 2, 1, 0, 0, 0}, 6), 1));
    CHECK(cfg_leq(o6, comp({4, 2, 0, 0, 0, 0}, 6), comp({4, 2, 0, 0, 0, 0}, 6), 1));
    CHECK_FALSE(cfg_leq(o6, comp({4, 1, 1, 0, 0, 0}, 6), comp({3, 3, 0, 0, 0, 0}, 6), 1));
    CHECK_FALSE(cfg_leq(o6, comp({3, 3, 0, 0, 0, 0}, 6), comp({4, 1, 1, 0, 0, 0}, 6), 1));
}

TEST_CASE("shot-max inf on pinned examples") {
    const Composition o6 = staircase_seed(6);
    CHECK(cfg_inf(o6, comp({4, 1, 1, 0, 0, 0}, 6), comp({3, 3, 0, 0, 0, 0}, 6), 1) ==
          comp({3, 2, 1, 0, 0, 0}, 6));
    CHECK(cfg_inf(o6, comp({4, 2, 0, 0, 0, 0}, 6), comp({3, 2, 1, 0, 0, 0}, 6), 1) ==
          comp({3, 2, 1, 0, 0, 0}, 6)); // comparable pair
    const Composition a = comp({4, 2, 0, 0, 0, 0}, 6);
    CHECK(cfg_inf(o6, a, a, 1) == a);
}

TEST_CASE("shot additivity along the order") {
    for (int n = 2; n <= 7; ++n) {
        for (int m = 1; m <= 3 && m <= n - 1; ++m) {
            const Composition origin = staircase_seed(n);
            const StateGraph g = StateGraph::generate(origin, RuleSet::cfg(m));
            for (const Composition& a : g.nodes()) {
                for (const Composition& b : g.nodes()) {
                    if (!g.reachable(a, b)) continue;
                    const auto koa = shot_vector(origin, a, m).k;
                    const auto kob = shot_vector(origin, b, m).k;
                    const auto kab = shot_vector(a, b, m).k;
                    for (std::size_t i = 0; i < koa.size(); ++i) {
                        CHECK(kob[i] == koa[i] + kab[i]);
                    }
                }
            }
        }
    }
}

TEST_CASE("every firing path realizes the same shot vector") {
    for (int n = 2; n <= 7; ++n) {
        for (int m = 1; m <= 3 && m <= n - 1; ++m) {
            const Composition origin = staircase_seed(n);
            const StateGraph g = StateGraph::generate(origin, RuleSet::cfg(m));
            // DFS over all paths, counting firings per column.
            std::map<Composition, std::vector<long long>> seen;
            std::vector<long long> counts(static_cast<std::size_t>(n), 0);
            bool consistent = true;
            auto rec = [&](auto&& self, int v) -> void {
                const Composition& state = g.node(v);
                auto it = seen.find(state);
                if (it == seen.end()) {
                    seen.emplace(state, counts);
                } else if (it->second != counts) {
                    consistent = false;
                }
                for (const Edge& e : g.out_edges(v)) {
                    ++counts[static_cast<std::size_t>(e.pos - 1)];
                    self(self, e.to);
                    --counts[static_cast<std::size_t>(e.pos - 1)];
                }
            };
            rec(rec, g.require(origin));
            CHECK(consistent);
            for (const auto& [state, k] : seen) {
                CHECK(shot_vector(origin, state, m).k == k);
            }
        }
    }
}

TEST_CASE("strong convergence on pinned examples") {
    const auto two = strong_convergence_check(staircase_seed(4), 2);
    CHECK(two.ok);
    CHECK(two.terminal == comp({2, 1, 1, 0}, 4));
    CHECK(two.moves == 1);

    const auto one = strong_convergence_check(staircase_seed(4), 1);
    CHECK(one.ok);
    CHECK(one.terminal == comp({2, 1, 1, 0}, 4));
    CHECK(one.moves == 3);

    const auto stuck = strong_convergence_check(comp({2, 1, 1, 0}, 4), 1);
    CHECK(stuck.ok);
    CHECK(stuck.moves == 0);
    CHECK(stuck.terminal == comp({2, 1, 1, 0}, 4));
}

TEST_CASE("words") {
    const Composition o4 = staircase_seed(4);
    CHECK(word_valid(o4, Word{{1, 1, 2}}, 1));
    CHECK(word_valid(o4, Word{}, 1));
    CHECK_FALSE(word_valid(o4, Word{{2}}, 1));
    CHECK_FALSE(word_valid(o4, Word{{4}}, 1));  // out-of-range letter is just invalid
    CHECK_FALSE(word_valid(o4, Word{{0}}, 1));
    CHECK(Word{{1, 1, 2}}.to_string() == "1,1,2");
}

TEST_CASE("greedoid check on pinned examples") {
    const auto small = greedoid_check(staircase_seed(4), 1, 3);
    CHECK(small.ok);
    CHECK(small.words == 4); // e, 1, 11, 112

    const auto vacuous = greedoid_check(comp({2, 1, 1, 0}, 4), 1, 3);
    CHECK(vacuous.ok);
    CHECK(vacuous.words == 1); // just the empty word

    const auto wider = greedoid_check(staircase_seed(6), 2, 4);
    CHECK(wider.ok);
}

TEST_CASE("word cap") {
    CHECK_THROWS_AS(greedoid_check(staircase_seed(6), 1, 8, 3), Error);
}

} // TEST_SUITE
