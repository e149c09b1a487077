#include "sandlat/graph_io.hpp"

#include <doctest.h>

#include <string>

using namespace sandlat;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
    int count = 0;
    for (std::size_t at = text.find(needle); at != std::string::npos;
         at = text.find(needle, at + needle.size()))
        ++count;
    return count;
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("json round trip is byte identical") {
    for (const RuleSet& rule :
         {RuleSet::spm(), RuleSet::lb(), RuleSet::theta(-1), RuleSet::cfg(2)}) {
        const StateGraph g = StateGraph::generate(staircase_seed(5), rule);
        const std::string once = to_json(g);
        const StateGraph back = from_json(once);
        CHECK(same_order(g, back));
        CHECK(back.rule().name == rule.name);
        CHECK(to_json(back) == once);
    }
}

TEST_CASE("regenerated graphs serialize identically") {
    const std::string a = to_json(StateGraph::generate(staircase_seed(6), RuleSet::lb()));
    const std::string b = to_json(StateGraph::generate(staircase_seed(6), RuleSet::lb()));
    CHECK(a == b);
}

TEST_CASE("json shape") {
    const StateGraph g = StateGraph::generate(staircase_seed(4), RuleSet::spm());
    const std::string text = to_json(g);
    CHECK(text.find("\"rule\": \"spm\"") != std::string::npos);
    CHECK(count_occurrences(text, "\"from\"") == 3);
    CHECK(text.find("\"seed\"") != std::string::npos);
}

TEST_CASE("json rejects malformed input") {
    CHECK_THROWS_AS(from_json("not json"), Error);
    CHECK_THROWS_AS(from_json("{}"), Error);
    CHECK_THROWS_AS(from_json(R"({"rule":"spm","seed":[2,0],"nodes":[[2,0]],"edges":[
        {"from":0,"pos":1,"to":5}]})"),
                    Error);
    // Nodes out of canonical order.
    CHECK_THROWS_AS(from_json(R"({"rule":"spm","seed":[2,0],"nodes":[[1,1],[2,0]],"edges":[]})"),
                    Error);
}

TEST_CASE("dot export") {
    const StateGraph lb6 = StateGraph::generate(staircase_seed(6), RuleSet::lb());
    const std::string dot = to_dot(lb6);
    CHECK(dot.find("digraph") != std::string::npos);
    // Distinct energies of the 11 partitions of 6: {0,1,2,3,4,6,7,10,15}.
    CHECK(count_occurrences(dot, "rank=same") == 9);
    CHECK(dot.find("style=dashed") != std::string::npos); // horizontal edges
    CHECK(dot.find("style=solid") != std::string::npos);

    const StateGraph spm4 = StateGraph::generate(staircase_seed(4), RuleSet::spm());
    const std::string small = to_dot(spm4);
    CHECK(count_occurrences(small, "label=\"[") == 4);
    CHECK(count_occurrences(small, " -> ") == 3);
    CHECK(small.find("style=dashed") == std::string::npos);
}

TEST_CASE("class-colored dot") {
    const StateGraph lb4 = StateGraph::generate(staircase_seed(4), RuleSet::lb());
    const std::string dot = to_dot_classes(lb4, partition_classes(4));
    CHECK(count_occurrences(dot, "doubleoctagon") == 2); // two fixed points at n = 4
    CHECK(dot.find("fillcolor") != std::string::npos);
}

TEST_CASE("text export") {
    const StateGraph lb6 = StateGraph::generate(staircase_seed(6), RuleSet::lb());
    CHECK(count_occurrences(to_text(lb6), "\n") == 11);
}

} // TEST_SUITE
