#include "sandlat/graph_io.hpp"

#include <json.hpp>

#include <map>

namespace sandlat {

using nlohmann::json;

std::string to_json(const StateGraph& g) {
    json out;
    out["rule"] = g.rule().name;
    out["seed"] = g.seed().parts();
    json nodes = json::array();
    for (const Composition& c : g.nodes()) nodes.push_back(c.parts());
    out["nodes"] = std::move(nodes);
    json edges = json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back(json{{"from", e.from}, {"pos", e.pos}, {"to", e.to}});
    }
    out["edges"] = std::move(edges);
    return out.dump(2) + "\n";
}

StateGraph from_json(std::string_view text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::exception& e) {
        fail(Err::ParseError, std::string("invalid JSON: ") + e.what());
    }
    try {
        const RuleSet rule = RuleSet::parse(in.at("rule").get<std::string>());
        const auto seed_parts = in.at("seed").get<std::vector<int>>();
        const int n = static_cast<int>(seed_parts.size());
        const Composition seed = make_composition(seed_parts, n);
        std::vector<Composition> nodes;
        for (const auto& item : in.at("nodes")) {
            nodes.push_back(make_composition(item.get<std::vector<int>>(), n));
        }
        std::vector<Edge> edges;
        for (const auto& item : in.at("edges")) {
            Edge e{};
            e.from = item.at("from").get<std::int32_t>();
            e.to = item.at("to").get<std::int32_t>();
            e.pos = item.at("pos").get<std::int16_t>();
            e.kind = rule.rules.front().kind; // recomputed by from_parts
            edges.push_back(e);
        }
        return StateGraph::from_parts(rule, seed, std::move(nodes), std::move(edges));
    } catch (const json::exception& e) {
        fail(Err::ParseError, std::string("graph JSON missing fields: ") + e.what());
    }
}

namespace {

void append_ranks(std::string& out, const StateGraph& g) {
    std::size_t lo = 0;
    while (lo < g.size()) {
        std::size_t hi = lo + 1;
        while (hi < g.size() &&
               g.energy_offset(static_cast<int>(hi)) == g.energy_offset(static_cast<int>(lo)))
            ++hi;
        out += "  { rank=same;";
        for (std::size_t v = lo; v < hi; ++v) out += " n" + std::to_string(v) + ";";
        out += " }\n";
        lo = hi;
    }
}

void append_edges(std::string& out, const StateGraph& g) {
    for (const Edge& e : g.edges()) {
        out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to);
        out += e.kind == RuleKind::Horizontal ? " [style=dashed" : " [style=solid";
        out += ",label=\"" + std::to_string(e.pos) + "\"];\n";
    }
}

} // namespace

std::string to_dot(const StateGraph& g) {
    std::string out = "digraph \"" + g.rule().name + "\" {\n";
    out += "  rankdir=TB;\n  node [shape=box];\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
        out += "  n" + std::to_string(v) + " [label=\"" + g.node(static_cast<int>(v)).to_string() +
               "\"];\n";
    }
    append_ranks(out, g);
    append_edges(out, g);
    out += "}\n";
    return out;
}

std::string to_dot_classes(const StateGraph& lb, const ClassPartition& classes) {
    static const char* kPalette[] = {"#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f", "#cab2d6",
                                     "#ffff99", "#1f78b4", "#33a02c", "#e31a1c", "#ff7f00",
                                     "#6a3d9a", "#b15928"};
    constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

    std::map<Composition, std::pair<std::size_t, bool>> member_class; // -> (class id, is fixed point)
    for (std::size_t c = 0; c < classes.classes.size(); ++c) {
        for (const Composition& member : classes.classes[c].members) {
            member_class[member] = {c, member == classes.classes[c].fixed_point};
        }
    }

    std::string out = "digraph \"" + lb.rule().name + "\" {\n";
    out += "  rankdir=TB;\n  node [shape=box,style=filled];\n";
    for (std::size_t v = 0; v < lb.size(); ++v) {
        const Composition& c = lb.node(static_cast<int>(v));
        auto it = member_class.find(c);
        const std::size_t cls = it == member_class.end() ? 0 : it->second.first;
        const bool fixed = it != member_class.end() && it->second.second;
        out += "  n" + std::to_string(v) + " [label=\"" + c.to_string() + "\",fillcolor=\"" +
               kPalette[cls % kPaletteSize] + "\"";
        if (fixed) out += ",shape=doubleoctagon"; // the surrounded fixed points
        out += "];\n";
    }
    append_ranks(out, lb);
    append_edges(out, lb);
    out += "}\n";
    return out;
}

std::string to_text(const StateGraph& g) {
    std::string out;
    for (const Composition& c : g.nodes()) out += c.to_string() + "\n";
    return out;
}

} // namespace sandlat
