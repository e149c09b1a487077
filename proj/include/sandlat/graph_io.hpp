#pragma once

#include "sandlat/spm.hpp"
#include "sandlat/state_graph.hpp"

#include <string>
#include <string_view>

namespace sandlat {

/// Canonical JSON form {edges, nodes, rule, seed}; keys and array orders are
/// deterministic, so equal graphs serialize to identical bytes.
std::string to_json(const StateGraph& g);

/// Inverse of to_json. Throws ParseError on malformed input.
StateGraph from_json(std::string_view text);

/// Graphviz digraph with one rank per energy level; vertical/theta/cfg edges
/// are solid, horizontal edges dashed.
std::string to_dot(const StateGraph& g);

/// L_B(n) colored by vertical-rule class; fixed points are double-circled.
std::string to_dot_classes(const StateGraph& lb, const ClassPartition& classes);

/// One composition per line, node order.
std::string to_text(const StateGraph& g);

} // namespace sandlat
