#pragma once

#include <string>

#include "levelplan/level_graph.hpp"

namespace levelplan {

struct SvgOptions {
  bool labels = true;  // dummy vertices are never labeled
};

// Vertex at x = 40*(position+1), y = 60*level; straight edges; dummies drawn
// smaller; a red marker on every crossing. Output is byte-deterministic.
// Throws DrawingMismatch.
std::string render_svg(const ProperLevelGraph& graph, const Drawing& drawing, const SvgOptions& options = {});

// True for ids produced by make_proper, either recorded in the graph's dummy
// map or shaped "<lower>__<upper>__<k>" with both endpoints in the graph.
bool is_dummy_vertex(const ProperLevelGraph& graph, const std::string& id);

}  // namespace levelplan
