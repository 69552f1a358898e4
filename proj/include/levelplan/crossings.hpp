#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "levelplan/level_graph.hpp"

namespace levelplan {

// Independent edges between the same two adjacent levels cross iff the order
// of their lower endpoints disagrees with the order of their upper endpoints.
inline bool edges_cross(const IndexedEdge& a, const IndexedEdge& b, std::span<const int> pos) {
  if (a.lower == b.lower || a.upper == b.upper) {
    return false;
  }
  return (pos[a.lower] < pos[b.lower]) != (pos[a.upper] < pos[b.upper]);
}

// Crossing edge pairs as indices into index.edges(), first < second.
std::vector<std::pair<int, int>> crossing_pairs(const GraphIndex& index, std::span<const int> pos);

std::size_t count_crossings(const GraphIndex& index, std::span<const int> pos);
std::size_t count_crossings(const ProperLevelGraph& graph, const Drawing& drawing);
bool is_planar_drawing(const ProperLevelGraph& graph, const Drawing& drawing);

}  // namespace levelplan
