#include "levelplan/crossings.hpp"

namespace levelplan {

std::vector<std::pair<int, int>> crossing_pairs(const GraphIndex& index, std::span<const int> pos) {
  std::vector<std::pair<int, int>> out;
  const auto& edges = index.edges();
  for (int s = 0; s < static_cast<int>(index.levels().size()); ++s) {
    const auto& group = index.edges_from(s);
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        if (edges_cross(edges[group[i]], edges[group[j]], pos)) {
          out.emplace_back(group[i], group[j]);
        }
      }
    }
  }
  return out;
}

std::size_t count_crossings(const GraphIndex& index, std::span<const int> pos) {
  std::size_t count = 0;
  const auto& edges = index.edges();
  for (int s = 0; s < static_cast<int>(index.levels().size()); ++s) {
    const auto& group = index.edges_from(s);
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        count += edges_cross(edges[group[i]], edges[group[j]], pos) ? 1 : 0;
      }
    }
  }
  return count;
}

std::size_t count_crossings(const ProperLevelGraph& graph, const Drawing& drawing) {
  const auto pos = positions(graph.index(), drawing);
  return count_crossings(graph.index(), pos);
}

bool is_planar_drawing(const ProperLevelGraph& graph, const Drawing& drawing) {
  return count_crossings(graph, drawing) == 0;
}

}  // namespace levelplan
