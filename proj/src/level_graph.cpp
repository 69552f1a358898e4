#include "levelplan/level_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace levelplan {

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
  std::string message = "invalid level graph";
  for (const auto& v : violations) {
    message += "; ";
    message += v;
  }
  return message;
}

}  // namespace

InvalidGraph::InvalidGraph(std::vector<std::string> violations)
    : std::invalid_argument(join_violations(violations)), violations_(std::move(violations)) {}

LevelGraph::LevelGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (const auto& v : vertices_) {
    levels_.emplace(v.id, v.level);
  }
  for (auto& e : edges_) {
    const auto a = level_of(e.lower);
    const auto b = level_of(e.upper);
    if (a && b && *a > *b) {
      std::swap(e.lower, e.upper);
    }
  }
}

std::optional<Level> LevelGraph::level_of(std::string_view id) const {
  const auto it = levels_.find(std::string(id));
  if (it == levels_.end()) {
    return std::nullopt;
  }
  return it->second;
}

LevelGraph LevelGraph::canonical() const {
  auto vertices = vertices_;
  std::sort(vertices.begin(), vertices.end(), [](const Vertex& a, const Vertex& b) {
    return std::tie(a.level, a.id) < std::tie(b.level, b.id);
  });
  auto edges = edges_;
  std::sort(edges.begin(), edges.end());
  return LevelGraph(std::move(vertices), std::move(edges));
}

bool operator==(const LevelGraph& a, const LevelGraph& b) {
  const auto ca = a.canonical();
  const auto cb = b.canonical();
  return ca.vertices_ == cb.vertices_ && ca.edges_ == cb.edges_;
}

bool is_valid_id(std::string_view id) {
  if (id.empty()) {
    return false;
  }
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
           c == '.' || c == '-';
  });
}

std::vector<std::string> validate(const LevelGraph& graph) {
  std::vector<std::string> violations;
  std::map<std::string, int> seen;
  for (const auto& v : graph.vertices()) {
    if (!is_valid_id(v.id)) {
      violations.push_back("invalid vertex id '" + v.id + "'");
    }
    if (v.level < 1) {
      violations.push_back("vertex '" + v.id + "' has non-positive level " + std::to_string(v.level));
    }
    if (++seen[v.id] == 2) {
      violations.push_back("duplicate vertex id '" + v.id + "'");
    }
  }
  std::set<std::pair<std::string, std::string>> edge_keys;
  for (const auto& e : graph.edges()) {
    const std::string name = "(" + e.lower + "," + e.upper + ")";
    const auto a = graph.level_of(e.lower);
    const auto b = graph.level_of(e.upper);
    if (!a) {
      violations.push_back("edge " + name + " has unknown endpoint '" + e.lower + "'");
    }
    if (!b) {
      violations.push_back("edge " + name + " has unknown endpoint '" + e.upper + "'");
    }
    if (e.lower == e.upper) {
      violations.push_back("edge " + name + " is a self-loop");
      continue;
    }
    if (a && b && *a == *b) {
      violations.push_back("edge " + name + " is a same-level edge on level " + std::to_string(*a));
    }
    auto key = std::minmax(e.lower, e.upper);
    if (!edge_keys.emplace(key.first, key.second).second) {
      violations.push_back("edge " + name + " is a duplicate edge");
    }
  }
  return violations;
}

bool is_proper(const LevelGraph& graph) {
  if (!validate(graph).empty()) {
    return false;
  }
  return std::all_of(graph.edges().begin(), graph.edges().end(), [&](const Edge& e) {
    return *graph.level_of(e.upper) == *graph.level_of(e.lower) + 1;
  });
}

GraphIndex::GraphIndex(const LevelGraph& graph) {
  auto vertices = graph.vertices();
  std::sort(vertices.begin(), vertices.end(), [](const Vertex& a, const Vertex& b) {
    return std::tie(a.level, a.id) < std::tie(b.level, b.id);
  });
  for (const auto& v : vertices) {
    const int index = static_cast<int>(ids_.size());
    if (levels_.empty() || levels_.back() != v.level) {
      levels_.push_back(v.level);
      members_.emplace_back();
    }
    const int slot = static_cast<int>(levels_.size()) - 1;
    ids_.push_back(v.id);
    slot_of_.push_back(slot);
    rank_.push_back(static_cast<int>(members_[slot].size()));
    members_[slot].push_back(index);
    by_id_.emplace(v.id, index);
  }
  for (const auto& e : graph.edges()) {
    edges_.push_back({by_id_.at(e.lower), by_id_.at(e.upper)});
  }
  std::sort(edges_.begin(), edges_.end(), [](const IndexedEdge& a, const IndexedEdge& b) {
    return std::tie(a.lower, a.upper) < std::tie(b.lower, b.upper);
  });
  edges_from_.resize(levels_.size());
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    edges_from_[slot_of_[edges_[i].lower]].push_back(i);
  }
}

std::optional<int> GraphIndex::find(std::string_view id) const {
  const auto it = by_id_.find(id);
  if (it == by_id_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<int> GraphIndex::slot_of_level(Level level) const {
  const auto it = std::lower_bound(levels_.begin(), levels_.end(), level);
  if (it == levels_.end() || *it != level) {
    return std::nullopt;
  }
  return static_cast<int>(it - levels_.begin());
}

ProperLevelGraph::ProperLevelGraph(LevelGraph base, std::map<std::string, DummyOrigin> dummies)
    : base_(std::move(base)),
      dummies_(std::move(dummies)),
      index_(std::make_shared<const GraphIndex>(base_)) {}

ProperLevelGraph::ProperLevelGraph() : index_(std::make_shared<const GraphIndex>(base_)) {}

ProperLevelGraph ProperLevelGraph::from_proper(LevelGraph graph) {
  auto violations = validate(graph);
  if (!violations.empty()) {
    throw InvalidGraph(std::move(violations));
  }
  for (const auto& e : graph.edges()) {
    if (*graph.level_of(e.upper) != *graph.level_of(e.lower) + 1) {
      violations.push_back("edge (" + e.lower + "," + e.upper + ") spans more than one level");
    }
  }
  if (!violations.empty()) {
    throw InvalidGraph(std::move(violations));
  }
  return ProperLevelGraph(std::move(graph), {});
}

std::string dummy_id(const Edge& original, int position) {
  return original.lower + "__" + original.upper + "__" + std::to_string(position);
}

ProperLevelGraph make_proper(const LevelGraph& graph) {
  auto violations = validate(graph);
  if (!violations.empty()) {
    throw InvalidGraph(std::move(violations));
  }
  std::vector<Vertex> vertices = graph.vertices();
  std::vector<Edge> edges;
  std::map<std::string, DummyOrigin> dummies;
  for (const auto& e : graph.edges()) {
    const Level lo = *graph.level_of(e.lower);
    const Level hi = *graph.level_of(e.upper);
    if (hi == lo + 1) {
      edges.push_back(e);
      continue;
    }
    std::string previous = e.lower;
    for (int k = 1; k < hi - lo; ++k) {
      std::string id = dummy_id(e, k);
      if (graph.contains(id) || dummies.count(id) != 0) {
        throw InvalidGraph({"dummy id '" + id + "' collides with an existing vertex"});
      }
      vertices.push_back({id, lo + k});
      dummies.emplace(id, DummyOrigin{e, k});
      edges.push_back({previous, id});
      previous = std::move(id);
    }
    edges.push_back({previous, e.upper});
  }
  return ProperLevelGraph(LevelGraph(std::move(vertices), std::move(edges)), std::move(dummies));
}

Drawing canonical_drawing(const GraphIndex& index) {
  Drawing drawing;
  for (int s = 0; s < static_cast<int>(index.levels().size()); ++s) {
    auto& order = drawing.orders[index.levels()[s]];
    for (int v : index.members(s)) {
      order.push_back(index.id(v));
    }
  }
  return drawing;
}

std::vector<int> positions(const GraphIndex& index, const Drawing& drawing) {
  std::vector<int> pos(index.vertex_count(), -1);
  if (drawing.orders.size() != index.levels().size()) {
    throw DrawingMismatch("drawing has " + std::to_string(drawing.orders.size()) + " levels, graph has " +
                          std::to_string(index.levels().size()));
  }
  for (const auto& [level, order] : drawing.orders) {
    const auto slot = index.slot_of_level(level);
    if (!slot) {
      throw DrawingMismatch("drawing level " + std::to_string(level) + " is not a level of the graph");
    }
    if (order.size() != index.members(*slot).size()) {
      throw DrawingMismatch("drawing level " + std::to_string(level) + " has " + std::to_string(order.size()) +
                            " vertices, graph has " + std::to_string(index.members(*slot).size()));
    }
    for (int p = 0; p < static_cast<int>(order.size()); ++p) {
      const auto v = index.find(order[p]);
      if (!v || index.slot(*v) != *slot) {
        throw DrawingMismatch("vertex '" + order[p] + "' does not belong to level " + std::to_string(level));
      }
      if (pos[*v] != -1) {
        throw DrawingMismatch("vertex '" + order[p] + "' appears twice");
      }
      pos[*v] = p;
    }
  }
  return pos;
}

Drawing drawing_from_positions(const GraphIndex& index, std::span<const int> pos) {
  Drawing drawing;
  for (int s = 0; s < static_cast<int>(index.levels().size()); ++s) {
    const auto& members = index.members(s);
    std::vector<std::string> order(members.size());
    for (int v : members) {
      order.at(pos[v]) = index.id(v);
    }
    drawing.orders.emplace(index.levels()[s], std::move(order));
  }
  return drawing;
}

}  // namespace levelplan
