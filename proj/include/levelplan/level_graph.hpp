#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace levelplan {

using Level = int;

struct Vertex {
  std::string id;
  Level level = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// An edge is stored with the endpoint on the smaller level first once both
// endpoints are known to the graph.
struct Edge {
  std::string lower;
  std::string upper;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Thrown when an operation requires a valid (or proper) graph and gets one
// that is not. Carries the violation list produced by validate().
class InvalidGraph : public std::invalid_argument {
 public:
  explicit InvalidGraph(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Drawing does not match the vertex sets of the graph it is used with.
class DrawingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LevelGraph {
 public:
  LevelGraph() = default;
  LevelGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::optional<Level> level_of(std::string_view id) const;
  bool contains(std::string_view id) const { return level_of(id).has_value(); }

  // Same graph with vertices sorted by (level, id) and edges sorted
  // lexicographically.
  LevelGraph canonical() const;

  // Structural equality: same vertex set and same edge set, order ignored.
  friend bool operator==(const LevelGraph& a, const LevelGraph& b);

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, Level> levels_;
};

bool is_valid_id(std::string_view id);

// Empty iff every LevelGraph invariant holds.
std::vector<std::string> validate(const LevelGraph& graph);

// True iff the graph is valid and every edge joins adjacent levels.
bool is_proper(const LevelGraph& graph);

struct IndexedEdge {
  int lower = 0;
  int upper = 0;
};

// Dense integer view of a valid level graph. Vertices are numbered in
// (level, id) order, so inside one level index order equals id order.
class GraphIndex {
 public:
  explicit GraphIndex(const LevelGraph& graph);

  int vertex_count() const noexcept { return static_cast<int>(ids_.size()); }
  const std::string& id(int v) const { return ids_[v]; }
  Level level(int v) const { return levels_[slot_of_[v]]; }
  int slot(int v) const { return slot_of_[v]; }
  int rank(int v) const { return rank_[v]; }
  std::optional<int> find(std::string_view id) const;

  // Distinct nonempty levels, ascending. A "slot" indexes this list.
  const std::vector<Level>& levels() const noexcept { return levels_; }
  std::optional<int> slot_of_level(Level level) const;
  const std::vector<int>& members(int slot) const { return members_[slot]; }

  const std::vector<IndexedEdge>& edges() const noexcept { return edges_; }
  // Indices into edges() whose lower endpoint lies in the given slot.
  const std::vector<int>& edges_from(int slot) const { return edges_from_[slot]; }

 private:
  std::vector<std::string> ids_;
  std::vector<int> slot_of_;
  std::vector<int> rank_;
  std::vector<Level> levels_;
  std::vector<std::vector<int>> members_;
  std::vector<IndexedEdge> edges_;
  std::vector<std::vector<int>> edges_from_;
  std::map<std::string, int, std::less<>> by_id_;
};

struct DummyOrigin {
  Edge original;
  int position = 0;  // 1-based along the original edge, from the lower end

  friend bool operator==(const DummyOrigin&, const DummyOrigin&) = default;
};

class ProperLevelGraph {
 public:
  ProperLevelGraph();  // empty graph

  // Accepts a graph that is already proper; throws InvalidGraph otherwise.
  static ProperLevelGraph from_proper(LevelGraph graph);

  const LevelGraph& graph() const noexcept { return base_; }
  const std::map<std::string, DummyOrigin>& dummies() const noexcept { return dummies_; }
  const GraphIndex& index() const noexcept { return *index_; }
  const std::shared_ptr<const GraphIndex>& shared_index() const noexcept { return index_; }

  bool is_dummy(std::string_view id) const { return dummies_.find(std::string(id)) != dummies_.end(); }

 private:
  ProperLevelGraph(LevelGraph base, std::map<std::string, DummyOrigin> dummies);
  friend ProperLevelGraph make_proper(const LevelGraph& graph);

  LevelGraph base_;
  std::map<std::string, DummyOrigin> dummies_;
  std::shared_ptr<const GraphIndex> index_;
};

// Subdivides every edge of span s >= 2 with s-1 dummy vertices named
// "{lower}__{upper}__{k}". Throws InvalidGraph on invalid input or on a
// dummy name colliding with an existing id.
ProperLevelGraph make_proper(const LevelGraph& graph);

std::string dummy_id(const Edge& original, int position);

struct Drawing {
  std::map<Level, std::vector<std::string>> orders;

  friend bool operator==(const Drawing&, const Drawing&) = default;
};

// Vertices of each level in id order.
Drawing canonical_drawing(const GraphIndex& index);

// Position of every vertex inside its level. Throws DrawingMismatch when the
// drawing's level sets differ from the graph's.
std::vector<int> positions(const GraphIndex& index, const Drawing& drawing);

Drawing drawing_from_positions(const GraphIndex& index, std::span<const int> pos);

}  // namespace levelplan
