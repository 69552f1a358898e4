#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "levelplan/level_graph.hpp"

namespace levelplan {

using PairId = int;

// Unordered same-level vertex pair, first < second by id.
struct VertexPair {
  int slot = 0;
  int first = 0;
  int second = 0;
};

// Textual name of a same-level pair as written in replay files:
// "<level>:<first><<second>". The direction matters only for literals.
struct PairName {
  Level level = 0;
  std::string first;
  std::string second;

  friend auto operator<=>(const PairName&, const PairName&) = default;
};

std::string format_pair(const PairName& name);
// Throws std::invalid_argument on malformed text.
PairName parse_pair(std::string_view text);

// The universe of canonical same-level pairs, numbered in (level, first id,
// second id) order.
class PairSpace {
 public:
  explicit PairSpace(std::shared_ptr<const GraphIndex> index);

  int size() const noexcept { return static_cast<int>(pairs_.size()); }
  const VertexPair& pair(PairId p) const { return pairs_[p]; }
  const std::vector<VertexPair>& pairs() const noexcept { return pairs_; }
  const GraphIndex& index() const noexcept { return *index_; }

  // Canonical pair of two distinct vertices on the same level.
  PairId id_of(int a, int b) const;
  // True iff a is the canonical first vertex of id_of(a, b).
  static bool is_forward(int a, int b) noexcept { return a < b; }

  // Resolves a textual name. Returns the pair and whether the name lists it
  // in canonical direction; nullopt when an id or the level is unknown or the
  // two vertices are not distinct members of the stated level.
  std::optional<std::pair<PairId, bool>> resolve(const PairName& name) const;
  PairName name(PairId p, bool forward = true) const;

 private:
  std::shared_ptr<const GraphIndex> index_;
  std::vector<VertexPair> pairs_;
  std::vector<int> offset_;  // first PairId of each slot
};

}  // namespace levelplan
