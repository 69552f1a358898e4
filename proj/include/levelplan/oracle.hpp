#pragma once

#include <cstdint>
#include <optional>

#include "levelplan/level_graph.hpp"

namespace levelplan {

struct OracleVerdict {
  bool planar = false;
  std::optional<Drawing> witness;  // present iff planar
};

struct OracleResult {
  std::optional<OracleVerdict> verdict;  // empty when the budget ran out
  std::uint64_t extensions = 0;          // partial-drawing extensions tried

  bool budget_exceeded() const noexcept { return !verdict.has_value(); }
};

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

// Exhaustive level-by-level search over per-level permutations in
// lexicographic order (of the id-sorted level). A prefix is abandoned as soon
// as the newest level induces a crossing with the one below it; prefixes
// ending in a permutation already known to be a dead end are skipped.
OracleResult brute_force_test(const ProperLevelGraph& graph, std::uint64_t budget = kDefaultOracleBudget);

struct GeneratorConfig {
  int min_levels = 1;
  int max_levels = 4;
  int min_width = 1;
  int max_width = 4;
  double edge_probability = 0.5;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument on empty ranges or a probability outside [0,1].
  void check() const;
};

// Levels 1..L, vertex ids "v<level>_<i>". Each adjacent-level vertex pair
// becomes an edge independently with the configured probability.
ProperLevelGraph random_proper_graph(const GeneratorConfig& config);

}  // namespace levelplan
