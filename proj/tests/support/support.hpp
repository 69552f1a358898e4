#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "levelplan/lab.hpp"
#include "levelplan/level_graph.hpp"
#include "levelplan/oracle.hpp"

namespace testsupport {

using levelplan::Drawing;
using levelplan::LevelGraph;
using levelplan::ProperLevelGraph;

ProperLevelGraph proper_from_lgf(std::string_view text);

// u1,u2 on level 1, v1,v2 on level 2, all four edges.
ProperLevelGraph k22();
// One vertex per level 1..n, consecutive edges.
ProperLevelGraph path(int n);

// Crossings of straight open segments with vertex v at (position, level).
// Independent of the combinatorial predicate: plain orientation tests.
std::size_t geometric_crossings(const ProperLevelGraph& graph, const Drawing& drawing);

// Inversions of a permutation, O(n^2).
std::size_t inversion_count(const std::vector<int>& perm);

// Planarity by trying every combination of level permutations, no pruning.
bool planar_by_full_enumeration(const ProperLevelGraph& graph);

// Every proper level graph on levels 1..L (L <= max_levels) with at least one
// vertex per level and at most max_vertices vertices in total, all edge subsets.
void for_each_small_graph(int max_vertices, int max_levels, const std::function<void(const ProperLevelGraph&)>& fn);

// `count` seeded random proper graphs with at most max_vertices vertices
// (levels <= 5, widths <= 4, edge probability varying with the seed).
std::vector<ProperLevelGraph> random_corpus(std::size_t count, int max_vertices, std::uint64_t seed);

Drawing random_drawing(const ProperLevelGraph& graph, std::uint64_t seed);
Drawing mirrored(const Drawing& drawing);

// Level k becomes top+1-k, where top is the highest level.
LevelGraph reverse_levels(const LevelGraph& graph);
Drawing reverse_levels(const Drawing& drawing, int top);
// Prefixes every id.
LevelGraph renamed(const LevelGraph& graph, const std::string& prefix);

// Random level graph with edges of arbitrary span (possibly non-proper).
LevelGraph random_level_graph(std::uint64_t seed, int max_levels, int max_width, double edge_probability);

// True iff no single edge deletion and no single vertex deletion (with its
// edges) keeps the oracle verdict and the failure kind under the adapted replay.
bool one_minimal(const levelplan::FailureReport& report);

}  // namespace testsupport
