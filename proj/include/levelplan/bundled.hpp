#pragma once

#include <string_view>

#include "levelplan/pair_sat.hpp"

#include "levelplan/greedy.hpp"
#include "levelplan/level_graph.hpp"
#include "levelplan/replay.hpp"

namespace levelplan {

// A fixed level-planar instance that defeats all three greedy embedders
// under the stored replays. Both the Healy-Kuusik and the Harrigan-Healy
// replays use the canonical (id-ordered) reference drawing.
struct BundledCounterexample {
  ProperLevelGraph graph;
  Replay randerath;
  Replay healy_kuusik;
  Replay harrigan_healy;
};

BundledCounterexample bundled_counterexample();

// Checked-in file contents, as written by `levelplan bundled <dir>`.
std::string_view bundled_lgf();
std::string_view bundled_randerath_rpf();
std::string_view bundled_healy_kuusik_rpf();
std::string_view bundled_harrigan_healy_rpf();

// The failure shape the bundled instance is selected for: at least three
// free picks; a closure-forced order assigns a class,
// and a later closure order conflicts with a pair of that class that sits
// four pairs down the constraint chain from the forced one.
bool has_bundled_shape(const ProperLevelGraph& graph, const EmbedOutcome& outcome);

// Number of pairs on a shortest relation path from `from` to `to`, counting
// both ends; -1 if unrelated.
int chain_length(const ConstraintSystem& system, PairId from, PairId to);

}  // namespace levelplan
