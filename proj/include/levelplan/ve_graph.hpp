#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "levelplan/greedy.hpp"
#include "levelplan/level_graph.hpp"
#include "levelplan/pair_space.hpp"

namespace levelplan {

// Link between the pair of lower endpoints and the pair of upper endpoints
// of two independent edges between the same adjacent levels.
struct VeLink {
  PairId lower = 0;
  PairId upper = 0;
  int first_edge = 0;
  int second_edge = 0;
};

// Vertex exchange graph: one node per canonical same-level pair, one link per
// unordered pair of independent edges (parallel links kept).
class VeGraph {
 public:
  explicit VeGraph(const ProperLevelGraph& graph);

  const PairSpace& nodes() const noexcept { return nodes_; }
  const std::vector<VeLink>& links() const noexcept { return links_; }
  const std::vector<int>& incident(PairId node) const { return incident_[node]; }
  const GraphIndex& index() const noexcept { return nodes_.index(); }

  static int other_end(const VeLink& link, PairId node) { return link.lower == node ? link.upper : link.lower; }

 private:
  PairSpace nodes_;
  std::vector<VeLink> links_;
  std::vector<std::vector<int>> incident_;
};

VeGraph build_ve_graph(const ProperLevelGraph& graph);

enum class LinkLabel : char { Plus = '+', Minus = '-' };

struct LabeledVeGraph {
  VeGraph ve;
  std::vector<LinkLabel> labels;
  Drawing reference;
};

// '-' exactly when the link's two source edges cross in the reference.
// Throws DrawingMismatch for a drawing of another graph.
LabeledVeGraph label_ve_graph(VeGraph ve, const Drawing& reference);

struct OddCycleVerdict {
  bool consistent = true;
  std::vector<int> cycle;  // link ids of an odd-labeled cycle when inconsistent
};

OddCycleVerdict odd_cycle_test(const LabeledVeGraph& lve);

// DFS parity from each component's entry node. swapped[p] is relative to the
// reference drawing; tree_link[p] is the link p was discovered through (-1
// for entries).
struct SwapAssignment {
  std::vector<bool> swapped;
  std::vector<int> component;
  std::vector<PairId> entries;  // one per component, indexed by component id
  std::vector<int> tree_link;
};

class OddCycle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidChoices : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Components are numbered by their smallest node. `entries` overrides the
// entry (default: smallest node) of the components they fall in. Throws
// OddCycle when a non-tree link disagrees with the parities, InvalidChoices
// for two entries in one component.
SwapAssignment dfs_swap_assignment(const LabeledVeGraph& lve, std::span<const PairId> entries = {});

// Greedy component-swap embedder. The decision of a component says whether
// its entry node is swapped relative to the reference; the default keeps it.
// Throws OddCycle if the labeled ve-graph has an odd cycle.
EmbedOutcome healy_kuusik_embed(const ProperLevelGraph& graph, const Drawing& reference, const GreedyPolicy& policy);

// Node names are unordered pairs; the direction written is irrelevant.
struct HHChoices {
  std::vector<PairName> entries;
  std::vector<PairName> process;  // listed nodes first, then the rest canonically

  friend bool operator==(const HHChoices&, const HHChoices&) = default;
};

struct HarriganHealyRun {
  SwapAssignment phase1;
  std::vector<PairId> processed;
  Drawing drawing;
};

// Phase 1 marks swaps by DFS parity. Phase 2 starts from the reference and,
// for every node {a,b} in processing order whose current relative order
// differs from its target, exchanges the slots of a and b. The result is not
// checked for crossings.
HarriganHealyRun harrigan_healy_run(const ProperLevelGraph& graph, const Drawing& reference,
                                    const HHChoices& choices);
Drawing harrigan_healy_embed(const ProperLevelGraph& graph, const Drawing& reference, const HHChoices& choices);

}  // namespace levelplan
