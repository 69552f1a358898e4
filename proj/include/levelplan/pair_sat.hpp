#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "levelplan/level_graph.hpp"
#include "levelplan/pair_space.hpp"
#include "levelplan/parity_union_find.hpp"

namespace levelplan {

// Literal (first<second) of `lower` equals literal of `upper` XOR `opposite`.
// Induced by two independent edges between the same adjacent levels.
struct PairRelation {
  PairId lower = 0;
  PairId upper = 0;
  bool opposite = false;
  int first_edge = 0;   // indices into GraphIndex::edges()
  int second_edge = 0;
};

// Planarity constraints over the canonical pair variables. Antisymmetry is
// structural: the literal (b<a) is the negation of the canonical (a<b).
class ConstraintSystem {
 public:
  explicit ConstraintSystem(std::shared_ptr<const GraphIndex> index);

  const PairSpace& pairs() const noexcept { return pairs_; }
  const std::vector<PairRelation>& relations() const noexcept { return relations_; }
  bool contradictory() const noexcept { return contradiction_.has_value(); }
  // First relation whose merge closed an odd cycle.
  std::optional<int> first_contradiction() const noexcept { return contradiction_; }

  // (class root, parity of p relative to the root)
  std::pair<int, bool> root(PairId p) const { return classes_.find(p); }

  void add(const PairRelation& relation);

 private:
  PairSpace pairs_;
  std::vector<PairRelation> relations_;
  ParityUnionFind classes_;
  std::optional<int> contradiction_;
};

ConstraintSystem build_constraints(const ProperLevelGraph& graph);

bool satisfiable(const ConstraintSystem& system);

struct ClassMember {
  PairId pair = 0;
  bool opposite = false;  // relative to the representative (members[0])
};

using EquivalenceClass = std::vector<ClassMember>;

class Unsatisfiable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Classes sorted by representative, the smallest PairId of each class;
// members ascending. Throws Unsatisfiable on a contradictory system.
std::vector<EquivalenceClass> equivalence_classes(const ConstraintSystem& system);

}  // namespace levelplan
