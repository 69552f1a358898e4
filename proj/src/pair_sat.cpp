#include "levelplan/pair_sat.hpp"

#include <map>

namespace levelplan {

ConstraintSystem::ConstraintSystem(std::shared_ptr<const GraphIndex> index)
    : pairs_(std::move(index)), classes_(static_cast<std::size_t>(pairs_.size())) {}

void ConstraintSystem::add(const PairRelation& relation) {
  relations_.push_back(relation);
  if (!classes_.unite(relation.lower, relation.upper, relation.opposite) && !contradiction_) {
    contradiction_ = static_cast<int>(relations_.size()) - 1;
  }
}

ConstraintSystem build_constraints(const ProperLevelGraph& graph) {
  ConstraintSystem system(graph.shared_index());
  const auto& index = graph.index();
  const auto& edges = index.edges();
  const auto& pairs = system.pairs();
  for (int s = 0; s < static_cast<int>(index.levels().size()); ++s) {
    const auto& group = index.edges_from(s);
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        const auto& e = edges[group[i]];
        const auto& f = edges[group[j]];
        if (e.lower == f.lower || e.upper == f.upper) {
          continue;
        }
        // (e.lower < f.lower) <=> (e.upper < f.upper)
        const bool lower_forward = PairSpace::is_forward(e.lower, f.lower);
        const bool upper_forward = PairSpace::is_forward(e.upper, f.upper);
        system.add({pairs.id_of(e.lower, f.lower), pairs.id_of(e.upper, f.upper), lower_forward != upper_forward,
                    group[i], group[j]});
      }
    }
  }
  return system;
}

bool satisfiable(const ConstraintSystem& system) { return !system.contradictory(); }

std::vector<EquivalenceClass> equivalence_classes(const ConstraintSystem& system) {
  if (system.contradictory()) {
    throw Unsatisfiable("constraint system is contradictory");
  }
  std::map<int, int> class_of_root;
  std::vector<EquivalenceClass> classes;
  std::vector<bool> root_parity;
  for (PairId p = 0; p < system.pairs().size(); ++p) {
    const auto [root, parity] = system.root(p);
    const auto [it, inserted] = class_of_root.emplace(root, static_cast<int>(classes.size()));
    if (inserted) {
      classes.push_back({{p, false}});
      root_parity.push_back(parity);
    } else {
      classes[it->second].push_back({p, parity != root_parity[it->second]});
    }
  }
  return classes;
}

}  // namespace levelplan
