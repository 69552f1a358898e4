#include "levelplan/ve_graph.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "levelplan/crossings.hpp"

namespace levelplan {

VeGraph::VeGraph(const ProperLevelGraph& graph) : nodes_(graph.shared_index()) {
  const auto& index = graph.index();
  const auto& edges = index.edges();
  for (int s = 0; s < static_cast<int>(index.levels().size()); ++s) {
    const auto& group = index.edges_from(s);
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        const auto& e = edges[group[i]];
        const auto& f = edges[group[j]];
        if (e.lower == f.lower || e.upper == f.upper) {
          continue;
        }
        links_.push_back({nodes_.id_of(e.lower, f.lower), nodes_.id_of(e.upper, f.upper), group[i], group[j]});
      }
    }
  }
  incident_.resize(nodes_.size());
  for (int l = 0; l < static_cast<int>(links_.size()); ++l) {
    incident_[links_[l].lower].push_back(l);
    incident_[links_[l].upper].push_back(l);
  }
}

VeGraph build_ve_graph(const ProperLevelGraph& graph) { return VeGraph(graph); }

LabeledVeGraph label_ve_graph(VeGraph ve, const Drawing& reference) {
  const auto pos = positions(ve.index(), reference);
  const auto& edges = ve.index().edges();
  std::vector<LinkLabel> labels;
  labels.reserve(ve.links().size());
  for (const auto& link : ve.links()) {
    labels.push_back(edges_cross(edges[link.first_edge], edges[link.second_edge], pos) ? LinkLabel::Minus
                                                                                        : LinkLabel::Plus);
  }
  return {std::move(ve), std::move(labels), reference};
}

namespace {

struct Violation {
  PairId from;
  PairId to;
  int link;
};

struct Traversal {
  std::vector<bool> parity;
  std::vector<int> tree_link;
  std::vector<int> depth;
  std::vector<int> component;
  std::vector<PairId> entries;
  std::optional<Violation> violation;
};

std::vector<int> components_by_smallest(const VeGraph& ve, std::vector<PairId>& smallest) {
  const int n = ve.nodes().size();
  std::vector<int> component(n, -1);
  for (PairId start = 0; start < n; ++start) {
    if (component[start] >= 0) {
      continue;
    }
    const int c = static_cast<int>(smallest.size());
    smallest.push_back(start);
    std::vector<PairId> stack{start};
    component[start] = c;
    while (!stack.empty()) {
      const PairId u = stack.back();
      stack.pop_back();
      for (int l : ve.incident(u)) {
        const PairId v = VeGraph::other_end(ve.links()[l], u);
        if (component[v] < 0) {
          component[v] = c;
          stack.push_back(v);
        }
      }
    }
  }
  return component;
}

// Depth-first traversal of every component from its entry; stops at the
// first link whose label disagrees with the endpoint parities.
Traversal traverse(const LabeledVeGraph& lve, std::span<const PairId> entry_overrides) {
  const auto& ve = lve.ve;
  const int n = ve.nodes().size();
  Traversal t;
  t.component = components_by_smallest(ve, t.entries);
  std::set<int> overridden;
  for (PairId e : entry_overrides) {
    if (e < 0 || e >= n) {
      throw InvalidChoices("entry node out of range");
    }
    if (!overridden.insert(t.component[e]).second) {
      throw InvalidChoices("two entries in one ve-graph component");
    }
    t.entries[t.component[e]] = e;
  }
  t.parity.assign(n, false);
  t.tree_link.assign(n, -1);
  t.depth.assign(n, -1);
  for (PairId entry : t.entries) {
    t.depth[entry] = 0;
    std::vector<std::pair<PairId, std::size_t>> stack{{entry, 0}};
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next == ve.incident(u).size()) {
        stack.pop_back();
        continue;
      }
      const int l = ve.incident(u)[next++];
      if (l == t.tree_link[u]) {
        continue;
      }
      const PairId v = VeGraph::other_end(ve.links()[l], u);
      const bool minus = lve.labels[l] == LinkLabel::Minus;
      if (t.depth[v] < 0) {
        t.parity[v] = t.parity[u] != minus;
        t.tree_link[v] = l;
        t.depth[v] = t.depth[u] + 1;
        stack.emplace_back(v, 0);
      } else if ((t.parity[u] != t.parity[v]) != minus) {
        t.violation = Violation{u, v, l};
        return t;
      }
    }
  }
  return t;
}

}  // namespace

OddCycleVerdict odd_cycle_test(const LabeledVeGraph& lve) {
  const auto t = traverse(lve, {});
  if (!t.violation) {
    return {};
  }
  OddCycleVerdict verdict{false, {t.violation->link}};
  const auto& links = lve.ve.links();
  PairId a = t.violation->from;
  PairId b = t.violation->to;
  std::vector<int> from_b;
  while (a != b) {
    if (t.depth[a] >= t.depth[b]) {
      verdict.cycle.push_back(t.tree_link[a]);
      a = VeGraph::other_end(links[t.tree_link[a]], a);
    } else {
      from_b.push_back(t.tree_link[b]);
      b = VeGraph::other_end(links[t.tree_link[b]], b);
    }
  }
  verdict.cycle.insert(verdict.cycle.end(), from_b.rbegin(), from_b.rend());
  return verdict;
}

SwapAssignment dfs_swap_assignment(const LabeledVeGraph& lve, std::span<const PairId> entries) {
  auto t = traverse(lve, entries);
  if (t.violation) {
    throw OddCycle("ve-graph has an odd-labeled cycle");
  }
  return {std::move(t.parity), std::move(t.component), std::move(t.entries), std::move(t.tree_link)};
}

EmbedOutcome healy_kuusik_embed(const ProperLevelGraph& graph, const Drawing& reference, const GreedyPolicy& policy) {
  const auto lve = label_ve_graph(build_ve_graph(graph), reference);
  const auto swaps = dfs_swap_assignment(lve);
  const auto pos = positions(graph.index(), reference);
  const auto& nodes = lve.ve.nodes();
  std::vector<DecisionClass> classes(swaps.entries.size());
  for (std::size_t c = 0; c < swaps.entries.size(); ++c) {
    const PairId entry = swaps.entries[c];
    const auto& vp = nodes.pair(entry);
    classes[c].members.push_back({entry, (pos[vp.first] < pos[vp.second]) != swaps.swapped[entry]});
  }
  for (PairId p = 0; p < nodes.size(); ++p) {
    const int c = swaps.component[p];
    if (p == swaps.entries[c]) {
      continue;
    }
    const auto& vp = nodes.pair(p);
    classes[c].members.push_back({p, (pos[vp.first] < pos[vp.second]) != swaps.swapped[p]});
  }
  return run_greedy(nodes, classes, policy, false);
}

HarriganHealyRun harrigan_healy_run(const ProperLevelGraph& graph, const Drawing& reference,
                                    const HHChoices& choices) {
  auto lve = label_ve_graph(build_ve_graph(graph), reference);
  const auto& nodes = lve.ve.nodes();
  auto resolve = [&](const PairName& name) {
    const auto r = nodes.resolve(name);
    if (!r) {
      throw InvalidChoices("unknown ve-graph node " + format_pair(name));
    }
    return r->first;
  };
  std::vector<PairId> entries;
  for (const auto& name : choices.entries) {
    entries.push_back(resolve(name));
  }
  HarriganHealyRun run;
  run.phase1 = dfs_swap_assignment(lve, entries);

  std::vector<bool> listed(nodes.size(), false);
  for (const auto& name : choices.process) {
    const PairId p = resolve(name);
    if (listed[p]) {
      throw InvalidChoices("node " + format_pair(name) + " listed twice in the processing order");
    }
    listed[p] = true;
    run.processed.push_back(p);
  }
  for (PairId p = 0; p < nodes.size(); ++p) {
    if (!listed[p]) {
      run.processed.push_back(p);
    }
  }

  const auto& index = graph.index();
  const auto reference_pos = positions(index, reference);
  auto pos = reference_pos;
  for (PairId p : run.processed) {
    const auto& vp = nodes.pair(p);
    const bool target = (reference_pos[vp.first] < reference_pos[vp.second]) != run.phase1.swapped[p];
    const bool current = pos[vp.first] < pos[vp.second];
    if (target != current) {
      std::swap(pos[vp.first], pos[vp.second]);
    }
  }
  run.drawing = drawing_from_positions(index, pos);
  return run;
}

Drawing harrigan_healy_embed(const ProperLevelGraph& graph, const Drawing& reference, const HHChoices& choices) {
  return harrigan_healy_run(graph, reference, choices).drawing;
}

}  // namespace levelplan
