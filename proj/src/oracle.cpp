#include "levelplan/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "levelplan/crossings.hpp"
#include "levelplan/rng.hpp"

namespace levelplan {

namespace {

struct BudgetExhausted {};

class Search {
 public:
  Search(const GraphIndex& index, std::uint64_t budget)
      : index_(index), budget_(budget), pos_(index.vertex_count(), 0), dead_(index.levels().size()) {}

  bool place(int slot) {
    if (slot == static_cast<int>(index_.levels().size())) {
      return true;
    }
    std::vector<int> order = index_.members(slot);
    do {
      if (++extensions_ > budget_) {
        throw BudgetExhausted{};
      }
      for (int p = 0; p < static_cast<int>(order.size()); ++p) {
        pos_[order[p]] = p;
      }
      if (slot > 0 && crosses_below(slot)) {
        continue;
      }
      if (dead_[slot].count(order) != 0) {
        continue;
      }
      if (place(slot + 1)) {
        return true;
      }
      dead_[slot].insert(order);
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
  }

  const std::vector<int>& positions() const { return pos_; }
  std::uint64_t extensions() const { return extensions_; }

 private:
  bool crosses_below(int slot) const {
    const auto& edges = index_.edges();
    const auto& group = index_.edges_from(slot - 1);
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        if (edges_cross(edges[group[i]], edges[group[j]], pos_)) {
          return true;
        }
      }
    }
    return false;
  }

  const GraphIndex& index_;
  std::uint64_t budget_;
  std::uint64_t extensions_ = 0;
  std::vector<int> pos_;
  std::vector<std::set<std::vector<int>>> dead_;
};

}  // namespace

OracleResult brute_force_test(const ProperLevelGraph& graph, std::uint64_t budget) {
  Search search(graph.index(), budget);
  OracleResult result;
  try {
    const bool planar = search.place(0);
    OracleVerdict verdict{planar, std::nullopt};
    if (planar) {
      verdict.witness = drawing_from_positions(graph.index(), search.positions());
    }
    result.verdict = std::move(verdict);
  } catch (const BudgetExhausted&) {
    result.verdict.reset();
  }
  result.extensions = search.extensions();
  return result;
}

void GeneratorConfig::check() const {
  if (min_levels < 1 || max_levels < min_levels) {
    throw std::invalid_argument("level-count range must be nonempty and start at >= 1");
  }
  if (min_width < 1 || max_width < min_width) {
    throw std::invalid_argument("width range must be nonempty and start at >= 1");
  }
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0,1]");
  }
}

ProperLevelGraph random_proper_graph(const GeneratorConfig& config) {
  config.check();
  Rng rng(config.seed);
  const int level_count = uniform_int(rng, config.min_levels, config.max_levels);
  std::vector<std::vector<std::string>> ids(level_count);
  std::vector<Vertex> vertices;
  for (int l = 0; l < level_count; ++l) {
    const int width = uniform_int(rng, config.min_width, config.max_width);
    for (int i = 0; i < width; ++i) {
      ids[l].push_back("v" + std::to_string(l + 1) + "_" + std::to_string(i));
      vertices.push_back({ids[l].back(), l + 1});
    }
  }
  std::vector<Edge> edges;
  for (int l = 0; l + 1 < level_count; ++l) {
    for (const auto& u : ids[l]) {
      for (const auto& v : ids[l + 1]) {
        if (uniform_unit(rng) < config.edge_probability) {
          edges.push_back({u, v});
        }
      }
    }
  }
  return ProperLevelGraph::from_proper(LevelGraph(std::move(vertices), std::move(edges)));
}

}  // namespace levelplan
