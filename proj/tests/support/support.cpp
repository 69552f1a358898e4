#include "support.hpp"

#include <algorithm>
#include <numeric>

#include "levelplan/crossings.hpp"
#include "levelplan/formats.hpp"
#include "levelplan/rng.hpp"

namespace testsupport {

using namespace levelplan;

ProperLevelGraph proper_from_lgf(std::string_view text) { return ProperLevelGraph::from_proper(parse_lgf(text)); }

ProperLevelGraph k22() {
  return ProperLevelGraph::from_proper(LevelGraph({{"u1", 1}, {"u2", 1}, {"v1", 2}, {"v2", 2}},
                                                  {{"u1", "v1"}, {"u1", "v2"}, {"u2", "v1"}, {"u2", "v2"}}));
}

ProperLevelGraph path(int n) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    vertices.push_back({"p" + std::to_string(i), i});
    if (i > 1) {
      edges.push_back({"p" + std::to_string(i - 1), "p" + std::to_string(i)});
    }
  }
  return ProperLevelGraph::from_proper(LevelGraph(std::move(vertices), std::move(edges)));
}

namespace {

struct Point {
  long long x;
  long long y;
};

int orientation(Point a, Point b, Point c) {
  const long long v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (v > 0) - (v < 0);
}

bool open_segments_cross(Point a, Point b, Point c, Point d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

}  // namespace

std::size_t geometric_crossings(const ProperLevelGraph& graph, const Drawing& drawing) {
  std::map<std::string, Point> at;
  for (const auto& [level, order] : drawing.orders) {
    for (std::size_t i = 0; i < order.size(); ++i) {
      at[order[i]] = {static_cast<long long>(i), level};
    }
  }
  const auto& edges = graph.graph().edges();
  std::size_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (open_segments_cross(at.at(edges[i].lower), at.at(edges[i].upper), at.at(edges[j].lower),
                              at.at(edges[j].upper))) {
        ++count;
      }
    }
  }
  return count;
}

std::size_t inversion_count(const std::vector<int>& perm) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      count += perm[i] > perm[j] ? 1 : 0;
    }
  }
  return count;
}

bool planar_by_full_enumeration(const ProperLevelGraph& graph) {
  const auto& index = graph.index();
  const int slots = static_cast<int>(index.levels().size());
  std::vector<std::vector<int>> perms(slots);
  for (int s = 0; s < slots; ++s) {
    perms[s] = index.members(s);
  }
  std::vector<int> pos(index.vertex_count());
  for (;;) {
    for (int s = 0; s < slots; ++s) {
      for (std::size_t i = 0; i < perms[s].size(); ++i) {
        pos[perms[s][i]] = static_cast<int>(i);
      }
    }
    if (count_crossings(index, pos) == 0) {
      return true;
    }
    int s = 0;
    while (s < slots && !std::next_permutation(perms[s].begin(), perms[s].end())) {
      ++s;
    }
    if (s == slots) {
      return false;
    }
  }
}

void for_each_small_graph(int max_vertices, int max_levels,
                          const std::function<void(const ProperLevelGraph&)>& fn) {
  std::vector<int> widths;
  std::function<void()> compose = [&]() {
    if (!widths.empty()) {
      std::vector<Vertex> vertices;
      for (std::size_t l = 0; l < widths.size(); ++l) {
        for (int i = 0; i < widths[l]; ++i) {
          vertices.push_back({"v" + std::to_string(l + 1) + "_" + std::to_string(i), static_cast<int>(l + 1)});
        }
      }
      std::vector<Edge> candidates;
      for (const auto& a : vertices) {
        for (const auto& b : vertices) {
          if (b.level == a.level + 1) {
            candidates.push_back({a.id, b.id});
          }
        }
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << candidates.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t e = 0; e < candidates.size(); ++e) {
          if (mask >> e & 1) {
            edges.push_back(candidates[e]);
          }
        }
        fn(ProperLevelGraph::from_proper(LevelGraph(vertices, std::move(edges))));
      }
    }
    const int used = std::accumulate(widths.begin(), widths.end(), 0);
    if (static_cast<int>(widths.size()) == max_levels) {
      return;
    }
    for (int w = 1; used + w <= max_vertices; ++w) {
      widths.push_back(w);
      compose();
      widths.pop_back();
    }
  };
  compose();
}

std::vector<ProperLevelGraph> random_corpus(std::size_t count, int max_vertices, std::uint64_t seed) {
  std::vector<ProperLevelGraph> out;
  for (std::uint64_t i = 0; out.size() < count; ++i) {
    const std::uint64_t s = mix64(seed ^ i);
    GeneratorConfig config{1, 5, 1, 4, 0.15 + 0.6 * static_cast<double>(s % 1000) / 1000.0, s};
    auto graph = random_proper_graph(config);
    if (static_cast<int>(graph.graph().vertices().size()) <= max_vertices) {
      out.push_back(std::move(graph));
    }
  }
  return out;
}

Drawing random_drawing(const ProperLevelGraph& graph, std::uint64_t seed) {
  Rng rng(seed);
  Drawing drawing = canonical_drawing(graph.index());
  for (auto& [level, order] : drawing.orders) {
    shuffle(rng, order);
  }
  return drawing;
}

Drawing mirrored(const Drawing& drawing) {
  Drawing out = drawing;
  for (auto& [level, order] : out.orders) {
    std::reverse(order.begin(), order.end());
  }
  return out;
}

LevelGraph reverse_levels(const LevelGraph& graph) {
  int top = 0;
  for (const auto& v : graph.vertices()) {
    top = std::max(top, v.level);
  }
  std::vector<Vertex> vertices;
  for (const auto& v : graph.vertices()) {
    vertices.push_back({v.id, top + 1 - v.level});
  }
  std::vector<Edge> edges;
  for (const auto& e : graph.edges()) {
    edges.push_back({e.upper, e.lower});
  }
  return LevelGraph(std::move(vertices), std::move(edges));
}

Drawing reverse_levels(const Drawing& drawing, int top) {
  Drawing out;
  for (const auto& [level, order] : drawing.orders) {
    out.orders[top + 1 - level] = order;
  }
  return out;
}

LevelGraph renamed(const LevelGraph& graph, const std::string& prefix) {
  std::vector<Vertex> vertices;
  for (const auto& v : graph.vertices()) {
    vertices.push_back({prefix + v.id, v.level});
  }
  std::vector<Edge> edges;
  for (const auto& e : graph.edges()) {
    edges.push_back({prefix + e.lower, prefix + e.upper});
  }
  return LevelGraph(std::move(vertices), std::move(edges));
}

LevelGraph random_level_graph(std::uint64_t seed, int max_levels, int max_width, double edge_probability) {
  Rng rng(seed);
  const int levels = uniform_int(rng, 1, max_levels);
  std::vector<Vertex> vertices;
  for (int l = 1; l <= levels; ++l) {
    const int width = uniform_int(rng, 1, max_width);
    for (int i = 0; i < width; ++i) {
      vertices.push_back({"n" + std::to_string(l) + "_" + std::to_string(i), l});
    }
  }
  std::vector<Edge> edges;
  for (const auto& a : vertices) {
    for (const auto& b : vertices) {
      if (b.level > a.level && uniform_unit(rng) < edge_probability) {
        edges.push_back({a.id, b.id});
      }
    }
  }
  return LevelGraph(std::move(vertices), std::move(edges));
}

namespace {

bool keeps_failure(const FailureReport& report, LevelGraph candidate) {
  const auto graph = ProperLevelGraph::from_proper(std::move(candidate));
  const auto oracle = brute_force_test(graph);
  if (oracle.budget_exceeded() || oracle.verdict->planar != report.oracle_planar) {
    return false;
  }
  try {
    return evaluate(graph, adapt_replay(graph, report.replay), report.oracle_planar).failure == report.kind;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

bool one_minimal(const FailureReport& report) {
  const auto& g = report.graph.graph();
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    auto edges = g.edges();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
    if (keeps_failure(report, LevelGraph(g.vertices(), std::move(edges)))) {
      return false;
    }
  }
  for (const auto& gone : g.vertices()) {
    std::vector<Vertex> vertices;
    for (const auto& v : g.vertices()) {
      if (v.id != gone.id) {
        vertices.push_back(v);
      }
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
      if (e.lower != gone.id && e.upper != gone.id) {
        edges.push_back(e);
      }
    }
    if (keeps_failure(report, LevelGraph(std::move(vertices), std::move(edges)))) {
      return false;
    }
  }
  return true;
}

}  // namespace testsupport
