// Searches for a small level-planar instance on which the greedy class
// assignment runs into the bundled-counterexample shape (see
// has_bundled_shape), or completes a given instance with --graph/--replay.
// Writes graph.lgf plus one replay per embedder into the output directory.

#include <filesystem>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "levelplan/bundled.hpp"
#include "levelplan/crossings.hpp"
#include "levelplan/formats.hpp"
#include "levelplan/lab.hpp"
#include "levelplan/pair_sat.hpp"
#include "levelplan/rng.hpp"

using namespace levelplan;

namespace {

// Renames vertices to a, b, c, ... in (level, id) order.
std::map<std::string, std::string> letter_names(const LevelGraph& graph) {
  std::map<std::string, std::string> names;
  const auto canonical = graph.canonical();
  int next = 0;
  for (const auto& v : canonical.vertices()) {
    std::string name;
    int n = next++;
    do {
      name.insert(name.begin(), static_cast<char>('a' + n % 26));
      n = n / 26 - 1;
    } while (n >= 0);
    names.emplace(v.id, name);
  }
  return names;
}

PairName rename(const PairName& p, const std::map<std::string, std::string>& names) {
  return {p.level, names.at(p.first), names.at(p.second)};
}

// Tries every ordered triple of nontrivial classes with every polarity as
// the replayed free picks; returns the first replay with the wanted shape.
std::optional<std::vector<ClassChoice>> find_triple(const ProperLevelGraph& graph) {
  const auto system = build_constraints(graph);
  if (!satisfiable(system)) {
    return std::nullopt;
  }
  std::vector<PairName> reps;
  for (const auto& c : equivalence_classes(system)) {
    if (c.size() > 1) {
      reps.push_back(system.pairs().name(c.front().pair));
    }
  }
  if (reps.size() < 3) {
    return std::nullopt;
  }
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = 0; b < reps.size(); ++b) {
      for (std::size_t c = 0; c < reps.size(); ++c) {
        if (a == b || b == c || a == c) {
          continue;
        }
        for (int bits = 0; bits < 8; ++bits) {
          std::vector<ClassChoice> picks{{reps[a], (bits & 1) != 0}, {reps[b], (bits & 2) != 0},
                                         {reps[c], (bits & 4) != 0}};
          const auto outcome = greedy_embed(graph, GreedyPolicy::replaying(picks));
          if (has_bundled_shape(graph, outcome)) {
            return outcome.free_choices;
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool keeps_shape(const ProperLevelGraph& graph, const std::vector<ClassChoice>& picks) {
  const auto oracle = brute_force_test(graph);
  if (oracle.budget_exceeded() || !oracle.verdict->planar || !satisfiable(build_constraints(graph))) {
    return false;
  }
  const auto replay = adapt_replay(graph, Replay{Algorithm::Randerath, std::nullopt, picks, {}});
  if (replay.classes.size() != picks.size()) {
    return false;
  }
  return has_bundled_shape(graph, greedy_embed(graph, replay.policy()));
}

// Deletes edges, then vertices, while the instance keeps the shape.
LevelGraph shrink_keeping_shape(LevelGraph graph, const std::vector<ClassChoice>& picks) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < graph.edges().size();) {
      auto edges = graph.edges();
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
      LevelGraph candidate(graph.vertices(), std::move(edges));
      if (keeps_shape(ProperLevelGraph::from_proper(candidate), picks)) {
        graph = std::move(candidate);
        changed = true;
      } else {
        ++e;
      }
    }
    for (std::size_t v = 0; v < graph.vertices().size();) {
      const auto gone = graph.vertices()[v].id;
      auto vertices = graph.vertices();
      vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(v));
      std::vector<Edge> edges;
      for (const auto& edge : graph.edges()) {
        if (edge.lower != gone && edge.upper != gone) {
          edges.push_back(edge);
        }
      }
      LevelGraph candidate(std::move(vertices), std::move(edges));
      if (keeps_shape(ProperLevelGraph::from_proper(candidate), picks)) {
        graph = std::move(candidate);
        changed = true;
      } else {
        ++v;
      }
    }
  }
  return graph;
}

// Checks the instance against every bundled requirement, searches
// Harrigan-Healy choices with the canonical reference, and writes the files.
bool complete(const ProperLevelGraph& graph, const std::vector<ClassChoice>& choices, const std::string& out_dir) {
  const auto oracle = brute_force_test(graph);
  if (oracle.budget_exceeded() || !oracle.verdict->planar || !satisfiable(build_constraints(graph))) {
    return false;
  }
  const auto outcome = greedy_embed(graph, GreedyPolicy::replaying(choices));
  if (!has_bundled_shape(graph, outcome)) {
    return false;
  }
  const auto reference = canonical_drawing(graph.index());
  const auto hk = healy_kuusik_embed(graph, reference, GreedyPolicy::replaying(choices));
  if (hk.success()) {
    return false;
  }
  Replay hh;
  bool found = false;
  for (std::uint64_t k = 0; k < 10000 && !found; ++k) {
    hh = random_replay(graph, Algorithm::HarriganHealy, mix64(k));
    hh.reference.reset();
    found = count_crossings(graph, harrigan_healy_embed(graph, reference, hh.hh)) > 0;
  }
  if (!found) {
    return false;
  }
  // Drop processing and entry items the crossing does not depend on.
  auto crosses = [&](const HHChoices& c) { return count_crossings(graph, harrigan_healy_embed(graph, reference, c)) > 0; };
  for (auto* list : {&hh.hh.process, &hh.hh.entries}) {
    for (std::size_t k = list->size(); k-- > 0;) {
      auto trial = hh.hh;
      auto& items = list == &hh.hh.process ? trial.process : trial.entries;
      items.erase(items.begin() + static_cast<std::ptrdiff_t>(k));
      if (crosses(trial)) {
        hh.hh = std::move(trial);
      }
    }
  }
  std::filesystem::create_directories(out_dir);
  write_text_file(out_dir + "/graph.lgf", write_lgf(graph.graph()));
  write_text_file(out_dir + "/randerath.rpf", write_rpf(Replay{Algorithm::Randerath, std::nullopt, choices, {}}));
  write_text_file(out_dir + "/healy-kuusik.rpf", write_rpf(Replay{Algorithm::HealyKuusik, std::nullopt, choices, {}}));
  write_text_file(out_dir + "/harrigan-healy.rpf", write_rpf(hh));
  std::cout << format_trace(outcome) << "healy-kuusik\n" << format_trace(hk);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"search for the bundled level-planarity counterexample"};
  std::uint64_t seed = 1;
  std::uint64_t iterations = 200000;
  std::string out_dir = "bundled";
  std::string graph_file;
  std::string replay_file;
  int max_vertices = 14;
  double probability = 0.3;
  int max_levels = 4;
  int max_width = 5;
  app.add_option("--seed", seed);
  app.add_option("--iterations", iterations);
  app.add_option("--max-vertices", max_vertices);
  app.add_option("--edge-probability", probability);
  app.add_option("--max-levels", max_levels);
  app.add_option("--max-width", max_width);
  app.add_option("--graph", graph_file, "complete a given instance instead of searching");
  app.add_option("--replay", replay_file, "randerath replay for --graph");
  app.add_option("-o,--out", out_dir);
  CLI11_PARSE(app, argc, argv);

  if (!graph_file.empty()) {
    const auto graph = ProperLevelGraph::from_proper(parse_lgf(read_text_file(graph_file)));
    const auto replay = parse_rpf(read_text_file(replay_file));
    if (complete(graph, replay.classes, out_dir)) {
      return 0;
    }
    std::cerr << "instance does not qualify\n";
    return 1;
  }

  GeneratorConfig generator{3, max_levels, 3, max_width, probability, 0};
  for (std::uint64_t i = 0; i < iterations; ++i) {
    generator.seed = mix64(seed ^ i);
    const auto graph = random_proper_graph(generator);
    const auto oracle = brute_force_test(graph);
    if (oracle.budget_exceeded() || !oracle.verdict->planar) {
      continue;
    }
    const auto picks = find_triple(graph);
    if (!picks) {
      continue;
    }
    const auto shrunk = shrink_keeping_shape(graph.graph(), *picks);
    if (static_cast<int>(shrunk.vertices().size()) > max_vertices) {
      continue;
    }

    const auto names = letter_names(shrunk);
    std::vector<Vertex> vertices;
    for (const auto& v : shrunk.vertices()) {
      vertices.push_back({names.at(v.id), v.level});
    }
    std::vector<Edge> edges;
    for (const auto& e : shrunk.edges()) {
      edges.push_back({names.at(e.lower), names.at(e.upper)});
    }
    const auto renamed = ProperLevelGraph::from_proper(LevelGraph(std::move(vertices), std::move(edges)));
    const auto adapted = adapt_replay(ProperLevelGraph::from_proper(shrunk),
                                      Replay{Algorithm::Randerath, std::nullopt, *picks, {}});
    std::vector<ClassChoice> choices;
    for (const auto& c : adapted.classes) {
      choices.push_back({rename(c.literal, names), c.value});
    }
    if (complete(renamed, choices, out_dir)) {
      std::cout << "iteration " << i << " seed " << generator.seed << '\n';
      return 0;
    }
  }
  std::cerr << "no instance found\n";
  return 1;
}
