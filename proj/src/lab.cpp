#include "levelplan/lab.hpp"

#include <filesystem>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "levelplan/crossings.hpp"
#include "levelplan/formats.hpp"
#include "levelplan/greedy.hpp"
#include "levelplan/pair_sat.hpp"
#include "levelplan/rng.hpp"
#include "levelplan/ve_graph.hpp"

namespace levelplan {

namespace {

std::string crossing_evidence(const ProperLevelGraph& graph, const Drawing& drawing) {
  const auto& index = graph.index();
  const auto pos = positions(index, drawing);
  const auto pairs = crossing_pairs(index, pos);
  std::ostringstream out;
  out << "crossings " << pairs.size() << '\n';
  const auto edge_name = [&](int e) {
    return index.id(index.edges()[e].lower) + "-" + index.id(index.edges()[e].upper);
  };
  for (const auto& [a, b] : pairs) {
    out << "cross " << edge_name(a) << ' ' << edge_name(b) << '\n';
  }
  out << write_ldf(drawing);
  return out.str();
}

std::string verdict_evidence(Algorithm algorithm, bool says_planar, bool oracle_planar) {
  std::string out(to_string(algorithm));
  out += says_planar ? " says planar" : " says not planar";
  out += oracle_planar ? ", oracle says planar\n" : ", oracle says not planar\n";
  return out;
}

Drawing random_reference(const GraphIndex& index, Rng& rng) {
  std::vector<int> pos(index.vertex_count());
  for (int s = 0; s < static_cast<int>(index.levels().size()); ++s) {
    std::vector<int> order = index.members(s);
    shuffle(rng, order);
    for (int p = 0; p < static_cast<int>(order.size()); ++p) {
      pos[order[p]] = p;
    }
  }
  return drawing_from_positions(index, pos);
}

// Judges an embedding outcome from one of the greedy embedders.
Evaluation judge_outcome(const ProperLevelGraph& graph, const EmbedOutcome& outcome, bool oracle_planar) {
  Evaluation ev;
  if (outcome.success()) {
    ev.drawing = outcome.drawing;
    if (count_crossings(graph, *outcome.drawing) > 0) {
      ev.failure = FailureKind::NonPlanarOutput;
      ev.evidence = format_trace(outcome) + crossing_evidence(graph, *outcome.drawing);
    } else if (!oracle_planar) {
      ev.failure = FailureKind::FalsePositive;
      ev.evidence = format_trace(outcome);
    }
  } else if (oracle_planar) {
    ev.failure = FailureKind::FalseNegative;
    ev.evidence = format_trace(outcome);
  }
  return ev;
}

}  // namespace

std::string_view to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::FalseNegative:
      return "false-negative";
    case FailureKind::FalsePositive:
      return "false-positive";
    case FailureKind::NonPlanarOutput:
      return "non-planar-output";
  }
  return "unknown";
}

std::optional<FailureKind> parse_failure_kind(std::string_view name) {
  for (auto kind : {FailureKind::FalseNegative, FailureKind::FalsePositive, FailureKind::NonPlanarOutput}) {
    if (to_string(kind) == name) {
      return kind;
    }
  }
  return std::nullopt;
}

Evaluation evaluate(const ProperLevelGraph& graph, const Replay& replay, bool oracle_planar) {
  const Drawing reference = replay.reference.value_or(canonical_drawing(graph.index()));
  Evaluation ev;
  switch (replay.algorithm) {
    case Algorithm::Oracle: {
      const auto result = brute_force_test(graph);
      if (result.budget_exceeded()) {
        ev.evidence = "oracle budget exceeded\n";
        return ev;
      }
      if (result.verdict->witness) {
        ev.drawing = result.verdict->witness;
        if (count_crossings(graph, *ev.drawing) > 0) {
          ev.failure = FailureKind::NonPlanarOutput;
          ev.evidence = crossing_evidence(graph, *ev.drawing);
        }
      }
      return ev;
    }
    case Algorithm::SatCheck: {
      const bool says = satisfiable(build_constraints(graph));
      if (says != oracle_planar) {
        ev.failure = oracle_planar ? FailureKind::FalseNegative : FailureKind::FalsePositive;
        ev.evidence = verdict_evidence(replay.algorithm, says, oracle_planar);
      }
      return ev;
    }
    case Algorithm::VeGraphTest: {
      const bool says = odd_cycle_test(label_ve_graph(build_ve_graph(graph), reference)).consistent;
      if (says != oracle_planar) {
        ev.failure = oracle_planar ? FailureKind::FalseNegative : FailureKind::FalsePositive;
        ev.evidence = verdict_evidence(replay.algorithm, says, oracle_planar);
      }
      return ev;
    }
    case Algorithm::Randerath: {
      if (!satisfiable(build_constraints(graph))) {
        if (oracle_planar) {
          ev.failure = FailureKind::FalseNegative;
          ev.evidence = "unsatisfiable\n";
        }
        return ev;
      }
      return judge_outcome(graph, greedy_embed(graph, replay.policy()), oracle_planar);
    }
    case Algorithm::HealyKuusik: {
      if (!odd_cycle_test(label_ve_graph(build_ve_graph(graph), reference)).consistent) {
        if (oracle_planar) {
          ev.failure = FailureKind::FalseNegative;
          ev.evidence = "odd cycle\n";
        }
        return ev;
      }
      return judge_outcome(graph, healy_kuusik_embed(graph, reference, replay.policy()), oracle_planar);
    }
    case Algorithm::HarriganHealy: {
      if (!odd_cycle_test(label_ve_graph(build_ve_graph(graph), reference)).consistent) {
        if (oracle_planar) {
          ev.failure = FailureKind::FalseNegative;
          ev.evidence = "odd cycle\n";
        }
        return ev;
      }
      ev.drawing = harrigan_healy_embed(graph, reference, replay.hh);
      if (count_crossings(graph, *ev.drawing) > 0 && oracle_planar) {
        ev.failure = FailureKind::NonPlanarOutput;
        ev.evidence = crossing_evidence(graph, *ev.drawing);
      }
      return ev;
    }
  }
  return ev;
}

bool reproduces(const FailureReport& report) {
  try {
    const auto ev = evaluate(report.graph, report.replay, report.oracle_planar);
    return ev.failure == report.kind && ev.evidence == report.evidence;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::string report_name(const FailureReport& report) {
  std::ostringstream out;
  out << std::setw(6) << std::setfill('0') << report.iteration << '-' << to_string(report.algorithm());
  return out.str();
}

void write_report(const std::string& dir, const FailureReport& report) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  write_text_file((base / "graph.lgf").string(), write_lgf(report.graph.graph()));
  write_text_file((base / "replay.rpf").string(), write_rpf(report.replay));
  std::ostringstream out;
  out << "algorithm " << to_string(report.algorithm()) << '\n'
      << "kind " << to_string(report.kind) << '\n'
      << "oracle " << (report.oracle_planar ? "planar" : "not-planar") << '\n'
      << "seed " << report.seed << '\n'
      << "iteration " << report.iteration << '\n'
      << "evidence\n"
      << report.evidence;
  write_text_file((base / "report.txt").string(), out.str());
}

FailureReport read_report(const std::string& dir) {
  const std::filesystem::path base(dir);
  FailureReport report;
  report.graph = make_proper(parse_lgf(read_text_file((base / "graph.lgf").string())));
  report.replay = parse_rpf(read_text_file((base / "replay.rpf").string()));
  const std::string text = read_text_file((base / "report.txt").string());
  std::size_t start = 0;
  int line = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    const std::string row = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    start = end == std::string::npos ? text.size() : end + 1;
    ++line;
    if (row == "evidence") {
      report.evidence = text.substr(start);
      break;
    }
    const auto space = row.find(' ');
    const std::string key = row.substr(0, space);
    const std::string value = space == std::string::npos ? "" : row.substr(space + 1);
    if (key == "algorithm") {
      if (parse_algorithm(value) != report.replay.algorithm) {
        throw ParseError(line, "algorithm does not match replay.rpf");
      }
    } else if (key == "kind") {
      const auto kind = parse_failure_kind(value);
      if (!kind) {
        throw ParseError(line, "unknown failure kind '" + value + "'");
      }
      report.kind = *kind;
    } else if (key == "oracle") {
      report.oracle_planar = value == "planar";
    } else if (key == "seed" || key == "iteration") {
      try {
        (key == "seed" ? report.seed : report.iteration) = std::stoull(value);
      } catch (const std::exception&) {
        throw ParseError(line, "malformed " + key);
      }
    } else {
      throw ParseError(line, "unknown report field '" + key + "'");
    }
  }
  return report;
}

void FuzzConfig::check() const {
  generator.check();
  if (iterations < 1) {
    throw std::invalid_argument("iteration count must be at least 1");
  }
  if (targets.empty()) {
    throw std::invalid_argument("no target algorithm");
  }
}

FuzzStats& FuzzStats::operator+=(const FuzzStats& other) {
  iterations += other.iterations;
  planar += other.planar;
  not_planar += other.not_planar;
  budget_skipped += other.budget_skipped;
  runs += other.runs;
  success_drawings += other.success_drawings;
  unsound_successes += other.unsound_successes;
  return *this;
}

std::uint64_t policy_seed(std::uint64_t instance_seed, Algorithm algorithm) {
  return mix64(instance_seed ^ (0x5851f42d4c957f2dULL * (static_cast<std::uint64_t>(algorithm) + 1)));
}

Replay random_replay(const ProperLevelGraph& graph, Algorithm algorithm, std::uint64_t seed) {
  Rng rng(seed);
  Replay replay;
  replay.algorithm = algorithm;
  if (uses_reference(algorithm)) {
    replay.reference = random_reference(graph.index(), rng);
  }
  const std::uint64_t policy = rng();
  if (algorithm == Algorithm::Randerath) {
    if (satisfiable(build_constraints(graph))) {
      replay.classes = greedy_embed(graph, GreedyPolicy::random(policy)).free_choices;
    }
  } else if (algorithm == Algorithm::HealyKuusik || algorithm == Algorithm::HarriganHealy) {
    const auto lve = label_ve_graph(build_ve_graph(graph), *replay.reference);
    if (!odd_cycle_test(lve).consistent) {
      return replay;
    }
    if (algorithm == Algorithm::HealyKuusik) {
      replay.classes = healy_kuusik_embed(graph, *replay.reference, GreedyPolicy::random(policy)).free_choices;
      return replay;
    }
    const auto& nodes = lve.ve.nodes();
    const auto swaps = dfs_swap_assignment(lve);
    std::vector<std::vector<PairId>> members(swaps.entries.size());
    for (PairId p = 0; p < nodes.size(); ++p) {
      members[swaps.component[p]].push_back(p);
    }
    for (const auto& m : members) {
      if (m.size() > 1) {
        replay.hh.entries.push_back(nodes.name(m[uniform_below(rng, m.size())]));
      }
    }
    std::vector<PairId> order(nodes.size());
    for (PairId p = 0; p < nodes.size(); ++p) {
      order[p] = p;
    }
    shuffle(rng, order);
    for (PairId p : order) {
      replay.hh.process.push_back(nodes.name(p));
    }
  }
  return replay;
}

namespace {

struct IterationResult {
  std::vector<FailureReport> reports;
  FuzzStats stats;
};

IterationResult run_iteration(const FuzzConfig& config, std::uint64_t i) {
  IterationResult out;
  out.stats.iterations = 1;
  GeneratorConfig generator = config.generator;
  generator.seed = mix64(config.generator.seed ^ i);
  const auto graph = random_proper_graph(generator);
  const auto oracle = brute_force_test(graph, config.oracle_budget);
  if (oracle.budget_exceeded()) {
    out.stats.budget_skipped = 1;
    return out;
  }
  const bool planar = oracle.verdict->planar;
  (planar ? out.stats.planar : out.stats.not_planar) = 1;
  for (Algorithm target : config.targets) {
    if (is_embedder(target) && !planar) {
      continue;
    }
    const auto replay = random_replay(graph, target, policy_seed(generator.seed, target));
    const auto ev = evaluate(graph, replay, planar);
    ++out.stats.runs;
    if (ev.drawing && target != Algorithm::HarriganHealy) {
      ++out.stats.success_drawings;
      if (count_crossings(graph, *ev.drawing) > 0) {
        ++out.stats.unsound_successes;
      }
    }
    if (!ev.failure) {
      continue;
    }
    FailureReport report{graph, planar, replay, *ev.failure, ev.evidence, generator.seed, i};
    if (!reproduces(report)) {
      throw std::logic_error("fuzz report " + report_name(report) + " does not replay");
    }
    if (config.shrink) {
      report = shrink(report, config.oracle_budget);
    }
    out.reports.push_back(std::move(report));
  }
  return out;
}

}  // namespace

FuzzResult fuzz(const FuzzConfig& config) {
  config.check();
  const unsigned threads = std::max(1u, config.threads);
  std::vector<IterationResult> results(config.iterations);
  auto worker = [&](unsigned t) {
    for (std::uint64_t i = t; i < config.iterations; i += threads) {
      results[i] = run_iteration(config, i);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          worker(t);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
    for (const auto& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }
  FuzzResult out;
  for (auto& r : results) {
    out.stats += r.stats;
    for (auto& report : r.reports) {
      out.reports.push_back(std::move(report));
    }
  }
  return out;
}

Replay adapt_replay(const ProperLevelGraph& graph, const Replay& replay) {
  const auto system = build_constraints(graph);
  const auto& pairs = system.pairs();
  Replay out;
  out.algorithm = replay.algorithm;
  if (replay.reference) {
    out.reference.emplace();
    for (const auto& [level, order] : replay.reference->orders) {
      std::vector<std::string> kept;
      for (const auto& id : order) {
        if (graph.graph().level_of(id) == level) {
          kept.push_back(id);
        }
      }
      if (!kept.empty()) {
        out.reference->orders.emplace(level, std::move(kept));
      }
    }
  }
  std::set<int> seen;
  for (const auto& c : replay.classes) {
    const auto r = pairs.resolve(c.literal);
    if (r && seen.insert(system.root(r->first).first).second) {
      out.classes.push_back(c);
    }
  }
  seen.clear();
  for (const auto& e : replay.hh.entries) {
    const auto r = pairs.resolve(e);
    if (r && seen.insert(system.root(r->first).first).second) {
      out.hh.entries.push_back(e);
    }
  }
  for (const auto& p : replay.hh.process) {
    if (pairs.resolve(p)) {
      out.hh.process.push_back(p);
    }
  }
  return out;
}

namespace {

std::optional<FailureReport> try_candidate(const FailureReport& current, LevelGraph candidate,
                                           std::uint64_t budget) {
  auto graph = ProperLevelGraph::from_proper(std::move(candidate));
  const auto oracle = brute_force_test(graph, budget);
  if (oracle.budget_exceeded() || oracle.verdict->planar != current.oracle_planar) {
    return std::nullopt;
  }
  auto replay = adapt_replay(graph, current.replay);
  Evaluation ev;
  try {
    ev = evaluate(graph, replay, current.oracle_planar);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (ev.failure != current.kind) {
    return std::nullopt;
  }
  FailureReport next = current;
  next.graph = std::move(graph);
  next.replay = std::move(replay);
  next.evidence = std::move(ev.evidence);
  return next;
}

}  // namespace

FailureReport shrink(const FailureReport& report, std::uint64_t oracle_budget) {
  if (!reproduces(report)) {
    throw IrreproducibleReport("report " + report_name(report) + " does not reproduce");
  }
  FailureReport current = report;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < current.graph.graph().canonical().edges().size();) {
      const auto base = current.graph.graph().canonical();
      auto edges = base.edges();
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
      if (auto next = try_candidate(current, LevelGraph(base.vertices(), std::move(edges)), oracle_budget)) {
        current = std::move(*next);
        changed = true;
      } else {
        ++e;
      }
    }
    for (std::size_t v = 0; v < current.graph.graph().vertices().size();) {
      const auto base = current.graph.graph().canonical();
      const std::string gone = base.vertices()[v].id;
      auto vertices = base.vertices();
      vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(v));
      std::vector<Edge> edges;
      for (const auto& edge : base.edges()) {
        if (edge.lower != gone && edge.upper != gone) {
          edges.push_back(edge);
        }
      }
      if (auto next = try_candidate(current, LevelGraph(std::move(vertices), std::move(edges)), oracle_budget)) {
        current = std::move(*next);
        changed = true;
      } else {
        ++v;
      }
    }
  }
  return current;
}

}  // namespace levelplan
