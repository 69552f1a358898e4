#include "levelplan/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "CLI11.hpp"
#include "levelplan/bundled.hpp"
#include "levelplan/crossings.hpp"
#include "levelplan/formats.hpp"
#include "levelplan/lab.hpp"
#include "levelplan/oracle.hpp"
#include "levelplan/pair_sat.hpp"
#include "levelplan/svg.hpp"
#include "levelplan/ve_graph.hpp"

namespace levelplan {

namespace {

// Raised for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  ProperLevelGraph graph;
  bool properized = false;
};

Input load_graph(const std::string& path) {
  const auto graph = parse_lgf(read_text_file(path));
  if (is_proper(graph)) {
    return {ProperLevelGraph::from_proper(graph), false};
  }
  return {make_proper(graph), true};
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

Algorithm algorithm_option(const std::string& name) {
  const auto algo = parse_algorithm(name);
  if (!algo) {
    throw UsageError("unknown algorithm '" + name + "'");
  }
  return *algo;
}

struct CheckArgs {
  std::string graph;
  std::string algo = "oracle";
  std::uint64_t budget = kDefaultOracleBudget;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const Algorithm algo = algorithm_option(a.algo);
  const auto input = load_graph(a.graph);
  bool planar = false;
  switch (algo) {
    case Algorithm::Oracle: {
      const auto result = brute_force_test(input.graph, a.budget);
      if (result.budget_exceeded()) {
        out << "oracle budget exceeded\n";
        return kExitBudget;
      }
      planar = result.verdict->planar;
      break;
    }
    case Algorithm::SatCheck:
      planar = satisfiable(build_constraints(input.graph));
      break;
    case Algorithm::VeGraphTest:
      planar = odd_cycle_test(label_ve_graph(build_ve_graph(input.graph), canonical_drawing(input.graph.index())))
                   .consistent;
      break;
    default:
      throw UsageError("check takes --algo oracle, satcheck or vegraph-test");
  }
  out << (planar ? "planar\n" : "not planar\n");
  return planar ? kExitOk : kExitFailure;
}

struct EmbedArgs {
  std::string graph;
  std::string algo = "randerath";
  std::string replay;
  std::string policy;
  std::string reference;
  std::uint64_t seed = 0;
  std::string output;
  std::string report_dir;
  std::uint64_t budget = kDefaultOracleBudget;
};

// Builds the replay the run will follow, so a failure can store it verbatim.
Replay embed_replay(const EmbedArgs& a, Algorithm algo, const ProperLevelGraph& graph) {
  std::string policy = a.policy;
  if (policy.empty()) {
    policy = a.replay.empty() ? "canonical" : "replay";
  }
  Replay replay;
  if (policy == "replay") {
    if (a.replay.empty()) {
      throw UsageError("--policy replay needs --replay");
    }
    replay = parse_rpf(read_text_file(a.replay));
    if (replay.algorithm != algo) {
      throw ParseError(0, "replay is for " + std::string(to_string(replay.algorithm)) + ", not " +
                              std::string(to_string(algo)));
    }
  } else if (policy == "random") {
    replay = random_replay(graph, algo, a.seed);
  } else if (policy == "canonical") {
    replay.algorithm = algo;
  } else {
    throw UsageError("unknown policy '" + policy + "'");
  }
  if (!a.reference.empty()) {
    replay.reference = parse_ldf(read_text_file(a.reference));
  }
  return replay;
}

int cmd_embed(const EmbedArgs& a, std::ostream& out, std::ostream& err) {
  const Algorithm algo = algorithm_option(a.algo);
  if (!is_embedder(algo)) {
    throw UsageError("embed takes --algo oracle, randerath, healy-kuusik or harrigan-healy");
  }
  const auto input = load_graph(a.graph);
  const auto& graph = input.graph;
  if (input.properized) {
    err << "note: input properized with " << graph.dummies().size() << " dummy vertices\n";
  }

  if (algo == Algorithm::Oracle) {
    const auto result = brute_force_test(graph, a.budget);
    if (result.budget_exceeded()) {
      err << "oracle budget exceeded\n";
      return kExitBudget;
    }
    if (!result.verdict->planar) {
      out << "not planar\n";
      return kExitFailure;
    }
    emit(a.output, write_ldf(*result.verdict->witness), out);
    return kExitOk;
  }

  const auto replay = embed_replay(a, algo, graph);
  const auto oracle = brute_force_test(graph, a.budget);
  const bool oracle_known = !oracle.budget_exceeded();
  const bool oracle_planar = oracle_known && oracle.verdict->planar;
  const auto ev = evaluate(graph, replay, oracle_known ? oracle_planar : true);

  if (ev.drawing) {
    emit(a.output, write_ldf(*ev.drawing), out);
  }
  const std::size_t crossings = ev.drawing ? count_crossings(graph, *ev.drawing) : 0;
  if (ev.drawing && crossings == 0) {
    return kExitOk;
  }

  if (!ev.drawing) {
    if (!satisfiable(build_constraints(graph))) {
      out << "not planar\n";
      return kExitFailure;
    }
    out << "embedding failed\n";
  } else {
    err << "drawing has " << crossings << " crossings\n";
  }
  if (!oracle_known) {
    err << "oracle budget exceeded; no failure report\n";
  } else if (ev.failure) {
    FailureReport report{graph, oracle_planar, replay, *ev.failure, ev.evidence, a.seed, 0};
    // Keep stdout a clean LDF when the drawing went there.
    std::ostream& diag = ev.drawing && (a.output.empty() || a.output == "-") ? err : out;
    if (a.report_dir.empty()) {
      diag << "failure " << to_string(report.kind) << '\n' << report.evidence;
    } else {
      write_report(a.report_dir, report);
      diag << "failure " << to_string(report.kind) << " written to " << a.report_dir << '\n';
    }
  }
  return kExitFailure;
}

int cmd_verify(const std::string& graph_path, const std::string& drawing_path, std::ostream& out) {
  const auto input = load_graph(graph_path);
  const auto drawing = parse_ldf(read_text_file(drawing_path));
  const auto crossings = count_crossings(input.graph, drawing);
  out << crossings << '\n';
  return crossings == 0 ? kExitOk : kExitFailure;
}

int cmd_properize(const std::string& graph_path, const std::string& output, std::ostream& out) {
  const auto graph = parse_lgf(read_text_file(graph_path));
  emit(output, write_lgf(make_proper(graph).graph()), out);
  return kExitOk;
}

struct FuzzArgs {
  std::uint64_t seed = 0;
  std::uint64_t iterations = 1000;
  int min_levels = 2;
  int max_levels = 5;
  int min_width = 1;
  int max_width = 5;
  double edge_probability = 0.3;
  std::vector<std::string> targets{"randerath"};
  bool shrink = false;
  unsigned threads = 1;
  std::uint64_t budget = 10'000'000;
  std::string out_dir = "reports";
};

int cmd_fuzz(const FuzzArgs& a, std::ostream& out) {
  FuzzConfig config;
  config.generator = {a.min_levels, a.max_levels, a.min_width, a.max_width, a.edge_probability, a.seed};
  config.iterations = a.iterations;
  config.targets.clear();
  for (const auto& t : a.targets) {
    config.targets.push_back(algorithm_option(t));
  }
  config.shrink = a.shrink;
  config.threads = a.threads;
  config.oracle_budget = a.budget;
  try {
    config.check();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto result = fuzz(config);
  for (const auto& report : result.reports) {
    const auto dir = (std::filesystem::path(a.out_dir) / report_name(report)).string();
    write_report(dir, report);
    out << dir << ' ' << to_string(report.kind) << '\n';
  }
  const auto& s = result.stats;
  out << "iterations " << s.iterations << " planar " << s.planar << " not-planar " << s.not_planar
      << " budget-skipped " << s.budget_skipped << " runs " << s.runs << " reports " << result.reports.size()
      << '\n';
  return kExitOk;
}

int cmd_shrink(const std::string& in_dir, const std::string& out_dir, std::uint64_t budget, std::ostream& out) {
  const auto report = read_report(in_dir);
  const auto small = shrink(report, budget);
  write_report(out_dir, small);
  out << "vertices " << report.graph.graph().vertices().size() << " -> " << small.graph.graph().vertices().size()
      << ", edges " << report.graph.graph().edges().size() << " -> " << small.graph.graph().edges().size() << '\n';
  return kExitOk;
}

int cmd_render(const std::string& graph_path, const std::string& drawing_path, const std::string& output,
               bool no_labels, std::ostream& out) {
  const auto input = load_graph(graph_path);
  const auto drawing = parse_ldf(read_text_file(drawing_path));
  emit(output, render_svg(input.graph, drawing, SvgOptions{!no_labels}), out);
  return kExitOk;
}

int cmd_bundled(const std::string& dir, std::ostream& out) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  write_text_file((base / "graph.lgf").string(), bundled_lgf());
  write_text_file((base / "randerath.rpf").string(), bundled_randerath_rpf());
  write_text_file((base / "healy-kuusik.rpf").string(), bundled_healy_kuusik_rpf());
  write_text_file((base / "harrigan-healy.rpf").string(), bundled_harrigan_healy_rpf());
  out << "wrote " << dir << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"level planarity: oracle, 2-SAT test, greedy embedders, differential fuzzing", "levelplan"};
  app.require_subcommand(1);
  const std::vector<std::string> algorithms{"oracle",     "satcheck",     "vegraph-test",
                                            "randerath", "healy-kuusik", "harrigan-healy"};

  CheckArgs check;
  auto* c = app.add_subcommand("check", "decide level planarity; prints planar or not planar");
  c->add_option("graph", check.graph, "LGF file")->required();
  c->add_option("--algo", check.algo, "oracle, satcheck or vegraph-test")->check(CLI::IsMember(algorithms));
  c->add_option("--budget", check.budget, "oracle extension budget");

  EmbedArgs embed;
  auto* e = app.add_subcommand("embed", "run an embedder; writes LDF or a failure report");
  e->add_option("graph", embed.graph, "LGF file")->required();
  e->add_option("--algo", embed.algo)->check(CLI::IsMember(algorithms));
  e->add_option("--replay", embed.replay, "RPF file");
  e->add_option("--policy", embed.policy, "canonical, random or replay")
      ->check(CLI::IsMember({"canonical", "random", "replay"}));
  e->add_option("--reference", embed.reference, "reference drawing (LDF) for healy-kuusik / harrigan-healy");
  e->add_option("--seed", embed.seed, "seed for --policy random");
  e->add_option("-o,--output", embed.output, "LDF output (default stdout)");
  e->add_option("--report-dir", embed.report_dir, "write a failure report directory here");
  e->add_option("--budget", embed.budget, "oracle extension budget");

  std::string verify_graph;
  std::string verify_drawing;
  auto* v = app.add_subcommand("verify", "print the crossing count of a drawing");
  v->add_option("graph", verify_graph)->required();
  v->add_option("drawing", verify_drawing)->required();

  std::string prop_graph;
  std::string prop_output;
  auto* p = app.add_subcommand("properize", "subdivide long edges; writes LGF");
  p->add_option("graph", prop_graph)->required();
  p->add_option("-o,--output", prop_output);

  FuzzArgs fz;
  auto* f = app.add_subcommand("fuzz", "differential fuzzing against the oracle");
  f->add_option("--seed", fz.seed);
  f->add_option("--iterations", fz.iterations);
  f->add_option("--min-levels", fz.min_levels);
  f->add_option("--max-levels", fz.max_levels);
  f->add_option("--min-width", fz.min_width);
  f->add_option("--max-width", fz.max_width);
  f->add_option("--edge-probability", fz.edge_probability);
  f->add_option("--targets", fz.targets)->delimiter(',')->check(CLI::IsMember(algorithms));
  f->add_flag("--shrink", fz.shrink);
  f->add_option("--threads", fz.threads);
  f->add_option("--budget", fz.budget);
  f->add_option("-o,--out", fz.out_dir, "directory for report directories");

  std::string shrink_in;
  std::string shrink_out;
  std::uint64_t shrink_budget = kDefaultOracleBudget;
  auto* s = app.add_subcommand("shrink", "minimize a failure report");
  s->add_option("report", shrink_in)->required();
  s->add_option("-o,--out", shrink_out)->required();
  s->add_option("--budget", shrink_budget);

  std::string render_graph;
  std::string render_drawing;
  std::string render_output;
  bool no_labels = false;
  auto* r = app.add_subcommand("render", "draw a drawing as SVG");
  r->add_option("graph", render_graph)->required();
  r->add_option("drawing", render_drawing)->required();
  r->add_option("-o,--output", render_output);
  r->add_flag("--no-labels", no_labels);

  std::string bundled_dir;
  auto* b = app.add_subcommand("bundled", "write the bundled counterexample and its replays");
  b->add_option("dir", bundled_dir)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c->parsed()) {
      return cmd_check(check, out);
    }
    if (e->parsed()) {
      return cmd_embed(embed, out, err);
    }
    if (v->parsed()) {
      return cmd_verify(verify_graph, verify_drawing, out);
    }
    if (p->parsed()) {
      return cmd_properize(prop_graph, prop_output, out);
    }
    if (f->parsed()) {
      return cmd_fuzz(fz, out);
    }
    if (s->parsed()) {
      return cmd_shrink(shrink_in, shrink_out, shrink_budget, out);
    }
    if (r->parsed()) {
      return cmd_render(render_graph, render_drawing, render_output, no_labels, out);
    }
    if (b->parsed()) {
      return cmd_bundled(bundled_dir, out);
    }
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const InvalidGraph& ex) {
    err << "error: invalid level graph\n";
    for (const auto& violation : ex.violations()) {
      err << "  " << violation << '\n';
    }
    return kExitMalformed;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitMalformed;
  }
  return kExitUsage;
}

}  // namespace levelplan
