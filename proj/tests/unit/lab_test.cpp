#include <filesystem>

#include "doctest.h"
#include "levelplan/bundled.hpp"
#include "levelplan/crossings.hpp"
#include "levelplan/formats.hpp"
#include "levelplan/lab.hpp"
#include "levelplan/pair_sat.hpp"
#include "support.hpp"

using namespace levelplan;
using namespace testsupport;

namespace {

FuzzConfig small_config(std::vector<Algorithm> targets, std::uint64_t iterations, std::uint64_t seed = 1) {
  FuzzConfig c;
  c.generator = {2, 5, 1, 5, 0.3, seed};
  c.iterations = iterations;
  c.targets = std::move(targets);
  return c;
}

const std::vector<Algorithm> kEmbedders{Algorithm::Randerath, Algorithm::HealyKuusik, Algorithm::HarriganHealy};

FailureReport bundled_report() {
  const auto bundled = bundled_counterexample();
  const auto ev = evaluate(bundled.graph, bundled.randerath, true);
  REQUIRE(ev.failure);
  return {bundled.graph, true, bundled.randerath, *ev.failure, ev.evidence, 0, 0};
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("failure kind and algorithm names round trip") {
  for (auto k : {FailureKind::FalseNegative, FailureKind::FalsePositive, FailureKind::NonPlanarOutput}) {
    CHECK(parse_failure_kind(to_string(k)) == k);
  }
  CHECK(!parse_failure_kind("crash"));
  for (auto a : {Algorithm::Oracle, Algorithm::SatCheck, Algorithm::VeGraphTest, Algorithm::Randerath,
                 Algorithm::HealyKuusik, Algorithm::HarriganHealy}) {
    CHECK(parse_algorithm(to_string(a)) == a);
  }
}

TEST_CASE("fuzz is deterministic and independent of threads") {
  auto config = small_config(kEmbedders, 600, 7);
  const auto a = fuzz(config);
  const auto b = fuzz(config);
  config.threads = 3;
  const auto c = fuzz(config);
  REQUIRE(!a.reports.empty());
  for (const auto* other : {&b, &c}) {
    REQUIRE(other->reports.size() == a.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
      CHECK(report_name(other->reports[i]) == report_name(a.reports[i]));
      CHECK(other->reports[i].evidence == a.reports[i].evidence);
      CHECK(other->reports[i].replay == a.reports[i].replay);
      CHECK(other->reports[i].graph.graph() == a.reports[i].graph.graph());
    }
    CHECK(other->stats.planar == a.stats.planar);
    CHECK(other->stats.runs == a.stats.runs);
  }
  CHECK(a.stats.iterations == 600);
  CHECK(a.stats.planar + a.stats.not_planar + a.stats.budget_skipped == 600);
}

TEST_CASE("fuzz: the satisfiability tests never fail") {
  const auto r = fuzz(small_config({Algorithm::SatCheck, Algorithm::VeGraphTest, Algorithm::Oracle}, 2000, 3));
  CHECK(r.reports.empty());
  CHECK(r.stats.runs > 0);
}

TEST_CASE("fuzz: width-one instances never fail") {
  auto config = small_config(kEmbedders, 1);
  config.generator = {2, 5, 1, 1, 0.8, 99};
  CHECK(fuzz(config).reports.empty());
  config.iterations = 200;
  CHECK(fuzz(config).reports.empty());
}

TEST_CASE("fuzz: budget skips are counted, not fatal") {
  auto config = small_config(kEmbedders, 50);
  config.oracle_budget = 3;
  const auto r = fuzz(config);
  CHECK(r.stats.budget_skipped > 0);
  CHECK(r.stats.budget_skipped + r.stats.planar + r.stats.not_planar == 50);
}

TEST_CASE("fuzz reports replay and match random_replay") {
  const auto r = fuzz(small_config(kEmbedders, 1500, 11));
  REQUIRE(r.reports.size() > 5);
  CHECK(r.stats.unsound_successes == 0);
  for (const auto& rep : r.reports) {
    CHECK(reproduces(rep));
    CHECK(rep.oracle_planar);
    CHECK(rep.replay == random_replay(rep.graph, rep.algorithm(), policy_seed(rep.seed, rep.algorithm())));
  }
}

TEST_CASE("policy seeds differ per algorithm") {
  CHECK(policy_seed(5, Algorithm::Randerath) != policy_seed(5, Algorithm::HealyKuusik));
  CHECK(policy_seed(5, Algorithm::HealyKuusik) != policy_seed(5, Algorithm::HarriganHealy));
  CHECK(policy_seed(5, Algorithm::Randerath) == policy_seed(5, Algorithm::Randerath));
}

TEST_CASE("report directory round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "levelplan_lab_test_report";
  std::filesystem::remove_all(dir);
  auto rep = bundled_report();
  rep.seed = 1234567890123ULL;
  rep.iteration = 42;
  write_report(dir.string(), rep);
  CHECK(std::filesystem::exists(dir / "graph.lgf"));
  CHECK(std::filesystem::exists(dir / "replay.rpf"));
  CHECK(std::filesystem::exists(dir / "report.txt"));
  const auto back = read_report(dir.string());
  CHECK(back.graph.graph() == rep.graph.graph());
  CHECK(back.replay == rep.replay);
  CHECK(back.kind == rep.kind);
  CHECK(back.evidence == rep.evidence);
  CHECK(back.seed == rep.seed);
  CHECK(back.iteration == rep.iteration);
  CHECK(back.oracle_planar);
  CHECK(reproduces(back));
  CHECK(report_name(rep) == "000042-randerath");
  std::filesystem::remove_all(dir);
}

TEST_CASE("RPF round trip of random replays") {
  for (const auto& g : random_corpus(100, 14, 21)) {
    for (auto a : kEmbedders) {
      const auto replay = random_replay(g, a, 9);
      CHECK(parse_rpf(write_rpf(replay)) == replay);
    }
  }
}

TEST_CASE("shrink: irreproducible reports are rejected") {
  auto rep = bundled_report();
  rep.evidence += "extra\n";
  CHECK(!reproduces(rep));
  CHECK_THROWS_AS(shrink(rep), IrreproducibleReport);
  auto wrong_kind = bundled_report();
  wrong_kind.kind = FailureKind::NonPlanarOutput;
  CHECK_THROWS_AS(shrink(wrong_kind), IrreproducibleReport);
}

TEST_CASE("shrink removes an isolated vertex") {
  const auto rep = bundled_report();
  auto vertices = rep.graph.graph().vertices();
  vertices.push_back({"zz", 2});
  FailureReport padded = rep;
  padded.graph = ProperLevelGraph::from_proper(LevelGraph(vertices, rep.graph.graph().edges()));
  padded.evidence = evaluate(padded.graph, padded.replay, true).evidence;
  REQUIRE(reproduces(padded));
  const auto out = shrink(padded);
  CHECK(!out.graph.graph().level_of("zz"));
  CHECK(one_minimal(out));
}

TEST_CASE("shrink properties on fuzz reports") {
  const auto r = fuzz(small_config(kEmbedders, 1500, 5));
  REQUIRE(!r.reports.empty());
  std::size_t checked = 0;
  for (const auto& rep : r.reports) {
    if (++checked > 25) {
      break;
    }
    const auto out = shrink(rep);
    CHECK(out.kind == rep.kind);
    CHECK(out.graph.graph().vertices().size() <= rep.graph.graph().vertices().size());
    CHECK(out.graph.graph().edges().size() <= rep.graph.graph().edges().size());
    CHECK(reproduces(out));
    CHECK(one_minimal(out));
    CHECK(brute_force_test(out.graph).verdict->planar);
    // fixpoint
    const auto again = shrink(out);
    CHECK(again.graph.graph() == out.graph.graph());
    CHECK(again.replay == out.replay);
    CHECK(again.evidence == out.evidence);
  }
}

TEST_CASE("shrunken greedy false negatives need two or more free picks") {
  // Measured: minimal instances have one or two nontrivial classes; the
  // remaining picks land on singleton classes.
  auto config = small_config({Algorithm::Randerath}, 4000, 1);
  config.shrink = true;
  const auto r = fuzz(config);
  REQUIRE(!r.reports.empty());
  for (const auto& rep : r.reports) {
    if (rep.kind != FailureKind::FalseNegative) {
      continue;
    }
    CHECK(count_occurrences(rep.evidence, "free ") >= 2);
    CHECK(count_occurrences(rep.evidence, "conflict ") == 1);
    std::size_t nontrivial = 0;
    for (const auto& c : equivalence_classes(build_constraints(rep.graph))) {
      nontrivial += c.size() > 1 ? 1 : 0;
    }
    CHECK(nontrivial >= 1);
  }
}

TEST_CASE("adapt_replay drops vanished and redundant entries") {
  const auto g = proper_from_lgf(
      "LGF 1\nv a 1\nv b 1\nv c 2\nv d 2\nv x 3\nv y 3\ne a c\ne b d\ne c x\ne d y\n");
  Replay replay;
  replay.algorithm = Algorithm::Randerath;
  replay.classes = {{{1, "a", "b"}, true}, {{2, "c", "d"}, false}, {{1, "a", "q"}, true}, {{3, "x", "y"}, true}};
  const auto out = adapt_replay(g, replay);
  REQUIRE(out.classes.size() == 1);
  CHECK(out.classes[0].literal == PairName{1, "a", "b"});

  Replay hh;
  hh.algorithm = Algorithm::HarriganHealy;
  hh.reference = Drawing{{{1, {"b", "a", "gone"}}, {2, {"d", "c"}}, {4, {"w"}}}};
  hh.hh.entries = {{2, "c", "d"}, {1, "a", "b"}};
  hh.hh.process = {{3, "x", "y"}, {1, "a", "gone"}, {2, "c", "d"}};
  const auto adapted = adapt_replay(g, hh);
  CHECK(adapted.reference == Drawing{{{1, {"b", "a"}}, {2, {"d", "c"}}}});
  CHECK(adapted.hh.entries == std::vector<PairName>{{2, "c", "d"}});
  CHECK(adapted.hh.process == std::vector<PairName>{{3, "x", "y"}, {2, "c", "d"}});
}

TEST_CASE("evaluate: oracle and verdict tests on K22") {
  const auto g = k22();
  for (auto a : {Algorithm::Oracle, Algorithm::SatCheck, Algorithm::VeGraphTest}) {
    Replay r;
    r.algorithm = a;
    CHECK(!evaluate(g, r, false).failure);
  }
  Replay r;
  r.algorithm = Algorithm::SatCheck;
  const auto lied = evaluate(g, r, true);
  REQUIRE(lied.failure);
  CHECK(*lied.failure == FailureKind::FalseNegative);
}

TEST_CASE("evaluate: harrigan-healy crossing is a non-planar output") {
  const auto bundled = bundled_counterexample();
  const auto ev = evaluate(bundled.graph, bundled.harrigan_healy, true);
  REQUIRE(ev.failure);
  CHECK(*ev.failure == FailureKind::NonPlanarOutput);
  REQUIRE(ev.drawing);
  CHECK(count_crossings(bundled.graph, *ev.drawing) >= 1);
  CHECK(ev.evidence.find("cross ") != std::string::npos);
}
