#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "levelplan/level_graph.hpp"
#include "levelplan/oracle.hpp"
#include "levelplan/replay.hpp"

namespace levelplan {

enum class FailureKind {
  FalseNegative,    // planar instance reported as not planar (or embedding aborted)
  FalsePositive,    // non-planar instance reported as planar
  NonPlanarOutput,  // planar instance, returned drawing has crossings
};

std::string_view to_string(FailureKind kind);
std::optional<FailureKind> parse_failure_kind(std::string_view name);

// Result of running one algorithm under a replay and judging it against the
// oracle verdict.
struct Evaluation {
  std::optional<FailureKind> failure;
  std::string evidence;
  std::optional<Drawing> drawing;  // a drawing the algorithm claims (or, for Harrigan-Healy, returns)
};

Evaluation evaluate(const ProperLevelGraph& graph, const Replay& replay, bool oracle_planar);

struct FailureReport {
  ProperLevelGraph graph;
  bool oracle_planar = true;
  Replay replay;
  FailureKind kind = FailureKind::FalseNegative;
  std::string evidence;
  std::uint64_t seed = 0;
  std::uint64_t iteration = 0;

  Algorithm algorithm() const noexcept { return replay.algorithm; }
};

// Re-runs the stored replay; true iff the same kind and byte-identical
// evidence come out.
bool reproduces(const FailureReport& report);

// "<iteration, 6 digits>-<algorithm>"
std::string report_name(const FailureReport& report);
// Writes graph.lgf, replay.rpf and report.txt into `dir` (created if missing).
void write_report(const std::string& dir, const FailureReport& report);
FailureReport read_report(const std::string& dir);

struct FuzzConfig {
  GeneratorConfig generator;
  std::uint64_t iterations = 1000;
  std::vector<Algorithm> targets{Algorithm::Randerath};
  bool shrink = false;
  unsigned threads = 1;
  std::uint64_t oracle_budget = 10'000'000;

  void check() const;
};

struct FuzzStats {
  std::uint64_t iterations = 0;
  std::uint64_t planar = 0;
  std::uint64_t not_planar = 0;
  std::uint64_t budget_skipped = 0;
  std::uint64_t runs = 0;
  std::uint64_t success_drawings = 0;  // embedder successes checked for crossings
  std::uint64_t unsound_successes = 0;

  FuzzStats& operator+=(const FuzzStats& other);
};

struct FuzzResult {
  std::vector<FailureReport> reports;  // iteration order, then target order
  FuzzStats stats;
};

// Iteration i uses generator seed mix64(config.generator.seed ^ i); every
// random choice of target t derives from mix64(instance seed ^ tag(t)).
// The result does not depend on `threads`.
FuzzResult fuzz(const FuzzConfig& config);

// Seed used for the randomized choices of `algorithm` on an instance.
std::uint64_t policy_seed(std::uint64_t instance_seed, Algorithm algorithm);

// Replay with every choice randomized from `seed`; running it is the same
// as one fuzz run of that algorithm.
Replay random_replay(const ProperLevelGraph& graph, Algorithm algorithm, std::uint64_t seed);

class IrreproducibleReport : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Greedy edge deletions, then vertex deletions, repeated until no single
// deletion keeps the failure. Throws IrreproducibleReport if the input does
// not replay.
FailureReport shrink(const FailureReport& report, std::uint64_t oracle_budget = kDefaultOracleBudget);

// Drops replay entries that no longer name anything in `graph` and entries
// that now share a class (or ve-component) with an earlier entry.
Replay adapt_replay(const ProperLevelGraph& graph, const Replay& replay);

}  // namespace levelplan
