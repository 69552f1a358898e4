#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "levelplan/level_graph.hpp"
#include "levelplan/pair_sat.hpp"
#include "levelplan/pair_space.hpp"

namespace levelplan {

// "class <level>:<first><<second> <true|false>": set the literal
// first<second to `value`, deciding the whole class that contains the pair.
struct ClassChoice {
  PairName literal;
  bool value = true;

  friend bool operator==(const ClassChoice&, const ClassChoice&) = default;
};

struct GreedyPolicy {
  enum class Order { Canonical, SeededRandom, Replay };

  Order order = Order::Canonical;
  std::uint64_t seed = 0;
  std::vector<ClassChoice> replay;  // pick order; default rule once exhausted

  static GreedyPolicy canonical() { return {}; }
  static GreedyPolicy random(std::uint64_t seed) { return {Order::SeededRandom, seed, {}}; }
  static GreedyPolicy replaying(std::vector<ClassChoice> choices) {
    return {Order::Replay, 0, std::move(choices)};
  }
};

class InvalidReplay : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class StepCause { FreeChoice, ClosureForced };

// `fact` is the order that was asserted (fact.first before fact.second).
struct TraceStep {
  StepCause cause = StepCause::FreeChoice;
  PairName fact;
  std::vector<PairName> premises;  // the two orders a closure step chained
  int class_size = 0;
};

struct Contradiction {
  PairName derived;                // order the closure demanded
  std::vector<PairName> premises;  // orders it was derived from
  PairName existing;               // the opposite order already decided
};

struct EmbedOutcome {
  std::optional<Drawing> drawing;  // success
  std::vector<TraceStep> trace;
  std::optional<Contradiction> contradiction;
  std::vector<ClassChoice> free_choices;  // replaying these reproduces the run

  bool success() const noexcept { return drawing.has_value(); }
};

// Human-readable, deterministic rendering of a trace and its conflict.
std::string format_trace(const EmbedOutcome& outcome);

// A class of pairs decided together: once the class decision d is fixed,
// the canonical literal of every member pair is d XOR member.opposite.
struct DecisionClass {
  std::vector<ClassMember> members;
};

// Shared greedy loop: forced closure assignments first (FIFO), then the next
// free class per policy. `default_decision` is the decision taken by the
// canonical rule and after a replay list runs out.
EmbedOutcome run_greedy(const PairSpace& pairs, std::span<const DecisionClass> classes, const GreedyPolicy& policy,
                        bool default_decision);

// Greedy class assignment with transitive-closure priority over the 2-SAT
// equivalence classes. Throws Unsatisfiable when the formula has no solution.
EmbedOutcome greedy_embed(const ProperLevelGraph& graph, const GreedyPolicy& policy);

}  // namespace levelplan
