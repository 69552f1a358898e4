#include "levelplan/bundled.hpp"

#include <algorithm>
#include <deque>

#include "levelplan/formats.hpp"
#include "levelplan/pair_sat.hpp"

namespace levelplan {

namespace {

// Hand-built around the chain a<b, f<h, k<l, g<i; checked and completed by
// tools/find_counterexample --graph --replay, then frozen. Same files as data/bundled/.
constexpr std::string_view kGraph = R"(LGF 1
v a 1
v b 1
v c 1
v f 2
v g 2
v h 2
v i 2
v j 2
v m 2
v k 3
v l 3
e a f
e b g
e b h
e c j
e f k
e g k
e h l
e i l
e m k
)";

constexpr std::string_view kRanderath = R"(RPF 1
algo randerath
class 1:a<c true
class 2:i<j true
class 1:c<b true
)";

constexpr std::string_view kHealyKuusik = R"(RPF 1
algo healy-kuusik
class 1:a<c true
class 2:i<j true
class 1:c<b true
)";

constexpr std::string_view kHarriganHealy = R"(RPF 1
algo harrigan-healy
)";

}  // namespace

std::string_view bundled_lgf() { return kGraph; }
std::string_view bundled_randerath_rpf() { return kRanderath; }
std::string_view bundled_healy_kuusik_rpf() { return kHealyKuusik; }
std::string_view bundled_harrigan_healy_rpf() { return kHarriganHealy; }

BundledCounterexample bundled_counterexample() {
  return {ProperLevelGraph::from_proper(parse_lgf(kGraph)), parse_rpf(kRanderath), parse_rpf(kHealyKuusik),
          parse_rpf(kHarriganHealy)};
}

int chain_length(const ConstraintSystem& system, PairId from, PairId to) {
  std::vector<std::vector<PairId>> adjacent(system.pairs().size());
  for (const auto& r : system.relations()) {
    adjacent[r.lower].push_back(r.upper);
    adjacent[r.upper].push_back(r.lower);
  }
  std::vector<int> distance(system.pairs().size(), -1);
  std::deque<PairId> queue{from};
  distance[from] = 1;
  while (!queue.empty()) {
    const PairId p = queue.front();
    queue.pop_front();
    if (p == to) {
      return distance[p];
    }
    for (PairId q : adjacent[p]) {
      if (distance[q] < 0) {
        distance[q] = distance[p] + 1;
        queue.push_back(q);
      }
    }
  }
  return -1;
}

bool has_bundled_shape(const ProperLevelGraph& graph, const EmbedOutcome& outcome) {
  if (outcome.success() || !outcome.contradiction) {
    return false;
  }
  const auto& trace = outcome.trace;
  const auto picks = std::count_if(trace.begin(), trace.end(),
                                   [](const TraceStep& step) { return step.cause == StepCause::FreeChoice; });
  if (picks < 3) {
    return false;
  }
  const auto system = build_constraints(graph);
  const auto& pairs = system.pairs();
  const auto existing = pairs.resolve(outcome.contradiction->existing);
  if (!existing) {
    return false;
  }
  const int cls = system.root(existing->first).first;
  // The class holding the existing order must have been assigned by a closure
  // step, four pairs away along the constraint chain.
  for (const auto& step : trace) {
    const auto p = pairs.resolve(step.fact);
    if (p && system.root(p->first).first == cls) {
      return step.cause == StepCause::ClosureForced && chain_length(system, p->first, existing->first) == 4;
    }
  }
  return false;
}

}  // namespace levelplan
