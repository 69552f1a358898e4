#include "levelplan/greedy.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "levelplan/rng.hpp"

namespace levelplan {

namespace {

class GreedyRun {
 public:
  GreedyRun(const PairSpace& pairs, std::span<const DecisionClass> classes)
      : pairs_(pairs),
        classes_(classes),
        class_of_(pairs.size(), -1),
        offset_(pairs.size(), false),
        decided_(pairs.size(), -1),
        class_decision_(classes.size(), -1) {
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
      for (const auto& m : classes[c].members) {
        class_of_[m.pair] = c;
        offset_[m.pair] = m.opposite;
      }
    }
  }

  EmbedOutcome run(const GreedyPolicy& policy, bool default_decision) {
    const auto replay = resolve_replay(policy);
    std::vector<int> order(classes_.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<bool> random_decision(classes_.size(), default_decision);
    if (policy.order == GreedyPolicy::Order::SeededRandom) {
      Rng rng(policy.seed);
      shuffle(rng, order);
      for (std::size_t c = 0; c < classes_.size(); ++c) {
        random_decision[c] = coin(rng);
      }
    }
    std::size_t replay_pos = 0;
    std::size_t order_pos = 0;
    for (;;) {
      if (!drain_forced()) {
        return std::move(out_);
      }
      int chosen = -1;
      bool decision = default_decision;
      std::optional<ClassChoice> choice;
      while (replay_pos < replay.size()) {
        const auto& [entry, pair, forward] = replay[replay_pos++];
        if (class_decision_[class_of_[pair]] >= 0) {
          continue;
        }
        chosen = class_of_[pair];
        const bool canonical_value = entry.value == forward;
        decision = canonical_value != offset_[pair];
        choice = entry;
        break;
      }
      if (chosen < 0) {
        while (order_pos < order.size() && class_decision_[order[order_pos]] >= 0) {
          ++order_pos;
        }
        if (order_pos == order.size()) {
          break;
        }
        chosen = order[order_pos];
        decision = random_decision[chosen];
        const auto& rep = classes_[chosen].members.front();
        choice = ClassChoice{pairs_.name(rep.pair), decision != rep.opposite};
      }
      out_.free_choices.push_back(*choice);
      const PairName fact = choice->value ? choice->literal
                                          : PairName{choice->literal.level, choice->literal.second,
                                                     choice->literal.first};
      assign(chosen, decision, StepCause::FreeChoice, fact, {});
      close();
    }
    out_.drawing = build_drawing();
    return std::move(out_);
  }

 private:
  struct ReplayEntry {
    ClassChoice entry;
    PairId pair;
    bool forward;
  };

  struct Forced {
    PairId pair;
    bool canonical_value;
    std::vector<PairName> premises;
  };

  std::vector<ReplayEntry> resolve_replay(const GreedyPolicy& policy) const {
    std::vector<ReplayEntry> out;
    if (policy.order != GreedyPolicy::Order::Replay) {
      return out;
    }
    std::set<int> named;
    for (const auto& choice : policy.replay) {
      const auto resolved = pairs_.resolve(choice.literal);
      if (!resolved) {
        throw InvalidReplay("replay names unknown pair " + format_pair(choice.literal));
      }
      if (!named.insert(class_of_[resolved->first]).second) {
        throw InvalidReplay("replay names the class of " + format_pair(choice.literal) + " twice");
      }
      out.push_back({choice, resolved->first, resolved->second});
    }
    return out;
  }

  // a before b under the decided relation
  bool before(int a, int b) const {
    const int d = decided_[pairs_.id_of(a, b)];
    return d >= 0 && (d == 1) == PairSpace::is_forward(a, b);
  }

  PairName order_name(int a, int b) const {
    const auto& index = pairs_.index();
    return {index.level(a), index.id(a), index.id(b)};
  }

  PairName literal_name(PairId p, bool canonical_value) const { return pairs_.name(p, canonical_value); }

  void assign(int cls, bool decision, StepCause cause, PairName fact, std::vector<PairName> premises) {
    class_decision_[cls] = decision ? 1 : 0;
    for (const auto& m : classes_[cls].members) {
      decided_[m.pair] = (decision != m.opposite) ? 1 : 0;
      dirty_.insert(pairs_.pair(m.pair).slot);
    }
    out_.trace.push_back({cause, std::move(fact), std::move(premises),
                          static_cast<int>(classes_[cls].members.size())});
  }

  // Scans the dirty levels for a<b, b<c and queues a<c unless it already
  // holds. A queued order that meets the opposite decision is reported when
  // it reaches the front of the queue.
  void close() {
    const auto slots = std::move(dirty_);
    dirty_.clear();
    for (int slot : slots) {
      const auto& members = pairs_.index().members(slot);
      for (int a : members) {
        for (int b : members) {
          if (a == b || !before(a, b)) {
            continue;
          }
          for (int c : members) {
            if (c == a || c == b || !before(b, c)) {
              continue;
            }
            const PairId p = pairs_.id_of(a, c);
            if (decided_[p] < 0 || before(c, a)) {
              const bool value = PairSpace::is_forward(a, c);
              if (pending_.emplace(p, value).second) {
                queue_.push_back({p, value, {order_name(a, b), order_name(b, c)}});
              }
            }
          }
        }
      }
    }
  }

  bool drain_forced() {
    while (!queue_.empty()) {
      Forced forced = std::move(queue_.front());
      queue_.pop_front();
      pending_.erase({forced.pair, forced.canonical_value});
      const int d = decided_[forced.pair];
      if (d >= 0) {
        if ((d == 1) != forced.canonical_value) {
          out_.contradiction = Contradiction{literal_name(forced.pair, forced.canonical_value), forced.premises,
                                             literal_name(forced.pair, !forced.canonical_value)};
          return false;
        }
        continue;
      }
      const int cls = class_of_[forced.pair];
      assign(cls, forced.canonical_value != offset_[forced.pair], StepCause::ClosureForced,
             literal_name(forced.pair, forced.canonical_value), std::move(forced.premises));
      close();
    }
    return true;
  }

  Drawing build_drawing() const {
    const auto& index = pairs_.index();
    std::vector<int> pos(index.vertex_count(), 0);
    for (int s = 0; s < static_cast<int>(index.levels().size()); ++s) {
      const auto& members = index.members(s);
      std::vector<bool> used(members.size(), false);
      for (int a : members) {
        int rank = 0;
        for (int b : members) {
          rank += (b != a && before(b, a)) ? 1 : 0;
        }
        if (used[rank]) {
          throw std::logic_error("greedy run finished with a non-total level order");
        }
        used[rank] = true;
        pos[a] = rank;
      }
    }
    return drawing_from_positions(index, pos);
  }

  const PairSpace& pairs_;
  std::span<const DecisionClass> classes_;
  std::vector<int> class_of_;
  std::vector<bool> offset_;
  std::vector<int> decided_;
  std::vector<int> class_decision_;
  std::deque<Forced> queue_;
  std::set<std::pair<PairId, bool>> pending_;
  std::set<int> dirty_;
  EmbedOutcome out_;
};

}  // namespace

std::string format_trace(const EmbedOutcome& outcome) {
  std::ostringstream out;
  for (const auto& step : outcome.trace) {
    out << (step.cause == StepCause::FreeChoice ? "free " : "forced ") << format_pair(step.fact);
    if (!step.premises.empty()) {
      out << " by";
      for (const auto& p : step.premises) {
        out << ' ' << format_pair(p);
      }
    }
    out << " class-size " << step.class_size << '\n';
  }
  if (outcome.contradiction) {
    const auto& c = *outcome.contradiction;
    out << "conflict " << format_pair(c.derived) << " by";
    for (const auto& p : c.premises) {
      out << ' ' << format_pair(p);
    }
    out << " against " << format_pair(c.existing) << '\n';
  } else if (outcome.success()) {
    out << "success\n";
  }
  return out.str();
}

EmbedOutcome run_greedy(const PairSpace& pairs, std::span<const DecisionClass> classes, const GreedyPolicy& policy,
                        bool default_decision) {
  GreedyRun run(pairs, classes);
  return run.run(policy, default_decision);
}

EmbedOutcome greedy_embed(const ProperLevelGraph& graph, const GreedyPolicy& policy) {
  const auto system = build_constraints(graph);
  const auto classes = equivalence_classes(system);
  std::vector<DecisionClass> decision_classes;
  decision_classes.reserve(classes.size());
  for (const auto& c : classes) {
    decision_classes.push_back({c});
  }
  return run_greedy(system.pairs(), decision_classes, policy, true);
}

}  // namespace levelplan
