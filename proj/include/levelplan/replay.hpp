#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "levelplan/greedy.hpp"
#include "levelplan/level_graph.hpp"
#include "levelplan/ve_graph.hpp"

namespace levelplan {

enum class Algorithm { Oracle, SatCheck, VeGraphTest, Randerath, HealyKuusik, HarriganHealy };

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);
bool is_embedder(Algorithm algorithm);
bool uses_reference(Algorithm algorithm);

// Everything a run of one algorithm leaves to choice. Absent reference means
// the canonical (id-ordered) drawing.
struct Replay {
  Algorithm algorithm = Algorithm::Randerath;
  std::optional<Drawing> reference;
  std::vector<ClassChoice> classes;
  HHChoices hh;

  GreedyPolicy policy() const { return GreedyPolicy::replaying(classes); }

  friend bool operator==(const Replay&, const Replay&) = default;
};

// Replay Policy Format:
//   RPF 1
//   algo <randerath|healy-kuusik|harrigan-healy|...>
//   reference <level> <id> ...          (healy-kuusik, harrigan-healy, vegraph-test)
//   class <level>:<a><<b> <true|false>   (randerath, healy-kuusik; pick order)
//   entry <level>:<a><<b>                (harrigan-healy)
//   process <level>:<a><<b>              (harrigan-healy; phase-2 order)
Replay parse_rpf(std::string_view text);
std::string write_rpf(const Replay& replay);

}  // namespace levelplan
