#include "levelplan/replay.hpp"

#include <array>
#include <charconv>
#include <sstream>
#include <utility>

#include "levelplan/formats.hpp"

namespace levelplan {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 6> kNames{{
    {Algorithm::Oracle, "oracle"},
    {Algorithm::SatCheck, "satcheck"},
    {Algorithm::VeGraphTest, "vegraph-test"},
    {Algorithm::Randerath, "randerath"},
    {Algorithm::HealyKuusik, "healy-kuusik"},
    {Algorithm::HarriganHealy, "harrigan-healy"},
}};

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
      ++j;
    }
    if (j > i) {
      out.push_back(line.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

PairName pair_at(int line, std::string_view token) {
  try {
    return parse_pair(token);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  for (const auto& [a, name] : kNames) {
    if (a == algorithm) {
      return name;
    }
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [a, n] : kNames) {
    if (n == name) {
      return a;
    }
  }
  return std::nullopt;
}

bool is_embedder(Algorithm algorithm) {
  return algorithm == Algorithm::Oracle || algorithm == Algorithm::Randerath ||
         algorithm == Algorithm::HealyKuusik || algorithm == Algorithm::HarriganHealy;
}

bool uses_reference(Algorithm algorithm) {
  return algorithm == Algorithm::VeGraphTest || algorithm == Algorithm::HealyKuusik ||
         algorithm == Algorithm::HarriganHealy;
}

Replay parse_rpf(std::string_view text) {
  Replay replay;
  bool header = false;
  bool algo = false;
  int number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    const auto tokens = split_ws(raw);
    if (tokens.empty() || tokens.front().front() == '#') {
      continue;
    }
    if (!header) {
      if (tokens.size() != 2 || tokens[0] != "RPF" || tokens[1] != "1") {
        throw ParseError(number, "expected header 'RPF 1'");
      }
      header = true;
      continue;
    }
    const auto kind = tokens[0];
    if (kind == "algo" && tokens.size() == 2) {
      const auto a = parse_algorithm(tokens[1]);
      if (!a || algo) {
        throw ParseError(number, "bad or repeated algo line");
      }
      replay.algorithm = *a;
      algo = true;
      continue;
    }
    if (!algo) {
      throw ParseError(number, "'algo' must precede other records");
    }
    if (kind == "reference" && tokens.size() >= 3 && uses_reference(replay.algorithm)) {
      Level level = 0;
      const auto t = tokens[1];
      const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), level);
      if (ec != std::errc() || ptr != t.data() + t.size()) {
        throw ParseError(number, "malformed level");
      }
      if (!replay.reference) {
        replay.reference.emplace();
      }
      auto& order = replay.reference->orders[level];
      if (!order.empty()) {
        throw ParseError(number, "reference level listed twice");
      }
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        if (!is_valid_id(tokens[i])) {
          throw ParseError(number, "malformed vertex id");
        }
        order.emplace_back(tokens[i]);
      }
    } else if (kind == "class" && tokens.size() == 3 &&
               (replay.algorithm == Algorithm::Randerath || replay.algorithm == Algorithm::HealyKuusik)) {
      if (tokens[2] != "true" && tokens[2] != "false") {
        throw ParseError(number, "class value must be 'true' or 'false'");
      }
      replay.classes.push_back({pair_at(number, tokens[1]), tokens[2] == "true"});
    } else if (kind == "entry" && tokens.size() == 2 && replay.algorithm == Algorithm::HarriganHealy) {
      replay.hh.entries.push_back(pair_at(number, tokens[1]));
    } else if (kind == "process" && tokens.size() == 2 && replay.algorithm == Algorithm::HarriganHealy) {
      replay.hh.process.push_back(pair_at(number, tokens[1]));
    } else {
      throw ParseError(number, "unexpected record '" + std::string(kind) + "' for algo " +
                                   std::string(to_string(replay.algorithm)));
    }
  }
  if (!header) {
    throw ParseError(number, "missing header 'RPF 1'");
  }
  if (!algo) {
    throw ParseError(number, "missing 'algo' line");
  }
  return replay;
}

std::string write_rpf(const Replay& replay) {
  std::ostringstream out;
  out << "RPF 1\nalgo " << to_string(replay.algorithm) << '\n';
  if (replay.reference) {
    for (const auto& [level, order] : replay.reference->orders) {
      out << "reference " << level;
      for (const auto& id : order) {
        out << ' ' << id;
      }
      out << '\n';
    }
  }
  for (const auto& c : replay.classes) {
    out << "class " << format_pair(c.literal) << ' ' << (c.value ? "true" : "false") << '\n';
  }
  for (const auto& e : replay.hh.entries) {
    out << "entry " << format_pair(e) << '\n';
  }
  for (const auto& p : replay.hh.process) {
    out << "process " << format_pair(p) << '\n';
  }
  return out.str();
}

}  // namespace levelplan
