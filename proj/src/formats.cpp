#include "levelplan/formats.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace levelplan {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') {
      ++j;
    }
    if (j > i) {
      out.push_back(line.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

// Calls fn(line_number, tokens) for every non-comment, non-blank line after
// checking the header.
template <class Fn>
void for_each_record(std::string_view text, std::string_view magic, Fn&& fn) {
  int number = 0;
  bool header = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    ++number;
    start = end + 1;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) {
        break;
      }
      continue;
    }
    if (!header) {
      if (tokens.size() != 2 || tokens[0] != magic || tokens[1] != "1") {
        throw ParseError(number, "expected header '" + std::string(magic) + " 1'");
      }
      header = true;
    } else {
      fn(number, tokens);
    }
    if (end == text.size()) {
      break;
    }
  }
  if (!header) {
    throw ParseError(number, "missing header '" + std::string(magic) + " 1'");
  }
}

Level parse_level(int line, std::string_view token) {
  Level value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "malformed level '" + std::string(token) + "'");
  }
  return value;
}

std::string parse_id(int line, std::string_view token) {
  if (!is_valid_id(token)) {
    throw ParseError(line, "malformed vertex id '" + std::string(token) + "'");
  }
  return std::string(token);
}

}  // namespace

LevelGraph parse_lgf(std::string_view text) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  for_each_record(text, "LGF", [&](int line, const std::vector<std::string_view>& tokens) {
    if (tokens[0] == "v" && tokens.size() == 3) {
      vertices.push_back({parse_id(line, tokens[1]), parse_level(line, tokens[2])});
    } else if (tokens[0] == "e" && tokens.size() == 3) {
      edges.push_back({parse_id(line, tokens[1]), parse_id(line, tokens[2])});
    } else {
      throw ParseError(line, "unrecognized record '" + std::string(tokens[0]) + "'");
    }
  });
  return LevelGraph(std::move(vertices), std::move(edges));
}

std::string write_lgf(const LevelGraph& graph) {
  const auto canonical = graph.canonical();
  std::ostringstream out;
  out << "LGF 1\n";
  for (const auto& v : canonical.vertices()) {
    out << "v " << v.id << ' ' << v.level << '\n';
  }
  for (const auto& e : canonical.edges()) {
    out << "e " << e.lower << ' ' << e.upper << '\n';
  }
  return out.str();
}

Drawing parse_ldf(std::string_view text) {
  Drawing drawing;
  for_each_record(text, "LDF", [&](int line, const std::vector<std::string_view>& tokens) {
    if (tokens[0] != "l" || tokens.size() < 3) {
      throw ParseError(line, "expected 'l <level> <id> ...'");
    }
    const Level level = parse_level(line, tokens[1]);
    std::vector<std::string> order;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      order.push_back(parse_id(line, tokens[i]));
    }
    if (!drawing.orders.emplace(level, std::move(order)).second) {
      throw ParseError(line, "level " + std::to_string(level) + " listed twice");
    }
  });
  return drawing;
}

std::string write_ldf(const Drawing& drawing) {
  std::ostringstream out;
  out << "LDF 1\n";
  for (const auto& [level, order] : drawing.orders) {
    if (order.empty()) {
      continue;
    }
    out << "l " << level;
    for (const auto& id : order) {
      out << ' ' << id;
    }
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
  out << text;
}

}  // namespace levelplan
