#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "levelplan/level_graph.hpp"

namespace levelplan {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Level Graph Format:
//   LGF 1
//   v <id> <level>
//   e <id> <id>
// Lines starting with '#' and blank lines are ignored. The parser checks
// syntax only; call validate() for graph invariants.
LevelGraph parse_lgf(std::string_view text);
std::string write_lgf(const LevelGraph& graph);

// Level Drawing Format:
//   LDF 1
//   l <level> <id> <id> ...
Drawing parse_ldf(std::string_view text);
std::string write_ldf(const Drawing& drawing);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace levelplan
