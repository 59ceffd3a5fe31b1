#pragma once

// Line-based text formats.
//
//   latework v1              leveling v1
//   m=<int> N=<int> d=<int>  machines=<int> C=<int> L=<int>
//   p <int> ...              a <int> ...
//
// '#' starts a comment. A schedule file has one line per machine listing job
// ids in processing order (an empty line is an idle machine); a leveling
// schedule file has one "<job> <machine> <slot>" line per job.

#include "latework/model.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace latework {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

using AnyInstance = std::variant<Instance, LevelingInstance>;

AnyInstance parse_instance(std::string_view text);
Instance parse_latework_instance(std::string_view text);
LevelingInstance parse_leveling_instance(std::string_view text);

std::string write_instance(const Instance& inst);
std::string write_instance(const LevelingInstance& inst);

/// `machines` pads missing trailing lines with idle machines.
Schedule parse_schedule(std::string_view text, int machines);
std::string write_schedule(const Schedule& s);

LevelingSchedule parse_leveling_schedule(std::string_view text, std::size_t jobs);
std::string write_leveling_schedule(const LevelingSchedule& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace latework
