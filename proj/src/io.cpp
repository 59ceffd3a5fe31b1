#include "latework/io.hpp"

#include <charconv>
#include <limits>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace latework {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view s) {
  const auto hash = s.find('#');
  return hash == std::string_view::npos ? s : s.substr(0, hash);
}

// All lines with comments removed; `keep_blank` decides whether empty lines survive.
// Lines that held only a comment are always dropped.
std::vector<Line> split_lines(std::string_view text, bool keep_blank) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    const bool comment_only = !trim(raw).empty() && trim(raw).front() == '#';
    const auto body = trim(strip_comment(raw));
    if (comment_only) continue;
    if (body.empty() && !keep_blank) continue;
    lines.push_back({number, body});
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    s = trim(s);
    if (s.empty()) break;
    auto end = s.find_first_of(" \t");
    out.push_back(s.substr(0, end));
    if (end == std::string_view::npos) break;
    s = s.substr(end);
  }
  return out;
}

Time parse_int(std::string_view tok, std::size_t line) {
  Time value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || tok.empty()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

int narrow(Time v, std::size_t line) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw ParseError(line, "integer out of range: " + std::to_string(v));
  }
  return static_cast<int>(v);
}

int parse_small_int(std::string_view tok, std::size_t line) { return narrow(parse_int(tok, line), line); }

std::map<std::string, Time, std::less<>> parse_params(const Line& line,
                                                      std::initializer_list<std::string_view> keys) {
  std::map<std::string, Time, std::less<>> out;
  for (auto tok : tokens(line.text)) {
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line.number, "expected key=value, got '" + std::string(tok) + "'");
    }
    const auto key = tok.substr(0, eq);
    bool known = false;
    for (auto k : keys) known = known || k == key;
    if (!known) throw ParseError(line.number, "unknown parameter '" + std::string(key) + "'");
    if (!out.emplace(std::string(key), parse_int(tok.substr(eq + 1), line.number)).second) {
      throw ParseError(line.number, "duplicate parameter '" + std::string(key) + "'");
    }
  }
  for (auto k : keys) {
    if (out.find(k) == out.end()) throw ParseError(line.number, "missing parameter '" + std::string(k) + "'");
  }
  return out;
}

std::vector<Time> parse_values(const Line& line, std::string_view tag) {
  auto toks = tokens(line.text);
  if (toks.empty() || toks.front() != tag) {
    throw ParseError(line.number, "expected a line starting with '" + std::string(tag) + "'");
  }
  std::vector<Time> values;
  values.reserve(toks.size() - 1);
  for (std::size_t k = 1; k < toks.size(); ++k) values.push_back(parse_int(toks[k], line.number));
  return values;
}

template <typename Build>
auto with_line(std::size_t line, Build&& build) {
  try {
    return build();
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

AnyInstance parse_instance(std::string_view text) {
  const auto lines = split_lines(text, false);
  if (lines.empty()) throw ParseError(1, "empty instance file");
  if (lines.front().text == "latework v1") return parse_latework_instance(text);
  if (lines.front().text == "leveling v1") return parse_leveling_instance(text);
  throw ParseError(lines.front().number, "unknown header '" + std::string(lines.front().text) + "'");
}

Instance parse_latework_instance(std::string_view text) {
  const auto lines = split_lines(text, false);
  if (lines.empty() || lines[0].text != "latework v1") {
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected header 'latework v1'");
  }
  if (lines.size() != 3) {
    throw ParseError(lines.back().number, "expected exactly a header, a parameter line and a 'p' line");
  }
  const auto params = parse_params(lines[1], {"m", "N", "d"});
  auto p = parse_values(lines[2], "p");
  const int m = narrow(params.at("m"), lines[1].number);
  const int cap = narrow(params.at("N"), lines[1].number);
  return with_line(lines[2].number, [&] { return Instance(m, cap, params.at("d"), std::move(p)); });
}

LevelingInstance parse_leveling_instance(std::string_view text) {
  const auto lines = split_lines(text, false);
  if (lines.empty() || lines[0].text != "leveling v1") {
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected header 'leveling v1'");
  }
  if (lines.size() != 3) {
    throw ParseError(lines.back().number, "expected exactly a header, a parameter line and an 'a' line");
  }
  const auto params = parse_params(lines[1], {"machines", "C", "L"});
  auto a = parse_values(lines[2], "a");
  const int machines = narrow(params.at("machines"), lines[1].number);
  const int horizon = narrow(params.at("C"), lines[1].number);
  return with_line(lines[2].number,
                   [&] { return LevelingInstance(machines, horizon, params.at("L"), std::move(a)); });
}

std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  out << "latework v1\n"
      << "m=" << inst.machines() << " N=" << inst.capacity() << " d=" << inst.due_date() << "\n"
      << "p";
  for (const auto& job : inst.jobs()) out << ' ' << job.p;
  out << "\n";
  return out.str();
}

std::string write_instance(const LevelingInstance& inst) {
  std::ostringstream out;
  out << "leveling v1\n"
      << "machines=" << inst.machines() << " C=" << inst.horizon() << " L=" << inst.limit() << "\n"
      << "a";
  for (Time a : inst.demands()) out << ' ' << a;
  out << "\n";
  return out.str();
}

Schedule parse_schedule(std::string_view text, int machines) {
  auto lines = split_lines(text, true);
  // A trailing newline yields no extra line, so only explicit blank lines count.
  while (lines.size() > static_cast<std::size_t>(machines) && lines.back().text.empty()) lines.pop_back();
  if (lines.size() > static_cast<std::size_t>(machines)) {
    throw ParseError(lines[static_cast<std::size_t>(machines)].number,
                     "schedule lists more machines than the instance has");
  }
  Schedule s;
  s.machines.resize(static_cast<std::size_t>(machines));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (auto tok : tokens(lines[i].text)) {
      const Time id = parse_int(tok, lines[i].number);
      if (id < 0) throw ParseError(lines[i].number, "negative job id");
      s.machines[i].push_back(static_cast<JobId>(id));
    }
  }
  return s;
}

std::string write_schedule(const Schedule& s) {
  std::string out;
  for (const auto& seq : s.machines) {
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(seq[k]);
    }
    out += '\n';
  }
  return out;
}

LevelingSchedule parse_leveling_schedule(std::string_view text, std::size_t jobs) {
  LevelingSchedule s;
  s.placements.resize(jobs);
  std::vector<bool> seen(jobs, false);
  for (const auto& line : split_lines(text, false)) {
    const auto toks = tokens(line.text);
    if (toks.size() != 3) throw ParseError(line.number, "expected '<job> <machine> <slot>'");
    const Time id = parse_int(toks[0], line.number);
    if (id < 0 || static_cast<std::size_t>(id) >= jobs) {
      throw ParseError(line.number, "job id " + std::to_string(id) + " out of range");
    }
    if (seen[static_cast<std::size_t>(id)]) {
      throw ParseError(line.number, "job " + std::to_string(id) + " placed twice");
    }
    seen[static_cast<std::size_t>(id)] = true;
    s.placements[static_cast<std::size_t>(id)] =
        Placement{parse_small_int(toks[1], line.number), parse_small_int(toks[2], line.number)};
  }
  for (std::size_t j = 0; j < jobs; ++j) {
    if (!seen[j]) throw ParseError(0, "job " + std::to_string(j) + " has no placement");
  }
  return s;
}

std::string write_leveling_schedule(const LevelingSchedule& s) {
  std::string out;
  for (std::size_t j = 0; j < s.placements.size(); ++j) {
    out += std::to_string(j) + ' ' + std::to_string(s.placements[j].machine) + ' ' +
           std::to_string(s.placements[j].slot) + '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace latework
