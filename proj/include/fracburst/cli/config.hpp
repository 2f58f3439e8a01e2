#pragma once

// Scenario files: flat key = value lines grouped under [system], [solver] and
// [detection]; `name` may appear before the first section.
//
//   name = example1
//   [system]
//   alpha = 0.1, 0.4, 0.6, 0.9
//   q1 = 0.5
//   ...
//   [solver]
//   T = 1.2
//   N = 4096
//   [detection]
//   threshold = 1e8
//   budget = 5

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fracburst/bounds.hpp"
#include "fracburst/error.hpp"

namespace fracburst::cli {

struct ScenarioConfig {
  std::string name = "scenario";
  std::vector<double> alphas;
  /// alpha is taken from `alphas`; the field here is ignored.
  PowerLawParams system;
  /// Horizon T; when absent solve/detect use 1.1 * tau_ub.
  std::optional<double> horizon;
  std::size_t steps = 4096;
  double threshold = 1e8;
  std::size_t budget = 5;

  PowerLawParams at(double alpha) const {
    PowerLawParams p = system;
    p.alpha = alpha;
    return p;
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::optional<double> parse_real(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

struct Entry {
  std::string value;
  std::size_t line = 0;
};

}  // namespace detail

/// Parses a scenario; every problem is reported as config_error with its line.
inline ScenarioConfig parse_config(std::istream& in, const std::string& source = "<config>") {
  using detail::Entry;
  static const std::map<std::string, std::vector<std::string>, std::less<>> allowed{
      {"", {"name"}},
      {"system", {"alpha", "q1", "q2", "p11", "p12", "p21", "p22", "x0", "y0"}},
      {"solver", {"T", "N", "threshold"}},
      {"detection", {"threshold", "budget"}},
  };
  std::map<std::string, std::map<std::string, Entry>> entries;
  std::string section;
  std::string raw;
  std::size_t line_no = 0;
  bool saw_system = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw config_error(source, line_no, "malformed section header");
      section = std::string(detail::trim(line.substr(1, line.size() - 2)));
      if (!allowed.contains(section) || section.empty()) {
        throw config_error(source, line_no, "unknown section [" + section + "]");
      }
      if (section == "system") {
        if (saw_system) throw config_error(source, line_no, "more than one [system] block");
        saw_system = true;
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw config_error(source, line_no, "expected key = value");
    const std::string key(detail::trim(line.substr(0, eq)));
    const std::string value(detail::trim(line.substr(eq + 1)));
    const auto& keys = allowed.find(section)->second;
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      const std::string where = section.empty() ? "before the first section" : "in [" + section + "]";
      throw config_error(source, line_no, "unknown key '" + key + "' " + where);
    }
    if (value.empty()) throw config_error(source, line_no, "missing value for '" + key + "'");
    auto& slot = entries[section];
    if (slot.contains(key)) throw config_error(source, line_no, "duplicate key '" + key + "'");
    slot[key] = Entry{value, line_no};
  }
  if (!saw_system) throw config_error(source, line_no, "missing [system] block");

  ScenarioConfig cfg;
  auto real = [&](const Entry& e, const std::string& key) {
    const auto v = detail::parse_real(e.value);
    if (!v) throw config_error(source, e.line, "'" + key + "' is not a finite number: " + e.value);
    return *v;
  };
  auto count = [&](const Entry& e, const std::string& key) {
    const double v = real(e, key);
    if (!(v >= 1.0) || v != std::floor(v) || v > 1e9) {
      throw config_error(source, e.line, "'" + key + "' must be a positive integer");
    }
    return static_cast<std::size_t>(v);
  };

  if (auto it = entries[""].find("name"); it != entries[""].end()) {
    cfg.name = it->second.value;
    if (cfg.name.find_first_of("/\\ \t") != std::string::npos) {
      throw config_error(source, it->second.line, "name must not contain spaces or path separators");
    }
  }

  auto& sys = entries["system"];
  for (const char* key : {"alpha", "q1", "q2", "p11", "p12", "p21", "p22", "x0", "y0"}) {
    if (!sys.contains(key)) throw config_error(source, line_no, std::string("[system] is missing '") + key + "'");
  }
  {
    const Entry& e = sys["alpha"];
    std::string_view rest = e.value;
    while (true) {
      const auto comma = rest.find(',');
      const auto item = rest.substr(0, comma);
      const auto v = detail::parse_real(item);
      if (!v) throw config_error(source, e.line, "'alpha' entry is not a number: " + std::string(detail::trim(item)));
      if (!(*v > 0.0 && *v < 1.0)) throw config_error(source, e.line, "'alpha' values must lie in (0, 1)");
      cfg.alphas.push_back(*v);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  struct Field {
    const char* key;
    double PowerLawParams::*member;
    bool positive;
  };
  for (const Field f : {Field{"q1", &PowerLawParams::q1, false}, Field{"q2", &PowerLawParams::q2, false},
                        Field{"p11", &PowerLawParams::p11, false}, Field{"p12", &PowerLawParams::p12, false},
                        Field{"p21", &PowerLawParams::p21, false}, Field{"p22", &PowerLawParams::p22, false},
                        Field{"x0", &PowerLawParams::x0, true}, Field{"y0", &PowerLawParams::y0, true}}) {
    const Entry& e = sys[f.key];
    const double v = real(e, f.key);
    if (f.positive ? !(v > 0.0) : !(v >= 0.0)) {
      throw config_error(source, e.line, std::string("'") + f.key + (f.positive ? "' must be > 0" : "' must be >= 0"));
    }
    cfg.system.*f.member = v;
  }
  cfg.system.alpha = cfg.alphas.front();

  auto& solver = entries["solver"];
  if (auto it = solver.find("T"); it != solver.end()) {
    const double T = real(it->second, "T");
    if (!(T > 0.0)) throw config_error(source, it->second.line, "'T' must be > 0");
    cfg.horizon = T;
  }
  if (auto it = solver.find("N"); it != solver.end()) cfg.steps = count(it->second, "N");

  auto& detection = entries["detection"];
  std::optional<double> threshold;
  for (auto* block : {&solver, &detection}) {
    if (auto it = block->find("threshold"); it != block->end()) {
      const double v = real(it->second, "threshold");
      if (!(v > 0.0)) throw config_error(source, it->second.line, "'threshold' must be > 0");
      if (threshold && *threshold != v) {
        throw config_error(source, it->second.line, "[solver] and [detection] give different thresholds");
      }
      threshold = v;
    }
  }
  if (threshold) cfg.threshold = *threshold;
  if (auto it = detection.find("budget"); it != detection.end()) {
    const double v = real(it->second, "budget");
    if (!(v >= 0.0) || v != std::floor(v) || v > 30.0) {
      throw config_error(source, it->second.line, "'budget' must be an integer in [0, 30]");
    }
    cfg.budget = static_cast<std::size_t>(v);
  }
  return cfg;
}

inline ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw config_error(path.string(), 0, "cannot open file");
  return parse_config(in, path.string());
}

}  // namespace fracburst::cli
