#pragma once

// Line-oriented configuration documents.
//
//   # comment
//   [match]
//   cycles = 6000
//   noise = 0.05
//   kickoff = left
//
//   [team_a]
//   preset = tactics          # tactics | baseline; resets the section first
//   name = northside
//   evaluator = tactics
//   tactics.advance = 25
//   tactics.center = 36 7
//   home.9 = 10 0 forward
//
// A team file holds the same team keys without a section header.

#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "tacsim/engine.hpp"
#include "tacsim/error.hpp"
#include "tacsim/textio.hpp"

namespace tacsim {

inline std::optional<TeamConfig> team_preset(std::string_view name) {
  if (name == "tactics") return tactics_team();
  if (name == "baseline") return baseline_team();
  return std::nullopt;
}

struct SeriesConfig {
  MatchConfig match;  // team_left / team_right unused; see team_a / team_b
  TeamConfig team_a = tactics_team();
  TeamConfig team_b = baseline_team();
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool parse_bool(std::string_view v, std::size_t line) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw FormatError(line, "expected true or false, got '" + std::string(v) + "'");
}

inline Point2 parse_point(std::string_view v, std::size_t line) {
  const auto f = text::split(v);
  if (f.size() != 2) throw FormatError(line, "expected 'x y', got '" + std::string(v) + "'");
  return {text::parse_real(f[0], line), text::parse_real(f[1], line)};
}

inline Role parse_role(std::string_view v, std::size_t line) {
  if (v == "goalkeeper" || v == "gk") return Role::Goalkeeper;
  if (v == "defender" || v == "def") return Role::Defender;
  if (v == "midfielder" || v == "mid") return Role::Midfielder;
  if (v == "forward" || v == "fwd") return Role::Forward;
  throw FormatError(line, "unknown role '" + std::string(v) + "'");
}

inline void apply_team_key(TeamConfig& t, std::string_view key, std::string_view value, std::size_t line) {
  using text::parse_int;
  using text::parse_real;
  if (key == "preset") {
    auto p = team_preset(value);
    if (!p) throw FormatError(line, "unknown preset '" + std::string(value) + "'");
    t = *p;
  } else if (key == "name") {
    t.name = std::string(value);
  } else if (key == "evaluator") {
    if (value == "tactics") {
      t.evaluator_mode = EvaluatorMode::Tactics;
    } else if (value == "baseline") {
      t.evaluator_mode = EvaluatorMode::Baseline;
    } else {
      throw FormatError(line, "unknown evaluator '" + std::string(value) + "'");
    }
  } else if (key == "phase_positioning") {
    t.phase_positioning = parse_bool(value, line);
  } else if (key == "tactics.advance") {
    t.tactics.advance = parse_real(value, line);
  } else if (key == "tactics.center") {
    t.tactics.center_target = parse_point(value, line);
  } else if (key == "tactics.wing") {
    t.tactics.wing_target = parse_point(value, line);
  } else if (key == "tactics.attacking_third") {
    t.tactics.attacking_third = parse_real(value, line);
  } else if (key == "tactics.include_goal") {
    t.tactics.include_goal = parse_bool(value, line);
  } else if (key == "baseline.x_weight") {
    t.baseline.x_weight = parse_real(value, line);
  } else if (key == "pass_range") {
    t.candidates.pass_range = parse_real(value, line);
  } else if (key == "lane_clearance") {
    t.candidates.lane_clearance = parse_real(value, line);
  } else if (key == "dribble_distance") {
    t.candidates.dribble_distance = parse_real(value, line);
  } else if (key == "shoot_range") {
    t.candidates.shoot_range = parse_real(value, line);
  } else if (key == "challenge_radius") {
    t.candidates.challenge_radius = parse_real(value, line);
  } else if (key == "support_count") {
    t.candidates.positioning.support_count = parse_int<int>(value, line);
  } else if (key == "block_count") {
    t.candidates.positioning.block_count = parse_int<int>(value, line);
  } else if (key == "block_range") {
    t.candidates.positioning.block_range = parse_real(value, line);
  } else if (key.starts_with("home.")) {
    const int n = parse_int<int>(key.substr(5), line);
    if (n < 1 || n > 11) throw FormatError(line, "player number must be 1..11");
    const auto f = text::split(value);
    if (f.size() != 3) throw FormatError(line, "expected 'x y role'");
    t.formation.home[n - 1] = {parse_real(f[0], line), parse_real(f[1], line)};
    t.formation.roles[n - 1] = parse_role(f[2], line);
  } else {
    throw FormatError(line, "unknown team key '" + std::string(key) + "'");
  }
}

inline void apply_match_key(MatchConfig& m, std::string_view key, std::string_view value, std::size_t line) {
  if (key == "cycles") {
    m.cycles = text::parse_int<int>(value, line);
  } else if (key == "seed") {
    m.seed = text::parse_int<std::uint64_t>(value, line);
  } else if (key == "noise") {
    m.noise_scale = text::parse_real(value, line);
  } else if (key == "kickoff") {
    if (value == "left") {
      m.kickoff = Side::Left;
    } else if (value == "right") {
      m.kickoff = Side::Right;
    } else {
      throw FormatError(line, "kickoff must be left or right");
    }
  } else {
    throw FormatError(line, "unknown match key '" + std::string(key) + "'");
  }
}

// Calls fn(section, key, value, line) for every assignment.
inline void for_each_assignment(
    std::string_view doc,
    const std::function<void(std::string_view, std::string_view, std::string_view, std::size_t)>& fn) {
  std::string_view section;
  std::size_t ln = 0;
  std::size_t pos = 0;
  while (pos < doc.size()) {
    std::size_t end = doc.find('\n', pos);
    if (end == std::string_view::npos) end = doc.size();
    std::string_view line = doc.substr(pos, end - pos);
    pos = end + 1;
    ++ln;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw FormatError(ln, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw FormatError(ln, "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw FormatError(ln, "empty key");
    fn(section, key, value, ln);
  }
}

}  // namespace detail

// Team keys at top level (no section headers allowed).
inline TeamConfig parse_team_config(std::string_view doc, TeamConfig base = tactics_team()) {
  detail::for_each_assignment(doc, [&](auto section, auto key, auto value, std::size_t ln) {
    if (!section.empty()) throw FormatError(ln, "team files take no sections");
    detail::apply_team_key(base, key, value, ln);
  });
  base.validate();
  return base;
}

inline SeriesConfig parse_series_config(std::string_view doc, SeriesConfig base = {}) {
  detail::for_each_assignment(doc, [&](auto section, auto key, auto value, std::size_t ln) {
    if (section == "match") {
      detail::apply_match_key(base.match, key, value, ln);
    } else if (section == "team_a") {
      detail::apply_team_key(base.team_a, key, value, ln);
    } else if (section == "team_b") {
      detail::apply_team_key(base.team_b, key, value, ln);
    } else {
      throw FormatError(ln, section.empty() ? std::string("key outside a section")
                                            : "unknown section '" + std::string(section) + "'");
    }
  });
  base.team_a.validate();
  base.team_b.validate();
  base.match.validate();
  return base;
}

}  // namespace tacsim
