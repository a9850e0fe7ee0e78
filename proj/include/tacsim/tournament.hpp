#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "tacsim/engine.hpp"
#include "tacsim/error.hpp"
#include "tacsim/textio.hpp"

namespace tacsim {

// ---------------------------------------------------------------------------
// Group standings

struct MatchRow {
  std::string team_a;
  std::string team_b;
  int score_a = 0;
  int score_b = 0;

  friend bool operator==(const MatchRow&, const MatchRow&) = default;
};

struct GroupRecord {
  std::string team;
  int played = 0;
  int wins = 0;
  int draws = 0;
  int losses = 0;
  int goals_for = 0;
  int goals_against = 0;
  int points = 0;

  int goal_difference() const { return goals_for - goals_against; }

  friend bool operator==(const GroupRecord&, const GroupRecord&) = default;
};

// Three points for a win, one for a draw.
constexpr int points_of(int wins, int draws) { return 3 * wins + draws; }

// Group table ordered by points, goal difference, goals scored, then name.
// `teams` lists participants that may not appear in any row.
inline std::vector<GroupRecord> compute_standings(const std::vector<MatchRow>& rows,
                                                  const std::vector<std::string>& teams = {}) {
  std::map<std::string, GroupRecord> table;
  auto rec = [&](const std::string& name) -> GroupRecord& {
    auto [it, inserted] = table.try_emplace(name);
    if (inserted) it->second.team = name;
    return it->second;
  };
  for (const auto& t : teams) rec(t);
  for (const MatchRow& r : rows) {
    if (r.team_a == r.team_b) throw InvalidArgument("team '" + r.team_a + "' cannot play itself");
    if (r.score_a < 0 || r.score_b < 0) throw InvalidArgument("scores must be non-negative");
    GroupRecord& a = rec(r.team_a);
    GroupRecord& b = rec(r.team_b);
    a.goals_for += r.score_a;
    a.goals_against += r.score_b;
    b.goals_for += r.score_b;
    b.goals_against += r.score_a;
    if (r.score_a > r.score_b) {
      ++a.wins;
      ++b.losses;
    } else if (r.score_a < r.score_b) {
      ++b.wins;
      ++a.losses;
    } else {
      ++a.draws;
      ++b.draws;
    }
  }
  std::vector<GroupRecord> out;
  out.reserve(table.size());
  for (auto& [name, r] : table) {
    r.played = r.wins + r.draws + r.losses;
    r.points = points_of(r.wins, r.draws);
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const GroupRecord& x, const GroupRecord& y) {
    if (x.points != y.points) return x.points > y.points;
    if (x.goal_difference() != y.goal_difference()) return x.goal_difference() > y.goal_difference();
    if (x.goals_for != y.goals_for) return x.goals_for > y.goals_for;
    return x.team < y.team;
  });
  return out;
}

// `team_a,team_b,score_a,score_b` per line, no header.
inline std::vector<MatchRow> parse_results_csv(std::string_view csv) {
  std::vector<MatchRow> rows;
  std::size_t pos = 0;
  std::size_t ln = 0;
  while (pos < csv.size()) {
    std::size_t end = csv.find('\n', pos);
    if (end == std::string_view::npos) end = csv.size();
    const std::string_view line = csv.substr(pos, end - pos);
    pos = end + 1;
    ++ln;
    std::vector<std::string_view> f;
    std::size_t i = 0;
    while (true) {
      const std::size_t j = line.find(',', i);
      f.push_back(line.substr(i, j == std::string_view::npos ? std::string_view::npos : j - i));
      if (j == std::string_view::npos) break;
      i = j + 1;
    }
    if (f.size() != 4) throw FormatError(ln, "expected team_a,team_b,score_a,score_b");
    if (f[0].empty() || f[1].empty()) throw FormatError(ln, "empty team name");
    MatchRow r{std::string(f[0]), std::string(f[1]), text::parse_int<int>(f[2], ln), text::parse_int<int>(f[3], ln)};
    if (r.score_a < 0 || r.score_b < 0) throw FormatError(ln, "scores must be non-negative");
    if (r.team_a == r.team_b) throw FormatError(ln, "team '" + r.team_a + "' cannot play itself");
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::string format_results_csv(const std::vector<MatchRow>& rows) {
  std::string out;
  for (const MatchRow& r : rows) {
    out += r.team_a + "," + r.team_b + "," + std::to_string(r.score_a) + "," + std::to_string(r.score_b) + "\n";
  }
  return out;
}

inline std::string format_standings(const std::vector<GroupRecord>& table) {
  std::size_t width = 4;
  for (const auto& r : table) width = std::max(width, r.team.size());
  auto pad = [](std::string s, std::size_t w, bool right) {
    if (s.size() >= w) return s;
    return right ? std::string(w - s.size(), ' ') + s : s + std::string(w - s.size(), ' ');
  };
  std::string out = pad("Place", 5, true) + "  " + pad("Team", width, false) + "  Points  Total Score   W   D   L\n";
  int place = 1;
  for (const auto& r : table) {
    out += pad(std::to_string(place++), 5, true) + "  " + pad(r.team, width, false) + "  " +
           pad(std::to_string(r.points), 6, true) + "  " +
           pad(std::to_string(r.goals_for) + " : " + std::to_string(r.goals_against), 11, true) + " " +
           pad(std::to_string(r.wins), 3, true) + " " + pad(std::to_string(r.draws), 3, true) + " " +
           pad(std::to_string(r.losses), 3, true) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Match series

struct SeriesMatch {
  int index = 0;
  std::uint64_t seed = 0;
  Side side_a = Side::Left;
  int score_a = 0;
  int score_b = 0;
};

struct SeriesStats {
  int n = 0;
  int wins = 0;
  int draws = 0;
  int losses = 0;
  double mean_goal_diff = 0.0;  // team A minus team B
  double std_dev = 0.0;         // sample standard deviation
  double ci95_low = 0.0;
  double ci95_high = 0.0;
  std::vector<SeriesMatch> matches;
};

// Aggregates (score_a, score_b) pairs; the interval is mean +- 1.96 s / sqrt(n).
inline SeriesStats summarize(const std::vector<std::pair<int, int>>& scores) {
  SeriesStats s;
  s.n = static_cast<int>(scores.size());
  if (s.n == 0) return s;
  double sum = 0.0;
  for (auto [a, b] : scores) {
    sum += a - b;
    if (a > b) {
      ++s.wins;
    } else if (a == b) {
      ++s.draws;
    } else {
      ++s.losses;
    }
  }
  s.mean_goal_diff = sum / s.n;
  if (s.n > 1) {
    double ss = 0.0;
    for (auto [a, b] : scores) ss += (a - b - s.mean_goal_diff) * (a - b - s.mean_goal_diff);
    s.std_dev = std::sqrt(ss / (s.n - 1));
  }
  const double half = 1.96 * s.std_dev / std::sqrt(static_cast<double>(s.n));
  s.ci95_low = s.mean_goal_diff - half;
  s.ci95_high = s.mean_goal_diff + half;
  return s;
}

struct SeriesOptions {
  MatchConfig base;  // cycles, noise, pitch and physics; teams and seed are overwritten
  int workers = 1;
};

// Match i uses seed base_seed + i; team A plays on the left in even-numbered
// matches and on the right in odd ones. Results are aggregated in match
// order, so the worker count never changes the outcome.
inline SeriesStats run_series(const TeamConfig& team_a, const TeamConfig& team_b, int n, std::uint64_t base_seed,
                              const SeriesOptions& options = {}) {
  if (n < 1) throw InvalidArgument("a series needs at least one match");
  std::vector<SeriesMatch> results(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;

  auto work = [&] {
    while (!failed.load()) {
      const int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        MatchConfig c = options.base;
        c.seed = base_seed + static_cast<std::uint64_t>(i);
        const Side side_a = i % 2 == 0 ? Side::Left : Side::Right;
        c.team_left = side_a == Side::Left ? team_a : team_b;
        c.team_right = side_a == Side::Left ? team_b : team_a;
        const MatchResult r = play_match(c, false);
        results[static_cast<std::size_t>(i)] = {
            i, c.seed, side_a, side_a == Side::Left ? r.score_left : r.score_right,
            side_a == Side::Left ? r.score_right : r.score_left};
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
    }
  };

  const int workers = std::clamp(options.workers, 1, n);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  std::vector<std::pair<int, int>> scores;
  scores.reserve(results.size());
  for (const auto& m : results) scores.emplace_back(m.score_a, m.score_b);
  SeriesStats s = summarize(scores);
  s.matches = std::move(results);
  return s;
}

inline std::string format_series_report(const SeriesStats& s, const TeamConfig& a, const TeamConfig& b,
                                        std::uint64_t base_seed) {
  using text::fixed;
  std::string out = "SERIES v1\n";
  out += "team_a " + a.name + " " + std::string(mode_name(a.evaluator_mode)) + "\n";
  out += "team_b " + b.name + " " + std::string(mode_name(b.evaluator_mode)) + "\n";
  out += "n " + std::to_string(s.n) + "\n";
  out += "base_seed " + std::to_string(base_seed) + "\n";
  out += "wins " + std::to_string(s.wins) + "\n";
  out += "draws " + std::to_string(s.draws) + "\n";
  out += "losses " + std::to_string(s.losses) + "\n";
  out += "mean_goal_diff " + fixed(s.mean_goal_diff, 4) + "\n";
  out += "std_dev " + fixed(s.std_dev, 4) + "\n";
  out += "ci95_low " + fixed(s.ci95_low, 4) + "\n";
  out += "ci95_high " + fixed(s.ci95_high, 4) + "\n";
  for (const SeriesMatch& m : s.matches) {
    out += "match " + std::to_string(m.index) + " " + std::to_string(m.seed) + " " + side_char(m.side_a) + " " +
           std::to_string(m.score_a) + " " + std::to_string(m.score_b) + "\n";
  }
  return out;
}

}  // namespace tacsim
