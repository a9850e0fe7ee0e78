#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "support.hpp"

using namespace tacsim;

namespace {

// Independent accounting: walk the matches once per team.
GroupRecord tally(const std::vector<MatchRow>& rows, const std::string& team) {
  GroupRecord g;
  g.team = team;
  for (const MatchRow& r : rows) {
    int mine = -1, theirs = -1;
    if (r.team_a == team) mine = r.score_a, theirs = r.score_b;
    if (r.team_b == team) mine = r.score_b, theirs = r.score_a;
    if (mine < 0) continue;
    ++g.played;
    g.goals_for += mine;
    g.goals_against += theirs;
    if (mine > theirs) ++g.wins;
    if (mine == theirs) ++g.draws;
    if (mine < theirs) ++g.losses;
  }
  g.points = 3 * g.wins + g.draws;
  return g;
}

bool ranks_before(const GroupRecord& a, const GroupRecord& b) {
  if (a.points != b.points) return a.points > b.points;
  if (a.goal_difference() != b.goal_difference()) return a.goal_difference() > b.goal_difference();
  if (a.goals_for != b.goals_for) return a.goals_for > b.goals_for;
  return a.team < b.team;
}

SeriesOptions quick(int workers = 1, int cycles = 500) {
  SeriesOptions o;
  o.base.cycles = cycles;
  o.workers = workers;
  return o;
}

}  // namespace

TEST(Points, Examples) {
  EXPECT_EQ(points_of(3, 1), 10);
  EXPECT_EQ(points_of(0, 0), 0);
  EXPECT_EQ(points_of(8, 0), 24);
  EXPECT_EQ(points_of(0, 4), 4);
}

TEST(Standings, ReferenceRowsSatisfyPointRule) {
  int rows = 0;
  for (const auto& t : fixture::reference_groups()) {
    for (const auto& r : t.rows) {
      EXPECT_EQ(points_of(r.wins, r.draws), r.points) << r.team;
      ++rows;
    }
  }
  EXPECT_EQ(rows, 24);
}

TEST(Standings, ReferenceRoundRobinsReproduceTables) {
  for (const auto& t : fixture::reference_groups()) {
    const auto table = compute_standings(t.matches);
    ASSERT_EQ(table.size(), t.rows.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto& want = t.rows[i];
      const auto& got = table[i];
      EXPECT_EQ(got.points, want.points) << want.team;
      // rows with identical statistics are ordered by name; only compare
      // names where the reference order is fully determined by the numbers
      const auto it = std::find_if(table.begin(), table.end(), [&](const GroupRecord& g) { return g.team == want.team; });
      ASSERT_NE(it, table.end());
      EXPECT_EQ(it->wins, want.wins);
      EXPECT_EQ(it->draws, want.draws);
      EXPECT_EQ(it->losses, want.losses);
      EXPECT_EQ(it->goals_for, want.goals_for);
      EXPECT_EQ(it->goals_against, want.goals_against);
      EXPECT_EQ(it->played, static_cast<int>(t.rows.size()) - 1);
    }
  }
}

TEST(Standings, TiesBrokenByGoalDifference) {
  const auto gb = compute_standings(fixture::group_b().matches);
  // Riton and GDUT_TiJi both on 10 points; goal difference 0 beats -1
  EXPECT_EQ(gb[4].team, "Riton");
  EXPECT_EQ(gb[5].team, "GDUT_TiJi");
  const auto gc = compute_standings(fixture::group_c().matches);
  EXPECT_EQ(gc[1].team, "robOTTO");
  EXPECT_EQ(gc[2].team, "MarIiK");
  EXPECT_EQ(gc[3].team, "Gliders2012");
  EXPECT_EQ(gc[1].points, 9);
  EXPECT_EQ(gc[3].points, 9);
}

TEST(Standings, FullTieFallsBackToName) {
  const auto ga = compute_standings(fixture::group_a().matches);
  EXPECT_EQ(ga[2].team, "AUT_2D");
  EXPECT_EQ(ga[3].team, "GPR-2D");
  EXPECT_EQ(ga[2].goal_difference(), ga[3].goal_difference());
}

TEST(Standings, TeamWithoutMatches) {
  const auto t = compute_standings({}, {"Solo"});
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0], (GroupRecord{"Solo", 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_TRUE(compute_standings({}).empty());
}

TEST(Standings, RandomRoundRobinsMatchOracle) {
  Rng rng(2012);
  for (int trial = 0; trial < 300; ++trial) {
    const int teams = 2 + static_cast<int>(rng.uniform() * 9);
    std::vector<std::string> names;
    for (int i = 0; i < teams; ++i) names.push_back("T" + std::to_string(static_cast<int>(rng.uniform() * 1000)) + "_" + std::to_string(i));
    std::vector<MatchRow> rows;
    for (int i = 0; i < teams; ++i) {
      for (int j = i + 1; j < teams; ++j) {
        rows.push_back({names[i], names[j], static_cast<int>(rng.uniform() * 4), static_cast<int>(rng.uniform() * 4)});
      }
    }
    const auto table = compute_standings(rows);
    ASSERT_EQ(table.size(), names.size());
    int total_points = 0, gf = 0, ga = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
      ASSERT_EQ(table[i], tally(rows, table[i].team));
      ASSERT_EQ(table[i].wins + table[i].draws + table[i].losses, teams - 1);
      if (i > 0) {
        ASSERT_TRUE(ranks_before(table[i - 1], table[i]));
      }
      total_points += table[i].points;
      gf += table[i].goals_for;
      ga += table[i].goals_against;
    }
    ASSERT_EQ(gf, ga);
    int draws = 0;
    for (const auto& r : rows) draws += r.score_a == r.score_b;
    ASSERT_EQ(total_points, 3 * static_cast<int>(rows.size()) - draws);
  }
}

TEST(Standings, RejectsBadRows) {
  EXPECT_THROW(compute_standings({{"A", "A", 1, 0}}), InvalidArgument);
  EXPECT_THROW(compute_standings({{"A", "B", -1, 0}}), InvalidArgument);
}

TEST(ResultsCsv, RoundTrip) {
  const auto rows = fixture::group_b().matches;
  const std::string csv = format_results_csv(rows);
  EXPECT_EQ(parse_results_csv(csv), rows);
  EXPECT_EQ(format_results_csv(parse_results_csv(csv)), csv);
  EXPECT_EQ(parse_results_csv("A,B,1,0"), (std::vector<MatchRow>{{"A", "B", 1, 0}}));
}

TEST(ResultsCsv, ErrorsCarryLineNumbers) {
  auto line_of = [](std::string_view csv) {
    try {
      parse_results_csv(csv);
    } catch (const FormatError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("A,B,1,0\nA,B,1\n"), 2u);
  EXPECT_EQ(line_of("A,B,x,0\n"), 1u);
  EXPECT_EQ(line_of("A,B,1,0\nA,B,1,0\n,B,1,0\n"), 3u);
  EXPECT_EQ(line_of("A,B,-1,0\n"), 1u);
  EXPECT_EQ(line_of("A,A,1,0\n"), 1u);
  EXPECT_EQ(line_of("A,B,1,0,9\n"), 1u);
}

TEST(StandingsText, Layout) {
  const std::string s = format_standings(compute_standings(fixture::group_d().matches));
  EXPECT_EQ(s,
            "Place  Team         Points  Total Score   W   D   L\n"
            "    1  HELIOS2012        9        4 : 0   3   0   0\n"
            "    2  Gliders2012       6        5 : 1   2   0   1\n"
            "    3  AUT_2D            3        1 : 3   1   0   2\n"
            "    4  robOTTO           0        0 : 6   0   0   3\n");
}

TEST(Series, SummaryExample) {
  const auto s = summarize({{2, 0}, {1, 1}, {0, 1}});
  EXPECT_EQ(s.n, 3);
  EXPECT_EQ(s.wins, 1);
  EXPECT_EQ(s.draws, 1);
  EXPECT_EQ(s.losses, 1);
  EXPECT_NEAR(s.mean_goal_diff, 1.0 / 3.0, 1e-12);
  // sample standard deviation of {2, 0, -1}
  const double sd = std::sqrt(((2 - 1.0 / 3) * (2 - 1.0 / 3) + (1.0 / 3) * (1.0 / 3) + (4.0 / 3) * (4.0 / 3)) / 2.0);
  EXPECT_NEAR(s.std_dev, sd, 1e-12);
  EXPECT_NEAR(s.ci95_low, 1.0 / 3 - 1.96 * sd / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(s.ci95_high, 1.0 / 3 + 1.96 * sd / std::sqrt(3.0), 1e-12);
}

TEST(Series, SingleMatchHasNoSpread) {
  const auto s = summarize({{3, 1}});
  EXPECT_EQ(s.mean_goal_diff, 2.0);
  EXPECT_EQ(s.std_dev, 0.0);
  EXPECT_EQ(s.ci95_low, 2.0);
  EXPECT_EQ(s.ci95_high, 2.0);
}

TEST(Series, SeedsAndSidesAlternate) {
  const auto s = run_series(tactics_team("A"), baseline_team("B"), 4, 100, quick());
  ASSERT_EQ(s.matches.size(), 4u);
  for (int i = 0; i < 4; ++i) {
    const auto& m = s.matches[static_cast<std::size_t>(i)];
    EXPECT_EQ(m.index, i);
    EXPECT_EQ(m.seed, 100u + static_cast<std::uint64_t>(i));
    EXPECT_EQ(m.side_a, i % 2 == 0 ? Side::Left : Side::Right);
  }
  // each entry equals the standalone match with the same seed and sides
  MatchConfig c = quick().base;
  c.seed = 101;
  c.team_left = baseline_team("B");
  c.team_right = tactics_team("A");
  const auto r = play_match(c, false);
  EXPECT_EQ(s.matches[1].score_a, r.score_right);
  EXPECT_EQ(s.matches[1].score_b, r.score_left);
}

TEST(Series, WorkerCountDoesNotChangeReport) {
  const TeamConfig a = tactics_team("A"), b = baseline_team("B");
  const auto one = run_series(a, b, 6, 9, quick(1));
  const auto many = run_series(a, b, 6, 9, quick(4));
  EXPECT_EQ(format_series_report(one, a, b, 9), format_series_report(many, a, b, 9));
}

TEST(Series, ReportLayout) {
  SeriesStats s = summarize({{2, 0}, {1, 1}, {0, 1}});
  s.matches = {{0, 5, Side::Left, 2, 0}, {1, 6, Side::Right, 1, 1}, {2, 7, Side::Left, 0, 1}};
  EXPECT_EQ(format_series_report(s, tactics_team("A"), baseline_team("B"), 5),
            "SERIES v1\n"
            "team_a A tactics\n"
            "team_b B baseline\n"
            "n 3\n"
            "base_seed 5\n"
            "wins 1\n"
            "draws 1\n"
            "losses 1\n"
            "mean_goal_diff 0.3333\n"
            "std_dev 1.5275\n"
            "ci95_low -1.3952\n"
            "ci95_high 2.0619\n"
            "match 0 5 L 2 0\n"
            "match 1 6 R 1 1\n"
            "match 2 7 L 0 1\n");
}

TEST(Series, Errors) {
  EXPECT_THROW(run_series(tactics_team(), baseline_team(), 0, 1), InvalidArgument);
  SeriesOptions o = quick();
  o.base.cycles = -5;
  EXPECT_THROW(run_series(tactics_team(), baseline_team(), 3, 1, o), InvalidArgument);
}

TEST(Config, SeriesDocument) {
  const auto c = parse_series_config(
      "# comment\n"
      "[match]\n"
      "cycles = 1200   # short\n"
      "seed = 4\n"
      "noise = 0.1\n"
      "kickoff = right\n"
      "\n"
      "[team_a]\n"
      "name = northside\n"
      "tactics.advance = 20\n"
      "tactics.center = 30 5\n"
      "home.9 = 8 1 fwd\n"
      "[team_b]\n"
      "preset = baseline\n"
      "name = opp\n"
      "baseline.x_weight = 0.5\n");
  EXPECT_EQ(c.match.cycles, 1200);
  EXPECT_EQ(c.match.seed, 4u);
  EXPECT_EQ(c.match.noise_scale, 0.1);
  EXPECT_EQ(c.match.kickoff, Side::Right);
  EXPECT_EQ(c.team_a.name, "northside");
  EXPECT_EQ(c.team_a.evaluator_mode, EvaluatorMode::Tactics);
  EXPECT_EQ(c.team_a.tactics.advance, 20.0);
  EXPECT_EQ(c.team_a.tactics.center_target, (Point2{30, 5}));
  EXPECT_EQ(c.team_a.formation.home[8], (Point2{8, 1}));
  EXPECT_EQ(c.team_a.formation.roles[8], Role::Forward);
  EXPECT_EQ(c.team_b.name, "opp");
  EXPECT_EQ(c.team_b.evaluator_mode, EvaluatorMode::Baseline);
  EXPECT_EQ(c.team_b.baseline.x_weight, 0.5);
}

TEST(Config, TeamDocument) {
  const auto t = parse_team_config("preset = baseline\nname = wall\nblock_count = 2\n");
  EXPECT_EQ(t.name, "wall");
  EXPECT_EQ(t.evaluator_mode, EvaluatorMode::Baseline);
  EXPECT_EQ(t.candidates.positioning.block_count, 2);
  EXPECT_FALSE(team_preset("random"));
}

TEST(Config, Errors) {
  auto line_of = [](auto fn) {
    try {
      fn();
    } catch (const FormatError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of([] { parse_series_config("cycles = 4\n"); }), 1u);
  EXPECT_EQ(line_of([] { parse_series_config("[match]\n[other]\nx = 1\n"); }), 3u);
  EXPECT_EQ(line_of([] { parse_series_config("[match]\ncycles = many\n"); }), 2u);
  EXPECT_EQ(line_of([] { parse_series_config("[match]\nspeed = 2\n"); }), 2u);
  EXPECT_EQ(line_of([] { parse_series_config("[team_a]\nhome.12 = 0 0 mid\n"); }), 2u);
  EXPECT_EQ(line_of([] { parse_series_config("[team_a]\nevaluator = magic\n"); }), 2u);
  EXPECT_EQ(line_of([] { parse_series_config("[team_a\n"); }), 1u);
  EXPECT_EQ(line_of([] { parse_team_config("[team_a]\nname = x\n"); }), 2u);
  EXPECT_THROW(parse_team_config("name = has space\n"), InvalidArgument);
  EXPECT_THROW(parse_team_config("home.2 = 0 0 gk\n"), InvalidArgument);  // two keepers
  EXPECT_THROW(parse_series_config("[match]\ncycles = -1\n"), InvalidArgument);
}
