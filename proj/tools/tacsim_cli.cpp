// tacsim: run matches and series, print standings, convert logs.
//
// Exit codes: 0 ok, 2 usage, 3 input format, 4 engine.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tacsim/tacsim.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;
constexpr int kExitEngine = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A format error already prefixed with the file it came from.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename Fn>
auto parsing(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const tacsim::FormatError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const tacsim::InvalidArgument& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << data;
  if (!out.flush()) throw UsageError("write failed for '" + path + "'");
}

// A preset name, or a path to a team file.
tacsim::TeamConfig load_team(const std::string& spec) {
  if (auto preset = tacsim::team_preset(spec)) return *preset;
  const std::string text = read_file(spec);
  return parsing(spec, [&] { return tacsim::parse_team_config(text); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tactic-evaluation soccer simulator"};
  app.require_subcommand(1);

  // match
  auto* match = app.add_subcommand("match", "Play one match and write its logs");
  std::uint64_t m_seed = 0;
  std::string m_team_a = "tactics";
  std::string m_team_b = "baseline";
  int m_cycles = 6000;
  double m_noise = 0.05;
  std::string m_log, m_replay;
  match->add_option("--seed", m_seed, "Match seed");
  match->add_option("--team-a", m_team_a, "Left team: preset (tactics, baseline) or team file");
  match->add_option("--team-b", m_team_b, "Right team: preset or team file");
  match->add_option("--cycles", m_cycles, "Cycles to play")->check(CLI::NonNegativeNumber);
  match->add_option("--noise", m_noise, "Kick direction noise std-dev (radians)")->check(CLI::NonNegativeNumber);
  match->add_option("--log", m_log, "Write the full log (.fulllog)");
  match->add_option("--replay", m_replay, "Write the compact replay (.replay)");

  // series
  auto* series = app.add_subcommand("series", "Play a seeded series and report goal-difference statistics");
  int s_n = 100;
  std::uint64_t s_seed = 0;
  std::string s_team_a, s_team_b, s_out, s_config;
  int s_workers = 1;
  std::optional<int> s_cycles;
  std::optional<double> s_noise;
  series->add_option("--n", s_n, "Number of matches")->check(CLI::PositiveNumber);
  series->add_option("--seed", s_seed, "Base seed; match i uses seed + i");
  series->add_option("--team-a", s_team_a, "Team A: preset or team file");
  series->add_option("--team-b", s_team_b, "Team B: preset or team file");
  series->add_option("--out", s_out, "Write the report here instead of stdout");
  series->add_option("--workers", s_workers, "Parallel match workers")->check(CLI::PositiveNumber);
  series->add_option("--cycles", s_cycles, "Cycles per match")->check(CLI::NonNegativeNumber);
  series->add_option("--noise", s_noise, "Kick direction noise std-dev")->check(CLI::NonNegativeNumber);
  series->add_option("--config", s_config, "Series configuration file ([match], [team_a], [team_b])");

  // standings
  auto* standings = app.add_subcommand("standings", "Group table from a results CSV");
  std::string st_in;
  standings->add_option("--in", st_in, "team_a,team_b,score_a,score_b rows")->required();

  // convert
  auto* convert = app.add_subcommand("convert", "Convert a full log to a replay");
  std::string c_in, c_out;
  convert->add_option("--in", c_in, "Input .fulllog")->required();
  convert->add_option("--out", c_out, "Output .replay")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*match) {
      tacsim::MatchConfig c;
      c.seed = m_seed;
      c.cycles = m_cycles;
      c.noise_scale = m_noise;
      c.team_left = load_team(m_team_a);
      c.team_right = load_team(m_team_b);
      if (c.team_left.name == c.team_right.name) c.team_right.name += "2";
      const tacsim::MatchResult r = tacsim::play_match(c);
      std::ostringstream full;
      tacsim::write_full_log(r.log, full);
      if (!m_log.empty()) write_file(m_log, full.str());
      if (!m_replay.empty()) write_file(m_replay, tacsim::convert_to_replay(full.str()));
      std::cout << c.team_left.name << " " << r.score_left << " : " << r.score_right << " " << c.team_right.name
                << "\n";
    } else if (*series) {
      tacsim::SeriesConfig sc;
      if (!s_config.empty()) {
        const std::string text = read_file(s_config);
        sc = parsing(s_config, [&] { return tacsim::parse_series_config(text); });
      }
      if (!s_team_a.empty()) sc.team_a = load_team(s_team_a);
      if (!s_team_b.empty()) sc.team_b = load_team(s_team_b);
      if (s_cycles) sc.match.cycles = *s_cycles;
      if (s_noise) sc.match.noise_scale = *s_noise;
      tacsim::SeriesOptions opts{sc.match, s_workers};
      const tacsim::SeriesStats stats = tacsim::run_series(sc.team_a, sc.team_b, s_n, s_seed, opts);
      const std::string report = tacsim::format_series_report(stats, sc.team_a, sc.team_b, s_seed);
      if (s_out.empty()) {
        std::cout << report;
      } else {
        write_file(s_out, report);
      }
    } else if (*standings) {
      const std::string text = read_file(st_in);
      const auto rows = parsing(st_in, [&] { return tacsim::parse_results_csv(text); });
      std::cout << tacsim::format_standings(tacsim::compute_standings(rows));
    } else if (*convert) {
      std::ifstream in(c_in, std::ios::binary);
      if (!in) throw UsageError("cannot open '" + c_in + "'");
      std::ostringstream out;
      parsing(c_in, [&] { tacsim::convert_to_replay(in, out); });
      write_file(c_out, out.str());
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const tacsim::FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const tacsim::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tacsim::EngineError& e) {
    std::cerr << "engine error: " << e.what() << "\n";
    return kExitEngine;
  }
  return 0;
}
