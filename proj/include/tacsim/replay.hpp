#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tacsim/engine.hpp"
#include "tacsim/error.hpp"
#include "tacsim/textio.hpp"
#include "tacsim/world.hpp"

// Two text formats:
//
//   .fulllog   FULLLOG v1
//              PITCH <length> <width> <goal_width>
//              TEAMS <left> <right>
//              SEED <seed>
//              per cycle:  C <cycle> <mode> <score_l> <score_r> <bx> <by> <bvx> <bvy>
//                          22 x  P <L|R> <number> <x> <y> <vx> <vy> <body_dir>
//              reals at 4 decimals.
//
//   .replay    REPLAY v1
//              PITCH <length> <width>
//              TEAMS <left> <right>
//              per cycle:  F <cycle> <score_l> <score_r> <bx> <by> then 22 x (<x> <y> <dir>)
//              players left 1..11 then right 1..11, reals at 2 decimals.
//
// Lines end with LF, fields are separated by one space, numbers never depend
// on the locale.

namespace tacsim {

// ---------------------------------------------------------------------------
// Full log

struct FullLogPlayer {
  Side side = Side::Left;
  int number = 1;
  Point2 position;
  Point2 velocity;
  double body_dir = 0.0;

  friend bool operator==(const FullLogPlayer&, const FullLogPlayer&) = default;
};

struct FullLogFrame {
  int cycle = 0;
  PlayMode play_mode = PlayMode::PlayOn;
  int score_left = 0;
  int score_right = 0;
  BallState ball;
  std::array<FullLogPlayer, WorldState::kPlayerCount> players{};

  friend bool operator==(const FullLogFrame& a, const FullLogFrame& b) {
    return a.cycle == b.cycle && a.play_mode == b.play_mode && a.score_left == b.score_left &&
           a.score_right == b.score_right && a.ball.position == b.ball.position &&
           a.ball.velocity == b.ball.velocity && a.players == b.players;
  }
};

struct FullLogHeader {
  Pitch pitch;
  std::string team_left;
  std::string team_right;
  std::uint64_t seed = 0;
};

struct FullLogDocument {
  FullLogHeader header;
  std::vector<FullLogFrame> frames;
};

inline FullLogFrame to_full_log_frame(const WorldState& w) {
  FullLogFrame f;
  f.cycle = w.cycle;
  f.play_mode = w.play_mode;
  f.score_left = w.score_left;
  f.score_right = w.score_right;
  f.ball = w.ball;
  for (std::size_t i = 0; i < f.players.size(); ++i) {
    const PlayerState& p = w.players()[i];
    f.players[i] = {p.side, p.number, p.position, p.velocity, p.body_dir};
  }
  return f;
}

class FullLogWriter {
 public:
  FullLogWriter(std::ostream& out, const FullLogHeader& header) : out_(out) {
    using text::fixed;
    put("FULLLOG v1\n");
    put("PITCH " + fixed(header.pitch.length, 4) + " " + fixed(header.pitch.width, 4) + " " +
        fixed(header.pitch.goal_width, 4) + "\n");
    put("TEAMS " + header.team_left + " " + header.team_right + "\n");
    put("SEED " + std::to_string(header.seed) + "\n");
  }

  void frame(const FullLogFrame& f) {
    using text::fixed;
    if (last_cycle_ && f.cycle <= *last_cycle_) throw Error("full log cycles must increase");
    last_cycle_ = f.cycle;
    std::string s = "C " + std::to_string(f.cycle) + " " + std::string(play_mode_token(f.play_mode)) + " " +
                    std::to_string(f.score_left) + " " + std::to_string(f.score_right) + " " +
                    fixed(f.ball.position.x, 4) + " " + fixed(f.ball.position.y, 4) + " " +
                    fixed(f.ball.velocity.x, 4) + " " + fixed(f.ball.velocity.y, 4) + "\n";
    for (const FullLogPlayer& p : f.players) {
      s += "P ";
      s += side_char(p.side);
      s += " " + std::to_string(p.number) + " " + fixed(p.position.x, 4) + " " + fixed(p.position.y, 4) + " " +
           fixed(p.velocity.x, 4) + " " + fixed(p.velocity.y, 4) + " " + fixed(p.body_dir, 4) + "\n";
    }
    put(s);
  }

  void frame(const WorldState& w) { frame(to_full_log_frame(w)); }

 private:
  void put(const std::string& s) {
    out_.write(s.data(), static_cast<std::streamsize>(s.size()));
    if (!out_) throw Error("full log write failed");
  }

  std::ostream& out_;
  std::optional<int> last_cycle_;
};

inline void write_full_log(const MatchLog& log, std::ostream& out) {
  FullLogWriter w(out, {log.pitch, log.team_left, log.team_right, log.seed});
  for (const WorldState& f : log.frames) w.frame(f);
}

inline void write_full_log(const FullLogDocument& doc, std::ostream& out) {
  FullLogWriter w(out, doc.header);
  for (const FullLogFrame& f : doc.frames) w.frame(f);
}

// Streaming full-log reader: the header is read on construction, frames on
// demand.
class FullLogReader {
 public:
  explicit FullLogReader(std::istream& in) : lines_(in) {
    std::string line;
    auto need = [&](std::string_view what) {
      if (!lines_.next(line)) throw FormatError(lines_.number() + 1, "missing " + std::string(what) + " line");
      return text::split(line);
    };
    auto f = need("version");
    if (f.size() != 2 || f[0] != "FULLLOG") throw FormatError(lines_.number(), "not a full log");
    if (f[1] != "v1") throw FormatError(lines_.number(), "unsupported full log version '" + std::string(f[1]) + "'");
    f = need("PITCH");
    if (f.empty() || f[0] != "PITCH") throw FormatError(lines_.number(), "expected PITCH");
    text::expect_fields(f, 4, lines_.number(), "PITCH");
    header_.pitch = {text::parse_real(f[1], lines_.number()), text::parse_real(f[2], lines_.number()),
                     text::parse_real(f[3], lines_.number())};
    try {
      header_.pitch.validate();
    } catch (const InvalidArgument& e) {
      throw FormatError(lines_.number(), e.what());
    }
    f = need("TEAMS");
    if (f.empty() || f[0] != "TEAMS") throw FormatError(lines_.number(), "expected TEAMS");
    text::expect_fields(f, 3, lines_.number(), "TEAMS");
    header_.team_left = std::string(f[1]);
    header_.team_right = std::string(f[2]);
    f = need("SEED");
    if (f.empty() || f[0] != "SEED") throw FormatError(lines_.number(), "expected SEED");
    text::expect_fields(f, 2, lines_.number(), "SEED");
    header_.seed = text::parse_int<std::uint64_t>(f[1], lines_.number());
  }

  const FullLogHeader& header() const { return header_; }

  // Reads the next C block; false at end of input.
  bool next(FullLogFrame& frame) {
    std::string line;
    if (!lines_.next(line)) return false;
    const std::size_t ln = lines_.number();
    auto f = text::split(line);
    if (f.empty() || f[0] != "C") throw FormatError(ln, "expected C line");
    text::expect_fields(f, 9, ln, "C line");
    frame.cycle = text::parse_int<int>(f[1], ln);
    if (last_cycle_ && frame.cycle <= *last_cycle_) throw FormatError(ln, "cycles must be strictly increasing");
    last_cycle_ = frame.cycle;
    const auto mode = parse_play_mode(f[2]);
    if (!mode) throw FormatError(ln, "unknown play mode '" + std::string(f[2]) + "'");
    frame.play_mode = *mode;
    frame.score_left = text::parse_int<int>(f[3], ln);
    frame.score_right = text::parse_int<int>(f[4], ln);
    frame.ball.position = {text::parse_real(f[5], ln), text::parse_real(f[6], ln)};
    frame.ball.velocity = {text::parse_real(f[7], ln), text::parse_real(f[8], ln)};
    for (std::size_t i = 0; i < frame.players.size(); ++i) {
      if (!lines_.next(line)) throw FormatError(lines_.number() + 1, "expected 22 P lines after C line " + std::to_string(ln));
      const std::size_t pl = lines_.number();
      auto p = text::split(line);
      if (p.empty() || p[0] != "P") throw FormatError(pl, "expected P line (22 per cycle)");
      text::expect_fields(p, 8, pl, "P line");
      FullLogPlayer& fp = frame.players[i];
      if (p[1] == "L") {
        fp.side = Side::Left;
      } else if (p[1] == "R") {
        fp.side = Side::Right;
      } else {
        throw FormatError(pl, "side must be L or R");
      }
      fp.number = text::parse_int<int>(p[2], pl);
      if (WorldState::index_of({fp.side, fp.number}) != i || fp.number < 1 || fp.number > 11) {
        throw FormatError(pl, "players must be listed L 1..11 then R 1..11");
      }
      fp.position = {text::parse_real(p[3], pl), text::parse_real(p[4], pl)};
      fp.velocity = {text::parse_real(p[5], pl), text::parse_real(p[6], pl)};
      fp.body_dir = text::parse_real(p[7], pl);
    }
    return true;
  }

 private:
  text::LineReader lines_;
  FullLogHeader header_;
  std::optional<int> last_cycle_;
};

inline FullLogDocument parse_full_log(std::istream& in) {
  FullLogReader r(in);
  FullLogDocument doc{r.header(), {}};
  FullLogFrame f;
  while (r.next(f)) doc.frames.push_back(f);
  return doc;
}

inline FullLogDocument parse_full_log(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_full_log(in);
}

// ---------------------------------------------------------------------------
// Replay

struct ReplayPlayer {
  Point2 position;
  double body_dir = 0.0;

  friend bool operator==(const ReplayPlayer&, const ReplayPlayer&) = default;
};

struct ReplayFrame {
  int cycle = 0;
  int score_left = 0;
  int score_right = 0;
  Point2 ball;
  std::array<ReplayPlayer, WorldState::kPlayerCount> players{};

  friend bool operator==(const ReplayFrame&, const ReplayFrame&) = default;
};

struct ReplayDocument {
  double pitch_length = 105.0;
  double pitch_width = 68.0;
  std::string team_left;
  std::string team_right;
  std::vector<ReplayFrame> frames;

  friend bool operator==(const ReplayDocument&, const ReplayDocument&) = default;
};

inline constexpr std::size_t kReplayTriples = WorldState::kPlayerCount;

inline std::string replay_header(double length, double width, std::string_view left, std::string_view right) {
  return "REPLAY v1\nPITCH " + text::fixed(length, 2) + " " + text::fixed(width, 2) + "\nTEAMS " + std::string(left) +
         " " + std::string(right) + "\n";
}

inline std::string replay_frame_line(const ReplayFrame& f) {
  using text::fixed;
  std::string s = "F " + std::to_string(f.cycle) + " " + std::to_string(f.score_left) + " " +
                  std::to_string(f.score_right) + " " + fixed(f.ball.x, 2) + " " + fixed(f.ball.y, 2);
  for (const ReplayPlayer& p : f.players) {
    s += " " + fixed(p.position.x, 2) + " " + fixed(p.position.y, 2) + " " + fixed(p.body_dir, 2);
  }
  s += "\n";
  return s;
}

inline std::string serialize_replay(const ReplayDocument& doc) {
  std::string out = replay_header(doc.pitch_length, doc.pitch_width, doc.team_left, doc.team_right);
  for (const ReplayFrame& f : doc.frames) out += replay_frame_line(f);
  return out;
}

inline ReplayFrame project_frame(const FullLogFrame& f) {
  using text::round_4_to_2;
  ReplayFrame r;
  r.cycle = f.cycle;
  r.score_left = f.score_left;
  r.score_right = f.score_right;
  r.ball = {round_4_to_2(f.ball.position.x), round_4_to_2(f.ball.position.y)};
  for (std::size_t i = 0; i < r.players.size(); ++i) {
    const FullLogPlayer& p = f.players[i];
    r.players[i] = {{round_4_to_2(p.position.x), round_4_to_2(p.position.y)}, round_4_to_2(p.body_dir)};
  }
  return r;
}

// Full log to replay, one cycle block at a time.
inline void convert_to_replay(std::istream& full_log, std::ostream& replay) {
  FullLogReader reader(full_log);
  const FullLogHeader& h = reader.header();
  auto put = [&](const std::string& s) {
    replay.write(s.data(), static_cast<std::streamsize>(s.size()));
    if (!replay) throw Error("replay write failed");
  };
  put(replay_header(h.pitch.length, h.pitch.width, h.team_left, h.team_right));
  FullLogFrame f;
  std::size_t frames = 0;
  while (reader.next(f)) {
    put(replay_frame_line(project_frame(f)));
    ++frames;
  }
  if (frames == 0) throw FormatError(1, "full log has no cycles");
}

inline std::string convert_to_replay(std::string_view full_log_text) {
  std::istringstream in{std::string(full_log_text)};
  std::ostringstream out;
  convert_to_replay(in, out);
  return out.str();
}

inline ReplayDocument parse_replay(std::string_view replay_text) {
  ReplayDocument doc;
  std::size_t pos = 0;
  std::size_t ln = 0;
  auto next_line = [&](std::string_view& line) {
    if (pos >= replay_text.size()) return false;
    std::size_t end = replay_text.find('\n', pos);
    if (end == std::string_view::npos) end = replay_text.size();
    line = replay_text.substr(pos, end - pos);
    pos = end + 1;
    ++ln;
    if (!line.empty() && line.back() == '\r') throw FormatError(ln, "CR line endings are not allowed");
    return true;
  };

  std::string_view line;
  if (!next_line(line)) throw FormatError(1, "empty replay");
  auto f = text::split(line);
  if (f.size() != 2 || f[0] != "REPLAY") throw FormatError(ln, "not a replay file");
  if (f[1] != "v1") throw FormatError(ln, "unsupported replay version '" + std::string(f[1]) + "'");

  if (!next_line(line)) throw FormatError(ln + 1, "missing PITCH line");
  f = text::split(line);
  if (f.empty() || f[0] != "PITCH") throw FormatError(ln, "expected PITCH");
  text::expect_fields(f, 3, ln, "PITCH");
  doc.pitch_length = text::parse_real(f[1], ln);
  doc.pitch_width = text::parse_real(f[2], ln);

  if (!next_line(line)) throw FormatError(ln + 1, "missing TEAMS line");
  f = text::split(line);
  if (f.empty() || f[0] != "TEAMS") throw FormatError(ln, "expected TEAMS");
  text::expect_fields(f, 3, ln, "TEAMS");
  doc.team_left = std::string(f[1]);
  doc.team_right = std::string(f[2]);

  constexpr std::size_t kFixed = 6;
  while (next_line(line)) {
    f = text::split(line);
    if (f.empty() || f[0] != "F") throw FormatError(ln, "expected F line");
    if (f.size() < kFixed || (f.size() - kFixed) % 3 != 0) {
      throw FormatError(ln, "malformed F line: " + std::to_string(f.size()) + " fields");
    }
    const std::size_t triples = (f.size() - kFixed) / 3;
    if (triples != kReplayTriples) {
      throw FormatError(ln, "expected 22 triples, got " + std::to_string(triples));
    }
    ReplayFrame fr;
    fr.cycle = text::parse_int<int>(f[1], ln);
    if (!doc.frames.empty() && fr.cycle <= doc.frames.back().cycle) {
      throw FormatError(ln, "cycles must be strictly increasing");
    }
    fr.score_left = text::parse_int<int>(f[2], ln);
    fr.score_right = text::parse_int<int>(f[3], ln);
    fr.ball = {text::parse_real(f[4], ln), text::parse_real(f[5], ln)};
    for (std::size_t i = 0; i < kReplayTriples; ++i) {
      const std::size_t k = kFixed + 3 * i;
      fr.players[i] = {{text::parse_real(f[k], ln), text::parse_real(f[k + 1], ln)}, text::parse_real(f[k + 2], ln)};
    }
    doc.frames.push_back(fr);
  }
  if (doc.frames.empty()) throw FormatError(ln + 1, "replay has no frames");
  return doc;
}

}  // namespace tacsim
