#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tacsim/error.hpp"
#include "tacsim/geometry.hpp"

namespace tacsim {

enum class Side : std::uint8_t { Left, Right };

constexpr Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

// +1 when the side attacks toward +x, -1 otherwise.
constexpr double attack_sign(Side s) { return s == Side::Left ? 1.0 : -1.0; }

constexpr char side_char(Side s) { return s == Side::Left ? 'L' : 'R'; }

enum class Role : std::uint8_t { Goalkeeper, Defender, Midfielder, Forward };

enum class PlayMode : std::uint8_t { KickoffLeft, KickoffRight, PlayOn, GoalLeft, GoalRight, OutOfPlay };

inline std::string_view play_mode_token(PlayMode m) {
  switch (m) {
    case PlayMode::KickoffLeft: return "kickoff_l";
    case PlayMode::KickoffRight: return "kickoff_r";
    case PlayMode::PlayOn: return "play_on";
    case PlayMode::GoalLeft: return "goal_l";
    case PlayMode::GoalRight: return "goal_r";
    case PlayMode::OutOfPlay: return "out_of_play";
  }
  return "play_on";
}

inline std::optional<PlayMode> parse_play_mode(std::string_view token) {
  for (PlayMode m : {PlayMode::KickoffLeft, PlayMode::KickoffRight, PlayMode::PlayOn, PlayMode::GoalLeft,
                     PlayMode::GoalRight, PlayMode::OutOfPlay}) {
    if (play_mode_token(m) == token) return m;
  }
  return std::nullopt;
}

struct PlayerId {
  Side side = Side::Left;
  int number = 1;

  friend constexpr auto operator<=>(const PlayerId&, const PlayerId&) = default;
};

inline std::string to_string(PlayerId id) {
  return std::string(1, side_char(id.side)) + std::to_string(id.number);
}

struct PlayerState {
  Side side = Side::Left;
  int number = 1;
  Point2 position;
  Point2 velocity;
  double body_dir = 0.0;
  Role role = Role::Midfielder;

  PlayerId id() const { return {side, number}; }

  friend bool operator==(const PlayerState&, const PlayerState&) = default;
};

struct BallState {
  Point2 position;
  Point2 velocity;

  friend bool operator==(const BallState&, const BallState&) = default;
};

// One simulation cycle. Players are stored left 1..11 then right 1..11, so
// index_of() is a constant-time lookup.
class WorldState {
 public:
  static constexpr int kPlayersPerSide = 11;
  static constexpr int kPlayerCount = 2 * kPlayersPerSide;

  int cycle = 0;
  PlayMode play_mode = PlayMode::KickoffLeft;
  BallState ball;
  int score_left = 0;
  int score_right = 0;
  std::optional<PlayerId> holder;
  // Side that last kicked or controlled the ball; decides restarts and
  // cross-side possession ties.
  std::optional<Side> last_touch;
  Pitch pitch;

  WorldState() = default;

  // Accepts players in any order; rejects anything other than exactly
  // one player per (side, number) for numbers 1..11.
  WorldState(Pitch pitch_, std::vector<PlayerState> roster) : pitch(pitch_) {
    pitch.validate();
    if (roster.size() != static_cast<std::size_t>(kPlayerCount)) {
      throw InvalidArgument("world requires exactly 22 players, got " + std::to_string(roster.size()));
    }
    std::array<bool, kPlayerCount> seen{};
    for (const PlayerState& p : roster) {
      if (p.number < 1 || p.number > kPlayersPerSide) {
        throw InvalidArgument("player number out of range: " + std::to_string(p.number));
      }
      const std::size_t idx = index_of(p.id());
      if (seen[idx]) throw InvalidArgument("duplicate player " + to_string(p.id()));
      seen[idx] = true;
      players_[idx] = p;
      players_[idx].body_dir = normalize_degrees(p.body_dir);
    }
  }

  static constexpr std::size_t index_of(PlayerId id) {
    return static_cast<std::size_t>((id.side == Side::Left ? 0 : kPlayersPerSide) + id.number - 1);
  }

  static bool valid_id(PlayerId id) { return id.number >= 1 && id.number <= kPlayersPerSide; }

  const std::array<PlayerState, kPlayerCount>& players() const { return players_; }
  std::array<PlayerState, kPlayerCount>& players() { return players_; }

  const PlayerState& player(PlayerId id) const {
    if (!valid_id(id)) throw InvalidArgument("no such player " + to_string(id));
    return players_[index_of(id)];
  }
  PlayerState& player(PlayerId id) {
    if (!valid_id(id)) throw InvalidArgument("no such player " + to_string(id));
    return players_[index_of(id)];
  }

  bool is_holder(PlayerId id) const { return holder && *holder == id; }

  friend bool operator==(const WorldState&, const WorldState&) = default;

 private:
  std::array<PlayerState, kPlayerCount> players_{};
};

inline Point2 opponent_goal_center(Side attacker, const Pitch& pitch) {
  return {attack_sign(attacker) * pitch.half_length(), 0.0};
}

inline Point2 own_goal_center(Side defender, const Pitch& pitch) {
  return {-attack_sign(defender) * pitch.half_length(), 0.0};
}

// Reflects the world across the halfway line and swaps the side labels, so
// that the right team sees itself as the left team attacking +x.
inline WorldState mirrored(const WorldState& w) {
  WorldState m = w;
  for (int n = 1; n <= WorldState::kPlayersPerSide; ++n) {
    for (Side s : {Side::Left, Side::Right}) {
      PlayerState p = w.player({s, n});
      p.side = opposite(s);
      p.position = mirror_x(p.position);
      p.velocity = mirror_x(p.velocity);
      p.body_dir = normalize_degrees(180.0 - p.body_dir);
      m.player({p.side, n}) = p;
    }
  }
  m.ball.position = mirror_x(w.ball.position);
  m.ball.velocity = mirror_x(w.ball.velocity);
  std::swap(m.score_left, m.score_right);
  if (w.holder) m.holder = PlayerId{opposite(w.holder->side), w.holder->number};
  if (w.last_touch) m.last_touch = opposite(*w.last_touch);
  switch (w.play_mode) {
    case PlayMode::KickoffLeft: m.play_mode = PlayMode::KickoffRight; break;
    case PlayMode::KickoffRight: m.play_mode = PlayMode::KickoffLeft; break;
    case PlayMode::GoalLeft: m.play_mode = PlayMode::GoalRight; break;
    case PlayMode::GoalRight: m.play_mode = PlayMode::GoalLeft; break;
    default: break;
  }
  return m;
}

// Canonical view for decision making: the given side becomes Left.
inline WorldState canonical_view(const WorldState& w, Side side) {
  return side == Side::Left ? w : mirrored(w);
}

}  // namespace tacsim
