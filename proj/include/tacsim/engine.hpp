#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tacsim/action.hpp"
#include "tacsim/error.hpp"
#include "tacsim/evaluation.hpp"
#include "tacsim/formation.hpp"
#include "tacsim/rng.hpp"
#include "tacsim/world.hpp"

namespace tacsim {

struct PhysicsParams {
  double ball_decay = 0.94;
  double kick_speed = 2.7;         // m/cycle
  double max_player_speed = 1.05;  // m/cycle
  double kickable_margin = 1.085;  // m
  double dribble_speed = 0.8;      // m/cycle while carrying the ball
  double hold_offset = 0.6;        // carried ball sits this far ahead of the dribbler
  double post_inset = 1.0;         // shots aim this far inside a post
  int intercept_horizon = 50;      // cycles
};

struct TeamConfig {
  std::string name = "team";
  EvaluatorMode evaluator_mode = EvaluatorMode::Tactics;
  TacticConfig tactics;
  Formation formation = default_formation();
  CandidateParams candidates;
  BaselineOptions baseline;
  // Tactics mode only: offer support moves in possession and blocks out of it.
  bool phase_positioning = true;

  void validate() const {
    formation.validate();
    if (name.empty() || name.find_first_of(" \t\r\n,") != std::string::npos) {
      throw InvalidArgument("team name must be non-empty without whitespace or commas: '" + name + "'");
    }
  }
};

inline TeamConfig tactics_team(std::string name = "tactics") {
  TeamConfig t;
  t.name = std::move(name);
  t.evaluator_mode = EvaluatorMode::Tactics;
  return t;
}

inline TeamConfig baseline_team(std::string name = "baseline") {
  TeamConfig t;
  t.name = std::move(name);
  t.evaluator_mode = EvaluatorMode::Baseline;
  return t;
}

struct MatchConfig {
  int cycles = 6000;
  std::uint64_t seed = 0;
  TeamConfig team_left = tactics_team();
  TeamConfig team_right = baseline_team();
  double noise_scale = 0.05;  // kick direction std-dev, radians
  Side kickoff = Side::Left;
  Pitch pitch;
  PhysicsParams physics;

  void validate() const {
    if (cycles < 0) throw InvalidArgument("cycles must be non-negative");
    if (!(noise_scale >= 0.0)) throw InvalidArgument("noise_scale must be >= 0");
    pitch.validate();
    team_left.validate();
    team_right.validate();
  }
};

// Same match seen from the other end: teams swap sides and the other team
// kicks off.
inline MatchConfig mirrored(const MatchConfig& c) {
  MatchConfig m = c;
  std::swap(m.team_left, m.team_right);
  m.kickoff = opposite(c.kickoff);
  return m;
}

struct MatchLog {
  Pitch pitch;
  std::string team_left;
  std::string team_right;
  std::uint64_t seed = 0;
  std::vector<WorldState> frames;
};

struct MatchResult {
  int score_left = 0;
  int score_right = 0;
  int cycles_played = 0;
  MatchLog log;
};

using Decisions = std::map<PlayerId, Action>;

struct StepParams {
  PhysicsParams physics;
  double noise_scale = 0.0;
  Formation formation_left = default_formation();
  Formation formation_right = default_formation();
};

// Kickoff arrangement for `kicker_side`; scores and cycle are left at zero.
inline WorldState kickoff_world(const Pitch& pitch, const Formation& left, const Formation& right, Side kicker_side) {
  std::vector<PlayerState> roster;
  for (Side s : {Side::Left, Side::Right}) {
    const Formation& f = s == Side::Left ? left : right;
    for (int n = 1; n <= WorldState::kPlayersPerSide; ++n) {
      PlayerState p;
      p.side = s;
      p.number = n;
      p.role = f.roles[static_cast<std::size_t>(n - 1)];
      Point2 pos = canonical_kickoff_position(f, n, pitch);
      if (s == kicker_side && n == 9) pos = {-0.5, 0.0};
      p.position = s == Side::Left ? pos : mirror_x(pos);
      p.body_dir = s == Side::Left ? 0.0 : -180.0;
      roster.push_back(p);
    }
  }
  WorldState w(pitch, std::move(roster));
  w.play_mode = kicker_side == Side::Left ? PlayMode::KickoffLeft : PlayMode::KickoffRight;
  w.holder = PlayerId{kicker_side, 9};
  w.last_touch = kicker_side;
  return w;
}

// Ball position after t cycles of free rolling.
inline Point2 ball_after(const BallState& ball, int t, double decay) {
  if (t <= 0) return ball.position;
  return ball.position + ball.velocity * ((1.0 - std::pow(decay, t)) / (1.0 - decay));
}

struct InterceptOrder {
  PlayerId player;
  Point2 point;  // where to run
  double time = 0.0;  // predicted cycles to reach the ball
};

// Per side without the ball, the player who reaches it first: earliest
// cycle t with |p - ball(t)| <= t * speed + kickable_margin; ties by the
// remaining gap, then by lower number.
inline std::vector<InterceptOrder> intercept_assignment(const WorldState& world, const PhysicsParams& physics = {}) {
  std::vector<InterceptOrder> out;
  const int horizon = physics.intercept_horizon;
  std::vector<Point2> path(static_cast<std::size_t>(horizon) + 1);
  for (int t = 0; t <= horizon; ++t) path[static_cast<std::size_t>(t)] = ball_after(world.ball, t, physics.ball_decay);

  for (Side side : {Side::Left, Side::Right}) {
    if (world.holder && world.holder->side == side) continue;
    std::optional<std::tuple<double, double, int>> best_key;
    InterceptOrder best;
    for (int n = 1; n <= WorldState::kPlayersPerSide; ++n) {
      const Point2 p = world.player({side, n}).position;
      double time = 0.0;
      double gap = 0.0;
      Point2 point = path.back();
      bool found = false;
      for (int t = 0; t <= horizon; ++t) {
        const Point2 b = path[static_cast<std::size_t>(t)];
        const double d = euclidean(p, b);
        if (d <= t * physics.max_player_speed + physics.kickable_margin) {
          time = t;
          gap = d;
          point = b;
          found = true;
          break;
        }
      }
      if (!found) {
        gap = euclidean(p, path.back());
        time = horizon + (gap - physics.kickable_margin) / physics.max_player_speed;
      }
      const auto key = std::make_tuple(time, gap, n);
      if (!best_key || key < *best_key) {
        best_key = key;
        best = {{side, n}, point, time};
      }
    }
    out.push_back(best);
  }
  return out;
}

namespace detail {

inline PlayerId goalkeeper_of(const WorldState& w, Side side) {
  for (int n = 1; n <= WorldState::kPlayersPerSide; ++n) {
    if (w.player({side, n}).role == Role::Goalkeeper) return {side, n};
  }
  return {side, 1};
}

// Shots go to the inside of the post farther from the defending keeper.
inline Point2 shot_aim(const WorldState& w, Side attacker, const PhysicsParams& physics) {
  const Point2 goal = opponent_goal_center(attacker, w.pitch);
  const double y = 0.5 * w.pitch.goal_width - physics.post_inset;
  const double keeper_y = w.player(goalkeeper_of(w, opposite(attacker))).position.y;
  return {goal.x, keeper_y > 0.0 ? -y : y};
}

inline PlayerId nearest_of_side(const WorldState& w, Side side, Point2 p) {
  PlayerId best{side, 1};
  double best_d = INFINITY;
  for (int n = 1; n <= WorldState::kPlayersPerSide; ++n) {
    const double d = euclidean(w.player({side, n}).position, p);
    if (d < best_d) {
      best_d = d;
      best = {side, n};
    }
  }
  return best;
}

// Gives the ball to `taker` at `spot` for a restart.
inline void award_restart(WorldState& w, PlayerId taker, Point2 spot) {
  PlayerState& p = w.player(taker);
  p.position = spot;
  p.velocity = {};
  w.ball.position = spot;
  w.ball.velocity = {};
  w.holder = taker;
  w.last_touch = taker.side;
  w.play_mode = PlayMode::OutOfPlay;
}

}  // namespace detail

// Advances the world one cycle. Order: the holder's ball action, player
// movement, ball kinematics, goal and boundary checks, then possession.
inline WorldState step(const WorldState& world, const Decisions& decisions, const StepParams& params, Rng& rng) {
  if (decisions.size() != static_cast<std::size_t>(WorldState::kPlayerCount)) {
    throw EngineError("step needs one decision per player, got " + std::to_string(decisions.size()));
  }
  for (const auto& [id, action] : decisions) {
    if (!WorldState::valid_id(id)) throw EngineError("decision for unknown player " + to_string(id));
    try {
      (void)predict_result(world, id, action);
    } catch (const InvalidArgument& e) {
      throw EngineError(std::string("illegal decision: ") + e.what());
    }
  }

  const PhysicsParams& ph = params.physics;
  const Pitch& pitch = world.pitch;

  if (world.play_mode == PlayMode::GoalLeft || world.play_mode == PlayMode::GoalRight) {
    const Side restart = world.play_mode == PlayMode::GoalLeft ? Side::Right : Side::Left;
    WorldState next = kickoff_world(pitch, params.formation_left, params.formation_right, restart);
    next.cycle = world.cycle + 1;
    next.score_left = world.score_left;
    next.score_right = world.score_right;
    return next;
  }

  WorldState next = world;
  next.cycle = world.cycle + 1;
  next.play_mode = PlayMode::PlayOn;

  std::optional<PlayerId> kicker;
  bool carried = false;

  if (world.holder) {
    const PlayerId h = *world.holder;
    const Action& a = decisions.at(h);
    PlayerState& hp = next.player(h);
    hp.velocity = {};
    if (is_kick(a)) {
      const Point2 aim = std::holds_alternative<Shoot>(a) ? detail::shot_aim(world, h.side, ph)
                                                          : predict_result(world, h, a).point;
      Point2 dir = aim - world.ball.position;
      const double len = norm(dir);
      dir = len > 0.0 ? dir * (1.0 / len) : unit_vector(hp.body_dir);
      const double eps = params.noise_scale * rng.gaussian();
      if (eps != 0.0) {
        const double c = std::cos(eps);
        const double s = std::sin(eps);
        dir = {dir.x * c - dir.y * s, dir.x * s + dir.y * c};
      }
      next.ball.velocity = dir * ph.kick_speed;
      hp.body_dir = heading_degrees(dir);
      next.holder.reset();
      next.last_touch = h.side;
      kicker = h;
    } else if (const auto* d = std::get_if<Dribble>(&a)) {
      const Point2 u = unit_vector(d->direction);
      const Point2 from = hp.position;
      hp.position = clamp_to_pitch(from + u * ph.dribble_speed, pitch);
      hp.velocity = hp.position - from;
      hp.body_dir = normalize_degrees(d->direction);
      next.ball.position = clamp_to_pitch(hp.position + u * ph.hold_offset, pitch);
      next.ball.velocity = {};
      carried = true;
    } else {
      next.ball.velocity = {};
    }
  }

  for (const auto& [id, action] : decisions) {
    if (world.is_holder(id)) continue;
    PlayerState& p = next.player(id);
    const Point2 from = world.player(id).position;
    Point2 to = from;
    if (const auto* m = std::get_if<Move>(&action)) {
      to = step_toward(from, clamp_to_pitch(m->target, pitch), ph.max_player_speed);
    } else if (const auto* b = std::get_if<Block>(&action)) {
      to = step_toward(from, midpoint(world.player(b->opponent).position, world.ball.position), ph.max_player_speed);
    }
    p.position = clamp_to_pitch(to, pitch);
    p.velocity = p.position - from;
    if (p.velocity.x != 0.0 || p.velocity.y != 0.0) p.body_dir = heading_degrees(p.velocity);
  }

  const Point2 ball_from = next.ball.position;
  if (!carried) {
    next.ball.position = ball_from + next.ball.velocity;
    next.ball.velocity = next.ball.velocity * ph.ball_decay;
  }

  // Boundary: find the first line the ball crossed this cycle.
  const Point2 ball_to = next.ball.position;
  const double hl = pitch.half_length();
  const double hw = pitch.half_width();
  if (!pitch.contains(ball_to)) {
    const Point2 delta = ball_to - ball_from;
    double t_goal_line = INFINITY;
    double t_touch = INFINITY;
    if (std::abs(ball_to.x) > hl && delta.x != 0.0) {
      t_goal_line = ((ball_to.x > 0.0 ? hl : -hl) - ball_from.x) / delta.x;
    }
    if (std::abs(ball_to.y) > hw && delta.y != 0.0) {
      t_touch = ((ball_to.y > 0.0 ? hw : -hw) - ball_from.y) / delta.y;
    }
    if (t_goal_line <= t_touch) {
      const double t = std::clamp(t_goal_line, 0.0, 1.0);
      const Point2 cross_pt = clamp_to_pitch(ball_from + delta * t, pitch);
      const Side defending = ball_to.x > 0.0 ? Side::Right : Side::Left;
      if (std::abs(cross_pt.y) <= 0.5 * pitch.goal_width) {
        next.ball = {cross_pt, {}};
        next.holder.reset();
        if (defending == Side::Right) {
          ++next.score_left;
          next.play_mode = PlayMode::GoalLeft;
        } else {
          ++next.score_right;
          next.play_mode = PlayMode::GoalRight;
        }
        return next;
      }
      // Goal kick: the defending keeper restarts from the edge of the goal area.
      const PlayerId keeper = detail::goalkeeper_of(next, defending);
      const Point2 spot{(defending == Side::Right ? 1.0 : -1.0) * (hl - 5.5), 0.0};
      detail::award_restart(next, keeper, spot);
      return next;
    }
    const double t = std::clamp(t_touch, 0.0, 1.0);
    const Point2 spot = clamp_to_pitch(ball_from + delta * t, pitch);
    const Side receiving = next.last_touch ? opposite(*next.last_touch) : Side::Left;
    detail::award_restart(next, detail::nearest_of_side(next, receiving, spot), spot);
    return next;
  }

  // Possession: nearest player within the kickable margin. A challenger
  // level with the holder wins the ball; remaining ties favour the side that
  // did not touch last, then the lower number. The kicker cannot recover
  // his own kick this cycle.
  std::optional<std::tuple<double, int, int, int>> best_key;
  std::optional<PlayerId> best;
  for (const PlayerState& p : next.players()) {
    if (kicker && p.id() == *kicker) continue;
    const double d = euclidean(p.position, next.ball.position);
    if (d > ph.kickable_margin) continue;
    const auto key = std::make_tuple(d, next.is_holder(p.id()) ? 1 : 0,
                                     next.last_touch && p.side == *next.last_touch ? 1 : 0, p.number);
    if (!best_key || key < *best_key) {
      best_key = key;
      best = p.id();
    }
  }
  if (best) {
    if (!next.is_holder(*best)) next.ball.velocity = {};
    next.holder = best;
    next.last_touch = best->side;
  } else {
    next.holder.reset();
  }
  return next;
}

// Decisions for every player: interceptors chase, everyone else evaluates.
inline Decisions decide_all(const WorldState& world, const MatchConfig& config) {
  Decisions out;
  if (world.play_mode == PlayMode::GoalLeft || world.play_mode == PlayMode::GoalRight) {
    for (const PlayerState& p : world.players()) out.emplace(p.id(), Hold{});
    return out;
  }
  for (const InterceptOrder& o : intercept_assignment(world, config.physics)) out.emplace(o.player, Move{o.point});
  for (Side side : {Side::Left, Side::Right}) {
    const TeamConfig& team = side == Side::Left ? config.team_left : config.team_right;
    const bool has_ball = world.holder && world.holder->side == side;
    const TacticSet tactics = has_ball ? make_tactics(world, side, team.tactics) : TacticSet({goal_target(side, world.pitch)});
    for (int n = 1; n <= WorldState::kPlayersPerSide; ++n) {
      const PlayerId id{side, n};
      if (out.contains(id)) continue;
      DecisionParams params{team.candidates, team.baseline};
      params.candidates.positioning.home = home_position(team.formation, id, world.ball.position, world.pitch);
      params.candidates.positioning.player_speed = config.physics.max_player_speed;
      if (team.phase_positioning) {
        // In possession players look for support points; out of possession
        // they block, falling back to their home.
        auto& pos = params.candidates.positioning;
        const bool in_possession = world.holder ? world.holder->side == side : world.last_touch == side;
        if (in_possession) {
          pos.block_count = 0;
        } else {
          pos.support_count = 0;
        }
      }
      out.emplace(id, decide(world, id, tactics, team.evaluator_mode, params).action);
    }
  }
  return out;
}

inline StepParams step_params(const MatchConfig& config) {
  return {config.physics, config.noise_scale, config.team_left.formation, config.team_right.formation};
}

// Runs a full match. Every value in the result is a function of the config
// alone. `on_frame` (optional) sees each frame as it is produced; with
// record_log false the returned log keeps only the final frame.
inline MatchResult play_match(const MatchConfig& config, bool record_log = true,
                              const std::function<void(const WorldState&)>& on_frame = {}) {
  config.validate();
  Rng rng(config.seed);
  const StepParams sp = step_params(config);
  WorldState world = kickoff_world(config.pitch, config.team_left.formation, config.team_right.formation, config.kickoff);

  MatchResult result;
  result.log.pitch = config.pitch;
  result.log.team_left = config.team_left.name;
  result.log.team_right = config.team_right.name;
  result.log.seed = config.seed;
  if (record_log) result.log.frames.reserve(static_cast<std::size_t>(config.cycles) + 1);

  auto emit = [&](const WorldState& w) {
    if (on_frame) on_frame(w);
    if (record_log) result.log.frames.push_back(w);
  };
  emit(world);
  for (int c = 0; c < config.cycles; ++c) {
    world = step(world, decide_all(world, config), sp, rng);
    emit(world);
  }
  if (!record_log) result.log.frames.push_back(world);
  result.score_left = world.score_left;
  result.score_right = world.score_right;
  result.cycles_played = config.cycles;
  return result;
}

}  // namespace tacsim
