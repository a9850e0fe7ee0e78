#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "tacsim/action.hpp"
#include "tacsim/candidates.hpp"
#include "tacsim/field_control.hpp"
#include "tacsim/tactics.hpp"
#include "tacsim/world.hpp"

namespace tacsim {

enum class EvaluatorMode { Baseline, Tactics };

inline std::string_view mode_name(EvaluatorMode m) { return m == EvaluatorMode::Baseline ? "baseline" : "tactics"; }

// An action with its predicted outcome, the desirable state it was judged
// against, and the distance between the two. Lower is better.
struct RatedAction {
  Action action;
  ResultantState resultant;
  TacticTarget target;
  double rating = 0.0;
};

struct BaselineOptions {
  // Weight of the optional "larger x is better" term. Zero gives the plain
  // goal-distance rating.
  double x_weight = 0.0;
};

inline constexpr std::string_view kGoalLabel = "opponent-goal";

inline TacticTarget goal_target(Side attacker, const Pitch& pitch) {
  return {std::string(kGoalLabel), opponent_goal_center(attacker, pitch)};
}

// Single desirable state for every action: the opponent goal.
inline RatedAction rate_baseline(const WorldState& world, PlayerId actor, const Action& action,
                                 const BaselineOptions& options = {}) {
  ResultantState res = predict_result(world, actor, action);
  TacticTarget goal = goal_target(actor.side, world.pitch);
  double rating = euclidean(res.point, goal.point);
  if (options.x_weight != 0.0) {
    rating += options.x_weight * (world.pitch.half_length() - attack_sign(actor.side) * res.point.x);
  }
  return {action, std::move(res), std::move(goal), rating};
}

// Index of the target nearest to the resultant point; ties go to the lower
// index. The mapping is total, so it partitions any candidate list into
// one block per target.
inline std::size_t assign_tactic_index(const ResultantState& resultant, const TacticSet& tactics) {
  std::size_t best = 0;
  double best_d = euclidean(resultant.point, tactics[0].point);
  for (std::size_t i = 1; i < tactics.size(); ++i) {
    const double d = euclidean(resultant.point, tactics[i].point);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

inline const TacticTarget& assign_tactic(const Action& /*action*/, const ResultantState& resultant,
                                         const TacticSet& tactics) {
  return tactics[assign_tactic_index(resultant, tactics)];
}

// Each action judged against the desirable state of its own tactic.
inline RatedAction rate_with_tactics(const WorldState& world, PlayerId actor, const Action& action,
                                     const TacticSet& tactics) {
  ResultantState res = predict_result(world, actor, action);
  const TacticTarget& target = assign_tactic(action, res, tactics);
  const double rating = euclidean(res.point, target.point);
  return {action, std::move(res), target, rating};
}

// Argmin over ratings; ties resolve to the earliest candidate.
inline std::size_t select_index(std::span<const RatedAction> rated) {
  if (rated.empty()) throw InvalidArgument("select_action: no candidates");
  std::size_t best = 0;
  for (std::size_t i = 1; i < rated.size(); ++i) {
    if (rated[i].rating < rated[best].rating) best = i;
  }
  return best;
}

inline const RatedAction& select_action(std::span<const RatedAction> rated) { return rated[select_index(rated)]; }

// Parameters for the per-cycle attack tactics, in the attacking frame.
struct TacticConfig {
  double advance = 25.0;            // targets sit this far ahead of the ball...
  Point2 center_target{36.0, 7.0};  // ...until they reach these points
  Point2 wing_target{41.5, -20.4};
  double attacking_third = 1.0 / 3.0;  // fraction of pitch length from the far goal line
  bool include_goal = true;

  friend bool operator==(const TacticConfig&, const TacticConfig&) = default;
};

// Tactic targets for the ball holder's side: a left-center attack point, a
// right-wing corridor point, and the opponent goal once the ball is in the
// attacking third. Reflected for the right side.
inline TacticSet make_tactics(const WorldState& world, Side side, const TacticConfig& config = {}) {
  const Pitch& pitch = world.pitch;
  const double ball_x = attack_sign(side) * world.ball.position.x;
  auto ahead = [&](Point2 cap) {
    Point2 p{std::min(ball_x + config.advance, cap.x), cap.y};
    p = clamp_to_pitch(p, pitch);
    return side == Side::Left ? p : mirror_x(p);
  };
  std::vector<TacticTarget> targets{{"left-center", ahead(config.center_target)},
                                    {"right-wing", ahead(config.wing_target)}};
  if (config.include_goal && ball_x >= pitch.half_length() - config.attacking_third * pitch.length) {
    targets.push_back(goal_target(side, pitch));
  }
  return TacticSet(std::move(targets));
}

struct DecisionParams {
  CandidateParams candidates;
  BaselineOptions baseline;
};

namespace detail {

inline RatedAction mirror_rated(RatedAction r) {
  r.action = mirror_action(r.action);
  r.resultant.action = mirror_action(r.resultant.action);
  r.resultant.point = mirror_x(r.resultant.point);
  r.resultant.actor = PlayerId{opposite(r.resultant.actor.side), r.resultant.actor.number};
  r.target.point = mirror_x(r.target.point);
  return r;
}

inline RatedAction decide_canonical(const WorldState& world, PlayerId actor, const TacticSet& tactics,
                                    EvaluatorMode mode, const DecisionParams& params) {
  std::vector<RatedAction> rated;
  if (world.is_holder(actor)) {
    for (const Action& a : generate_ball_candidates(world, params.candidates)) {
      rated.push_back(mode == EvaluatorMode::Baseline ? rate_baseline(world, actor, a, params.baseline)
                                                      : rate_with_tactics(world, actor, a, tactics));
    }
    return select_action(rated);
  }
  const PositioningParams& pos = params.candidates.positioning;
  if (mode == EvaluatorMode::Baseline) {
    // Formation positioning: the role home is the only option.
    const Point2 home = pos.home.value_or(
        home_position(default_formation(), actor, world.ball.position, world.pitch));
    const Action a = Move{clamp_to_pitch(home, world.pitch)};
    ResultantState res = predict_result(world, actor, a);
    return {a, res, {"home", res.point}, 0.0};
  }
  for (auto& e : positioning_targets(world, actor, pos).entries) {
    ResultantState res = predict_result(world, actor, e.action);
    const double rating = euclidean(res.point, e.target.point);
    rated.push_back({e.action, std::move(res), std::move(e.target), rating});
  }
  return select_action(rated);
}

}  // namespace detail

// One actor's full decision: candidates, predicted results, ratings under
// the chosen evaluator, argmin. The ball holder picks among ball actions;
// other players pick among positioning actions (tactics mode) or go to
// their formation home (baseline mode). Computed in the actor's attacking
// frame, so mirrored worlds yield mirrored decisions exactly.
inline RatedAction decide(const WorldState& world, PlayerId actor, const TacticSet& tactics, EvaluatorMode mode,
                          const DecisionParams& params = {}) {
  if (!WorldState::valid_id(actor)) throw InvalidArgument("no such actor " + to_string(actor));
  if (actor.side == Side::Left) return detail::decide_canonical(world, actor, tactics, mode, params);

  std::vector<TacticTarget> flipped;
  for (const auto& t : tactics.targets()) flipped.push_back({t.label, mirror_x(t.point)});
  DecisionParams p = params;
  if (p.candidates.positioning.home) p.candidates.positioning.home = mirror_x(*p.candidates.positioning.home);
  const PlayerId canon{Side::Left, actor.number};
  return detail::mirror_rated(
      detail::decide_canonical(mirrored(world), canon, TacticSet(std::move(flipped)), mode, p));
}

}  // namespace tacsim
