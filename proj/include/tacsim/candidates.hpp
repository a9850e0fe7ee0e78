#pragma once

#include <array>
#include <vector>

#include "tacsim/action.hpp"
#include "tacsim/field_control.hpp"
#include "tacsim/world.hpp"

namespace tacsim {

struct CandidateParams {
  double pass_range = 30.0;      // receivers farther than this are unreachable
  double lane_clearance = 2.0;   // opponent this close to a pass or dribble lane blocks it
  double lead_distance = 5.0;    // lead pass offset toward the opponent goal
  double max_lead = 5.0;
  double dribble_distance = 5.0;
  double shoot_range = 25.0;     // from the opponent goal center
  // Opponents this close to the holder are challenging for the ball rather
  // than covering a lane; zero makes every opponent count.
  double challenge_radius = 1.085;
  PositioningParams positioning;
};

// Dribble headings relative to the attacking direction, in menu order.
inline constexpr std::array<double, 8> kDribbleHeadings{0.0, 45.0, -45.0, 90.0, -90.0, 135.0, -135.0, 180.0};

// Absolute heading of a relative dribble heading for the given side.
inline double absolute_heading(Side side, double relative) {
  return side == Side::Left ? normalize_degrees(relative) : normalize_degrees(180.0 - relative);
}

inline bool lane_open(const WorldState& world, Side own, Point2 from, Point2 to, double clearance,
                      double challenge_radius = 0.0) {
  for (int n = 1; n <= WorldState::kPlayersPerSide; ++n) {
    const Point2 opp = world.player({opposite(own), n}).position;
    if (euclidean(opp, from) <= challenge_radius) continue;
    if (distance_to_segment(opp, from, to) < clearance) return false;
  }
  return true;
}

inline bool pass_reachable(const WorldState& world, PlayerId holder, PlayerId receiver, const CandidateParams& params) {
  const Point2 from = world.player(holder).position;
  const Point2 to = world.player(receiver).position;
  return euclidean(from, to) <= params.pass_range &&
         lane_open(world, holder.side, from, to, params.lane_clearance, params.challenge_radius);
}

// Candidate actions for the ball holder, in a fixed order: direct passes
// (by receiver number), lead passes, open dribble lanes, Shoot when in
// range, and Hold last. Never empty.
inline std::vector<Action> generate_ball_candidates(const WorldState& world, const CandidateParams& params = {}) {
  if (!world.holder) throw InvalidArgument("generate_ball_candidates: nobody controls the ball");
  const PlayerId holder = *world.holder;
  const PlayerState& self = world.player(holder);
  const double sign = attack_sign(holder.side);

  std::vector<PlayerId> reachable;
  for (int n = 1; n <= WorldState::kPlayersPerSide; ++n) {
    const PlayerId mate{holder.side, n};
    if (mate != holder && pass_reachable(world, holder, mate, params)) reachable.push_back(mate);
  }

  std::vector<Action> out;
  out.reserve(2 * reachable.size() + kDribbleHeadings.size() + 2);
  for (PlayerId r : reachable) out.emplace_back(DirectPass{r});
  const Point2 lead{sign * std::min(params.lead_distance, params.max_lead), 0.0};
  for (PlayerId r : reachable) out.emplace_back(LeadPass{r, lead});

  for (double rel : kDribbleHeadings) {
    const double heading = absolute_heading(holder.side, rel);
    const Point2 end = self.position + unit_vector(heading) * params.dribble_distance;
    if (!world.pitch.contains(end)) continue;
    if (!lane_open(world, holder.side, self.position, end, params.lane_clearance, params.challenge_radius)) continue;
    out.emplace_back(Dribble{heading, params.dribble_distance});
  }

  if (euclidean(self.position, opponent_goal_center(holder.side, world.pitch)) <= params.shoot_range) {
    out.emplace_back(Shoot{});
  }
  out.emplace_back(Hold{});
  return out;
}

// Positioning candidates for an off-ball player: Move toward support points
// and Block toward the nearest opponents.
inline std::vector<Action> generate_move_candidates(const WorldState& world, PlayerId player,
                                                    const CandidateParams& params = {}) {
  std::vector<Action> out;
  for (auto& e : positioning_targets(world, player, params.positioning).entries) out.push_back(std::move(e.action));
  return out;
}

}  // namespace tacsim
