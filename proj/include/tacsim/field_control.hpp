#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tacsim/action.hpp"
#include "tacsim/formation.hpp"
#include "tacsim/tactics.hpp"
#include "tacsim/voronoi.hpp"
#include "tacsim/world.hpp"

namespace tacsim {

struct PositioningParams {
  int support_count = 3;       // open space, wing lane, formation home (in that order)
  int block_count = 1;         // nearest opponents considered for blocking
  double block_range = 15.0;   // meters
  double wing_advance = 10.0;  // wing point sits this far ahead of the ball
  double wing_fraction = 0.35; // |y| of the wing lane as a fraction of pitch width
  // A Move proposes the point reachable within this many cycles toward its
  // support point; the remaining gap is what the rating sees.
  double reach_cycles = 10.0;
  double player_speed = 1.05;
  // Formation home for the player; derived from the default formation when unset.
  std::optional<Point2> home;
};

struct PositioningEntry {
  Action action;
  TacticTarget target;
};

struct PositioningTargets {
  std::vector<PositioningEntry> entries;
};

inline std::vector<Point2> player_sites(const WorldState& world) {
  std::vector<Point2> sites;
  sites.reserve(WorldState::kPlayerCount);
  for (const auto& p : world.players()) sites.push_back(p.position);
  return sites;
}

// Opponents within block range, nearest first (ties: lower number).
inline std::vector<PlayerId> nearest_opponents(const WorldState& world, PlayerId player, double range,
                                               int count) {
  const Point2 me = world.player(player).position;
  std::vector<std::pair<double, int>> near;
  for (int n = 1; n <= WorldState::kPlayersPerSide; ++n) {
    const double d = euclidean(me, world.player({opposite(player.side), n}).position);
    if (d <= range) near.emplace_back(d, n);
  }
  std::sort(near.begin(), near.end());
  std::vector<PlayerId> out;
  for (std::size_t i = 0; i < near.size() && static_cast<int>(i) < count; ++i) {
    out.push_back({opposite(player.side), near[i].second});
  }
  return out;
}

inline Point2 wing_lane_point(const WorldState& world, PlayerId player, const PositioningParams& params) {
  const Pitch& pitch = world.pitch;
  const Point2 me = world.player(player).position;
  const double x = std::clamp(world.ball.position.x + attack_sign(player.side) * params.wing_advance,
                              -pitch.half_length(), pitch.half_length());
  const double y = (me.y >= 0.0 ? 1.0 : -1.0) * params.wing_fraction * pitch.width;
  return {x, y};
}

// Action-dependent positioning options for an off-ball player: each Move or
// Block action paired with the desirable state it pursues.
inline PositioningTargets positioning_targets(const WorldState& world, PlayerId player,
                                              const PositioningParams& params = {}) {
  if (!WorldState::valid_id(player)) throw InvalidArgument("no such player " + to_string(player));
  if (world.is_holder(player)) throw InvalidArgument(to_string(player) + " holds the ball; use ball candidates");
  const PlayerState& self = world.player(player);
  const double reach = params.reach_cycles * params.player_speed;
  const Point2 home = params.home.value_or(
      home_position(default_formation(), player, world.ball.position, world.pitch));

  PositioningTargets out;
  auto add_move = [&](const std::string& label, Point2 support) {
    support = clamp_to_pitch(support, world.pitch);
    out.entries.push_back({Move{step_toward(self.position, support, reach)}, {label, support}});
  };

  if (self.role == Role::Goalkeeper) {
    add_move("home", home);
    return out;
  }

  const std::vector<Point2> sites = player_sites(world);
  const Polygon cell = voronoi_cell(sites, WorldState::index_of(player), world.pitch);
  const Point2 open_space = cell.empty() ? self.position : polygon_centroid(cell);

  const Point2 supports[] = {open_space, wing_lane_point(world, player, params), home};
  const char* labels[] = {"open-space", "wing", "home"};
  const int k = std::clamp(params.support_count, 0, 3);
  for (int i = 0; i < k; ++i) add_move(labels[i], supports[i]);

  for (PlayerId opp : nearest_opponents(world, player, params.block_range, params.block_count)) {
    const Point2 target = midpoint(world.player(opp).position, world.ball.position);
    out.entries.push_back({Block{opp}, {"block-" + to_string(opp), clamp_to_pitch(target, world.pitch)}});
  }
  if (out.entries.empty()) add_move("home", home);
  return out;
}

// Share of the pitch owned by `side`'s Voronoi cells over all 22 players.
inline double field_control_score(const WorldState& world, Side side) {
  const std::vector<Point2> sites = player_sites(world);
  double own = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const double a = polygon_area(voronoi_cell(sites, i, world.pitch));
    total += a;
    if (world.players()[i].side == side) own += a;
  }
  return total > 0.0 ? own / total : 0.0;
}

}  // namespace tacsim
