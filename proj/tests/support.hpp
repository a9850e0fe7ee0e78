#pragma once

// Shared fixtures: random worlds, reference group tables, and small oracles
// that deliberately avoid the library code they check.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "tacsim/tacsim.hpp"

namespace fixture {

using tacsim::Point2;

inline double uniform(tacsim::Rng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

inline Point2 random_point(tacsim::Rng& rng, const tacsim::Pitch& pitch) {
  return {uniform(rng, -pitch.half_length(), pitch.half_length()), uniform(rng, -pitch.half_width(), pitch.half_width())};
}

// 22 players scattered over the pitch with the default roles. When a holder
// is requested the ball sits at the holder's feet.
inline tacsim::WorldState random_world(tacsim::Rng& rng, bool with_holder = true,
                                       const tacsim::Pitch& pitch = {}) {
  const tacsim::Formation f = tacsim::default_formation();
  std::vector<tacsim::PlayerState> roster;
  for (tacsim::Side s : {tacsim::Side::Left, tacsim::Side::Right}) {
    for (int n = 1; n <= 11; ++n) {
      tacsim::PlayerState p;
      p.side = s;
      p.number = n;
      p.position = random_point(rng, pitch);
      p.body_dir = uniform(rng, -180.0, 180.0);
      p.role = f.roles[static_cast<std::size_t>(n - 1)];
      roster.push_back(p);
    }
  }
  tacsim::WorldState w(pitch, roster);
  w.play_mode = tacsim::PlayMode::PlayOn;
  if (with_holder) {
    const tacsim::PlayerId h{rng.uniform() < 0.5 ? tacsim::Side::Left : tacsim::Side::Right,
                             1 + static_cast<int>(rng.uniform() * 11)};
    w.holder = h;
    w.last_touch = h.side;
    w.ball.position = w.player(h).position;
  } else {
    w.ball.position = random_point(rng, pitch);
  }
  return w;
}

// Players lined up far from each other and from the ball at the origin.
// Left players on y = -30, right players on y = +30.
inline tacsim::WorldState parked_world(const tacsim::Pitch& pitch = {}) {
  const tacsim::Formation f = tacsim::default_formation();
  std::vector<tacsim::PlayerState> roster;
  for (tacsim::Side s : {tacsim::Side::Left, tacsim::Side::Right}) {
    for (int n = 1; n <= 11; ++n) {
      tacsim::PlayerState p;
      p.side = s;
      p.number = n;
      p.position = {-45.0 + 9.0 * (n - 1), s == tacsim::Side::Left ? -30.0 : 30.0};
      p.role = f.roles[static_cast<std::size_t>(n - 1)];
      roster.push_back(p);
    }
  }
  tacsim::WorldState w(pitch, roster);
  w.play_mode = tacsim::PlayMode::PlayOn;
  return w;
}

inline tacsim::Decisions all_hold() {
  tacsim::Decisions d;
  for (tacsim::Side s : {tacsim::Side::Left, tacsim::Side::Right}) {
    for (int n = 1; n <= 11; ++n) d.emplace(tacsim::PlayerId{s, n}, tacsim::Hold{});
  }
  return d;
}

inline double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Reference group tables: team, W, D, L, GF, GA, points, in printed order.
struct TableRow {
  std::string team;
  int wins, draws, losses, goals_for, goals_against, points;
};

struct ReferenceGroup {
  std::vector<TableRow> rows;
  std::vector<tacsim::MatchRow> matches;  // a full round robin consistent with `rows`
};

inline ReferenceGroup group_a() {
  return {{{"Gliders2012", 3, 1, 0, 9, 2, 10},
           {"MarIiK", 2, 2, 0, 4, 2, 8},
           {"GPR-2D", 1, 1, 2, 2, 3, 4},
           {"AUT_2D", 1, 1, 2, 2, 3, 4},
           {"Riton", 0, 1, 3, 0, 7, 1}},
          {{"Gliders2012", "MarIiK", 1, 1},
           {"Gliders2012", "GPR-2D", 1, 0},
           {"Gliders2012", "AUT_2D", 2, 1},
           {"Gliders2012", "Riton", 5, 0},
           {"MarIiK", "GPR-2D", 2, 1},
           {"MarIiK", "AUT_2D", 1, 0},
           {"MarIiK", "Riton", 0, 0},
           {"GPR-2D", "AUT_2D", 0, 0},
           {"GPR-2D", "Riton", 1, 0},
           {"AUT_2D", "Riton", 1, 0}}};
}

inline ReferenceGroup group_b() {
  return {{{"WrightEagle", 8, 0, 0, 53, 7, 24},
           {"YuShan2012", 4, 3, 1, 15, 12, 15},
           {"Gliders2012", 3, 3, 2, 18, 17, 12},
           {"ITAndroids", 3, 2, 3, 13, 19, 11},
           {"Riton", 2, 4, 2, 10, 10, 10},
           {"GDUT_TiJi", 3, 1, 4, 18, 19, 10},
           {"GPR-2D", 2, 3, 3, 5, 10, 9},
           {"Oxsy", 2, 0, 6, 10, 27, 6},
           {"Warthog", 0, 2, 6, 4, 25, 2}},
          {{"WrightEagle", "YuShan2012", 5, 3},   {"WrightEagle", "Gliders2012", 12, 0},
           {"WrightEagle", "ITAndroids", 8, 0},   {"WrightEagle", "Riton", 1, 0},
           {"WrightEagle", "GDUT_TiJi", 10, 0},   {"WrightEagle", "GPR-2D", 6, 3},
           {"WrightEagle", "Oxsy", 1, 0},         {"WrightEagle", "Warthog", 10, 1},
           {"YuShan2012", "Gliders2012", 0, 0},   {"YuShan2012", "ITAndroids", 2, 0},
           {"YuShan2012", "Riton", 0, 0},         {"YuShan2012", "GDUT_TiJi", 5, 4},
           {"YuShan2012", "GPR-2D", 0, 0},        {"YuShan2012", "Oxsy", 1, 0},
           {"YuShan2012", "Warthog", 4, 3},       {"Gliders2012", "ITAndroids", 0, 0},
           {"Gliders2012", "Riton", 0, 0},        {"Gliders2012", "GDUT_TiJi", 0, 1},
           {"Gliders2012", "GPR-2D", 3, 0},       {"Gliders2012", "Oxsy", 11, 4},
           {"Gliders2012", "Warthog", 4, 0},      {"ITAndroids", "Riton", 8, 8},
           {"ITAndroids", "GDUT_TiJi", 3, 0},     {"ITAndroids", "GPR-2D", 0, 1},
           {"ITAndroids", "Oxsy", 1, 0},          {"ITAndroids", "Warthog", 1, 0},
           {"Riton", "GDUT_TiJi", 1, 0},          {"Riton", "GPR-2D", 0, 1},
           {"Riton", "Oxsy", 1, 0},               {"Riton", "Warthog", 0, 0},
           {"GDUT_TiJi", "GPR-2D", 0, 0},         {"GDUT_TiJi", "Oxsy", 12, 0},
           {"GDUT_TiJi", "Warthog", 1, 0},        {"GPR-2D", "Oxsy", 0, 1},
           {"GPR-2D", "Warthog", 0, 0},           {"Oxsy", "Warthog", 5, 0}}};
}

inline ReferenceGroup group_c() {
  return {{{"WrightEagle", 5, 0, 0, 19, 3, 15},
           {"robOTTO", 3, 0, 2, 9, 7, 9},
           {"MarIiK", 3, 0, 2, 7, 8, 9},
           {"Gliders2012", 3, 0, 2, 9, 11, 9},
           {"FCPortugal", 1, 0, 4, 7, 11, 3},
           {"Riton", 0, 0, 5, 8, 19, 0}},
          {{"WrightEagle", "robOTTO", 2, 1},
           {"WrightEagle", "MarIiK", 7, 0},
           {"WrightEagle", "Gliders2012", 4, 0},
           {"WrightEagle", "FCPortugal", 1, 0},
           {"WrightEagle", "Riton", 5, 2},
           {"robOTTO", "MarIiK", 0, 1},
           {"robOTTO", "Gliders2012", 4, 2},
           {"robOTTO", "FCPortugal", 1, 0},
           {"robOTTO", "Riton", 3, 2},
           {"MarIiK", "Gliders2012", 0, 1},
           {"MarIiK", "FCPortugal", 4, 0},
           {"MarIiK", "Riton", 2, 0},
           {"Gliders2012", "FCPortugal", 3, 1},
           {"Gliders2012", "Riton", 3, 2},
           {"FCPortugal", "Riton", 6, 2}}};
}

inline ReferenceGroup group_d() {
  return {{{"HELIOS2012", 3, 0, 0, 4, 0, 9},
           {"Gliders2012", 2, 0, 1, 5, 1, 6},
           {"AUT_2D", 1, 0, 2, 1, 3, 3},
           {"robOTTO", 0, 0, 3, 0, 6, 0}},
          {{"HELIOS2012", "Gliders2012", 1, 0},
           {"HELIOS2012", "AUT_2D", 1, 0},
           {"HELIOS2012", "robOTTO", 2, 0},
           {"Gliders2012", "AUT_2D", 2, 0},
           {"Gliders2012", "robOTTO", 3, 0},
           {"AUT_2D", "robOTTO", 1, 0}}};
}

inline std::vector<ReferenceGroup> reference_groups() { return {group_a(), group_b(), group_c(), group_d()}; }

// Brute-force argmin: index of the first minimal value.
inline std::size_t first_min(const std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool smaller_than_all_before = true;
    for (std::size_t j = 0; j < i; ++j) {
      if (!(v[i] < v[j])) smaller_than_all_before = false;
    }
    bool not_larger_than_after = true;
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[j] < v[i]) not_larger_than_after = false;
    }
    if (smaller_than_all_before && not_larger_than_after) {
      best = i;
      break;
    }
  }
  return best;
}

// Nearest site by brute force; returns every index within `tol` of the minimum.
inline std::vector<std::size_t> nearest_sites(const std::vector<Point2>& sites, Point2 p, double tol) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point2& s : sites) best = std::min(best, dist(s, p));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (dist(sites[i], p) <= best + tol) out.push_back(i);
  }
  return out;
}

// Wing-switch situation: left #9 carries the ball just outside shooting
// range. Teammate #7 is open on the left, #10 is open out on the right wing
// near the right-wing target but farther from goal than a forward-left
// dribble would take the ball. An opponent covers the straight-ahead and
// forward-right dribble lanes; everyone else is out of passing range.
inline tacsim::WorldState wing_switch_world() {
  const tacsim::Formation f = tacsim::default_formation();
  std::vector<tacsim::PlayerState> roster;
  auto add = [&](tacsim::Side s, int n, Point2 pos) {
    tacsim::PlayerState p;
    p.side = s;
    p.number = n;
    p.position = pos;
    p.body_dir = s == tacsim::Side::Left ? 0.0 : -180.0;
    p.role = f.roles[static_cast<std::size_t>(n - 1)];
    roster.push_back(p);
  };
  using tacsim::Side;
  add(Side::Left, 1, {-50.0, 0.0});
  add(Side::Left, 2, {-25.0, 25.0});
  add(Side::Left, 3, {-30.0, 8.0});
  add(Side::Left, 4, {-30.0, -8.0});
  add(Side::Left, 5, {-25.0, -25.0});
  add(Side::Left, 6, {-8.0, 0.0});
  add(Side::Left, 7, {22.0, 18.0});
  add(Side::Left, 8, {-4.0, -10.0});
  add(Side::Left, 9, {27.0, 2.0});  // holder
  add(Side::Left, 10, {38.0, -22.0});
  add(Side::Left, 11, {-5.0, 25.0});
  add(Side::Right, 1, {50.0, 0.0});
  add(Side::Right, 2, {45.0, 10.0});
  add(Side::Right, 3, {44.0, -5.0});
  add(Side::Right, 4, {42.0, -12.0});
  add(Side::Right, 5, {30.0, -30.0});
  add(Side::Right, 6, {10.0, 15.0});
  add(Side::Right, 7, {12.0, -12.0});
  add(Side::Right, 8, {31.0, 0.5});  // covers the 0 and -45 degree dribbles
  add(Side::Right, 9, {0.0, 20.0});
  add(Side::Right, 10, {0.0, -20.0});
  add(Side::Right, 11, {-10.0, 0.0});
  tacsim::WorldState w(tacsim::Pitch{}, roster);
  w.play_mode = tacsim::PlayMode::PlayOn;
  w.holder = tacsim::PlayerId{Side::Left, 9};
  w.last_touch = Side::Left;
  w.ball.position = {27.0, 2.0};
  return w;
}

}  // namespace fixture
