#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "tacsim/error.hpp"
#include "tacsim/geometry.hpp"
#include "tacsim/world.hpp"

namespace tacsim {

// Eleven role home positions, written for a team attacking +x with the ball
// on the center spot. The right team uses the reflection.
struct Formation {
  std::array<Point2, 11> home{};
  std::array<Role, 11> roles{};

  void validate() const {
    const auto keepers = std::count(roles.begin(), roles.end(), Role::Goalkeeper);
    if (keepers != 1) throw InvalidArgument("formation needs exactly one goalkeeper");
    for (Point2 p : home) {
      if (!is_finite(p)) throw InvalidArgument("formation home positions must be finite");
    }
  }

  friend bool operator==(const Formation&, const Formation&) = default;
};

// 4-3-3. Numbers 7 and 11 play on the +y (left) side, 8 and 10 on -y.
inline Formation default_formation() {
  Formation f;
  f.home = {{{-50.0, 0.0},
             {-30.0, 20.0},
             {-32.0, 7.0},
             {-32.0, -7.0},
             {-30.0, -20.0},
             {-14.0, 0.0},
             {-8.0, 16.0},
             {-8.0, -16.0},
             {10.0, 0.0},
             {6.0, -20.0},
             {6.0, 20.0}}};
  f.roles = {Role::Goalkeeper, Role::Defender,   Role::Defender,   Role::Defender,
             Role::Defender,   Role::Midfielder, Role::Midfielder, Role::Midfielder,
             Role::Forward,    Role::Forward,    Role::Forward};
  return f;
}

struct FormationParams {
  double ball_attraction = 0.3;  // fraction of ball x added to home x
};

// x range a role may occupy, in the team's attacking frame.
inline std::pair<double, double> role_zone(Role role, const Pitch& pitch) {
  const double hl = pitch.half_length();
  switch (role) {
    case Role::Goalkeeper: return {-hl + 1.0, -hl + 6.0};
    case Role::Defender: return {-hl + 4.0, 0.2 * hl};
    case Role::Midfielder: return {-0.75 * hl, 0.6 * hl};
    case Role::Forward: return {-0.4 * hl, hl - 6.0};
  }
  return {-hl, hl};
}

// Dynamic home position in the team's attacking frame, given the ball's
// position in that same frame.
inline Point2 canonical_home(const Formation& f, int number, Point2 ball, const Pitch& pitch,
                             const FormationParams& params = {}) {
  const std::size_t i = static_cast<std::size_t>(number - 1);
  const Point2 base = f.home.at(i);
  const Role role = f.roles.at(i);
  const auto [lo, hi] = role_zone(role, pitch);
  Point2 p{std::clamp(base.x + params.ball_attraction * ball.x, lo, hi), base.y};
  if (role == Role::Goalkeeper) {
    // Shade toward the ball inside the goal mouth.
    const double g = 0.5 * pitch.goal_width - 1.0;
    p.y = std::clamp(base.y + 0.15 * ball.y, -g, g);
  }
  return clamp_to_pitch(p, pitch);
}

// Dynamic home position in the pitch frame.
inline Point2 home_position(const Formation& f, PlayerId id, Point2 ball, const Pitch& pitch,
                            const FormationParams& params = {}) {
  if (id.side == Side::Left) return canonical_home(f, id.number, ball, pitch, params);
  return mirror_x(canonical_home(f, id.number, mirror_x(ball), pitch, params));
}

// Kickoff spot in the team's attacking frame: own half, outside the center
// circle. The kicker is placed separately by the engine.
inline Point2 canonical_kickoff_position(const Formation& f, int number, const Pitch& pitch) {
  Point2 p = f.home.at(static_cast<std::size_t>(number - 1));
  p.x = std::min(p.x, -1.0);
  constexpr double kCircle = 9.15;
  const double r = norm(p);
  if (r < kCircle) {
    p = r == 0.0 ? Point2{-kCircle, 0.0} : Point2{std::min(p.x, -1.0) - kCircle, p.y};
  }
  return clamp_to_pitch(p, pitch);
}

}  // namespace tacsim
