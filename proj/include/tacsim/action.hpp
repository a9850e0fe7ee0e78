#pragma once

#include <cstdio>
#include <string>
#include <type_traits>
#include <variant>

#include "tacsim/error.hpp"
#include "tacsim/geometry.hpp"
#include "tacsim/world.hpp"

namespace tacsim {

struct DirectPass {
  PlayerId receiver;
  friend bool operator==(const DirectPass&, const DirectPass&) = default;
};

struct LeadPass {
  PlayerId receiver;
  Point2 lead_offset;
  friend bool operator==(const LeadPass&, const LeadPass&) = default;
};

struct Dribble {
  double direction = 0.0;  // degrees, pitch frame
  double distance = 0.0;   // meters, > 0
  friend bool operator==(const Dribble&, const Dribble&) = default;
};

struct Shoot {
  friend bool operator==(const Shoot&, const Shoot&) = default;
};

struct Hold {
  friend bool operator==(const Hold&, const Hold&) = default;
};

struct Move {
  Point2 target;
  friend bool operator==(const Move&, const Move&) = default;
};

struct Block {
  PlayerId opponent;
  friend bool operator==(const Block&, const Block&) = default;
};

using Action = std::variant<DirectPass, LeadPass, Dribble, Shoot, Hold, Move, Block>;

// Actions that require the actor to control the ball.
inline bool is_ball_action(const Action& a) {
  return std::holds_alternative<DirectPass>(a) || std::holds_alternative<LeadPass>(a) ||
         std::holds_alternative<Dribble>(a) || std::holds_alternative<Shoot>(a);
}

inline bool is_kick(const Action& a) {
  return std::holds_alternative<DirectPass>(a) || std::holds_alternative<LeadPass>(a) ||
         std::holds_alternative<Shoot>(a);
}

namespace detail {
inline std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
}  // namespace detail

// Stable textual form; used for logs and for byte-level determinism checks.
inline std::string describe(const Action& a) {
  using detail::fmt_real;
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DirectPass>) {
          return "DirectPass(" + to_string(v.receiver) + ")";
        } else if constexpr (std::is_same_v<T, LeadPass>) {
          return "LeadPass(" + to_string(v.receiver) + "," + fmt_real(v.lead_offset.x) + "," +
                 fmt_real(v.lead_offset.y) + ")";
        } else if constexpr (std::is_same_v<T, Dribble>) {
          return "Dribble(" + fmt_real(v.direction) + "," + fmt_real(v.distance) + ")";
        } else if constexpr (std::is_same_v<T, Shoot>) {
          return "Shoot";
        } else if constexpr (std::is_same_v<T, Hold>) {
          return "Hold";
        } else if constexpr (std::is_same_v<T, Move>) {
          return "Move(" + fmt_real(v.target.x) + "," + fmt_real(v.target.y) + ")";
        } else {
          return "Block(" + to_string(v.opponent) + ")";
        }
      },
      a);
}

// Maps an action expressed in the mirrored world back to the original one.
inline Action mirror_action(const Action& a) {
  auto flip = [](PlayerId id) { return PlayerId{opposite(id.side), id.number}; };
  return std::visit(
      [&](const auto& v) -> Action {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DirectPass>) {
          return DirectPass{flip(v.receiver)};
        } else if constexpr (std::is_same_v<T, LeadPass>) {
          return LeadPass{flip(v.receiver), mirror_x(v.lead_offset)};
        } else if constexpr (std::is_same_v<T, Dribble>) {
          return Dribble{normalize_degrees(180.0 - v.direction), v.distance};
        } else if constexpr (std::is_same_v<T, Move>) {
          return Move{mirror_x(v.target)};
        } else if constexpr (std::is_same_v<T, Block>) {
          return Block{flip(v.opponent)};
        } else {
          return v;
        }
      },
      a);
}

// The predicted outcome point of an action: result(a).
struct ResultantState {
  Point2 point;
  PlayerId actor;
  Action action;
};

// Point an action leads to, before clamping. DirectPass: receiver; LeadPass:
// receiver + offset; Dribble: holder displaced along the heading; Shoot:
// opponent goal center; Hold: ball; Move: target; Block: midpoint of the
// blocked opponent and the ball.
inline ResultantState predict_result(const WorldState& world, PlayerId actor, const Action& action) {
  if (!WorldState::valid_id(actor)) throw InvalidArgument("no such actor " + to_string(actor));
  const PlayerState& self = world.player(actor);
  if (is_ball_action(action) && !world.is_holder(actor)) {
    throw InvalidArgument(to_string(actor) + " cannot play " + describe(action) + " without the ball");
  }
  auto teammate = [&](PlayerId id) -> const PlayerState& {
    if (!WorldState::valid_id(id) || id.side != actor.side || id == actor) {
      throw InvalidArgument("invalid receiver " + to_string(id) + " for " + to_string(actor));
    }
    return world.player(id);
  };
  const Point2 raw = std::visit(
      [&](const auto& v) -> Point2 {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DirectPass>) {
          return teammate(v.receiver).position;
        } else if constexpr (std::is_same_v<T, LeadPass>) {
          return teammate(v.receiver).position + v.lead_offset;
        } else if constexpr (std::is_same_v<T, Dribble>) {
          if (!(v.distance > 0.0)) throw InvalidArgument("dribble distance must be positive");
          return self.position + unit_vector(v.direction) * v.distance;
        } else if constexpr (std::is_same_v<T, Shoot>) {
          return opponent_goal_center(actor.side, world.pitch);
        } else if constexpr (std::is_same_v<T, Hold>) {
          return world.is_holder(actor) ? world.ball.position : self.position;
        } else if constexpr (std::is_same_v<T, Move>) {
          return v.target;
        } else {
          if (!WorldState::valid_id(v.opponent) || v.opponent.side == actor.side) {
            throw InvalidArgument("invalid block target " + to_string(v.opponent));
          }
          return midpoint(world.player(v.opponent).position, world.ball.position);
        }
      },
      action);
  return {clamp_to_pitch(raw, world.pitch), actor, action};
}

}  // namespace tacsim
