#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tacsim/error.hpp"
#include "tacsim/geometry.hpp"

namespace tacsim {

// A desirable state proposed by one tactic.
struct TacticTarget {
  std::string label;
  Point2 point;

  friend bool operator==(const TacticTarget&, const TacticTarget&) = default;
};

// The m desirable states active for one decision. Non-empty, unique labels.
class TacticSet {
 public:
  explicit TacticSet(std::vector<TacticTarget> targets) : targets_(std::move(targets)) {
    if (targets_.empty()) throw InvalidArgument("a tactic set needs at least one target");
    std::set<std::string> labels;
    for (const auto& t : targets_) {
      if (!labels.insert(t.label).second) throw InvalidArgument("duplicate tactic label '" + t.label + "'");
      if (!is_finite(t.point)) throw InvalidArgument("tactic target '" + t.label + "' is not finite");
    }
  }

  const std::vector<TacticTarget>& targets() const { return targets_; }
  std::size_t size() const { return targets_.size(); }
  const TacticTarget& operator[](std::size_t i) const { return targets_[i]; }

  friend bool operator==(const TacticSet&, const TacticSet&) = default;

 private:
  std::vector<TacticTarget> targets_;
};

}  // namespace tacsim
