#pragma once

#include <cstdint>
#include <vector>

#include "passplan/vec2.hpp"

namespace passplan {

/// Field geometry, SSL division A by default: 12 x 9 m pitch centred on the
/// origin, our goal at x = -length/2, theirs at x = +length/2.
struct FieldGeometry {
  double length = 12.0;        ///< extent along x [m]
  double width = 9.0;          ///< extent along y [m]
  double goal_width = 1.8;     ///< goal mouth opening [m]
  double defense_depth = 1.8;  ///< defense area extent into the field [m]
  double defense_width = 3.6;  ///< defense area extent along y [m]

  /// True when p lies on the pitch, boundary included.
  bool contains(Vec2 p) const {
    return p.x >= -0.5 * length && p.x <= 0.5 * length && p.y >= -0.5 * width &&
           p.y <= 0.5 * width;
  }

  Vec2 their_goal_center() const { return {0.5 * length, 0.0}; }
  Vec2 our_goal_center() const { return {-0.5 * length, 0.0}; }
  /// Posts of the goal at x = +length/2; left post has positive y.
  Vec2 their_left_post() const { return {0.5 * length, 0.5 * goal_width}; }
  Vec2 their_right_post() const { return {0.5 * length, -0.5 * goal_width}; }

  /// True when p is inside their defense area, boundary included.
  bool in_their_defense_area(Vec2 p) const {
    return p.x >= 0.5 * length - defense_depth && p.x <= 0.5 * length &&
           p.y >= -0.5 * defense_width && p.y <= 0.5 * defense_width;
  }

  /// True when p is strictly inside their defense area.
  bool strictly_in_their_defense_area(Vec2 p) const {
    return p.x > 0.5 * length - defense_depth && p.x < 0.5 * length &&
           p.y > -0.5 * defense_width && p.y < 0.5 * defense_width;
  }

  void validate() const;
};

struct RobotState {
  int id = 0;
  Vec2 position;
  Vec2 velocity;
  double theta = 0.0;  ///< heading [rad], not used by the planner itself
};

struct BallState {
  Vec2 position;
  Vec2 velocity;
};

enum class Team { ours, theirs };

/// One snapshot of the match: geometry, ball, and both teams.
///
/// Validity rules (checked by validate()): at most 16 robots per team, ids
/// unique within a team, every position within the field bounds plus a 0.5 m
/// apron, and every speed at most 5 m/s.
struct WorldState {
  FieldGeometry field;
  BallState ball;
  std::vector<RobotState> ours;
  std::vector<RobotState> theirs;

  const std::vector<RobotState>& team(Team t) const {
    return t == Team::ours ? ours : theirs;
  }

  /// Pointer to the robot with the given id on the given team, or nullptr.
  const RobotState* find(Team t, int id) const;

  /// Throws validation_error on the first violated rule.
  void validate() const;
};

/// Reflects the world across the x axis (y -> -y). Exact involution: every
/// coordinate is negated bitwise, so mirror_world(mirror_world(w)) == w.
WorldState mirror_world(const WorldState& w);

}  // namespace passplan
