#pragma once

#include "passplan/vec2.hpp"
#include "passplan/world.hpp"

namespace passplan {

/// Kinematic bounds of the point-mass robot model.
struct MotionLimits {
  double max_speed = 3.25;  ///< m/s
  double max_accel = 3.0;   ///< m/s^2
  double max_decel = 3.0;   ///< m/s^2

  void validate() const;  ///< throws config_error unless all positive
};

/// Time for the robot to come to rest at `target` under a 1D bang-bang
/// profile along the line to the target. The cross-track velocity component
/// must first be nulled at max_decel; the result is the max of the
/// along-track time and that nulling time. Always finite for finite inputs.
double arrival_time(const RobotState& robot, Vec2 target, const MotionLimits& limits);

/// arrival_time plus a fixed settling buffer. Throws domain_error if
/// buffer < 0.
double arrival_time_with_buffer(const RobotState& robot, Vec2 target, const MotionLimits& limits,
                                double buffer);

}  // namespace passplan
