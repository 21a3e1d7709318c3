#include "passplan/motion.hpp"

#include <cmath>

#include "passplan/detail/arrival_math.hpp"
#include "passplan/errors.hpp"

namespace passplan {

void MotionLimits::validate() const {
  if (!(max_speed > 0.0) || !(max_accel > 0.0) || !(max_decel > 0.0)) {
    throw config_error("motion limits must all be positive");
  }
}

double arrival_time(const RobotState& robot, Vec2 target, const MotionLimits& limits) {
  const double qx = target.x - robot.position.x;
  const double qy = target.y - robot.position.y;
  const double d2 = qx * qx + qy * qy;
  if (d2 <= 1e-24) {
    // Already at the target: the line to it is undefined, so treat the whole
    // velocity as along-track overshoot (brake, then return to the point).
    const double speed = robot.velocity.norm();
    return detail::one_d_time_to_rest(speed, 0.0, limits.max_accel, limits.max_decel,
                                      limits.max_speed);
  }
  return detail::arrival_given(qx, qy, d2, robot.velocity.x, robot.velocity.y, limits.max_accel,
                               limits.max_decel, limits.max_speed, 0.0);
}

double arrival_time_with_buffer(const RobotState& robot, Vec2 target, const MotionLimits& limits,
                                double buffer) {
  if (std::isnan(buffer) || buffer < 0.0) {
    throw domain_error("arrival_time_with_buffer: buffer must be >= 0");
  }
  return arrival_time(robot, target, limits) + buffer;
}

}  // namespace passplan
