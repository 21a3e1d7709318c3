#pragma once

#include <optional>
#include <vector>

#include "passplan/ball_model.hpp"
#include "passplan/kernels/kernel.hpp"
#include "passplan/motion.hpp"
#include "passplan/world.hpp"

namespace passplan {

struct InterceptResult {
  Team team = Team::ours;
  int robot_id = -1;
  std::optional<double> intercept_time;  ///< nullopt = Never
  Vec2 intercept_point;                  ///< meaningful iff intercept_time is set

  bool finite() const { return intercept_time.has_value(); }
};

/// Trajectory sampled at t_k = k*dt up to and including the last sample at or
/// before stop_time. Shared between interception queries and the DPPS inner
/// loop so every consumer scans identical sample positions.
struct TrajectorySamples {
  std::vector<double> ts;  ///< ts[k] = k*dt
  std::vector<double> ss;  ///< distance travelled at ts[k]
  double dt = 0.0;

  int count() const { return static_cast<int>(ts.size()); }

  static TrajectorySamples build(const BallTrajectory& traj, double dt);
};

/// Distance along the ray origin + s*u at which it leaves the field, or
/// nullopt when the origin is already outside (boundary counts as inside).
std::optional<double> ray_exit_distance(const FieldGeometry& field, Vec2 origin, Vec2 u);

/// Search-based interception prediction for one robot: scans the sampled
/// trajectory for the earliest t_k with arrival_time <= t_k, skipping a
/// chip's airborne prefix and anything past the field boundary. If the ball
/// comes to rest inside the field the rest point stays interceptable forever
/// (max(arrival, stop_time)); the result is Never only when the ball leaves
/// the field before the robot can reach it.
InterceptResult intercept_time(const RobotState& robot, const BallTrajectory& traj,
                               const MotionLimits& limits, const FieldGeometry& field, double dt,
                               double robot_radius = 0.09);

/// intercept_time for every robot, ours by id then theirs by id.
std::vector<InterceptResult> intercept_all(const WorldState& world, const BallTrajectory& traj,
                                           const MotionLimits& ours_limits,
                                           const MotionLimits& theirs_limits, double dt,
                                           double robot_radius = 0.09);

namespace detail_intercept {

/// Precomputed per-trajectory scan bounds for one ray.
struct ScanWindow {
  int k_begin = 0;  ///< first sample past a chip's airborne prefix
  int k_end = 0;    ///< one past the last in-field sample
  bool rest_in_field = false;
};

ScanWindow scan_window(const BallTrajectory& traj, const TrajectorySamples& samples,
                       std::optional<double> d_exit);

kernels::RobotKin make_kin(const RobotState& robot, const MotionLimits& limits,
                           double robot_radius);

/// Core scan used by both intercept_time and run_dpps: applies the exact
/// segment-distance prune, then the backend scan. Returns the sample index
/// hit, or -1; `batch` must already carry the scan window.
int scan_robot(const kernels::ScanBatch& batch, const kernels::RobotKin& kin,
               const kernels::KernelBackend& backend);

}  // namespace detail_intercept

}  // namespace passplan
