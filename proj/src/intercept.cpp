#include "passplan/intercept.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "passplan/detail/arrival_math.hpp"
#include "passplan/errors.hpp"

namespace passplan {

TrajectorySamples TrajectorySamples::build(const BallTrajectory& traj, double dt) {
  if (!(dt > 0.0)) throw domain_error("trajectory sampling requires dt > 0");
  TrajectorySamples s;
  s.dt = dt;
  const int k_last = static_cast<int>(std::floor(traj.stop_time / dt + 1e-9));
  s.ts.resize(k_last + 1);
  s.ss.resize(k_last + 1);
  for (int k = 0; k <= k_last; ++k) {
    const double t = k * dt;
    s.ts[k] = t;
    s.ss[k] = traj.distance_at(t);
  }
  return s;
}

std::optional<double> ray_exit_distance(const FieldGeometry& field, Vec2 origin, Vec2 u) {
  if (!field.contains(origin)) return std::nullopt;
  const double hx = 0.5 * field.length;
  const double hy = 0.5 * field.width;
  double s_exit = std::numeric_limits<double>::infinity();
  if (u.x > 0.0) {
    s_exit = std::min(s_exit, (hx - origin.x) / u.x);
  } else if (u.x < 0.0) {
    s_exit = std::min(s_exit, (-hx - origin.x) / u.x);
  }
  if (u.y > 0.0) {
    s_exit = std::min(s_exit, (hy - origin.y) / u.y);
  } else if (u.y < 0.0) {
    s_exit = std::min(s_exit, (-hy - origin.y) / u.y);
  }
  return std::max(s_exit, 0.0);
}

namespace detail_intercept {

ScanWindow scan_window(const BallTrajectory& traj, const TrajectorySamples& samples,
                       std::optional<double> d_exit) {
  ScanWindow w;
  if (!d_exit.has_value()) {
    // Origin outside the field: nothing on this trajectory is playable.
    return w;
  }
  w.k_end = samples.count();
  if (*d_exit < traj.stop_distance) {
    const std::optional<double> t_exit = traj.travel_time_to_distance(*d_exit);
    const int k_last =
        t_exit ? static_cast<int>(std::floor(*t_exit / samples.dt + 1e-9)) : samples.count() - 1;
    w.k_end = std::min(w.k_end, k_last + 1);
    w.rest_in_field = false;
  } else {
    w.rest_in_field = true;
  }
  if (traj.interceptable_from > 0.0) {
    const std::optional<double> t_air = traj.travel_time_to_distance(traj.interceptable_from);
    if (t_air) w.k_begin = static_cast<int>(std::ceil(*t_air / samples.dt - 1e-9));
  }
  return w;
}

kernels::RobotKin make_kin(const RobotState& robot, const MotionLimits& limits,
                           double robot_radius) {
  kernels::RobotKin k;
  k.px = robot.position.x;
  k.py = robot.position.y;
  k.vx = robot.velocity.x;
  k.vy = robot.velocity.y;
  k.accel = limits.max_accel;
  k.decel = limits.max_decel;
  k.vmax = limits.max_speed;
  k.radius = robot_radius;
  const double speed = robot.velocity.norm();
  k.vbound = speed > limits.max_speed ? speed : limits.max_speed;
  return k;
}

int scan_robot(const kernels::ScanBatch& batch, const kernels::RobotKin& kin,
               const kernels::KernelBackend& backend) {
  if (batch.k_begin >= batch.k_end) return -1;
  // Whole-window prune: if even the closest point of the scanned segment is
  // out of reach at the latest sample time, no sample can pass the per-sample
  // reject, so the scan outcome is unchanged.
  const double t_hi = batch.ts[batch.k_end - 1];
  const double s_lo = batch.ss[batch.k_begin];
  const double s_hi = batch.ss[batch.k_end - 1];
  const Vec2 a{batch.ox + batch.ux * s_lo, batch.oy + batch.uy * s_lo};
  const Vec2 b{batch.ox + batch.ux * s_hi, batch.oy + batch.uy * s_hi};
  const double dmin = segment_distance({kin.px, kin.py}, a, b);
  if (dmin - kin.radius > kin.vbound * t_hi) return -1;
  // Scan-start skip: any sample with radius + vbound*t < dmin fails the
  // per-sample quick reject both backends apply, so dropping every sample
  // before the first time >= (dmin - radius - slack)/vbound cannot change
  // the scan result. The 1e-9 s slack dwarfs the rounding error in dmin.
  kernels::ScanBatch clipped = batch;
  if (kin.vbound > 0.0) {
    const double t_lo = (dmin - kin.radius - 1e-9) / kin.vbound;
    if (t_lo > 0.0) {
      const double* first = clipped.ts + clipped.k_begin;
      const double* last = clipped.ts + clipped.k_end;
      clipped.k_begin = static_cast<int>(std::lower_bound(first, last, t_lo) - clipped.ts);
      if (clipped.k_begin >= clipped.k_end) return -1;
    }
  }
  return backend.scan_first(clipped, kin);
}

}  // namespace detail_intercept

namespace {

InterceptResult intercept_with(const kernels::RobotKin& kin, const BallTrajectory& traj,
                               const TrajectorySamples& samples,
                               const detail_intercept::ScanWindow& window) {
  InterceptResult r;
  kernels::ScanBatch batch;
  batch.ts = samples.ts.data();
  batch.ss = samples.ss.data();
  batch.k_begin = window.k_begin;
  batch.k_end = window.k_end;
  batch.ox = traj.origin.x;
  batch.oy = traj.origin.y;
  batch.ux = traj.direction.x;
  batch.uy = traj.direction.y;
  const int k =
      detail_intercept::scan_robot(batch, kin, kernels::active_kernel());
  if (k >= 0) {
    r.intercept_time = samples.ts[k];
    r.intercept_point = traj.origin + traj.direction * samples.ss[k];
    return r;
  }
  if (window.rest_in_field) {
    const Vec2 rest = traj.origin + traj.direction * traj.stop_distance;
    const double arrival = detail::arrival_to_point(rest.x, rest.y, kin.px, kin.py, kin.vx,
                                                    kin.vy, kin.accel, kin.decel, kin.vmax,
                                                    kin.radius);
    r.intercept_time = arrival > traj.stop_time ? arrival : traj.stop_time;
    r.intercept_point = rest;
  }
  return r;
}

}  // namespace

InterceptResult intercept_time(const RobotState& robot, const BallTrajectory& traj,
                               const MotionLimits& limits, const FieldGeometry& field, double dt,
                               double robot_radius) {
  if (!(dt > 0.0)) throw domain_error("intercept_time: dt must be > 0");
  const TrajectorySamples samples = TrajectorySamples::build(traj, dt);
  const auto window = detail_intercept::scan_window(
      traj, samples, ray_exit_distance(field, traj.origin, traj.direction));
  const kernels::RobotKin kin = detail_intercept::make_kin(robot, limits, robot_radius);
  InterceptResult r = intercept_with(kin, traj, samples, window);
  r.robot_id = robot.id;
  return r;
}

std::vector<InterceptResult> intercept_all(const WorldState& world, const BallTrajectory& traj,
                                           const MotionLimits& ours_limits,
                                           const MotionLimits& theirs_limits, double dt,
                                           double robot_radius) {
  if (!(dt > 0.0)) throw domain_error("intercept_all: dt must be > 0");
  const TrajectorySamples samples = TrajectorySamples::build(traj, dt);
  const auto window = detail_intercept::scan_window(
      traj, samples, ray_exit_distance(world.field, traj.origin, traj.direction));

  std::vector<InterceptResult> out;
  out.reserve(world.ours.size() + world.theirs.size());
  auto run_team = [&](const std::vector<RobotState>& robots, Team team,
                      const MotionLimits& limits) {
    std::vector<const RobotState*> sorted;
    sorted.reserve(robots.size());
    for (const RobotState& r : robots) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(),
              [](const RobotState* a, const RobotState* b) { return a->id < b->id; });
    for (const RobotState* r : sorted) {
      InterceptResult res = intercept_with(detail_intercept::make_kin(*r, limits, robot_radius),
                                           traj, samples, window);
      res.team = team;
      res.robot_id = r->id;
      out.push_back(res);
    }
  };
  run_team(world.ours, Team::ours, ours_limits);
  run_team(world.theirs, Team::theirs, theirs_limits);
  return out;
}

}  // namespace passplan
