#include "passplan/ball_model.hpp"

#include <cmath>
#include <string>

#include "passplan/errors.hpp"

namespace passplan {

namespace {

BallTrajectory resolve(Vec2 origin, Vec2 dir, double speed, KickType type,
                       const BallModelParams& params, bool slide_phase) {
  params.validate();
  if (!(speed >= 0.0) || !std::isfinite(speed)) {
    throw domain_error("kick speed must be finite and non-negative");
  }
  BallTrajectory t;
  t.origin = origin;
  t.kick_speed = speed;
  t.kick_type = type;
  t.slide_decel = params.slide_decel;
  t.roll_decel = params.roll_decel;

  const double n = dir.norm();
  if (n == 0.0) {
    if (speed > 0.0) throw domain_error("kick direction must be non-zero");
    t.direction = {1.0, 0.0};
  } else {
    t.direction = {dir.x / n, dir.y / n};
  }

  t.v1 = slide_phase ? params.transition_ratio * speed : speed;
  if (slide_phase) {
    t.slide_end_time = (speed - t.v1) / params.slide_decel;
    t.slide_end_distance = (speed * speed - t.v1 * t.v1) / (2.0 * params.slide_decel);
  }
  t.stop_time = t.slide_end_time + t.v1 / params.roll_decel;
  t.stop_distance = t.slide_end_distance + (t.v1 * t.v1) / (2.0 * params.roll_decel);
  t.interceptable_from =
      type == KickType::chip ? params.chip_flight_fraction * t.stop_distance : 0.0;
  return t;
}

}  // namespace

void BallModelParams::validate() const {
  if (!(slide_decel > roll_decel) || !(roll_decel > 0.0)) {
    throw config_error("ball model requires slide_decel > roll_decel > 0");
  }
  if (!(transition_ratio > 0.0) || !(transition_ratio < 1.0)) {
    throw config_error("transition_ratio must lie in (0,1)");
  }
  if (!(power_min > 0.0) || !(power_min < power_max)) {
    throw config_error("ball model requires 0 < power_min < power_max");
  }
  if (!(chip_flight_fraction > 0.0) || !(chip_flight_fraction < 1.0)) {
    throw config_error("chip_flight_fraction must lie in (0,1)");
  }
}

BallTrajectory BallTrajectory::flat_kick(Vec2 origin, Vec2 dir, double speed,
                                         const BallModelParams& params) {
  return resolve(origin, dir, speed, KickType::flat, params, true);
}

BallTrajectory BallTrajectory::chip_kick(Vec2 origin, Vec2 dir, double speed,
                                         const BallModelParams& params) {
  return resolve(origin, dir, speed, KickType::chip, params, true);
}

BallTrajectory BallTrajectory::free_roll(Vec2 origin, Vec2 velocity,
                                         const BallModelParams& params) {
  return resolve(origin, velocity, velocity.norm(), KickType::flat, params, false);
}

double BallTrajectory::speed_at(double t) const {
  if (t < slide_end_time) return kick_speed - slide_decel * t;
  if (t < stop_time) return v1 - roll_decel * (t - slide_end_time);
  return 0.0;
}

double BallTrajectory::distance_at(double t) const {
  if (t < slide_end_time) return kick_speed * t - 0.5 * slide_decel * t * t;
  if (t < stop_time) {
    const double u = t - slide_end_time;
    return slide_end_distance + v1 * u - 0.5 * roll_decel * u * u;
  }
  return stop_distance;
}

bool BallTrajectory::airborne_at(double t) const {
  return kick_type == KickType::chip && distance_at(t) < interceptable_from;
}

std::optional<double> BallTrajectory::travel_time_to_distance(double d) const {
  if (d == 0.0) return 0.0;
  if (d > stop_distance) return std::nullopt;
  if (d <= slide_end_distance) {
    // Stable root of d = v0 t - 1/2 a1 t^2 (no cancellation for small d).
    const double rad = kick_speed * kick_speed - 2.0 * slide_decel * d;
    return 2.0 * d / (kick_speed + std::sqrt(rad < 0.0 ? 0.0 : rad));
  }
  const double rem = d - slide_end_distance;
  const double rad = v1 * v1 - 2.0 * roll_decel * rem;
  return slide_end_time + 2.0 * rem / (v1 + std::sqrt(rad < 0.0 ? 0.0 : rad));
}

std::optional<double> BallTrajectory::time_of_first_interceptable_point(double d) const {
  if (kick_type == KickType::chip && d < interceptable_from) return std::nullopt;
  return travel_time_to_distance(d);
}

BallSample ball_state_at(const BallTrajectory& traj, double t) {
  if (std::isnan(t) || t < 0.0) throw domain_error("ball_state_at: t must be >= 0");
  return {traj.position_at(t), traj.speed_at(t), traj.airborne_at(t)};
}

std::optional<double> travel_time_to_distance(const BallTrajectory& traj, double d) {
  if (std::isnan(d) || d < 0.0) throw domain_error("travel_time_to_distance: d must be >= 0");
  return traj.travel_time_to_distance(d);
}

std::optional<double> time_of_first_interceptable_point(const BallTrajectory& traj, double d) {
  if (std::isnan(d) || d < 0.0) {
    throw domain_error("time_of_first_interceptable_point: d must be >= 0");
  }
  return traj.time_of_first_interceptable_point(d);
}

PassPower pass_power_for(double d, double t, const BallModelParams& params) {
  params.validate();
  if (!(d > 0.0) || !std::isfinite(d)) throw domain_error("pass_power_for: d must be > 0");
  if (!(t > 0.0) || !std::isfinite(t)) throw domain_error("pass_power_for: t must be > 0");
  PassPower p;
  p.v1 = d / t + 0.5 * params.roll_decel * t;
  p.kick_speed = p.v1 / params.transition_ratio;
  if (p.kick_speed < params.power_min) {
    p.kick_speed = params.power_min;
    p.clamped = true;
  } else if (p.kick_speed > params.power_max) {
    p.kick_speed = params.power_max;
    p.clamped = true;
  }
  return p;
}

}  // namespace passplan
