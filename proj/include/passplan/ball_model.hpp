#pragma once

#include <optional>

#include "passplan/vec2.hpp"

namespace passplan {

/// Parameters of the two-phase ball model. A flat kick first decelerates at
/// slide_decel until the speed drops to transition_ratio of the kick speed,
/// then rolls out at roll_decel. Chips share the speed schedule but are
/// airborne (not interceptable) for the first chip_flight_fraction of the
/// total rollout distance.
struct BallModelParams {
  double slide_decel = 3.4;             ///< m/s^2, sliding phase
  double roll_decel = 0.5;              ///< m/s^2, rolling phase
  double transition_ratio = 5.0 / 7.0;  ///< v1 / v0 at the slide-to-roll transition
  double power_min = 1.0;               ///< m/s, lowest kick speed
  double power_max = 6.5;               ///< m/s, highest kick speed
  double chip_flight_fraction = 0.5;    ///< share of stop_distance spent airborne

  void validate() const;  ///< throws config_error on an invalid combination
};

enum class KickType { flat, chip };

/// A kicked (or freely rolling) ball with its kinematic profile resolved at
/// construction. All queries are closed-form.
struct BallTrajectory {
  Vec2 origin;
  Vec2 direction;  ///< unit vector; arbitrary when kick_speed == 0
  double kick_speed = 0.0;
  KickType kick_type = KickType::flat;

  // Resolved profile.
  double v1 = 0.0;             ///< speed at the slide-to-roll transition
  double slide_decel = 0.0;
  double roll_decel = 0.0;
  double slide_end_time = 0.0;
  double slide_end_distance = 0.0;
  double stop_time = 0.0;
  double stop_distance = 0.0;
  double interceptable_from = 0.0;  ///< distance before which the ball is airborne

  /// Flat kick from `origin` along `dir` (normalized here) at `speed` m/s.
  static BallTrajectory flat_kick(Vec2 origin, Vec2 dir, double speed,
                                  const BallModelParams& params);
  /// Chip kick; same speed schedule, airborne over the initial flight region.
  static BallTrajectory chip_kick(Vec2 origin, Vec2 dir, double speed,
                                  const BallModelParams& params);
  /// A ball already rolling at `velocity`: no slide phase, roll_decel only.
  static BallTrajectory free_roll(Vec2 origin, Vec2 velocity, const BallModelParams& params);

  double speed_at(double t) const;
  double distance_at(double t) const;
  Vec2 position_at(double t) const { return origin + direction * distance_at(t); }
  bool airborne_at(double t) const;

  /// Smallest t at which the traveled distance equals d, or nullopt when the
  /// ball stops short (d > stop_distance).
  std::optional<double> travel_time_to_distance(double d) const;

  /// Earliest time the point at distance d can be touched: equals
  /// travel_time_to_distance for flat kicks; nullopt inside a chip's flight region.
  std::optional<double> time_of_first_interceptable_point(double d) const;
};

struct BallSample {
  Vec2 position;
  double speed = 0.0;
  bool airborne = false;
};

/// Closed-form state query. Throws domain_error for negative or NaN t.
BallSample ball_state_at(const BallTrajectory& traj, double t);

/// Alias for BallTrajectory::travel_time_to_distance; throws domain_error for d < 0.
std::optional<double> travel_time_to_distance(const BallTrajectory& traj, double d);

/// Alias for BallTrajectory::time_of_first_interceptable_point; throws for d < 0.
std::optional<double> time_of_first_interceptable_point(const BallTrajectory& traj, double d);

struct PassPower {
  double kick_speed = 0.0;  ///< clamped to [power_min, power_max]
  double v1 = 0.0;          ///< rolling speed the inversion asked for
  bool clamped = false;
};

/// Kick speed so that a pass covers distance d in time t, inverting the
/// rolling phase only: v1 = d/t + (1/2)*roll_decel*t, kick_speed =
/// v1 / transition_ratio. The slide phase is deliberately ignored, so the
/// real two-phase ball arrives slightly early. Throws domain_error unless
/// d > 0 and t > 0.
PassPower pass_power_for(double d, double t, const BallModelParams& params);

}  // namespace passplan
