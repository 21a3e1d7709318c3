#pragma once

#include <numbers>

namespace passplan {

/// Pass-scoring weights (one per feature). Smaller-is-better features
/// (teammate time, distance to goal, refraction) are negated before
/// weighting, so all defaults stay non-negative.
struct PassWeights {
  double teammate_time = 1.0;
  double shoot_angle = 2.0;
  double dist_goal = 1.0;
  double refraction = 0.5;
  double margin = 1.0;
};

/// Running-point weights. dist_ball rewards spreading away from the ball;
/// dist_goal and exposure are penalties (negated features).
struct RunWeights {
  double dist_goal = 1.0;
  double dist_ball = 0.3;
  double angle = 1.0;
  double guard_time = 0.3;
  double exposure = 0.5;
};

/// Normalization bounds: lengths and angles divide by these and clamp to
/// [0, 1]; times stay raw. length_upper = 0 means "use field length".
struct NormBounds {
  double length_upper = 0.0;
  double angle_upper = std::numbers::pi;
};

/// Piecewise-linear preference band for the running-point angle feature:
/// 0 at full_lo/full_hi edges rises to 1 inside [peak_lo, peak_hi].
/// All radians against the goal axis.
struct AngleBand {
  double full_lo = 0.0;
  double peak_lo = 15.0 * std::numbers::pi / 180.0;
  double peak_hi = 45.0 * std::numbers::pi / 180.0;
  double full_hi = 90.0 * std::numbers::pi / 180.0;
};

/// Both weight profiles plus the shared normalization bounds.
struct WeightConfig {
  PassWeights pass;
  RunWeights run;
  NormBounds norm;
};

}  // namespace passplan
