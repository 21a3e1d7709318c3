#pragma once

#include <cmath>

// Canonical scalar arrival-time math. The AVX2 kernel in
// src/kernels/kernel_avx2.cpp evaluates these exact expression trees
// lane-wise (same literals, same association, x86 min/max semantics), which
// is what keeps the two backends bit-identical. Any edit here must be
// mirrored there. Compiled with -ffp-contract=off project-wide.

namespace passplan::detail {

/// Time for a point mass to go from rest to rest over distance L >= 0 with
/// acceleration a, braking b, speed cap vmax.
inline double rest_to_rest_time(double L, double a, double b, double vmax) {
  const double peak2 = ((2.0 * a) * b * L) / (a + b);
  const double peak = std::sqrt(peak2);
  if (peak <= vmax) return peak / a + peak / b;
  const double d_used = (vmax * vmax) / (2.0 * a) + (vmax * vmax) / (2.0 * b);
  return vmax / a + vmax / b + (L - d_used) / vmax;
}

/// Minimum time for a point mass starting at signed speed v0 (positive =
/// toward the target) to come to rest exactly `dist` ahead (dist >= 0),
/// under a 1D bang-bang profile.
inline double one_d_time_to_rest(double v0, double dist, double a, double b, double vmax) {
  const double brake_dist = (v0 * v0) / (2.0 * b);
  if (v0 < 0.0 || brake_dist > dist) {
    // Wrong way or overshooting: brake to rest, then rest-to-rest the gap.
    const double gap = brake_dist - std::copysign(dist, v0);
    return std::fabs(v0) / b + rest_to_rest_time(gap, a, b, vmax);
  }
  const double peak2 = ((2.0 * a) * b * dist + b * (v0 * v0)) / (a + b);
  const double peak = std::sqrt(peak2);
  if (peak <= vmax) return (peak - v0) / a + peak / b;
  if (v0 <= vmax) {
    const double d_used = (vmax * vmax - v0 * v0) / (2.0 * a) + (vmax * vmax) / (2.0 * b);
    return (vmax - v0) / a + vmax / b + (dist - d_used) / vmax;
  }
  // Already above the cap: brake to vmax first.
  const double d_used = (v0 * v0 - vmax * vmax) / (2.0 * b) + (vmax * vmax) / (2.0 * b);
  return (v0 - vmax) / b + vmax / b + (dist - d_used) / vmax;
}

/// Arrival time to the point at offset (qx, qy) from the robot, d2 = |q|^2.
/// The initial velocity is split into along-track and cross-track parts; the
/// cross-track part must be nulled at the braking bound, and the total is
/// the max of the two phases. `radius` shortens the effective distance.
inline double arrival_given(double qx, double qy, double d2, double vx, double vy, double a,
                            double b, double vmax, double radius) {
  const double d = std::sqrt(d2);
  const double deff_raw = d - radius;
  const double deff = deff_raw > 0.0 ? deff_raw : 0.0;
  const double denom = d > 1e-30 ? d : 1e-30;
  const double ex = qx / denom;
  const double ey = qy / denom;
  const double va = vx * ex + vy * ey;
  const double vc = vx * ey - vy * ex;
  const double t_along = one_d_time_to_rest(va, deff, a, b, vmax);
  const double t_cross = std::fabs(vc) / b;
  return t_along > t_cross ? t_along : t_cross;
}

inline double arrival_to_point(double tx, double ty, double px, double py, double vx, double vy,
                               double a, double b, double vmax, double radius) {
  const double qx = tx - px;
  const double qy = ty - py;
  return arrival_given(qx, qy, qx * qx + qy * qy, vx, vy, a, b, vmax, radius);
}

}  // namespace passplan::detail
