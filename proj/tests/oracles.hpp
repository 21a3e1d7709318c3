#pragma once

// Independent reference implementations the tests compare the library
// against: forward integrators, policy simulations, ray sweeps and
// brute-force searches. They re-derive results from first principles
// instead of calling the production closed forms, so agreement between the
// two is evidence rather than tautology.

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "passplan/ball_model.hpp"
#include "passplan/vec2.hpp"
#include "passplan/world.hpp"

namespace oracles {

using passplan::Vec2;

// ---------------------------------------------------------------------------
// Two-phase ball model, forward Euler.

struct BallEulerState {
  double distance = 0.0;
  double speed = 0.0;
};

namespace internal {

/// Advances the rollout state (s, v) by at most `step` seconds, splitting the
/// step at regime edges (the slide-to-roll speed v1, and rest). Plain
/// grid-aligned updates would carry an O((slide_decel - roll_decel) * dt)
/// velocity error past the transition that drifts into millimetres over a
/// long roll, swamping what the integration is meant to measure.
inline void ball_march_step(double& s, double& v, double step, double v1, double slide_decel,
                            double roll_decel, bool slide) {
  double remaining = step;
  while (remaining > 0.0 && v > 0.0) {
    const bool sliding = slide && v > v1;
    const double decel = sliding ? slide_decel : roll_decel;
    const double t_edge = (sliding ? v - v1 : v) / decel;
    const double h = remaining < t_edge ? remaining : t_edge;
    const double v_next = v - decel * h;
    s += 0.5 * (v + v_next) * h;
    v = v_next;
    remaining -= h;
  }
}

}  // namespace internal

/// Integrates the two-phase rollout (decelerate at slide_decel until the
/// speed falls to ratio * v0, then at roll_decel until rest) by marching
/// dt-sized steps forward. `slide` = false starts directly in the rolling
/// phase.
inline BallEulerState ball_euler_at(double v0, double t, double slide_decel, double roll_decel,
                                    double ratio, bool slide = true, double dt = 1e-4) {
  double s = 0.0;
  double v = v0;
  const double v1 = slide ? ratio * v0 : v0;
  for (double clock = 0.0; clock < t && v > 0.0; clock += dt) {
    const double step = std::min(dt, t - clock);
    internal::ball_march_step(s, v, step, v1, slide_decel, roll_decel, slide);
  }
  if (v < 0.0) v = 0.0;
  return {s, v};
}

/// First time the forward march reaches distance d, or nullopt when the ball
/// stops short.
inline std::optional<double> ball_euler_time_to(double v0, double d, double slide_decel,
                                                double roll_decel, double ratio,
                                                bool slide = true, double dt = 1e-4) {
  double s = 0.0;
  double v = v0;
  const double v1 = slide ? ratio * v0 : v0;
  for (double t = 0.0; v > 0.0; t += dt) {
    if (s >= d) return t;
    internal::ball_march_step(s, v, dt, v1, slide_decel, roll_decel, slide);
  }
  return s >= d ? std::optional<double>(0.0) : std::nullopt;
}

// ---------------------------------------------------------------------------
// Robot motion: simulate the bang-bang rest-at-target policy.

/// Simulates a point mass that must come to rest `dist` ahead, starting at
/// signed speed v0 (positive = toward the target): brake when the braking
/// distance meets the remaining gap, wrong-way or over-cap motion brakes
/// first, otherwise accelerate up to vmax. Returns the first time the mass
/// is (nearly) at rest (nearly) on the target.
inline double sim_rest_arrival_1d(double v0, double dist, double a, double b, double vmax,
                                  double dt = 1e-5) {
  double x = 0.0;
  double v = v0;
  double t = 0.0;
  const double max_t = 120.0;
  while (t < max_t) {
    const double rem = dist - x;
    if (std::fabs(rem) <= 1e-4 && std::fabs(v) <= 2e-3) return t;
    const double dir = rem >= 0.0 ? 1.0 : -1.0;
    const double va = v * dir;  // speed toward the target
    double acc;                 // in the frame where the target is ahead
    if (va < 0.0) {
      acc = b;  // moving away: brake
    } else if (va > vmax) {
      acc = -b;  // over the cap: brake down to it
    } else if (va * va / (2.0 * b) >= std::fabs(rem)) {
      acc = -b;  // stopping distance reached: brake to rest
    } else if (va < vmax) {
      acc = a;
    } else {
      acc = 0.0;
    }
    v += dir * acc * dt;
    x += v * dt;
    t += dt;
  }
  return max_t;
}

/// 2D arrival: split the velocity into along-track and cross-track parts at
/// the line to the target, null the cross part at the braking rate, run the
/// 1D policy along the line over the radius-shortened distance.
inline double sim_arrival(Vec2 pos, Vec2 vel, Vec2 target, double a, double b, double vmax,
                          double radius, double dt = 1e-5) {
  const Vec2 q = target - pos;
  const double d = q.norm();
  const double deff = std::max(d - radius, 0.0);
  if (d <= 1e-12) return sim_rest_arrival_1d(vel.norm(), 0.0, a, b, vmax, dt);
  const Vec2 e{q.x / d, q.y / d};
  const double va = vel.x * e.x + vel.y * e.y;
  const double vc = vel.x * e.y - vel.y * e.x;
  return std::max(sim_rest_arrival_1d(va, deff, a, b, vmax, dt), std::fabs(vc) / b);
}

// ---------------------------------------------------------------------------
// Naive interception scan (no pruning, no caps, no vectorization).

struct NaiveIntercept {
  int k = -1;               ///< hit sample, or -1
  double time = 0.0;        ///< hit time, rest time, or meaningless when never
  bool never = true;
  Vec2 point;
};

/// Earliest-interception rule, written as the straightforward loop: walk
/// t_k = k * dt, skip samples inside a chip's flight region or outside the
/// field, accept the first sample whose arrival time (computed by
/// `arrival`) is at or below t_k. If nothing hits and the ball stops on the
/// pitch, the rest point is interceptable at max(arrival, stop_time).
template <typename ArrivalFn>
inline NaiveIntercept naive_intercept(const passplan::BallTrajectory& traj,
                                      const passplan::FieldGeometry& field, double dt,
                                      ArrivalFn&& arrival) {
  using passplan::Vec2;
  NaiveIntercept out;
  if (!field.contains(traj.origin)) return out;
  const int k_last = static_cast<int>(std::floor(traj.stop_time / dt + 1e-9));
  for (int k = 0; k <= k_last; ++k) {
    const double t = k * dt;
    const double s = traj.distance_at(t);
    if (s < traj.interceptable_from) continue;
    const Vec2 p = traj.origin + traj.direction * s;
    if (!field.contains(p)) return out;  // left the pitch: gone for good
    if (arrival(p) <= t) {
      out.k = k;
      out.time = t;
      out.point = p;
      out.never = false;
      return out;
    }
  }
  const Vec2 rest = traj.origin + traj.direction * traj.stop_distance;
  if (!field.contains(rest)) return out;
  const double t_rest = std::max(arrival(rest), traj.stop_time);
  out.time = t_rest;
  out.point = rest;
  out.never = false;
  return out;
}

// ---------------------------------------------------------------------------
// Shot-angle ray sweep.

/// Widest open view of the goal mouth measured by sweeping `rays` evenly
/// spaced directions between the two posts and testing each segment
/// point -> goal line against every opponent disc. Resolution ~ window/rays.
inline double sweep_shoot_angle(Vec2 point, const passplan::WorldState& world, double radius,
                                int rays = 4000) {
  const double gx = 0.5 * world.field.length;
  const double gh = 0.5 * world.field.goal_width;
  if (gx - point.x < 1e-9) return 0.0;
  for (const auto& opp : world.theirs) {
    if (passplan::distance(opp.position, point) < radius) return 0.0;
  }
  const double a0 = std::atan2(-gh - point.y, gx - point.x);
  const double a1 = std::atan2(gh - point.y, gx - point.x);
  const double step = (a1 - a0) / rays;
  int best_run = 0;
  int run = 0;
  for (int i = 0; i <= rays; ++i) {
    const double ang = a0 + i * step;
    const double y_goal = point.y + std::tan(ang) * (gx - point.x);
    const Vec2 end{gx, y_goal};
    bool open = true;
    for (const auto& opp : world.theirs) {
      if (passplan::segment_distance(opp.position, point, end) < radius) {
        open = false;
        break;
      }
    }
    run = open ? run + 1 : 0;
    best_run = std::max(best_run, run);
  }
  return best_run == 0 ? 0.0 : (best_run - 1) * step;
}

// ---------------------------------------------------------------------------
// Random-world helpers.

/// Uniform world: n_ours/n_theirs robots with distinct ids, positions inside
/// the pitch, speeds at most 4 m/s, ball inside the pitch.
inline passplan::WorldState random_world(std::mt19937_64& rng, int n_ours, int n_theirs,
                                         double ball_speed_max = 0.0) {
  using passplan::Vec2;
  passplan::WorldState w;
  std::uniform_real_distribution<double> ux(-0.5 * w.field.length, 0.5 * w.field.length);
  std::uniform_real_distribution<double> uy(-0.5 * w.field.width, 0.5 * w.field.width);
  std::uniform_real_distribution<double> uv(-2.0, 2.0);
  std::uniform_real_distribution<double> uspeed(0.0, ball_speed_max);
  std::uniform_real_distribution<double> uang(-3.14159265358979, 3.14159265358979);
  auto team = [&](int n) {
    std::vector<passplan::RobotState> robots;
    for (int i = 0; i < n; ++i) {
      passplan::RobotState r;
      r.id = i;
      r.position = {ux(rng), uy(rng)};
      r.velocity = {uv(rng), uv(rng)};
      robots.push_back(r);
    }
    return robots;
  };
  w.ours = team(n_ours);
  w.theirs = team(n_theirs);
  w.ball.position = {ux(rng), uy(rng)};
  if (ball_speed_max > 0.0) {
    const double sp = uspeed(rng);
    const double an = uang(rng);
    w.ball.velocity = {sp * std::cos(an), sp * std::sin(an)};
  }
  w.validate();
  return w;
}

/// Same, but every coordinate sits on an exactly-representable 1/16 m
/// lattice, so a y-mirrored copy negates without rounding.
inline passplan::WorldState lattice_world(std::mt19937_64& rng, int n_ours, int n_theirs,
                                          bool rolling_ball = false) {
  using passplan::Vec2;
  passplan::WorldState w;
  const double q = 1.0 / 16.0;
  std::uniform_int_distribution<int> ix(-int(0.5 * w.field.length / q),
                                        int(0.5 * w.field.length / q));
  std::uniform_int_distribution<int> iy(-int(0.5 * w.field.width / q),
                                        int(0.5 * w.field.width / q));
  std::uniform_int_distribution<int> iv(-32, 32);
  auto team = [&](int n) {
    std::vector<passplan::RobotState> robots;
    for (int i = 0; i < n; ++i) {
      passplan::RobotState r;
      r.id = i;
      r.position = {ix(rng) * q, iy(rng) * q};
      r.velocity = {iv(rng) * q, iv(rng) * q};
      robots.push_back(r);
    }
    return robots;
  };
  w.ours = team(n_ours);
  w.theirs = team(n_theirs);
  w.ball.position = {ix(rng) * q, iy(rng) * q};
  if (rolling_ball) w.ball.velocity = {iv(rng) * q, iv(rng) * q};
  w.validate();
  return w;
}

}  // namespace oracles
