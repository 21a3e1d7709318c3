#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "passplan/errors.hpp"
#include "passplan/motion.hpp"

using namespace passplan;

namespace {
const MotionLimits kLimits;  // defaults: 3.25 m/s, 3.0 m/s^2 accel, 3.0 m/s^2 decel

RobotState at(Vec2 pos, Vec2 vel = {0.0, 0.0}) {
  RobotState r;
  r.id = 0;
  r.position = pos;
  r.velocity = vel;
  return r;
}
}  // namespace

TEST_CASE("rest-to-rest arrival matches the closed forms") {
  const double a = kLimits.max_accel;
  const double b = kLimits.max_decel;
  const double vmax = kLimits.max_speed;
  // Short move: triangular speed profile, t = peak/a + peak/b.
  {
    const double d = 1.0;
    const double peak = std::sqrt(2.0 * a * b * d / (a + b));
    REQUIRE(peak <= vmax);
    const double t = arrival_time(at({0.0, 0.0}), {d, 0.0}, kLimits);
    CHECK(t == doctest::Approx(peak / a + peak / b).epsilon(1e-12));
    CHECK(std::abs(t - oracles::sim_rest_arrival_1d(0.0, d, a, b, vmax)) < 5e-3);
  }
  // Long move: trapezoid with a cruise segment at vmax.
  {
    const double d = 8.0;
    const double d_ramps = vmax * vmax / (2.0 * a) + vmax * vmax / (2.0 * b);
    REQUIRE(d > d_ramps);
    const double expect = vmax / a + vmax / b + (d - d_ramps) / vmax;
    const double t = arrival_time(at({-4.0, 0.0}), {4.0, 0.0}, kLimits);
    CHECK(t == doctest::Approx(expect).epsilon(1e-12));
    CHECK(std::abs(t - oracles::sim_rest_arrival_1d(0.0, d, a, b, vmax)) < 5e-3);
  }
  // Direction must not matter for an at-rest robot.
  const double t_east = arrival_time(at({0.0, 0.0}), {2.0, 0.0}, kLimits);
  const double t_diag = arrival_time(at({1.0, 1.0}), {1.0 + std::sqrt(2.0), 1.0 + std::sqrt(2.0)},
                                     kLimits);
  CHECK(t_east == doctest::Approx(t_diag).epsilon(1e-12));
}

TEST_CASE("moving starts match the bang-bang policy simulation") {
  const double a = kLimits.max_accel;
  const double b = kLimits.max_decel;
  const double vmax = kLimits.max_speed;
  std::mt19937_64 rng(201);
  std::uniform_real_distribution<double> upos(-4.0, 4.0);
  std::uniform_real_distribution<double> uvel(-3.0, 3.0);
  for (int i = 0; i < 120; ++i) {
    const RobotState r = at({upos(rng), upos(rng)}, {uvel(rng), uvel(rng)});
    const Vec2 target{upos(rng), upos(rng)};
    if (distance(r.position, target) < 0.05) continue;  // near-degenerate line
    const double t = arrival_time(r, target, kLimits);
    const double t_sim =
        oracles::sim_arrival(r.position, r.velocity, target, a, b, vmax, 0.0);
    CHECK(std::abs(t - t_sim) < 5e-3);
  }
}

TEST_CASE("hard starts: wrong way, over the cap, at the target") {
  const double a = kLimits.max_accel;
  const double b = kLimits.max_decel;
  const double vmax = kLimits.max_speed;
  // Moving straight away from the target.
  {
    const RobotState r = at({0.0, 0.0}, {-2.5, 0.0});
    const double t = arrival_time(r, {3.0, 0.0}, kLimits);
    CHECK(std::abs(t - oracles::sim_rest_arrival_1d(-2.5, 3.0, a, b, vmax)) < 5e-3);
    CHECK(t > arrival_time(at({0.0, 0.0}), {3.0, 0.0}, kLimits));
  }
  // Faster than the cap, heading in (world speed limit is 5 > vmax = 3.25).
  {
    const RobotState r = at({0.0, 0.0}, {4.5, 0.0});
    const double t = arrival_time(r, {6.0, 0.0}, kLimits);
    CHECK(std::abs(t - oracles::sim_rest_arrival_1d(4.5, 6.0, a, b, vmax)) < 5e-3);
  }
  // Overrunning: too fast to stop within the remaining distance.
  {
    const RobotState r = at({0.0, 0.0}, {3.0, 0.0});
    const double t = arrival_time(r, {0.5, 0.0}, kLimits);
    CHECK(std::abs(t - oracles::sim_rest_arrival_1d(3.0, 0.5, a, b, vmax)) < 5e-3);
  }
  // Exactly at the target while moving: brake out and come back.
  {
    const RobotState r = at({1.0, 1.0}, {2.0, 0.0});
    const double t = arrival_time(r, {1.0, 1.0}, kLimits);
    CHECK(std::abs(t - oracles::sim_rest_arrival_1d(2.0, 0.0, a, b, vmax)) < 5e-3);
    CHECK(arrival_time(at({1.0, 1.0}), {1.0, 1.0}, kLimits) == 0.0);
  }
}

TEST_CASE("cross-track velocity is a hard lower bound") {
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> upos(-4.0, 4.0);
  std::uniform_real_distribution<double> uvel(-3.0, 3.0);
  for (int i = 0; i < 500; ++i) {
    const RobotState r = at({upos(rng), upos(rng)}, {uvel(rng), uvel(rng)});
    const Vec2 target{upos(rng), upos(rng)};
    const Vec2 q = target - r.position;
    const double d = q.norm();
    if (d < 1e-6) continue;
    const Vec2 e = q * (1.0 / d);
    const double vc = r.velocity.x * e.y - r.velocity.y * e.x;
    const double t = arrival_time(r, target, kLimits);
    CHECK(t >= std::abs(vc) / kLimits.max_decel - 1e-12);
    CHECK(t >= 0.0);
    CHECK(std::isfinite(t));
  }
  // Pure cross-track motion at point-blank range: the nulling phase dominates.
  const RobotState r = at({0.0, 0.0}, {0.0, 2.4});
  const double t = arrival_time(r, {0.01, 0.0}, kLimits);
  CHECK(t >= 2.4 / kLimits.max_decel - 1e-12);
}

TEST_CASE("arrival_time is monotone in distance for an at-rest robot") {
  double prev = 0.0;
  for (int i = 1; i <= 40; ++i) {
    const double d = 0.25 * i;
    const double t = arrival_time(at({0.0, 0.0}), {d, 0.0}, kLimits);
    CHECK(t > prev);
    prev = t;
  }
}

TEST_CASE("arrival_time_with_buffer adds the buffer and checks its domain") {
  const RobotState r = at({0.0, 0.0}, {1.0, 0.5});
  const double base = arrival_time(r, {2.0, 1.0}, kLimits);
  CHECK(arrival_time_with_buffer(r, {2.0, 1.0}, kLimits, 0.0) == base);
  CHECK(arrival_time_with_buffer(r, {2.0, 1.0}, kLimits, 0.3) == base + 0.3);
  CHECK_THROWS_AS(arrival_time_with_buffer(r, {2.0, 1.0}, kLimits, -0.1), Error);
  CHECK_THROWS_AS(arrival_time_with_buffer(r, {2.0, 1.0}, kLimits, std::nan("")), Error);
  MotionLimits bad = kLimits;
  bad.max_accel = 0.0;
  CHECK_THROWS_AS(bad.validate(), Error);
}
