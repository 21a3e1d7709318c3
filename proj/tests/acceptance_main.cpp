// Acceptance gate: one line per criterion, PASS or FAIL, exit 0 only when
// every criterion passes.
//
// Each criterion compares the library against an independently coded
// reference (forward integration, naive interception scans, ray sweeps,
// brute-force search) or checks an exact structural property (bitwise
// determinism, mirror symmetry, counting). All tolerances are fixed in this
// file and reported on the output line.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <iterator>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "passplan/ball_model.hpp"
#include "passplan/config.hpp"
#include "passplan/detail/arrival_math.hpp"
#include "passplan/dpps.hpp"
#include "passplan/motion.hpp"
#include "passplan/offball.hpp"
#include "passplan/pass_eval.hpp"
#include "passplan/snapshot.hpp"
#include "passplan/vec2.hpp"
#include "passplan/world.hpp"

#ifndef PASSPLAN_DATA_DIR
#define PASSPLAN_DATA_DIR "data"
#endif

namespace {

using passplan::Vec2;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string strf(const char* fmt, ...) {
  char buf[768];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  return buf;
}

std::string data_path(const char* name) {
  return std::string(PASSPLAN_DATA_DIR) + "/" + name;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

int nearest_our_id(const passplan::WorldState& w) {
  int best_id = w.ours.front().id;
  double best_d = std::numeric_limits<double>::infinity();
  for (const auto& r : w.ours) {
    const double d = passplan::distance(r.position, w.ball.position);
    if (d < best_d) {
      best_d = d;
      best_id = r.id;
    }
  }
  return best_id;
}

using Result = std::pair<bool, std::string>;

// --------------------------------------------------------------------------
// 1. The parallel search must be cell-for-cell identical to the serial loop
//    at several worker counts, across randomized worlds, within a runtime
//    budget.

Result criterion_search_determinism() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(0xC1);
  std::uniform_int_distribution<int> team_size(2, 16);
  const passplan::PlannerConfig cfg;
  const passplan::SearchGrid grid;  // 128 directions x 64 powers, both kick types
  const int worlds = 200;
  int mismatches = 0;
  for (int i = 0; i < worlds; ++i) {
    const auto w = oracles::random_world(rng, team_size(rng), team_size(rng));
    const auto serial = passplan::run_dpps_serial(w, w.ours.front().id, grid, cfg);
    for (const int workers : {1, 2, 8}) {
      const auto par = passplan::run_dpps(w, w.ours.front().id, grid, cfg, workers);
      if (!passplan::grids_identical(serial, par)) ++mismatches;
    }
  }
  const double elapsed = seconds_since(t0);
  const bool ok = mismatches == 0 && elapsed < 300.0;
  return {ok, strf("%d worlds, workers {1,2,8} vs serial: grid mismatches=%d, elapsed=%.1fs "
                   "(budget 300s)",
                   worlds, mismatches, elapsed)};
}

// --------------------------------------------------------------------------
// 2. Closed-form ball queries vs a dt = 1e-4 forward integrator: positions
//    within 1e-3 m, times within 1e-3 s, on 1000 random draws.

Result criterion_ball_model() {
  std::mt19937_64 rng(0xC2);
  std::uniform_real_distribution<double> uv(0.2, 6.5);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const passplan::BallModelParams bp;
  int bad = 0;
  int never_checked = 0;
  double worst_pos = 0.0;
  double worst_time = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double v0 = uv(rng);
    const bool slide = (i % 2) == 0;  // alternate kicked and already-rolling profiles
    const auto traj = slide
                          ? passplan::BallTrajectory::flat_kick({0.0, 0.0}, {1.0, 0.0}, v0, bp)
                          : passplan::BallTrajectory::free_roll({0.0, 0.0}, {v0, 0.0}, bp);
    const double t = u01(rng) * 1.2 * traj.stop_time;  // occasionally past rest
    const auto sample = passplan::ball_state_at(traj, t);
    const auto ref = oracles::ball_euler_at(v0, t, bp.slide_decel, bp.roll_decel,
                                            bp.transition_ratio, slide);
    const double pos_err = std::fabs(passplan::distance(sample.position, traj.origin) -
                                     ref.distance);
    const double spd_err = std::fabs(sample.speed - ref.speed);
    worst_pos = std::max(worst_pos, pos_err);
    if (pos_err > 1e-3 || spd_err > 1e-3) ++bad;

    const double d = u01(rng) * 0.95 * traj.stop_distance;
    const auto t_prod = passplan::travel_time_to_distance(traj, d);
    const auto t_ref = oracles::ball_euler_time_to(v0, d, bp.slide_decel, bp.roll_decel,
                                                   bp.transition_ratio, slide);
    if (!t_prod.has_value() || !t_ref.has_value()) {
      ++bad;
    } else {
      const double time_err = std::fabs(*t_prod - *t_ref);
      worst_time = std::max(worst_time, time_err);
      if (time_err > 1e-3) ++bad;
    }
    if (i % 10 == 0) {  // past the rollout both sides must say "never"
      const double d_far = traj.stop_distance * 1.01 + 0.1;
      const bool prod_never = !passplan::travel_time_to_distance(traj, d_far).has_value();
      const bool ref_never = !oracles::ball_euler_time_to(v0, d_far, bp.slide_decel,
                                                          bp.roll_decel, bp.transition_ratio,
                                                          slide)
                                  .has_value();
      if (!prod_never || !ref_never) ++bad;
      ++never_checked;
    }
  }
  const bool ok = bad == 0;
  return {ok, strf("1000 draws vs dt=1e-4 integration: violations=%d, worst pos err=%.2e m "
                   "(tol 1e-3), worst time err=%.2e s (tol 1e-3), stop-short cases=%d",
                   bad, worst_pos, worst_time, never_checked)};
}

// --------------------------------------------------------------------------
// 3. Pass-power inversion: v1 = d/t + (1/2)*a*t exactly, the rolling-only
//    profile covers d within 1e-9 relative, kick speed is v1 scaled through
//    the slide ratio exactly, and clamping engages iff the raw value leaves
//    [power_min, power_max].

Result criterion_pass_power() {
  std::mt19937_64 rng(0xC3);
  std::uniform_real_distribution<double> ud(0.5, 8.0);
  std::uniform_real_distribution<double> ut(0.3, 3.0);
  const passplan::BallModelParams bp;
  const double eps = std::numeric_limits<double>::epsilon();
  int bad = 0;
  int n_clamped = 0;
  int n_unclamped = 0;
  for (int i = 0; i < 1000; ++i) {
    const double d = ud(rng);
    const double t = ut(rng);
    const auto pp = passplan::pass_power_for(d, t, bp);

    const double v1_want = d / t + 0.5 * bp.roll_decel * t;
    if (pp.v1 != v1_want) ++bad;

    const auto roll = passplan::BallTrajectory::free_roll({0.0, 0.0}, {pp.v1, 0.0}, bp);
    if (roll.stop_time >= t) {
      if (std::fabs(roll.distance_at(t) - d) > 1e-9 * d) ++bad;
    } else if (roll.stop_distance < d * (1.0 - 1e-9)) {
      ++bad;  // the profile may stop early but must never stop short of d
    }
    const auto t_cover = roll.travel_time_to_distance(d);
    if (!t_cover.has_value() || *t_cover > t * (1.0 + 1e-9) + 1e-12) ++bad;

    const double raw = pp.v1 / bp.transition_ratio;
    if (raw >= bp.power_min && raw <= bp.power_max) {
      ++n_unclamped;
      if (pp.clamped || pp.kick_speed != raw) ++bad;
      if (std::fabs(pp.kick_speed - 1.4 * pp.v1) > 4.0 * eps * pp.kick_speed) ++bad;
    } else {
      ++n_clamped;
      const double want = std::min(std::max(raw, bp.power_min), bp.power_max);
      if (!pp.clamped || pp.kick_speed != want) ++bad;
    }
  }
  const bool ok = bad == 0 && n_clamped >= 50 && n_unclamped >= 50;
  return {ok, strf("1000 draws d in [0.5,8] m, t in [0.3,3] s: violations=%d, clamped=%d, "
                   "unclamped=%d (each >= 50)",
                   bad, n_clamped, n_unclamped)};
}

// --------------------------------------------------------------------------
// 4. Default grid sizing: 128 x 64 cells per kick type, and exactly
//    cells x robots interception-scan calls on the 32-robot benchmark.

Result criterion_grid_sizing() {
  const auto w = passplan::load_world_snapshot(data_path("bench_16v16.json"));
  const passplan::PlannerConfig cfg;
  const int kicker = nearest_our_id(w);
  const auto robots = w.ours.size() + w.theirs.size();
  auto calls_for = [&](bool flat, bool chip) {
    passplan::SearchGrid g;
    g.flat = flat;
    g.chip = chip;
    const auto grid = passplan::run_dpps_serial(w, kicker, g, cfg);
    const bool dims_ok = grid.grid.n_directions == 128 && grid.grid.n_powers == 64 &&
                         grid.cells.size() == std::size_t(128 * 64 * g.kick_type_count());
    return std::pair<std::uint64_t, bool>{grid.telemetry.sbip_calls, dims_ok};
  };
  const auto [flat_calls, flat_ok] = calls_for(true, false);
  const auto [chip_calls, chip_ok] = calls_for(false, true);
  const auto [both_calls, both_ok] = calls_for(true, true);
  const bool ok = robots == 32 && flat_ok && chip_ok && both_ok && flat_calls == 262144ULL &&
                  chip_calls == 262144ULL && both_calls == 524288ULL;
  return {ok, strf("32-robot world, 128x64 grid: scan calls flat=%llu chip=%llu both=%llu "
                   "(want 262144 / 262144 / 524288)",
                   static_cast<unsigned long long>(flat_calls),
                   static_cast<unsigned long long>(chip_calls),
                   static_cast<unsigned long long>(both_calls))};
}

// --------------------------------------------------------------------------
// 5. Latency gate: single-kick-type search over the 16v16 benchmark on
//    8 workers, median of 15 reps at or under 100 ms. The ~13 ms figure a
//    real-time controller would want is reported as a reference, not gated.

Result criterion_latency() {
  const auto w = passplan::load_world_snapshot(data_path("bench_16v16.json"));
  const passplan::PlannerConfig cfg;
  passplan::SearchGrid grid;
  grid.chip = false;
  const int kicker = nearest_our_id(w);
  std::string kernel;
  (void)passplan::run_dpps(w, kicker, grid, cfg, 8);  // warm-up
  std::vector<double> ms;
  for (int rep = 0; rep < 15; ++rep) {
    const auto t0 = Clock::now();
    const auto g = passplan::run_dpps(w, kicker, grid, cfg, 8);
    ms.push_back(1000.0 * seconds_since(t0));
    kernel = g.telemetry.kernel;
  }
  const double med = median(ms);
  const bool ok = med <= 100.0;
  return {ok, strf("16v16, one kick type, 8 workers, kernel=%s: median %.1f ms over 15 reps "
                   "(gate 100 ms; 13 ms real-time budget is a reference, not gated)",
                   kernel.c_str(), med)};
}

// --------------------------------------------------------------------------
// 6. Possession metric: swapping the teams must swap the report exactly, and
//    the decided side must agree with a dt = 1e-4 naive interception scan
//    whenever the reference gap is clearly outside the contested band.

Result criterion_possession() {
  std::mt19937_64 rng(0xC6);
  std::uniform_int_distribution<int> team_size(2, 16);
  const passplan::PlannerConfig cfg;
  // The production metric samples at possession_dt, the reference at 1e-4;
  // the slack covers both quantizations on both teams.
  const double slack = 2.5e-3;
  const double decisive_gap = cfg.thresholds.contest_epsilon + slack;
  const int worlds = 500;
  int swap_bad = 0;
  int never_bad = 0;
  int decisive = 0;
  int side_bad = 0;
  for (int i = 0; i < worlds; ++i) {
    const auto w = oracles::random_world(rng, team_size(rng), team_size(rng), 4.0);
    const auto rep = passplan::possession(w, cfg);

    auto sw = w;
    std::swap(sw.ours, sw.theirs);
    const auto rsw = passplan::possession(sw, cfg);
    const bool times_swapped = rsw.our_time == rep.their_time && rsw.their_time == rep.our_time;
    const bool side_swapped =
        (rep.side == passplan::PossessionSide::contested
             ? rsw.side == passplan::PossessionSide::contested
             : (rep.side == passplan::PossessionSide::ours
                    ? rsw.side == passplan::PossessionSide::theirs
                    : rsw.side == passplan::PossessionSide::ours));
    if (!times_swapped || !side_swapped) ++swap_bad;

    const auto traj = passplan::BallTrajectory::free_roll(w.ball.position, w.ball.velocity,
                                                          cfg.ball);
    auto team_best = [&](const std::vector<passplan::RobotState>& robots,
                         const passplan::MotionLimits& lim) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& r : robots) {
        const auto ni = oracles::naive_intercept(traj, w.field, 1e-4, [&](Vec2 p) {
          return passplan::detail::arrival_to_point(p.x, p.y, r.position.x, r.position.y,
                                                    r.velocity.x, r.velocity.y, lim.max_accel,
                                                    lim.max_decel, lim.max_speed,
                                                    cfg.thresholds.robot_radius);
        });
        if (!ni.never) best = std::min(best, ni.time);
      }
      return best;
    };
    const double our_ref = team_best(w.ours, cfg.motion_ours);
    const double their_ref = team_best(w.theirs, cfg.motion_theirs);
    const bool our_never = !std::isfinite(our_ref);
    const bool their_never = !std::isfinite(their_ref);
    if (our_never == rep.our_time.has_value() || their_never == rep.their_time.has_value()) {
      ++never_bad;  // "can never touch it" must not depend on the sampling step
      continue;
    }
    if (!our_never && !their_never) {
      const double gap = our_ref - their_ref;
      if (std::fabs(gap) > decisive_gap) {
        ++decisive;
        const auto want = gap < 0.0 ? passplan::PossessionSide::ours
                                    : passplan::PossessionSide::theirs;
        if (rep.side != want) ++side_bad;
      }
    } else if (our_never != their_never) {
      ++decisive;
      const auto want = our_never ? passplan::PossessionSide::theirs
                                  : passplan::PossessionSide::ours;
      if (rep.side != want) ++side_bad;
    }
  }
  const bool ok = swap_bad == 0 && never_bad == 0 && side_bad == 0 && decisive >= 300;
  return {ok, strf("%d worlds: swap violations=%d, never-flag disagreements=%d, decisive=%d "
                   "(>= 300), side mismatches=%d (gap > %.1e s)",
                   worlds, swap_bad, never_bad, decisive, side_bad, decisive_gap)};
}

// --------------------------------------------------------------------------
// 7. Geometry: shot angle vs a 4000-ray sweep (<= 1e-2 rad); guard points on
//    the defense-area boundary and on the segment to the post (<= 1e-9 m);
//    drag judge antisymmetry and collinear-zero, exact, on one million
//    lattice triples.

bool guard_point_ok(const passplan::FieldGeometry& f, Vec2 p, Vec2 post, Vec2 g) {
  const Vec2 u{post.x - p.x, post.y - p.y};
  const double ulen2 = u.x * u.x + u.y * u.y;
  if (ulen2 < 1e-18) return passplan::distance(g, p) <= 1e-9;
  const Vec2 v{g.x - p.x, g.y - p.y};
  const double line_dist = std::fabs(u.x * v.y - u.y * v.x) / std::sqrt(ulen2);
  if (line_dist > 1e-9) return false;
  const double s = (v.x * u.x + v.y * u.y) / ulen2;
  if (s < -1e-12 || s > 1.0 + 1e-12) return false;
  const double x0 = 0.5 * f.length - f.defense_depth;
  const double x1 = 0.5 * f.length;
  const double y0 = -0.5 * f.defense_width;
  const double y1 = 0.5 * f.defense_width;
  double boundary;
  if (g.x >= x0 && g.x <= x1 && g.y >= y0 && g.y <= y1) {
    boundary = std::min(std::min(g.x - x0, x1 - g.x), std::min(g.y - y0, y1 - g.y));
  } else {
    const double dx = std::max(std::max(x0 - g.x, 0.0), g.x - x1);
    const double dy = std::max(std::max(y0 - g.y, 0.0), g.y - y1);
    boundary = std::hypot(dx, dy);
  }
  return boundary <= 1e-9;
}

Result criterion_geometry() {
  std::mt19937_64 rng(0xC7);
  const passplan::PlannerConfig cfg;

  int angle_bad = 0;
  double worst_angle = 0.0;
  {
    std::uniform_real_distribution<double> ux(-5.9, 5.4);
    std::uniform_real_distribution<double> uy(-4.4, 4.4);
    for (int i = 0; i < 100; ++i) {
      const auto w = oracles::random_world(rng, 2, 8);
      const Vec2 p{ux(rng), uy(rng)};
      const double prod = passplan::shoot_angle(p, w, cfg.thresholds.robot_radius);
      const double ref = oracles::sweep_shoot_angle(p, w, cfg.thresholds.robot_radius);
      const double err = std::fabs(prod - ref);
      worst_angle = std::max(worst_angle, err);
      if (err > 1e-2) ++angle_bad;
    }
  }

  int guard_bad = 0;
  {
    const passplan::FieldGeometry field;
    std::uniform_real_distribution<double> ux(0.0, 0.5 * field.length);
    std::uniform_real_distribution<double> uy(-0.5 * field.width, 0.5 * field.width);
    int tested = 0;
    while (tested < 1000) {
      const Vec2 p{ux(rng), uy(rng)};
      if (field.strictly_in_their_defense_area(p)) continue;
      ++tested;
      const auto [gp, gq] = passplan::guard_points(field, p);
      if (!guard_point_ok(field, p, field.their_left_post(), gp)) ++guard_bad;
      if (!guard_point_ok(field, p, field.their_right_post(), gq)) ++guard_bad;
    }
  }

  int judge_bad = 0;
  long antisym = 0;
  long collinear = 0;
  {
    const double q = 1.0 / 16.0;
    std::uniform_int_distribution<int> ix(-96, 96);
    std::uniform_int_distribution<int> iy(-72, 72);
    const double scales[3] = {0.5, 1.0, 2.0};
    for (int i = 0; i < 1000000; ++i) {
      passplan::RobotState me;
      me.id = 1;
      me.position = {ix(rng) * q, iy(rng) * q};
      if (i % 10 == 9) {
        Vec2 dir{ix(rng) * q, iy(rng) * q};
        if (dir.x == 0.0 && dir.y == 0.0) dir = {q, 0.0};
        const double t1 = scales[i % 3];
        const double t2 = scales[(i / 3) % 3];
        const Vec2 ball{me.position.x + dir.x * t1, me.position.y + dir.y * t1};
        passplan::RobotState def;
        def.id = 2;
        def.position = {me.position.x + dir.x * t2, me.position.y + dir.y * t2};
        if (passplan::distance(ball, me.position) <= 1e-9) continue;
        if (passplan::drag_decision(me, def, ball, 0.5, 1.0).judge != 0.0) ++judge_bad;
        ++collinear;
      } else {
        const Vec2 b{ix(rng) * q, iy(rng) * q};
        const Vec2 dpos{ix(rng) * q, iy(rng) * q};
        if (passplan::distance(b, me.position) <= 1e-9 ||
            passplan::distance(dpos, me.position) <= 1e-9)
          continue;
        passplan::RobotState def_at_d;
        def_at_d.id = 2;
        def_at_d.position = dpos;
        passplan::RobotState def_at_b;
        def_at_b.id = 2;
        def_at_b.position = b;
        const double j1 = passplan::drag_decision(me, def_at_d, b, 0.5, 1.0).judge;
        const double j2 = passplan::drag_decision(me, def_at_b, dpos, 0.5, 1.0).judge;
        if (j1 != -j2) ++judge_bad;
        ++antisym;
      }
    }
  }

  const bool ok = angle_bad == 0 && guard_bad == 0 && judge_bad == 0;
  return {ok, strf("shot angle: 100 scenes worst err=%.2e rad (tol 1e-2), bad=%d; guard "
                   "points: 1000 points, residual>1e-9: %d; drag judge: %ld antisymmetric + "
                   "%ld collinear triples, exact violations=%d",
                   worst_angle, angle_bad, guard_bad, antisym, collinear, judge_bad)};
}

// --------------------------------------------------------------------------
// 8. Mirror symmetry: reflecting the world across the x axis must mirror
//    possession, running points, the whole candidate grid (direction index
//    k -> (n-k) mod n), and the best pass, exactly; best-pass ties may land
//    on a different cell with the bitwise-same score.

passplan::ZoneLabel mirror_zone(passplan::ZoneLabel z) {
  using Z = passplan::ZoneLabel;
  switch (z) {
    case Z::I: return Z::II;
    case Z::II: return Z::I;
    case Z::III: return Z::IV;
    case Z::IV: return Z::III;
  }
  return z;
}

Result criterion_symmetry() {
  std::mt19937_64 rng(0xC8);
  std::uniform_int_distribution<int> team_size(3, 6);
  const passplan::PlannerConfig cfg;
  const passplan::SearchGrid grid;
  const int worlds = 100;
  int poss_bad = 0;
  int run_bad = 0;
  int grid_bad = 0;
  int pass_bad = 0;
  for (int i = 0; i < worlds; ++i) {
    const auto w = oracles::lattice_world(rng, team_size(rng), team_size(rng), true);
    const auto m = passplan::mirror_world(w);

    const auto pw = passplan::possession(w, cfg);
    const auto pm = passplan::possession(m, cfg);
    if (pw.side != pm.side || pw.our_time != pm.our_time || pw.their_time != pm.their_time)
      ++poss_bad;

    const auto rw = passplan::best_running_points(w, {}, cfg);
    const auto rm = passplan::best_running_points(m, {}, cfg);
    if (rw.size() != rm.size()) {
      ++run_bad;
    } else {
      for (const auto& a : rw) {
        const auto want = mirror_zone(a.zone);
        const auto it = std::find_if(rm.begin(), rm.end(),
                                     [&](const passplan::RunningPoint& b) {
                                       return b.zone == want;
                                     });
        if (it == rm.end() || it->point.x != a.point.x || it->point.y != -a.point.y ||
            it->score != a.score) {
          ++run_bad;
          break;
        }
      }
    }

    const auto g = passplan::run_dpps_serial(w, w.ours.front().id, grid, cfg);
    const auto gm = passplan::run_dpps_serial(m, m.ours.front().id, grid, cfg);
    const int n = grid.n_directions;
    bool cells_ok = g.kick_types == gm.kick_types;
    for (std::size_t s = 0; cells_ok && s < g.kick_types.size(); ++s) {
      for (int k = 0; cells_ok && k < n; ++k) {
        for (int j = 0; j < grid.n_powers; ++j) {
          const auto& a = g.at(static_cast<int>(s), k, j);
          const auto& b = gm.at(static_cast<int>(s), (n - k) % n, j);
          if (a.feasible != b.feasible || a.our_id != b.our_id || a.opp_id != b.opp_id ||
              a.our_time != b.our_time || a.opp_time != b.opp_time ||
              (std::isfinite(a.our_time) && (a.receive_point.x != b.receive_point.x ||
                                             a.receive_point.y != -b.receive_point.y))) {
            cells_ok = false;
            break;
          }
        }
      }
    }
    if (!cells_ok) ++grid_bad;

    const auto bw = passplan::best_pass(g, w, cfg);
    const auto bm = passplan::best_pass(gm, m, cfg);
    if (bw.has_value() != bm.has_value()) {
      ++pass_bad;
    } else if (bw.has_value()) {
      bool ok_pair = bw->score == bm->score;
      if (ok_pair) {
        // Map the mirrored winner back onto an original cell; it must tie
        // the original best (equality, not tolerance).
        const auto& c = bm->candidate;
        int slot = 0;
        for (std::size_t s = 0; s < g.kick_types.size(); ++s)
          if (g.kick_types[s] == c.kick_type) slot = static_cast<int>(s);
        const auto& orig = g.at(slot, (n - c.dir_index) % n, c.power_index);
        ok_pair = orig.feasible;
        if (ok_pair) {
          const auto scored = passplan::score_pass(orig, w, cfg);
          ok_pair = scored.first == bw->score &&
                    orig.receive_point.x == c.receive_point.x &&
                    orig.receive_point.y == -c.receive_point.y;
        }
      }
      if (!ok_pair) ++pass_bad;
    }
  }
  const bool ok = poss_bad == 0 && run_bad == 0 && grid_bad == 0 && pass_bad == 0;
  return {ok, strf("%d mirrored worlds: possession mismatches=%d, running-point "
                   "mismatches=%d, grid-cell mismatches=%d, best-pass mismatches=%d (all "
                   "exact)",
                   worlds, poss_bad, run_bad, grid_bad, pass_bad)};
}

// --------------------------------------------------------------------------
// 9. Zone rules on constructed scenarios: with fewer than four runners the
//    goal-side zones III/IV fill first, occupied zones are skipped, and the
//    zone holding the best pass point is never assigned a runner.

Result criterion_zone_rules() {
  using Z = passplan::ZoneLabel;
  const passplan::PlannerConfig cfg;
  passplan::WorldState w;
  w.ball.position = {1.0, 0.5};

  auto zones_of = [](const std::vector<passplan::RunningPoint>& v) {
    std::vector<Z> z;
    for (const auto& r : v) z.push_back(r.zone);
    return z;
  };
  int bad = 0;
  auto expect = [&](const std::vector<passplan::RunningPoint>& got, std::vector<Z> want) {
    if (zones_of(got) != want) ++bad;
  };

  expect(passplan::best_running_points(w, {}, cfg, 1), {Z::III});
  expect(passplan::best_running_points(w, {}, cfg, 2), {Z::III, Z::IV});
  expect(passplan::best_running_points(w, {}, cfg, 3), {Z::I, Z::III, Z::IV});
  expect(passplan::best_running_points(w, {}, cfg, 4), {Z::I, Z::II, Z::III, Z::IV});
  expect(passplan::best_running_points(w, {Z::III}, cfg, 4), {Z::I, Z::II, Z::IV});
  expect(passplan::best_running_points(w, {Z::III, Z::IV}, cfg, 2), {Z::I, Z::II});
  expect(passplan::best_running_points(w, {Z::I, Z::II, Z::III, Z::IV}, cfg, 4), {});

  const auto part = passplan::partition_zones(w.field, w.ball.position,
                                              cfg.thresholds.min_zone_width);
  int pass_zone_bad = 0;
  for (const Z z : {Z::I, Z::II, Z::III, Z::IV}) {
    const auto& zone = part.zone(z);
    const Vec2 center{0.5 * (zone.x0 + zone.x1), 0.5 * (zone.y0 + zone.y1)};
    const auto rs = passplan::best_running_points(w, {}, cfg, 4, center);
    if (rs.size() != 3) ++pass_zone_bad;
    for (const auto& r : rs)
      if (r.zone == z) ++pass_zone_bad;
  }
  {
    const auto& z3 = part.zone(Z::III);
    const Vec2 center{0.5 * (z3.x0 + z3.x1), 0.5 * (z3.y0 + z3.y1)};
    expect(passplan::best_running_points(w, {Z::I}, cfg, 4, center), {Z::II, Z::IV});
  }

  const bool ok = bad == 0 && pass_zone_bad == 0;
  return {ok, strf("constructed scenarios: fill-order/occupied-skip violations=%d, "
                   "pass-point zone exclusion violations=%d",
                   bad, pass_zone_bad)};
}

// --------------------------------------------------------------------------
// 10. Marked vs unmarked receiver: the flat feasible set collapses by at
//     least 10x when defenders blanket the receiver, while chip candidates
//     survive along the blocked corridor where the same flat cell fails.

Result criterion_receiver_scenarios() {
  const auto w_open = passplan::load_world_snapshot(data_path("unmarked_receiver.json"));
  const auto w_marked = passplan::load_world_snapshot(data_path("marked_receiver.json"));
  const passplan::PlannerConfig cfg;
  const passplan::SearchGrid grid;
  const int kicker = 1;
  const auto g_open = passplan::run_dpps_serial(w_open, kicker, grid, cfg);
  const auto g_marked = passplan::run_dpps_serial(w_marked, kicker, grid, cfg);

  auto slot_of = [](const passplan::CandidateGrid& g, passplan::KickType t) {
    for (std::size_t s = 0; s < g.kick_types.size(); ++s)
      if (g.kick_types[s] == t) return static_cast<int>(s);
    return -1;
  };
  auto flat_feasible = [&](const passplan::CandidateGrid& g) {
    const int slot = slot_of(g, passplan::KickType::flat);
    int count = 0;
    for (int k = 0; k < g.grid.n_directions; ++k)
      for (int j = 0; j < g.grid.n_powers; ++j)
        if (g.at(slot, k, j).feasible) ++count;
    return count;
  };
  const int open_flat = flat_feasible(g_open);
  const int marked_flat = flat_feasible(g_marked);

  // Chip-only candidates along the corridor toward the receiver (within
  // 0.1 rad of straight ahead) where the flat cell at the same direction
  // and power is infeasible.
  const int flat_slot = slot_of(g_marked, passplan::KickType::flat);
  const int chip_slot = slot_of(g_marked, passplan::KickType::chip);
  int corridor_chip_only = 0;
  for (int k = 0; k < g_marked.grid.n_directions; ++k) {
    if (std::fabs(passplan::direction_angle(k, g_marked.grid.n_directions)) > 0.1) continue;
    for (int j = 0; j < g_marked.grid.n_powers; ++j) {
      if (g_marked.at(chip_slot, k, j).feasible && !g_marked.at(flat_slot, k, j).feasible)
        ++corridor_chip_only;
    }
  }

  const bool ok = open_flat >= 10 * marked_flat && open_flat > 0 && corridor_chip_only >= 2;
  return {ok, strf("flat feasible: open=%d vs marked=%d (want >= 10x); chip-only corridor "
                   "cells within 0.1 rad of the receiver line: %d (want >= 2)",
                   open_flat, marked_flat, corridor_chip_only)};
}

struct Criterion {
  const char* name;
  Result (*fn)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"search determinism across worker counts", criterion_search_determinism},
      {"ball model vs forward integration", criterion_ball_model},
      {"pass power inversion", criterion_pass_power},
      {"grid sizing and scan-call telemetry", criterion_grid_sizing},
      {"benchmark latency (16v16, one kick type)", criterion_latency},
      {"possession swap + fine-step oracle", criterion_possession},
      {"shot angle, guard points, drag judge", criterion_geometry},
      {"y-mirror symmetry suite", criterion_symmetry},
      {"zone assignment rules", criterion_zone_rules},
      {"marked vs unmarked receiver scenarios", criterion_receiver_scenarios},
  };
  const auto t0 = Clock::now();
  int failures = 0;
  for (const auto& c : criteria) {
    Result r;
    try {
      r = c.fn();
    } catch (const std::exception& e) {
      r = {false, std::string("unexpected exception: ") + e.what()};
    }
    std::printf("%s  %-42s  %s\n", r.first ? "PASS" : "FAIL", c.name, r.second.c_str());
    std::fflush(stdout);
    if (!r.first) ++failures;
  }
  const double elapsed = seconds_since(t0);
  if (failures == 0)
    std::printf("all %zu criteria passed in %.1fs\n", std::size(criteria), elapsed);
  else
    std::printf("%d of %zu criteria FAILED (%.1fs)\n", failures, std::size(criteria), elapsed);
  return failures == 0 ? 0 : 1;
}
