#include "passplan/dpps.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "passplan/config.hpp"
#include "passplan/errors.hpp"
#include "passplan/intercept.hpp"

namespace passplan {

std::vector<KickType> SearchGrid::kick_types() const {
  std::vector<KickType> out;
  if (flat) out.push_back(KickType::flat);
  if (chip) out.push_back(KickType::chip);
  return out;
}

void SearchGrid::validate() const {
  if (n_directions < 1) throw config_error("grid.n_directions must be >= 1");
  if (n_powers < 1) throw config_error("grid.n_powers must be >= 1");
  if (!(power_min > 0.0) || !(power_min <= power_max)) {
    throw config_error("grid requires 0 < power_min <= power_max");
  }
}

std::vector<Vec2> direction_table(int n_directions) {
  std::vector<Vec2> dirs(n_directions);
  // Build one half-circle and reflect it, so dirs[(n-k) % n].y is exactly
  // -dirs[k].y bit for bit. Index 0 (angle -pi) snaps to (-1, 0) because
  // sin(-pi) does not round to zero in floating point.
  for (int k = 0; k <= n_directions / 2; ++k) {
    const double theta = direction_angle(k, n_directions);
    double c = std::cos(theta);
    double s = std::sin(theta);
    if (k == 0) {
      c = -1.0;
      s = 0.0;
    }
    dirs[k] = {c, s};
    const int mirrored = (n_directions - k) % n_directions;
    if (mirrored != k) dirs[mirrored] = {c, -s};
  }
  return dirs;
}

std::vector<double> power_table(int n_powers, double power_min, double power_max) {
  std::vector<double> powers(n_powers);
  if (n_powers == 1) {
    powers[0] = power_min;
    return powers;
  }
  const double span = power_max - power_min;
  for (int j = 0; j < n_powers; ++j) {
    // (j * span) / (n - 1) keeps the endpoints exact.
    powers[j] = power_min + (j * span) / (n_powers - 1);
  }
  return powers;
}

std::vector<PassCandidate> feasible_candidates(const CandidateGrid& g) {
  std::vector<PassCandidate> out;
  for (const PassCandidate& c : g.cells) {
    if (c.feasible) out.push_back(c);
  }
  return out;
}

namespace {

struct TeamKin {
  std::vector<kernels::RobotKin> kins;
  std::vector<int> ids;
};

TeamKin sorted_team_kin(const std::vector<RobotState>& robots, const MotionLimits& limits,
                        double radius) {
  std::vector<const RobotState*> sorted;
  sorted.reserve(robots.size());
  for (const RobotState& r : robots) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const RobotState* a, const RobotState* b) { return a->id < b->id; });
  TeamKin team;
  for (const RobotState* r : sorted) {
    team.kins.push_back(detail_intercept::make_kin(*r, limits, radius));
    team.ids.push_back(r->id);
  }
  return team;
}

struct CellContext {
  const CandidateGrid* grid = nullptr;
  const PlannerConfig* cfg = nullptr;
  const TeamKin* ours = nullptr;  ///< kicker included; skipped when aggregating
  const TeamKin* theirs = nullptr;
  int kicker_slot = -1;
  const std::vector<TrajectorySamples>* samples = nullptr;      ///< per power
  const std::vector<std::optional<double>>* exit_dists = nullptr;  ///< per direction
  const kernels::KernelBackend* backend = nullptr;
};

/// Evaluates one grid cell; returns the number of per-robot SBIP scans.
int eval_cell(const CellContext& ctx, int flat_index, PassCandidate* out) {
  const CandidateGrid& g = *ctx.grid;
  const int n_dirs = g.grid.n_directions;
  const int n_pows = g.grid.n_powers;
  const int kt = flat_index / (n_dirs * n_pows);
  const int dir = (flat_index / n_pows) % n_dirs;
  const int pow_i = flat_index % n_pows;

  PassCandidate& c = *out;
  c.kick_type = g.kick_types[kt];
  c.dir_index = dir;
  c.power_index = pow_i;

  const Vec2 u = g.directions[dir];
  const double speed = g.powers[pow_i];
  const BallTrajectory traj =
      c.kick_type == KickType::flat
          ? BallTrajectory::flat_kick(g.ball_origin, u, speed, ctx.cfg->ball)
          : BallTrajectory::chip_kick(g.ball_origin, u, speed, ctx.cfg->ball);
  const TrajectorySamples& samples = (*ctx.samples)[pow_i];
  const auto window = detail_intercept::scan_window(traj, samples, (*ctx.exit_dists)[dir]);

  kernels::ScanBatch batch;
  batch.ts = samples.ts.data();
  batch.ss = samples.ss.data();
  batch.k_begin = window.k_begin;
  batch.k_end = window.k_end;
  batch.ox = traj.origin.x;
  batch.oy = traj.origin.y;
  batch.ux = traj.direction.x;
  batch.uy = traj.direction.y;

  const Vec2 rest = traj.origin + traj.direction * traj.stop_distance;
  int scans = 0;
  auto best_of = [&](const TeamKin& team, int skip_slot, int* best_id, double* best_time,
                     Vec2* best_point) {
    // Cap each scan at the best hit index so far, plus the tying sample.
    // Only samples strictly before the best hit can change the winner, and
    // keeping the tying sample in-window makes ties and the rest rule
    // resolve exactly as an uncapped scan would, so the grid stays
    // bit-identical while later robots scan ever-shorter windows.
    int best_k = window.k_end;
    auto scan_one = [&](std::size_t i) {
      const kernels::RobotKin& kin = team.kins[i];
      ++scans;
      batch.k_end = window.k_end < best_k + 1 ? window.k_end : best_k + 1;
      return detail_intercept::scan_robot(batch, kin, *ctx.backend);
    };
    // Visit likely-earliest interceptors first so the cap tightens on the
    // first scan. The champion update below is a strict (time, id)
    // lexicographic argmin, so the visiting order cannot change the result;
    // it only decides how much scanning the cap saves.
    std::vector<std::pair<double, int>> order;
    order.reserve(team.kins.size());
    for (std::size_t i = 0; i < team.kins.size(); ++i) {
      if (static_cast<int>(i) == skip_slot) continue;
      const kernels::RobotKin& kin = team.kins[i];
      double bound = 0.0;
      if (window.k_begin < window.k_end && kin.vbound > 0.0) {
        const double s_lo = samples.ss[window.k_begin];
        const double s_hi = samples.ss[window.k_end - 1];
        const Vec2 a{batch.ox + batch.ux * s_lo, batch.oy + batch.uy * s_lo};
        const Vec2 b{batch.ox + batch.ux * s_hi, batch.oy + batch.uy * s_hi};
        bound = (segment_distance({kin.px, kin.py}, a, b) - kin.radius) / kin.vbound;
      }
      order.emplace_back(bound, static_cast<int>(i));
    }
    std::sort(order.begin(), order.end());
    for (const auto& [bound, slot] : order) {
      const std::size_t i = static_cast<std::size_t>(slot);
      const kernels::RobotKin& kin = team.kins[i];
      double time = kNever;
      Vec2 point;
      const int k = scan_one(i);
      if (k >= 0) {
        time = samples.ts[k];
        point = traj.origin + traj.direction * samples.ss[k];
        if (k < best_k) best_k = k;
      } else if (window.rest_in_field) {
        const double arrival =
            detail::arrival_to_point(rest.x, rest.y, kin.px, kin.py, kin.vx, kin.vy, kin.accel,
                                     kin.decel, kin.vmax, kin.radius);
        time = arrival > traj.stop_time ? arrival : traj.stop_time;
        point = rest;
      }
      if (time < *best_time || (time == *best_time && team.ids[i] < *best_id)) {
        *best_time = time;
        *best_id = team.ids[i];
        *best_point = point;
      }
    }
    // The skipped robot's result is dropped either way; scanning it last
    // still issues its per-robot call but reuses the tightest cap.
    if (skip_slot >= 0 && skip_slot < static_cast<int>(team.kins.size())) {
      (void)scan_one(static_cast<std::size_t>(skip_slot));
    }
  };

  Vec2 our_point;
  best_of(*ctx.ours, ctx.kicker_slot, &c.our_id, &c.our_time, &our_point);
  Vec2 opp_point;
  best_of(*ctx.theirs, -1, &c.opp_id, &c.opp_time, &opp_point);

  if (c.our_time < kNever) {
    c.receive_point = our_point;
    c.feasible = std::isinf(c.opp_time) ||
                 c.our_time + ctx.cfg->thresholds.safety_margin <= c.opp_time;
  }
  return scans;
}

CandidateGrid run_impl(const WorldState& world, int kicker_id, const SearchGrid& grid,
                       const PlannerConfig& cfg, int workers, bool plain_loop) {
  grid.validate();
  cfg.validate();
  if (world.find(Team::ours, kicker_id) == nullptr) {
    throw validation_error("kicker id " + std::to_string(kicker_id) + " is not on team ours");
  }

  CandidateGrid g;
  g.grid = grid;
  g.kicker_id = kicker_id;
  g.ball_origin = world.ball.position;
  g.kick_types = grid.kick_types();
  g.directions = direction_table(grid.n_directions);
  g.powers = power_table(grid.n_powers, grid.power_min, grid.power_max);

  const kernels::KernelBackend& backend = kernels::active_kernel();
  g.telemetry.kernel = backend.name;
  g.telemetry.workers = plain_loop ? 1 : (workers < 1 ? 1 : workers);
  g.telemetry.kicker_in_possession =
      distance(world.ball.position, world.find(Team::ours, kicker_id)->position) <=
      cfg.thresholds.possession_radius;

  const int n_cells =
      static_cast<int>(g.kick_types.size()) * grid.n_directions * grid.n_powers;
  g.cells.assign(n_cells, PassCandidate{});
  if (n_cells == 0) return g;

  const TeamKin ours =
      sorted_team_kin(world.ours, cfg.motion_ours, cfg.thresholds.robot_radius);
  const TeamKin theirs =
      sorted_team_kin(world.theirs, cfg.motion_theirs, cfg.thresholds.robot_radius);
  int kicker_slot = -1;
  for (std::size_t i = 0; i < ours.ids.size(); ++i) {
    if (ours.ids[i] == kicker_id) kicker_slot = static_cast<int>(i);
  }

  std::vector<TrajectorySamples> samples;
  samples.reserve(grid.n_powers);
  for (double p : g.powers) {
    samples.push_back(TrajectorySamples::build(
        BallTrajectory::flat_kick(g.ball_origin, {1.0, 0.0}, p, cfg.ball), cfg.thresholds.sbip_dt));
  }
  std::vector<std::optional<double>> exit_dists;
  exit_dists.reserve(grid.n_directions);
  for (const Vec2& u : g.directions) {
    exit_dists.push_back(ray_exit_distance(world.field, g.ball_origin, u));
  }

  CellContext ctx;
  ctx.grid = &g;
  ctx.cfg = &cfg;
  ctx.ours = &ours;
  ctx.theirs = &theirs;
  ctx.kicker_slot = kicker_slot;
  ctx.samples = &samples;
  ctx.exit_dists = &exit_dists;
  ctx.backend = &backend;

  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t total_scans = 0;
  if (plain_loop || g.telemetry.workers == 1) {
    for (int i = 0; i < n_cells; ++i) total_scans += eval_cell(ctx, i, &g.cells[i]);
  } else {
    // Data-parallel map: workers claim fixed-size chunks of the cell index
    // space; every cell writes only its own slot, so the result is
    // bit-identical for any worker count or chunk schedule.
    constexpr int kChunk = 64;
    std::atomic<int> next_chunk{0};
    std::atomic<std::uint64_t> scan_count{0};
    const int n_chunks = (n_cells + kChunk - 1) / kChunk;
    auto work = [&]() {
      std::uint64_t local = 0;
      for (;;) {
        const int chunk = next_chunk.fetch_add(1, std::memory_order_relaxed);
        if (chunk >= n_chunks) break;
        const int lo = chunk * kChunk;
        const int hi = lo + kChunk < n_cells ? lo + kChunk : n_cells;
        for (int i = lo; i < hi; ++i) local += eval_cell(ctx, i, &g.cells[i]);
      }
      scan_count.fetch_add(local, std::memory_order_relaxed);
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < g.telemetry.workers; ++w) pool.emplace_back(work);
    work();
    for (std::thread& t : pool) t.join();
    total_scans = scan_count.load();
  }
  const auto t1 = std::chrono::steady_clock::now();
  g.telemetry.sbip_calls = total_scans;
  g.telemetry.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return g;
}

}  // namespace

CandidateGrid run_dpps(const WorldState& world, int kicker_id, const SearchGrid& grid,
                       const PlannerConfig& cfg, int workers) {
  return run_impl(world, kicker_id, grid, cfg, workers, false);
}

CandidateGrid run_dpps_serial(const WorldState& world, int kicker_id, const SearchGrid& grid,
                              const PlannerConfig& cfg) {
  return run_impl(world, kicker_id, grid, cfg, 1, true);
}

bool grids_identical(const CandidateGrid& a, const CandidateGrid& b) {
  if (a.cells.size() != b.cells.size()) return false;
  for (size_t i = 0; i < a.cells.size(); ++i) {
    const PassCandidate& x = a.cells[i];
    const PassCandidate& y = b.cells[i];
    if (x.kick_type != y.kick_type || x.dir_index != y.dir_index ||
        x.power_index != y.power_index || x.our_id != y.our_id || x.opp_id != y.opp_id ||
        x.feasible != y.feasible) {
      return false;
    }
    // kNever == kNever holds, so plain equality is the bitwise test here.
    if (x.our_time != y.our_time || x.opp_time != y.opp_time) return false;
    if (x.receive_point.x != y.receive_point.x || x.receive_point.y != y.receive_point.y) {
      return false;
    }
  }
  return true;
}

}  // namespace passplan
