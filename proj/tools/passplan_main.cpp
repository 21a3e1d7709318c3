#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "passplan/config.hpp"
#include "passplan/csv.hpp"
#include "passplan/dpps.hpp"
#include "passplan/errors.hpp"
#include "passplan/intercept.hpp"
#include "passplan/offball.hpp"
#include "passplan/pass_eval.hpp"
#include "passplan/snapshot.hpp"
#include "passplan/svg.hpp"

namespace {

using namespace passplan;

struct CommonOpts {
  std::string snapshot;
  std::string config;
  std::string out;
  std::string svg;
  int workers = 0;  ///< 0 = hardware concurrency
};

void add_common(CLI::App* cmd, CommonOpts* o, bool needs_snapshot = true) {
  auto* snap = cmd->add_option("--snapshot", o->snapshot, "world snapshot JSON");
  if (needs_snapshot) snap->required();
  cmd->add_option("--config", o->config, "planner config JSON (defaults when omitted)");
  cmd->add_option("--out", o->out, "CSV output path");
  cmd->add_option("--svg", o->svg, "SVG output path");
  cmd->add_option("--workers", o->workers, "DPPS worker threads (0 = hardware)");
}

PlannerConfig load_config(const CommonOpts& o) {
  if (o.config.empty()) {
    PlannerConfig cfg;
    cfg.validate();
    return cfg;
  }
  return PlannerConfig::load(o.config);
}

int effective_workers(const CommonOpts& o) {
  if (o.workers > 0) return o.workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Our robot nearest the ball; used when --kicker is omitted.
int default_kicker(const WorldState& w) {
  if (w.ours.empty()) throw validation_error("snapshot has no robots on team ours");
  const RobotState* best = &w.ours.front();
  for (const RobotState& r : w.ours) {
    if (distance(r.position, w.ball.position) < distance(best->position, w.ball.position)) {
      best = &r;
    }
  }
  return best->id;
}

const char* kick_name(KickType k) { return k == KickType::flat ? "flat" : "chip"; }

void print_candidate(const char* tag, const ScoredPass& s) {
  const PassCandidate& c = s.candidate;
  char opp[64] = "never";
  if (!std::isinf(c.opp_time)) {
    std::snprintf(opp, sizeof opp, "#%d@%.3fs", c.opp_id, c.opp_time);
  }
  std::printf("%s: %s dir=%d power=%d receive=(%.3f, %.3f) our=#%d@%.3fs opp=%s score=%.6f\n",
              tag, kick_name(c.kick_type), c.dir_index, c.power_index, c.receive_point.x,
              c.receive_point.y, c.our_id, c.our_time, opp, s.score);
}

int cmd_plan(const CommonOpts& o, int kicker_opt, bool with_freekick) {
  const WorldState world = load_world_snapshot(o.snapshot);
  const PlannerConfig cfg = load_config(o);
  const int kicker = kicker_opt >= 0 ? kicker_opt : default_kicker(world);

  const CandidateGrid grid = run_dpps(world, kicker, cfg.grid, cfg, effective_workers(o));
  std::printf("kernel=%s workers=%d sbip_calls=%llu wall_ms=%.3f\n", grid.telemetry.kernel.c_str(),
              grid.telemetry.workers,
              static_cast<unsigned long long>(grid.telemetry.sbip_calls), grid.telemetry.wall_ms);
  if (!grid.telemetry.kicker_in_possession) {
    std::printf("warning: kicker %d is not in possession of the ball\n", kicker);
  }

  size_t flat_n = 0, chip_n = 0;
  for (const PassCandidate& c : grid.cells) {
    if (!c.feasible) continue;
    (c.kick_type == KickType::flat ? flat_n : chip_n)++;
  }
  std::printf("feasible: flat=%zu chip=%zu\n", flat_n, chip_n);

  const auto best = best_pass(grid, world, cfg);
  const auto best_flat = best_pass(grid, world, cfg, KickType::flat);
  const auto best_chip = best_pass(grid, world, cfg, KickType::chip);
  if (best) {
    print_candidate("best_pass", *best);
  } else {
    std::printf("NO_FEASIBLE_PASS\n");
  }

  const RobotState* shooter = world.find(Team::ours, kicker);
  if (shooter == nullptr) throw validation_error("kicker id not on team ours");
  const ShotDecision shot = decide_shot(*shooter, world, cfg);
  const char* reason = shot.reason == ShotReason::clear             ? "clear"
                       : shot.reason == ShotReason::angle_too_small ? "angle_too_small"
                                                                    : "interceptable";
  std::printf("shot: %s angle=%.4f target=(%.3f, %.3f) reason=%s\n",
              shot.shoot ? "shoot" : "hold", shot.shot_angle, shot.shot_target.x,
              shot.shot_target.y, reason);

  const std::optional<Vec2> best_point =
      best ? std::optional<Vec2>(best->candidate.receive_point) : std::nullopt;
  for (const RunningPoint& rp : best_running_points(world, {}, cfg, 4, best_point)) {
    std::printf("run zone %s: (%.3f, %.3f) score=%.6f guard=%.3fs\n", zone_name(rp.zone),
                rp.point.x, rp.point.y, rp.score, rp.features.guard_time);
  }

  if (with_freekick && best) {
    const FreeKickPlan fk = plan_free_kick(world, kicker, best->candidate, cfg);
    std::printf("freekick: t_ball=%.4f t_robot=%.4f order=%s delay=%.4f\n", fk.t_ball, fk.t_robot,
                fk.order == KickOrder::kick_first ? "kick_first" : "robot_first", fk.kick_delay);
  }

  if (!o.out.empty()) write_text_file(o.out, grid_to_csv(grid));
  if (!o.svg.empty()) {
    const auto flat_c = best_flat ? std::optional<PassCandidate>(best_flat->candidate)
                                  : std::nullopt;
    const auto chip_c = best_chip ? std::optional<PassCandidate>(best_chip->candidate)
                                  : std::nullopt;
    write_text_file(o.svg, render_plan_svg(world, grid, flat_c, chip_c, cfg.svg));
  }
  return 0;
}

int cmd_heatmap(const CommonOpts& o, const std::string& mode, const std::string& zone_arg,
                int kicker_opt) {
  const WorldState world = load_world_snapshot(o.snapshot);
  const PlannerConfig cfg = load_config(o);

  if (mode == "pass") {
    const int kicker = kicker_opt >= 0 ? kicker_opt : default_kicker(world);
    const CandidateGrid grid = run_dpps(world, kicker, cfg.grid, cfg, effective_workers(o));
    std::vector<HeatPoint> pts;
    for (const PassCandidate& c : grid.cells) {
      if (!c.feasible) continue;
      pts.push_back({c.receive_point, score_pass(c, world, cfg).first});
    }
    const std::string csv = heatmap_to_csv(pts);
    if (!o.out.empty()) {
      write_text_file(o.out, csv);
    } else {
      std::fputs(csv.c_str(), stdout);
    }
    if (!o.svg.empty()) write_text_file(o.svg, render_heatmap_svg(world, pts, 0.08, cfg.svg));
    return 0;
  }
  if (mode != "run") throw config_error("heatmap mode must be 'pass' or 'run'");

  const ZonePartition part =
      partition_zones(world.field, world.ball.position, cfg.thresholds.min_zone_width);
  std::vector<ZoneLabel> wanted;
  if (zone_arg.empty() || zone_arg == "all") {
    wanted = {ZoneLabel::I, ZoneLabel::II, ZoneLabel::III, ZoneLabel::IV};
  } else if (zone_arg == "I") {
    wanted = {ZoneLabel::I};
  } else if (zone_arg == "II") {
    wanted = {ZoneLabel::II};
  } else if (zone_arg == "III") {
    wanted = {ZoneLabel::III};
  } else if (zone_arg == "IV") {
    wanted = {ZoneLabel::IV};
  } else {
    throw config_error("zone must be one of I, II, III, IV, all");
  }

  std::vector<RunHeatRow> rows;
  for (ZoneLabel z : wanted) {
    for (Vec2 v : zone_lattice(part.zone(z), cfg.thresholds.grid_step)) {
      try {
        const auto [score, ft] = score_running_point(v, world, cfg);
        rows.push_back({v, ft, score});
      } catch (const Error&) {
        // vertices inside the defense area are not scorable; skip them
      }
    }
  }
  const std::string csv = run_heatmap_to_csv(rows);
  if (!o.out.empty()) {
    write_text_file(o.out, csv);
  } else {
    std::fputs(csv.c_str(), stdout);
  }
  if (!o.svg.empty()) {
    std::vector<HeatPoint> pts;
    pts.reserve(rows.size());
    for (const RunHeatRow& r : rows) pts.push_back({r.point, r.score});
    write_text_file(o.svg, render_heatmap_svg(world, pts, cfg.thresholds.grid_step, cfg.svg));
  }
  return 0;
}

int cmd_bench(const CommonOpts& o, std::vector<int> worker_counts, int reps, int kicker_opt) {
  const WorldState world = load_world_snapshot(o.snapshot);
  const PlannerConfig cfg = load_config(o);
  const int kicker = kicker_opt >= 0 ? kicker_opt : default_kicker(world);
  if (reps < 1) throw config_error("--reps must be at least 1");
  if (worker_counts.empty()) worker_counts = {1, 2, 4, 8};

  const auto median_min = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return std::pair<double, double>{v[v.size() / 2], v.front()};
  };

  CandidateGrid oracle = run_dpps_serial(world, kicker, cfg.grid, cfg);
  std::vector<double> serial_ms;
  for (int r = 0; r < reps; ++r) {
    CandidateGrid g = run_dpps_serial(world, kicker, cfg.grid, cfg);
    if (!grids_identical(oracle, g)) throw internal_error("bench: serial run not reproducible");
    serial_ms.push_back(g.telemetry.wall_ms);
  }
  const auto [ser_med, ser_min] = median_min(serial_ms);
  std::printf("kernel=%s cells=%zu sbip_calls=%llu\n", oracle.telemetry.kernel.c_str(),
              oracle.cells.size(), static_cast<unsigned long long>(oracle.telemetry.sbip_calls));
  std::printf("serial: median=%.3fms min=%.3fms\n", ser_med, ser_min);

  for (int w : worker_counts) {
    if (w < 1) throw config_error("worker counts must be positive");
    std::vector<double> ms;
    for (int r = 0; r < reps; ++r) {
      CandidateGrid g = run_dpps(world, kicker, cfg.grid, cfg, w);
      if (!grids_identical(oracle, g)) {
        throw internal_error("bench: grid mismatch against serial oracle at workers=" +
                             std::to_string(w));
      }
      ms.push_back(g.telemetry.wall_ms);
    }
    const auto [med, mn] = median_min(ms);
    std::printf("workers=%d: median=%.3fms min=%.3fms speedup=%.2fx\n", w, med, mn,
                med > 0.0 ? ser_med / med : 0.0);
  }
  return 0;
}

int cmd_possession(const CommonOpts& o) {
  const WorldState world = load_world_snapshot(o.snapshot);
  const PlannerConfig cfg = load_config(o);
  const PossessionReport rep = possession(world, cfg);
  const char* side = rep.side == PossessionSide::ours     ? "ours"
                     : rep.side == PossessionSide::theirs ? "theirs"
                                                          : "contested";
  const auto fmt = [](const std::optional<double>& t) {
    return t ? std::to_string(*t) + "s" : std::string("never");
  };
  std::printf("possession: %s our_time=%s their_time=%s\n", side, fmt(rep.our_time).c_str(),
              fmt(rep.their_time).c_str());
  return 0;
}

int cmd_freekick(const CommonOpts& o, int kicker_opt) {
  const WorldState world = load_world_snapshot(o.snapshot);
  const PlannerConfig cfg = load_config(o);
  const int kicker = kicker_opt >= 0 ? kicker_opt : default_kicker(world);
  const CandidateGrid grid = run_dpps(world, kicker, cfg.grid, cfg, effective_workers(o));
  const auto best = best_pass(grid, world, cfg);
  if (!best) {
    std::printf("NO_FEASIBLE_PASS\n");
    return 0;
  }
  print_candidate("best_pass", *best);
  const FreeKickPlan fk = plan_free_kick(world, kicker, best->candidate, cfg);
  std::printf("freekick: t_ball=%.4f t_robot=%.4f order=%s delay=%.4f\n", fk.t_ball, fk.t_robot,
              fk.order == KickOrder::kick_first ? "kick_first" : "robot_first", fk.kick_delay);
  return 0;
}

int cmd_drag_eval(const CommonOpts& o, int me_id, int defender_id) {
  const WorldState world = load_world_snapshot(o.snapshot);
  const PlannerConfig cfg = load_config(o);
  const RobotState* me = world.find(Team::ours, me_id);
  if (me == nullptr) throw validation_error("--me id not on team ours");
  const RobotState* def = world.find(Team::theirs, defender_id);
  if (def == nullptr) throw validation_error("--defender id not on team theirs");
  const DragDecision d =
      drag_decision(*me, *def, world.ball.position, def->velocity.norm(),
                    cfg.thresholds.drag_v_min, cfg.thresholds.marking_radius);
  std::printf("drag: judge=%.6f marked=%s reversed=%s accel=(%.6f, %.6f)\n", d.judge,
              d.marked ? "yes" : "no", d.reversed ? "yes" : "no", d.accel_direction.x,
              d.accel_direction.y);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"passplan: deterministic pass/shoot planning for SSL-style robot soccer"};
  app.require_subcommand(0, 1);
  bool print_config = false;
  app.add_flag("--print-config", print_config, "print the full default planner config and exit");

  CommonOpts plan_o, heat_o, bench_o, poss_o, fk_o, drag_o;
  int plan_kicker = -1, heat_kicker = -1, bench_kicker = -1, fk_kicker = -1;
  bool plan_freekick = false;
  std::string heat_mode, heat_zone;
  std::vector<int> bench_workers;
  int bench_reps = 5;
  int drag_me = -1, drag_defender = -1;

  CLI::App* plan = app.add_subcommand("plan", "full planning query for one kicker");
  add_common(plan, &plan_o);
  plan->add_option("--kicker", plan_kicker, "kicker robot id (default: nearest to ball)");
  plan->add_flag("--freekick", plan_freekick, "also time the free kick for the best pass");

  CLI::App* heat = app.add_subcommand("heatmap", "pass or running-point score maps");
  add_common(heat, &heat_o);
  heat->add_option("--mode", heat_mode, "pass | run")->required();
  heat->add_option("--zone", heat_zone, "I | II | III | IV | all (run mode)");
  heat->add_option("--kicker", heat_kicker, "kicker robot id (pass mode)");

  CLI::App* bench = app.add_subcommand("bench", "DPPS timing against the serial oracle");
  add_common(bench, &bench_o);
  bench->add_option("--workers-list", bench_workers, "worker counts to time (default 1 2 4 8)");
  bench->add_option("--reps", bench_reps, "repetitions per configuration");
  bench->add_option("--kicker", bench_kicker, "kicker robot id (default: nearest to ball)");

  CLI::App* poss = app.add_subcommand("possession", "which side controls the rolling ball");
  add_common(poss, &poss_o);

  CLI::App* freekick = app.add_subcommand("freekick", "time the best pass as a free kick");
  add_common(freekick, &fk_o);
  freekick->add_option("--kicker", fk_kicker, "kicker robot id (default: nearest to ball)");

  CLI::App* drag = app.add_subcommand("drag-eval", "drag-skill decision for a marked robot");
  add_common(drag, &drag_o);
  drag->add_option("--me", drag_me, "our robot id")->required();
  drag->add_option("--defender", drag_defender, "their robot id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (print_config) {
      PlannerConfig cfg;
      std::fputs(cfg.to_json_text().c_str(), stdout);
      std::fputc('\n', stdout);
      return 0;
    }
    if (plan->parsed()) return cmd_plan(plan_o, plan_kicker, plan_freekick);
    if (heat->parsed()) return cmd_heatmap(heat_o, heat_mode, heat_zone, heat_kicker);
    if (bench->parsed()) return cmd_bench(bench_o, bench_workers, bench_reps, bench_kicker);
    if (poss->parsed()) return cmd_possession(poss_o);
    if (freekick->parsed()) return cmd_freekick(fk_o, fk_kicker);
    if (drag->parsed()) return cmd_drag_eval(drag_o, drag_me, drag_defender);
    std::fputs(app.help().c_str(), stderr);
    return 1;
  } catch (const Error& e) {
    std::fprintf(stderr, "error (%s): %s\n", category_name(e.category()), e.what());
    return exit_code_for(e.category());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error (internal): %s\n", e.what());
    return exit_code_for(ErrorCategory::internal);
  }
}
