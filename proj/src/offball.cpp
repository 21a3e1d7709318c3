#include "passplan/offball.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "passplan/config.hpp"
#include "passplan/errors.hpp"

namespace passplan {
namespace {

struct Box {
  double x0, x1, y0, y1;
};

Box defense_box(const FieldGeometry& f) {
  return {0.5 * f.length - f.defense_depth, 0.5 * f.length, -0.5 * f.defense_width,
          0.5 * f.defense_width};
}

double dist_to_box(const Box& b, Vec2 p) {
  const double cx = std::clamp(p.x, b.x0, b.x1);
  const double cy = std::clamp(p.y, b.y0, b.y1);
  return distance(p, {cx, cy});
}

/// Smallest t in [0, 1] where a + t*(b - a) touches the box. `b` is always a
/// goal post, which sits on the box boundary, so a crossing always exists;
/// falls back to 1 (the post itself) if slab rounding says otherwise.
double entry_param(const Box& box, Vec2 a, Vec2 b) {
  double t_enter = -std::numeric_limits<double>::infinity();
  double t_exit = std::numeric_limits<double>::infinity();
  const double lo[2] = {box.x0, box.y0};
  const double hi[2] = {box.x1, box.y1};
  const double p[2] = {a.x, a.y};
  const double d[2] = {b.x - a.x, b.y - a.y};
  for (int axis = 0; axis < 2; ++axis) {
    if (d[axis] == 0.0) {
      if (p[axis] < lo[axis] || p[axis] > hi[axis]) return 1.0;
      continue;
    }
    double t0 = (lo[axis] - p[axis]) / d[axis];
    double t1 = (hi[axis] - p[axis]) / d[axis];
    if (t0 > t1) std::swap(t0, t1);
    if (t0 > t_enter) t_enter = t0;
    if (t1 < t_exit) t_exit = t1;
  }
  if (t_enter > t_exit || t_enter > 1.0) return 1.0;
  return t_enter > 0.0 ? t_enter : 0.0;
}

/// Trapezoid preference: 0 at the full_* edges, 1 on [peak_lo, peak_hi].
double band_value(const AngleBand& b, double a) {
  if (a < b.full_lo || a > b.full_hi) return 0.0;
  if (a < b.peak_lo) {
    const double w = b.peak_lo - b.full_lo;
    return w > 0.0 ? (a - b.full_lo) / w : 1.0;
  }
  if (a > b.peak_hi) {
    const double w = b.full_hi - b.peak_hi;
    return w > 0.0 ? (b.full_hi - a) / w : 1.0;
  }
  return 1.0;
}

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

std::vector<double> axis_lattice(double anchor, double span, double direction, double step) {
  const int n = static_cast<int>(std::floor(span / step + 1e-9)) + 1;
  std::vector<double> v(static_cast<size_t>(n > 0 ? n : 0));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = anchor + direction * (i * step);
  return v;
}

/// The y raster is anchored at the moving cut and walks away from it, so the
/// vertex set of zone I is the exact bitwise mirror of zone II's (likewise
/// III/IV): -(cut + j*step) == -cut - j*step under IEEE negation.
std::vector<double> zone_ys(const Zone& zone, double step) {
  const bool upper = zone.label == ZoneLabel::I || zone.label == ZoneLabel::III;
  return upper ? axis_lattice(zone.y0, zone.y1 - zone.y0, 1.0, step)
               : axis_lattice(zone.y1, zone.y1 - zone.y0, -1.0, step);
}

std::vector<double> zone_xs(const Zone& zone, double step) {
  return axis_lattice(zone.x0, zone.x1 - zone.x0, 1.0, step);
}

}  // namespace

const char* zone_name(ZoneLabel z) {
  switch (z) {
    case ZoneLabel::I: return "I";
    case ZoneLabel::II: return "II";
    case ZoneLabel::III: return "III";
    default: return "IV";
  }
}

std::optional<ZoneLabel> ZonePartition::label_at(Vec2 p) const {
  const double x_lo = zones[0].x0, x_hi = zones[2].x1;
  const double y_lo = zones[1].y0, y_hi = zones[0].y1;
  if (p.x < x_lo || p.x > x_hi || p.y < y_lo || p.y > y_hi) return std::nullopt;
  if (p.x >= cut_x) return p.y >= cut_y ? ZoneLabel::III : ZoneLabel::IV;
  return p.y >= cut_y ? ZoneLabel::I : ZoneLabel::II;
}

ZonePartition partition_zones(const FieldGeometry& field, Vec2 ball, double min_zone_width) {
  if (!(min_zone_width > 0.0) || 2.0 * min_zone_width > field.width) {
    throw config_error("min_zone_width must be positive and at most half the field width");
  }
  ZonePartition part;
  part.cut_x = 0.25 * field.length;
  part.cut_y =
      std::clamp(ball.y, -0.5 * field.width + min_zone_width, 0.5 * field.width - min_zone_width);
  const double x_mid = 0.5 * field.length;
  const double y_top = 0.5 * field.width;
  part.zones[0] = {ZoneLabel::I, 0.0, part.cut_x, part.cut_y, y_top};
  part.zones[1] = {ZoneLabel::II, 0.0, part.cut_x, -y_top, part.cut_y};
  part.zones[2] = {ZoneLabel::III, part.cut_x, x_mid, part.cut_y, y_top};
  part.zones[3] = {ZoneLabel::IV, part.cut_x, x_mid, -y_top, part.cut_y};
  return part;
}

std::pair<Vec2, Vec2> guard_points(const FieldGeometry& field, Vec2 p) {
  if (field.strictly_in_their_defense_area(p)) {
    throw domain_error("guard points undefined: point inside the defense area");
  }
  const Box box = defense_box(field);
  const Vec2 left = field.their_left_post();
  const Vec2 right = field.their_right_post();
  const double tp = entry_param(box, p, left);
  const double tq = entry_param(box, p, right);
  return {p + (left - p) * tp, p + (right - p) * tq};
}

double guard_time(Vec2 p, const WorldState& world, const MotionLimits& limits, double cap) {
  if (!(cap > 0.0) || !std::isfinite(cap)) throw domain_error("guard time cap must be positive");
  const auto [gp, gq] = guard_points(world.field, p);  // throws inside the area

  // Rank opponents by distance to the defense area (inside ranks first at 0),
  // ties by id; the best two are the guards.
  struct Cand {
    double dist;
    int id;
    const RobotState* robot;
  };
  std::vector<Cand> cands;
  cands.reserve(world.theirs.size());
  const Box box = defense_box(world.field);
  for (const RobotState& r : world.theirs) cands.push_back({dist_to_box(box, r.position), r.id, &r});
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    return a.id < b.id;
  });

  // Min-cost assignment of the guards to {P, Q}; a missing guard leaves its
  // point open at the full cap.
  double total;
  if (cands.size() >= 2) {
    const double a0p = arrival_time(*cands[0].robot, gp, limits);
    const double a0q = arrival_time(*cands[0].robot, gq, limits);
    const double a1p = arrival_time(*cands[1].robot, gp, limits);
    const double a1q = arrival_time(*cands[1].robot, gq, limits);
    total = std::min(a0p + a1q, a0q + a1p);
  } else if (cands.size() == 1) {
    const double ap = arrival_time(*cands[0].robot, gp, limits);
    const double aq = arrival_time(*cands[0].robot, gq, limits);
    total = std::min(ap, aq) + cap;
  } else {
    total = 2.0 * cap;
  }
  return total < cap ? total : cap;
}

std::pair<double, RunningPointFeatures> score_running_point(Vec2 p, const WorldState& world,
                                                            const PlannerConfig& cfg) {
  const FieldGeometry& f = world.field;
  if (!(p.x >= 0.0 && p.x <= 0.5 * f.length && std::fabs(p.y) <= 0.5 * f.width)) {
    throw domain_error("running point outside the front-field region");
  }
  RunningPointFeatures ft;
  const Vec2 goal = f.their_goal_center();
  ft.dist_to_goal = distance(p, goal);
  ft.dist_to_ball = distance(p, world.ball.position);
  ft.angle_to_goal = std::atan2(std::fabs(p.y - goal.y), goal.x - p.x);
  ft.guard_time = guard_time(p, world, cfg.motion_theirs, cfg.thresholds.guard_time_cap);
  double nearest_opp = std::numeric_limits<double>::infinity();
  for (const RobotState& r : world.theirs) {
    nearest_opp = std::min(nearest_opp, distance(r.position, world.ball.position));
  }
  ft.defense_exposure = ft.dist_to_ball > nearest_opp ? 1.0 : 0.0;

  const double len_upper = cfg.length_upper(f);
  const RunWeights& w = cfg.weights.run;
  const double score = w.dist_goal * -clamp01(ft.dist_to_goal / len_upper) +
                       w.dist_ball * clamp01(ft.dist_to_ball / len_upper) +
                       w.angle * band_value(cfg.angle_band, ft.angle_to_goal) +
                       w.guard_time * ft.guard_time + w.exposure * -ft.defense_exposure;
  return {score, ft};
}

std::vector<Vec2> zone_lattice(const Zone& zone, double step) {
  if (!(step > 0.0)) throw config_error("lattice step must be positive");
  const auto xs = zone_xs(zone, step);
  const auto ys = zone_ys(zone, step);
  std::vector<Vec2> out;
  out.reserve(xs.size() * ys.size());
  for (double x : xs) {
    for (double y : ys) out.push_back({x, y});
  }
  return out;
}

std::vector<RunningPoint> best_running_points(const WorldState& world,
                                              const std::set<ZoneLabel>& occupied,
                                              const PlannerConfig& cfg, int n_runners,
                                              std::optional<Vec2> best_pass_point) {
  const ZonePartition part =
      partition_zones(world.field, world.ball.position, cfg.thresholds.min_zone_width);
  std::set<ZoneLabel> excluded = occupied;
  if (best_pass_point) {
    if (auto z = part.label_at(*best_pass_point)) excluded.insert(*z);
  }

  // Goal-side zones take priority when there are not enough runners.
  static constexpr ZoneLabel kPriority[4] = {ZoneLabel::III, ZoneLabel::IV, ZoneLabel::I,
                                             ZoneLabel::II};
  std::set<ZoneLabel> selected;
  for (ZoneLabel z : kPriority) {
    if (static_cast<int>(selected.size()) >= n_runners) break;
    if (!excluded.count(z)) selected.insert(z);
  }

  std::vector<RunningPoint> out;
  for (ZoneLabel z :
       {ZoneLabel::I, ZoneLabel::II, ZoneLabel::III, ZoneLabel::IV}) {
    if (!selected.count(z)) continue;
    const Zone& zone = part.zone(z);
    const auto xs = zone_xs(zone, cfg.thresholds.grid_step);
    const auto ys = zone_ys(zone, cfg.thresholds.grid_step);
    bool have = false;
    RunningPoint best;
    for (size_t i = 1; i + 1 < xs.size(); ++i) {
      for (size_t j = 1; j + 1 < ys.size(); ++j) {
        const Vec2 v{xs[i], ys[j]};
        if (world.field.in_their_defense_area(v)) continue;
        const auto [score, ft] = score_running_point(v, world, cfg);
        if (!have || score > best.score) {
          best = {z, v, score, ft};
          have = true;
        }
      }
    }
    if (have) out.push_back(best);
  }
  return out;
}

DragDecision drag_decision(const RobotState& me, const RobotState& defender, Vec2 ball,
                           double defender_speed, double v_min, double marking_radius) {
  const Vec2 to_ball = ball - me.position;
  if (to_ball.norm() <= 1e-9) {
    throw domain_error("drag direction undefined: robot is on the ball");
  }
  DragDecision d;
  d.judge = (ball.x - me.position.x) * (defender.position.y - me.position.y) -
            (defender.position.x - me.position.x) * (ball.y - me.position.y);
  d.marked = distance(defender.position, me.position) <= marking_radius;
  // Defender on the left (judge > 0) -> pull right; collinear defaults left.
  Vec2 dir = d.judge > 0.0 ? to_ball.perp_right() : to_ball.perp_left();
  d.reversed = defender_speed > v_min;
  if (d.reversed) dir = -dir;
  d.accel_direction = dir.normalized();
  return d;
}

}  // namespace passplan
