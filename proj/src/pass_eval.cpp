#include "passplan/pass_eval.hpp"

#include <algorithm>
#include <cmath>

#include "passplan/config.hpp"
#include "passplan/errors.hpp"
#include "passplan/intercept.hpp"
#include "passplan/motion.hpp"

namespace passplan {

namespace {

struct Interval {
  double lo, hi;
};

/// dist(center, segment(p, goal point at height y)) < r, the exact occlusion
/// predicate driving the bisection. All arithmetic is y-sign symmetric.
bool blocks(Vec2 p, double goal_x, double y, Vec2 center, double r) {
  return segment_distance(center, p, {goal_x, y}) < r;
}

/// Conservative gate: a disc farther than r from the whole view triangle
/// {p, both posts} cannot occlude any goal segment.
bool may_block(Vec2 p, Vec2 gl, Vec2 gr, Vec2 center, double r) {
  const double margin = r + 1e-9;
  if (segment_distance(center, p, gl) <= margin) return true;
  if (segment_distance(center, p, gr) <= margin) return true;
  if (segment_distance(center, gl, gr) <= margin) return true;
  // Inside the triangle: all three edge cross products share a sign.
  const double c1 = (gl - p).cross(center - p);
  const double c2 = (gr - gl).cross(center - gl);
  const double c3 = (p - gr).cross(center - gr);
  return (c1 >= 0.0 && c2 >= 0.0 && c3 >= 0.0) || (c1 <= 0.0 && c2 <= 0.0 && c3 <= 0.0);
}

/// Boundary of the blocked set between a blocked and an unblocked height.
double bisect_edge(Vec2 p, double goal_x, Vec2 center, double r, double y_blocked,
                   double y_free) {
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (y_blocked + y_free);
    if (blocks(p, goal_x, mid, center, r)) {
      y_blocked = mid;
    } else {
      y_free = mid;
    }
  }
  return 0.5 * (y_blocked + y_free);
}

}  // namespace

GoalView goal_view(Vec2 point, const WorldState& world, double robot_radius) {
  const FieldGeometry& f = world.field;
  const double gx = 0.5 * f.length;
  const double gh = 0.5 * f.goal_width;
  GoalView view;
  view.target = f.their_goal_center();
  if (gx - point.x < 1e-9) return view;  // on or behind the goal line

  // y-symmetric sample heights: 0, +/-step, ..., +/-gh (exact endpoints).
  const double r = robot_radius;
  int n_half = static_cast<int>(std::ceil(f.goal_width / std::max(r, 1e-3)));
  n_half = std::clamp(n_half, 24, 1024);
  std::vector<double> heights;
  heights.reserve(2 * n_half + 1);
  for (int j = n_half; j >= 1; --j) heights.push_back(j == n_half ? -gh : -((j * gh) / n_half));
  heights.push_back(0.0);
  for (int j = 1; j <= n_half; ++j) heights.push_back(j == n_half ? gh : (j * gh) / n_half);

  std::vector<Interval> blocked;
  for (const RobotState& opp : world.theirs) {
    const Vec2 c = opp.position;
    if (distance(c, point) < r) return view;  // standing on the evaluated point
    if (!may_block(point, f.their_left_post(), f.their_right_post(), c, r)) continue;

    int first = -1, last = -1;
    for (int i = 0; i < static_cast<int>(heights.size()); ++i) {
      if (blocks(point, gx, heights[i], c, r)) {
        if (first < 0) first = i;
        last = i;
      }
    }
    if (first < 0) continue;
    Interval iv;
    iv.lo = first == 0 ? -gh
                       : bisect_edge(point, gx, c, r, heights[first], heights[first - 1]);
    iv.hi = last == static_cast<int>(heights.size()) - 1
                ? gh
                : bisect_edge(point, gx, c, r, heights[last], heights[last + 1]);
    blocked.push_back(iv);
  }

  std::sort(blocked.begin(), blocked.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

  // Sweep the goal span, keeping the gap that subtends the widest angle at
  // `point` (angular width, not goal-line height: the same height interval
  // looks narrower from a shallow angle). atan2's oddness keeps the width
  // bit-identical under y-mirroring.
  const double x_off = gx - point.x;
  double cursor = -gh;
  double best_lo = 0.0, best_hi = 0.0, best_w = -1.0;
  auto consider = [&](double lo, double hi) {
    const double w = std::atan2(hi - point.y, x_off) - std::atan2(lo - point.y, x_off);
    if (w > best_w) {
      best_w = w;
      best_lo = lo;
      best_hi = hi;
    }
  };
  for (const Interval& iv : blocked) {
    if (iv.lo > cursor) consider(cursor, iv.lo);
    if (iv.hi > cursor) cursor = iv.hi;
  }
  if (cursor < gh) consider(cursor, gh);

  if (best_w <= 0.0) return view;  // fully occluded
  view.angle = best_w;
  view.window_lo = best_lo;
  view.window_hi = best_hi;
  view.target = {gx, 0.5 * (best_lo + best_hi)};
  return view;
}

double shoot_angle(Vec2 point, const WorldState& world, double robot_radius) {
  return goal_view(point, world, robot_radius).angle;
}

namespace {

double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

/// Angle at `apex` between rays toward a and b, in [0, pi].
double angle_between(Vec2 apex, Vec2 a, Vec2 b) {
  const Vec2 u = a - apex;
  const Vec2 v = b - apex;
  const double cross = u.cross(v);
  const double dot = u.dot(v);
  if (cross == 0.0 && dot == 0.0) return 0.0;
  return std::fabs(std::atan2(cross, dot));
}

}  // namespace

std::pair<double, PassFeatures> score_pass(const PassCandidate& candidate,
                                           const WorldState& world, const PlannerConfig& cfg) {
  if (!candidate.feasible) throw domain_error("score_pass: candidate is not feasible");

  const Vec2 receive = candidate.receive_point;
  const GoalView view = goal_view(receive, world, cfg.thresholds.robot_radius);

  PassFeatures feat;
  feat.teammate_intercept_time = candidate.our_time;
  feat.shoot_angle_at_receive = view.angle;
  feat.dist_receive_to_goal = distance(receive, world.field.their_goal_center());
  feat.refraction_angle = angle_between(receive, receive + (receive - world.ball.position),
                                        view.target);
  feat.intercept_margin = std::isinf(candidate.opp_time) ? cfg.thresholds.margin_cap
                                                         : candidate.opp_time - candidate.our_time;

  const double len_upper = cfg.length_upper(world.field);
  const double ang_upper = cfg.weights.norm.angle_upper;
  const PassWeights& w = cfg.weights.pass;
  const double score = w.teammate_time * (-feat.teammate_intercept_time) +
                       w.shoot_angle * clamp01(feat.shoot_angle_at_receive / ang_upper) +
                       w.dist_goal * (-clamp01(feat.dist_receive_to_goal / len_upper)) +
                       w.refraction * (-clamp01(feat.refraction_angle / ang_upper)) +
                       w.margin * feat.intercept_margin;
  return {score, feat};
}

std::optional<ScoredPass> best_pass(const CandidateGrid& g, const WorldState& world,
                                    const PlannerConfig& cfg, std::optional<KickType> only) {
  std::optional<ScoredPass> best;
  // Cell order is (kick_type flat<chip, dir, power); keeping the first
  // strict maximum implements the tie-break.
  for (const PassCandidate& c : g.cells) {
    if (!c.feasible) continue;
    if (only && c.kick_type != *only) continue;
    auto [score, feat] = score_pass(c, world, cfg);
    if (!best || score > best->score) best = ScoredPass{c, score, feat};
  }
  return best;
}

std::optional<ScoredPass> best_pass(const CandidateGrid& g, const WorldState& world,
                                    const PlannerConfig& cfg) {
  return best_pass(g, world, cfg, std::nullopt);
}

ShotDecision decide_shot(const RobotState& shooter, const WorldState& world,
                         const PlannerConfig& cfg) {
  const Vec2 origin =
      distance(shooter.position, world.ball.position) <= cfg.thresholds.possession_radius
          ? world.ball.position
          : shooter.position;
  const GoalView view = goal_view(origin, world, cfg.thresholds.robot_radius);

  ShotDecision d;
  d.shot_angle = view.angle;
  d.shot_target = view.target;
  if (view.angle < cfg.thresholds.angle_threshold || view.angle <= 0.0) {
    d.reason = ShotReason::angle_too_small;
    d.blocked = true;
    return d;
  }

  const BallTrajectory shot = BallTrajectory::flat_kick(origin, view.target - origin,
                                                        cfg.shot_power(), cfg.ball);
  const double goal_dist = distance(origin, view.target);
  const std::optional<double> t_goal = shot.travel_time_to_distance(goal_dist);
  if (!t_goal) {
    // Shot dies before the line: interceptable at the rest point by anyone.
    d.reason = ShotReason::interceptable;
    d.blocked = true;
    return d;
  }
  for (const RobotState& opp : world.theirs) {
    const InterceptResult r = intercept_time(opp, shot, cfg.motion_theirs, world.field,
                                             cfg.thresholds.sbip_dt, cfg.thresholds.robot_radius);
    if (r.finite() && *r.intercept_time < *t_goal) {
      d.reason = ShotReason::interceptable;
      d.blocked = true;
      return d;
    }
  }
  d.shoot = true;
  d.reason = ShotReason::clear;
  return d;
}

FreeKickPlan plan_free_kick(const WorldState& world, int kicker_id, const PassCandidate& target,
                            const PlannerConfig& cfg) {
  if (!target.feasible) throw domain_error("plan_free_kick: target candidate is not feasible");
  if (world.find(Team::ours, kicker_id) == nullptr) {
    throw validation_error("plan_free_kick: kicker id " + std::to_string(kicker_id) +
                           " is not on team ours");
  }
  const RobotState* receiver = world.find(Team::ours, target.our_id);
  if (receiver == nullptr) {
    throw validation_error("plan_free_kick: receiver id " + std::to_string(target.our_id) +
                           " is not on team ours");
  }

  const std::vector<double> powers =
      power_table(cfg.grid.n_powers, cfg.grid.power_min, cfg.grid.power_max);
  if (target.power_index < 0 || target.power_index >= static_cast<int>(powers.size())) {
    throw domain_error("plan_free_kick: candidate power index outside the configured grid");
  }
  const Vec2 dir = target.receive_point - world.ball.position;
  const BallTrajectory traj =
      target.kick_type == KickType::flat
          ? BallTrajectory::flat_kick(world.ball.position, dir, powers[target.power_index],
                                      cfg.ball)
          : BallTrajectory::chip_kick(world.ball.position, dir, powers[target.power_index],
                                      cfg.ball);
  const std::optional<double> t_ball = traj.travel_time_to_distance(dir.norm());
  if (!t_ball) throw domain_error("plan_free_kick: receive point beyond the ball's rollout");

  FreeKickPlan plan;
  plan.t_ball = *t_ball;
  plan.t_robot = arrival_time(*receiver, target.receive_point, cfg.motion_ours);
  plan.order = plan.t_robot <= plan.t_ball ? KickOrder::kick_first : KickOrder::robot_first;
  plan.kick_delay = std::max(0.0, plan.t_robot - plan.t_ball);
  return plan;
}

PossessionReport possession(const WorldState& world, const PlannerConfig& cfg) {
  const BallTrajectory roll =
      BallTrajectory::free_roll(world.ball.position, world.ball.velocity, cfg.ball);
  const std::vector<InterceptResult> all =
      intercept_all(world, roll, cfg.motion_ours, cfg.motion_theirs,
                    cfg.thresholds.possession_dt, cfg.thresholds.robot_radius);

  PossessionReport rep;
  for (const InterceptResult& r : all) {
    auto& slot = r.team == Team::ours ? rep.our_time : rep.their_time;
    if (r.finite() && (!slot || *r.intercept_time < *slot)) slot = r.intercept_time;
  }
  if (!rep.our_time && !rep.their_time) {
    rep.side = PossessionSide::contested;
  } else if (!rep.their_time) {
    rep.side = PossessionSide::ours;
  } else if (!rep.our_time) {
    rep.side = PossessionSide::theirs;
  } else {
    const double delta = *rep.our_time - *rep.their_time;
    if (std::fabs(delta) <= cfg.thresholds.contest_epsilon) {
      rep.side = PossessionSide::contested;
    } else {
      rep.side = delta < 0.0 ? PossessionSide::ours : PossessionSide::theirs;
    }
  }
  return rep;
}

}  // namespace passplan
