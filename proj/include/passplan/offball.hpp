#pragma once

#include <array>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "passplan/motion.hpp"
#include "passplan/vec2.hpp"
#include "passplan/world.hpp"

namespace passplan {

struct PlannerConfig;

enum class ZoneLabel { I, II, III, IV };

const char* zone_name(ZoneLabel z);

struct Zone {
  ZoneLabel label = ZoneLabel::I;
  double x0 = 0.0, x1 = 0.0;  ///< [x0, x1]
  double y0 = 0.0, y1 = 0.0;  ///< [y0, y1]

  bool contains(Vec2 p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
};

/// Four rectangles covering the front field (x in [0, length/2]): one fixed
/// vertical cut at the front-field midline, one horizontal cut tracking the
/// ball's y (clamped so no zone gets thinner than min_zone_width). I and II
/// sit near the midline, III and IV near the goal; I/III are the upper pair.
struct ZonePartition {
  std::array<Zone, 4> zones;  ///< indexed by ZoneLabel order I, II, III, IV
  double cut_x = 0.0;
  double cut_y = 0.0;

  const Zone& zone(ZoneLabel z) const { return zones[static_cast<int>(z)]; }

  /// Label of the zone owning p, or nullopt outside the front field.
  /// Boundary points go to the goal-side (x >= cut_x) and upper (y >= cut_y)
  /// zones.
  std::optional<ZoneLabel> label_at(Vec2 p) const;
};

ZonePartition partition_zones(const FieldGeometry& field, Vec2 ball,
                              double min_zone_width = 1.0);

struct RunningPointFeatures {
  double dist_to_goal = 0.0;   ///< m
  double dist_to_ball = 0.0;   ///< m
  double angle_to_goal = 0.0;  ///< rad against the goal axis, in [0, pi]
  double guard_time = 0.0;     ///< s, capped
  double defense_exposure = 0.0;  ///< 1 when an opponent is nearer the ball
};

/// Weighted running-point value at p. Distance to goal and exposure are
/// penalties, distance to ball rewards spreading out, the angle scores
/// against the preferred band, and guard time is kept raw ("proportional").
/// Throws domain_error (OutOfRegion) when p is outside the front field, and
/// propagates guard_time's error from inside the defense area.
std::pair<double, RunningPointFeatures> score_running_point(Vec2 p, const WorldState& world,
                                                            const PlannerConfig& cfg);

/// Total time for the opposing guards to cover P and Q, the first crossings
/// of the defense-area boundary along the segments from p to each goal post.
/// Opponents rank by distance to the defense area (robots inside rank first
/// at zero), ties by id; the best two take the cheaper assignment to P and
/// Q. A missing guard leaves its point open at the full cap and the total is
/// clamped to cap, so no opponents returns cap. Throws domain_error when p
/// is strictly inside the defense area.
double guard_time(Vec2 p, const WorldState& world, const MotionLimits& limits, double cap = 10.0);

/// The P/Q construction by itself, for geometric verification.
std::pair<Vec2, Vec2> guard_points(const FieldGeometry& field, Vec2 p);

struct RunningPoint {
  ZoneLabel zone = ZoneLabel::I;
  Vec2 point;
  double score = 0.0;
  RunningPointFeatures features;
};

/// Every lattice vertex of the zone at the given step, x-major, the x raster
/// rising from x0 and the y raster anchored at the moving cut. A 3 x 2 m
/// zone at 0.1 m yields 31 x 21 = 651 vertices.
std::vector<Vec2> zone_lattice(const Zone& zone, double step);

/// Best lattice vertex per zone: each selected zone is rasterized at
/// grid_step, every strictly-interior vertex outside the defense area is
/// scored, ties break toward lower x, then toward the moving cut (the y
/// raster walks away from it). Zones listed in `occupied` and the zone
/// containing best_pass_point are skipped; when fewer than 4 runners are
/// available the goal-side zones III and IV take priority. Results come
/// back ordered I, II, III, IV.
std::vector<RunningPoint> best_running_points(const WorldState& world,
                                              const std::set<ZoneLabel>& occupied,
                                              const PlannerConfig& cfg, int n_runners = 4,
                                              std::optional<Vec2> best_pass_point = std::nullopt);

struct DragDecision {
  double judge = 0.0;  ///< signed area of (ball - me, defender - me) [m^2]
  bool marked = false;
  Vec2 accel_direction;   ///< unit, perpendicular to (ball - me)
  bool reversed = false;  ///< defender_speed > v_min flipped the direction
};

/// Per-tick drag-skill decision: judge > 0 puts the defender on the left of
/// the me->ball line, so accelerate right (and vice versa); once the
/// defender is faster than v_min the direction flips. marked means the
/// defender is within marking_radius. Throws domain_error when me and ball
/// coincide (perpendicular undefined).
DragDecision drag_decision(const RobotState& me, const RobotState& defender, Vec2 ball,
                           double defender_speed, double v_min, double marking_radius = 0.6);

}  // namespace passplan
