#pragma once

#include <string>

#include "passplan/ball_model.hpp"
#include "passplan/dpps.hpp"
#include "passplan/motion.hpp"
#include "passplan/weights.hpp"

namespace passplan {

/// SVG rendering style. Colors are SVG color strings; the grid marker colors
/// follow the convention cyan = feasible flat, orange = feasible chip,
/// green = best flat line, yellow = best chip line.
struct SvgStyle {
  double pixels_per_meter = 80.0;
  std::string field_color = "#1b5e20";
  std::string line_color = "#ffffff";
  std::string our_color = "#1565c0";
  std::string their_color = "#c62828";
  std::string ball_color = "#ff6f00";
  std::string flat_feasible_color = "cyan";
  std::string chip_feasible_color = "orange";
  std::string best_flat_color = "green";
  std::string best_chip_color = "yellow";
};

/// Scalar thresholds and steps shared across planner queries.
struct PlannerThresholds {
  double sbip_dt = 1.0 / 60.0;      ///< SBIP sampling step [s]
  double robot_radius = 0.09;       ///< interception radius correction [m]
  double safety_margin = 0.3;       ///< pass feasibility delta-time [s]
  double buffer_time = 0.3;         ///< settling buffer after arrival [s]
  double possession_radius = 0.15;  ///< kicker-to-ball possession distance [m]
  double angle_threshold = 0.1;     ///< minimum shot angle [rad]
  double shot_power = 0.0;          ///< kick speed for shots; 0 = power_max
  double margin_cap = 10.0;         ///< margin feature stand-in when opponents can never intercept [s]
  double possession_dt = 1e-3;      ///< SBIP step for the possession metric [s]
  double contest_epsilon = 1e-3;    ///< |our - theirs| below this = contested [s]
  double grid_step = 0.1;           ///< running-point rasterization step [m]
  double min_zone_width = 1.0;      ///< smallest zone height under the moving cut [m]
  double guard_time_cap = 10.0;     ///< guard time ceiling [s]
  double drag_v_min = 1.0;          ///< defender speed that flips the drag direction [m/s]
  double marking_radius = 0.6;      ///< defender distance that counts as marked [m]
};

struct PlannerConfig {
  BallModelParams ball;
  MotionLimits motion_ours;
  MotionLimits motion_theirs;
  SearchGrid grid;
  WeightConfig weights;
  AngleBand angle_band;
  PlannerThresholds thresholds;
  SvgStyle svg;

  double shot_power() const {
    return thresholds.shot_power > 0.0 ? thresholds.shot_power : ball.power_max;
  }
  double length_upper(const FieldGeometry& f) const {
    return weights.norm.length_upper > 0.0 ? weights.norm.length_upper : f.length;
  }

  void validate() const;  ///< throws config_error on the first bad value

  /// Strict parse: unknown keys anywhere are a config_error. Missing keys
  /// keep their defaults, so a config file may override any subset.
  static PlannerConfig from_json_text(const std::string& text);
  static PlannerConfig load(const std::string& path);
  std::string to_json_text() const;  ///< full round-trippable dump
};

}  // namespace passplan
