#include "passplan/config.hpp"

#include <exception>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "passplan/errors.hpp"

namespace passplan {

namespace {

using nlohmann::json;

class Section {
 public:
  Section(const json& obj, std::string path)
      : obj_(obj), path_(std::move(path)), exceptions_at_entry_(std::uncaught_exceptions()) {
    if (!obj.is_object()) throw config_error(path_ + ": must be an object");
  }

  void number(const char* key, double* out) {
    keys_.push_back(key);
    if (!obj_.contains(key)) return;
    if (!obj_.at(key).is_number()) throw config_error(path_ + "." + key + ": must be a number");
    *out = obj_.at(key).get<double>();
  }

  void integer(const char* key, int* out) {
    keys_.push_back(key);
    if (!obj_.contains(key)) return;
    if (!obj_.at(key).is_number_integer())
      throw config_error(path_ + "." + key + ": must be an integer");
    *out = obj_.at(key).get<int>();
  }

  void boolean(const char* key, bool* out) {
    keys_.push_back(key);
    if (!obj_.contains(key)) return;
    if (!obj_.at(key).is_boolean()) throw config_error(path_ + "." + key + ": must be a boolean");
    *out = obj_.at(key).get<bool>();
  }

  void text(const char* key, std::string* out) {
    keys_.push_back(key);
    if (!obj_.contains(key)) return;
    if (!obj_.at(key).is_string()) throw config_error(path_ + "." + key + ": must be a string");
    *out = obj_.at(key).get<std::string>();
  }

  void subsection(const char* key, const std::function<void(const json&, const std::string&)>& f) {
    keys_.push_back(key);
    if (obj_.contains(key)) f(obj_.at(key), path_ + "." + key);
  }

  // Rejects unknown keys on scope exit; suppressed while another exception
  // is already unwinding.
  ~Section() noexcept(false) {
    if (std::uncaught_exceptions() > exceptions_at_entry_) return;
    for (const auto& item : obj_.items()) {
      bool known = false;
      for (const char* k : keys_) known = known || item.key() == k;
      if (!known) throw config_error(path_ + ": unknown key '" + item.key() + "'");
    }
  }

 private:
  const json& obj_;
  std::string path_;
  int exceptions_at_entry_;
  std::vector<const char*> keys_;
};

void parse_ball(const json& j, const std::string& path, BallModelParams* p) {
  Section s(j, path);
  s.number("slide_decel", &p->slide_decel);
  s.number("roll_decel", &p->roll_decel);
  s.number("transition_ratio", &p->transition_ratio);
  s.number("power_min", &p->power_min);
  s.number("power_max", &p->power_max);
  s.number("chip_flight_fraction", &p->chip_flight_fraction);
}

void parse_motion(const json& j, const std::string& path, MotionLimits* m) {
  Section s(j, path);
  s.number("max_speed", &m->max_speed);
  s.number("max_accel", &m->max_accel);
  s.number("max_decel", &m->max_decel);
}

void parse_grid(const json& j, const std::string& path, SearchGrid* g) {
  Section s(j, path);
  s.integer("n_directions", &g->n_directions);
  s.integer("n_powers", &g->n_powers);
  s.number("power_min", &g->power_min);
  s.number("power_max", &g->power_max);
  s.boolean("flat", &g->flat);
  s.boolean("chip", &g->chip);
}

void parse_pass_weights(const json& j, const std::string& path, PassWeights* w) {
  Section s(j, path);
  s.number("teammate_time", &w->teammate_time);
  s.number("shoot_angle", &w->shoot_angle);
  s.number("dist_goal", &w->dist_goal);
  s.number("refraction", &w->refraction);
  s.number("margin", &w->margin);
}

void parse_run_weights(const json& j, const std::string& path, RunWeights* w) {
  Section s(j, path);
  s.number("dist_goal", &w->dist_goal);
  s.number("dist_ball", &w->dist_ball);
  s.number("angle", &w->angle);
  s.number("guard_time", &w->guard_time);
  s.number("exposure", &w->exposure);
}

void parse_norm(const json& j, const std::string& path, NormBounds* n) {
  Section s(j, path);
  s.number("length_upper", &n->length_upper);
  s.number("angle_upper", &n->angle_upper);
}

void parse_angle_band(const json& j, const std::string& path, AngleBand* b) {
  Section s(j, path);
  s.number("full_lo", &b->full_lo);
  s.number("peak_lo", &b->peak_lo);
  s.number("peak_hi", &b->peak_hi);
  s.number("full_hi", &b->full_hi);
}

void parse_thresholds(const json& j, const std::string& path, PlannerThresholds* t) {
  Section s(j, path);
  s.number("sbip_dt", &t->sbip_dt);
  s.number("robot_radius", &t->robot_radius);
  s.number("safety_margin", &t->safety_margin);
  s.number("buffer_time", &t->buffer_time);
  s.number("possession_radius", &t->possession_radius);
  s.number("angle_threshold", &t->angle_threshold);
  s.number("shot_power", &t->shot_power);
  s.number("margin_cap", &t->margin_cap);
  s.number("possession_dt", &t->possession_dt);
  s.number("contest_epsilon", &t->contest_epsilon);
  s.number("grid_step", &t->grid_step);
  s.number("min_zone_width", &t->min_zone_width);
  s.number("guard_time_cap", &t->guard_time_cap);
  s.number("drag_v_min", &t->drag_v_min);
  s.number("marking_radius", &t->marking_radius);
}

void parse_svg(const json& j, const std::string& path, SvgStyle* v) {
  Section s(j, path);
  s.number("pixels_per_meter", &v->pixels_per_meter);
  s.text("field_color", &v->field_color);
  s.text("line_color", &v->line_color);
  s.text("our_color", &v->our_color);
  s.text("their_color", &v->their_color);
  s.text("ball_color", &v->ball_color);
  s.text("flat_feasible_color", &v->flat_feasible_color);
  s.text("chip_feasible_color", &v->chip_feasible_color);
  s.text("best_flat_color", &v->best_flat_color);
  s.text("best_chip_color", &v->best_chip_color);
}

}  // namespace

void PlannerConfig::validate() const {
  ball.validate();
  motion_ours.validate();
  motion_theirs.validate();
  grid.validate();
  const PlannerThresholds& t = thresholds;
  if (!(t.sbip_dt > 0.0)) throw config_error("thresholds.sbip_dt must be > 0");
  if (!(t.possession_dt > 0.0)) throw config_error("thresholds.possession_dt must be > 0");
  if (!(t.robot_radius >= 0.0)) throw config_error("thresholds.robot_radius must be >= 0");
  if (!(t.safety_margin >= 0.0)) throw config_error("thresholds.safety_margin must be >= 0");
  if (!(t.buffer_time >= 0.0)) throw config_error("thresholds.buffer_time must be >= 0");
  if (!(t.possession_radius > 0.0)) throw config_error("thresholds.possession_radius must be > 0");
  if (!(t.angle_threshold >= 0.0)) throw config_error("thresholds.angle_threshold must be >= 0");
  if (!(t.shot_power >= 0.0)) throw config_error("thresholds.shot_power must be >= 0");
  if (!(t.margin_cap > 0.0)) throw config_error("thresholds.margin_cap must be > 0");
  if (!(t.contest_epsilon >= 0.0)) throw config_error("thresholds.contest_epsilon must be >= 0");
  if (!(t.grid_step > 0.0)) throw config_error("thresholds.grid_step must be > 0");
  if (!(t.min_zone_width > 0.0)) throw config_error("thresholds.min_zone_width must be > 0");
  if (!(t.guard_time_cap > 0.0)) throw config_error("thresholds.guard_time_cap must be > 0");
  if (!(t.drag_v_min >= 0.0)) throw config_error("thresholds.drag_v_min must be >= 0");
  if (!(t.marking_radius > 0.0)) throw config_error("thresholds.marking_radius must be > 0");
  if (!(weights.norm.length_upper >= 0.0)) throw config_error("norm.length_upper must be >= 0");
  if (!(weights.norm.angle_upper > 0.0)) throw config_error("norm.angle_upper must be > 0");
  const AngleBand& b = angle_band;
  if (!(b.full_lo <= b.peak_lo && b.peak_lo <= b.peak_hi && b.peak_hi <= b.full_hi)) {
    throw config_error("angle_band knots must be non-decreasing");
  }
  if (!(svg.pixels_per_meter > 0.0)) throw config_error("svg.pixels_per_meter must be > 0");
}

PlannerConfig PlannerConfig::from_json_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config is not valid JSON: ") + e.what());
  }
  PlannerConfig cfg;
  {
    Section s(root, "config");
    s.subsection("ball", [&](const json& j, const std::string& p) { parse_ball(j, p, &cfg.ball); });
    s.subsection("motion_ours",
                 [&](const json& j, const std::string& p) { parse_motion(j, p, &cfg.motion_ours); });
    s.subsection("motion_theirs", [&](const json& j, const std::string& p) {
      parse_motion(j, p, &cfg.motion_theirs);
    });
    s.subsection("grid", [&](const json& j, const std::string& p) { parse_grid(j, p, &cfg.grid); });
    s.subsection("pass_weights", [&](const json& j, const std::string& p) {
      parse_pass_weights(j, p, &cfg.weights.pass);
    });
    s.subsection("run_weights", [&](const json& j, const std::string& p) {
      parse_run_weights(j, p, &cfg.weights.run);
    });
    s.subsection("norm", [&](const json& j, const std::string& p) { parse_norm(j, p, &cfg.weights.norm); });
    s.subsection("angle_band", [&](const json& j, const std::string& p) {
      parse_angle_band(j, p, &cfg.angle_band);
    });
    s.subsection("thresholds", [&](const json& j, const std::string& p) {
      parse_thresholds(j, p, &cfg.thresholds);
    });
    s.subsection("svg", [&](const json& j, const std::string& p) { parse_svg(j, p, &cfg.svg); });
  }
  cfg.validate();
  return cfg;
}

PlannerConfig PlannerConfig::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

std::string PlannerConfig::to_json_text() const {
  json root;
  root["ball"] = {{"slide_decel", ball.slide_decel},
                  {"roll_decel", ball.roll_decel},
                  {"transition_ratio", ball.transition_ratio},
                  {"power_min", ball.power_min},
                  {"power_max", ball.power_max},
                  {"chip_flight_fraction", ball.chip_flight_fraction}};
  root["motion_ours"] = {{"max_speed", motion_ours.max_speed},
                         {"max_accel", motion_ours.max_accel},
                         {"max_decel", motion_ours.max_decel}};
  root["motion_theirs"] = {{"max_speed", motion_theirs.max_speed},
                           {"max_accel", motion_theirs.max_accel},
                           {"max_decel", motion_theirs.max_decel}};
  root["grid"] = {{"n_directions", grid.n_directions}, {"n_powers", grid.n_powers},
                  {"power_min", grid.power_min},       {"power_max", grid.power_max},
                  {"flat", grid.flat},                 {"chip", grid.chip}};
  root["pass_weights"] = {{"teammate_time", weights.pass.teammate_time},
                          {"shoot_angle", weights.pass.shoot_angle},
                          {"dist_goal", weights.pass.dist_goal},
                          {"refraction", weights.pass.refraction},
                          {"margin", weights.pass.margin}};
  root["run_weights"] = {{"dist_goal", weights.run.dist_goal},
                         {"dist_ball", weights.run.dist_ball},
                         {"angle", weights.run.angle},
                         {"guard_time", weights.run.guard_time},
                         {"exposure", weights.run.exposure}};
  root["norm"] = {{"length_upper", weights.norm.length_upper}, {"angle_upper", weights.norm.angle_upper}};
  root["angle_band"] = {{"full_lo", angle_band.full_lo},
                        {"peak_lo", angle_band.peak_lo},
                        {"peak_hi", angle_band.peak_hi},
                        {"full_hi", angle_band.full_hi}};
  root["thresholds"] = {{"sbip_dt", thresholds.sbip_dt},
                        {"robot_radius", thresholds.robot_radius},
                        {"safety_margin", thresholds.safety_margin},
                        {"buffer_time", thresholds.buffer_time},
                        {"possession_radius", thresholds.possession_radius},
                        {"angle_threshold", thresholds.angle_threshold},
                        {"shot_power", thresholds.shot_power},
                        {"margin_cap", thresholds.margin_cap},
                        {"possession_dt", thresholds.possession_dt},
                        {"contest_epsilon", thresholds.contest_epsilon},
                        {"grid_step", thresholds.grid_step},
                        {"min_zone_width", thresholds.min_zone_width},
                        {"guard_time_cap", thresholds.guard_time_cap},
                        {"drag_v_min", thresholds.drag_v_min},
                        {"marking_radius", thresholds.marking_radius}};
  root["svg"] = {{"pixels_per_meter", svg.pixels_per_meter},
                 {"field_color", svg.field_color},
                 {"line_color", svg.line_color},
                 {"our_color", svg.our_color},
                 {"their_color", svg.their_color},
                 {"ball_color", svg.ball_color},
                 {"flat_feasible_color", svg.flat_feasible_color},
                 {"chip_feasible_color", svg.chip_feasible_color},
                 {"best_flat_color", svg.best_flat_color},
                 {"best_chip_color", svg.best_chip_color}};
  return root.dump(2) + "\n";
}

}  // namespace passplan
