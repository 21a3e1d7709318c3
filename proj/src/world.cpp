#include "passplan/world.hpp"

#include <set>
#include <string>

#include "passplan/errors.hpp"

namespace passplan {

namespace {

constexpr double kMaxRobotSpeed = 5.0;
constexpr double kFieldApron = 0.5;

void validate_team(const FieldGeometry& f, const std::vector<RobotState>& robots,
                   const char* team_name) {
  if (robots.size() > 16) {
    throw validation_error(std::string(team_name) + ": more than 16 robots (" +
                           std::to_string(robots.size()) + ")");
  }
  std::set<int> ids;
  for (const RobotState& r : robots) {
    if (!ids.insert(r.id).second) {
      throw validation_error(std::string(team_name) + ": duplicate robot id " +
                             std::to_string(r.id));
    }
    const double hx = 0.5 * f.length + kFieldApron;
    const double hy = 0.5 * f.width + kFieldApron;
    if (!(r.position.x >= -hx && r.position.x <= hx && r.position.y >= -hy &&
          r.position.y <= hy)) {
      throw validation_error(std::string(team_name) + ": robot " + std::to_string(r.id) +
                             " outside field bounds");
    }
    if (!(r.velocity.norm() <= kMaxRobotSpeed)) {
      throw validation_error(std::string(team_name) + ": robot " + std::to_string(r.id) +
                             " faster than 5 m/s");
    }
  }
}

}  // namespace

void FieldGeometry::validate() const {
  if (!(length > 0.0) || !(width > 0.0)) throw config_error("field dimensions must be positive");
  if (!(goal_width > 0.0) || goal_width > width) throw config_error("goal_width out of range");
  if (!(defense_depth > 0.0) || defense_depth > length)
    throw config_error("defense_depth out of range");
  if (!(defense_width > 0.0) || defense_width > width)
    throw config_error("defense_width out of range");
}

const RobotState* WorldState::find(Team t, int id) const {
  for (const RobotState& r : team(t)) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

void WorldState::validate() const {
  field.validate();
  const double hx = 0.5 * field.length + kFieldApron;
  const double hy = 0.5 * field.width + kFieldApron;
  if (!(ball.position.x >= -hx && ball.position.x <= hx && ball.position.y >= -hy &&
        ball.position.y <= hy)) {
    throw validation_error("ball outside field bounds");
  }
  validate_team(field, ours, "ours");
  validate_team(field, theirs, "theirs");
}

WorldState mirror_world(const WorldState& w) {
  WorldState m = w;
  m.ball.position.y = -m.ball.position.y;
  m.ball.velocity.y = -m.ball.velocity.y;
  for (auto* team : {&m.ours, &m.theirs}) {
    for (RobotState& r : *team) {
      r.position.y = -r.position.y;
      r.velocity.y = -r.velocity.y;
      r.theta = -r.theta;
    }
  }
  return m;
}

}  // namespace passplan
