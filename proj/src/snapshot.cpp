#include "passplan/snapshot.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "passplan/errors.hpp"

namespace passplan {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& where,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  for (const char* key : required) {
    if (!obj.contains(key)) throw schema_error(where + ": missing key '" + key + "'");
  }
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : required) known = known || item.key() == key;
    for (const char* key : optional) known = known || item.key() == key;
    if (!known) throw schema_error(where + ": unknown key '" + item.key() + "'");
  }
}

double get_number(const json& obj, const std::string& where, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_number()) throw schema_error(where + ": '" + key + "' must be a number");
  return v.get<double>();
}

int get_int(const json& obj, const std::string& where, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw schema_error(where + ": '" + key + "' must be an integer");
  return v.get<int>();
}

std::vector<RobotState> parse_team(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw schema_error(where + ": must be an array");
  std::vector<RobotState> robots;
  robots.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& r = arr[i];
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!r.is_object()) throw schema_error(at + ": must be an object");
    require_keys(r, at, {"id", "x", "y", "vx", "vy", "theta"});
    RobotState robot;
    robot.id = get_int(r, at, "id");
    robot.position = {get_number(r, at, "x"), get_number(r, at, "y")};
    robot.velocity = {get_number(r, at, "vx"), get_number(r, at, "vy")};
    robot.theta = get_number(r, at, "theta");
    robots.push_back(robot);
  }
  return robots;
}

json robot_to_json(const RobotState& r) {
  return json{{"id", r.id},          {"x", r.position.x},  {"y", r.position.y},
              {"vx", r.velocity.x},  {"vy", r.velocity.y}, {"theta", r.theta}};
}

}  // namespace

WorldState parse_world_snapshot(const std::string& bytes) {
  json root;
  try {
    root = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw schema_error(std::string("snapshot is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw schema_error("snapshot: top level must be an object");
  require_keys(root, "snapshot", {"field", "ball", "ours", "theirs"});

  WorldState w;

  const json& field = root.at("field");
  if (!field.is_object()) throw schema_error("field: must be an object");
  require_keys(field, "field", {},
               {"length", "width", "goal_width", "defense_depth", "defense_width"});
  if (field.contains("length")) w.field.length = get_number(field, "field", "length");
  if (field.contains("width")) w.field.width = get_number(field, "field", "width");
  if (field.contains("goal_width")) w.field.goal_width = get_number(field, "field", "goal_width");
  if (field.contains("defense_depth"))
    w.field.defense_depth = get_number(field, "field", "defense_depth");
  if (field.contains("defense_width"))
    w.field.defense_width = get_number(field, "field", "defense_width");

  const json& ball = root.at("ball");
  if (!ball.is_object()) throw schema_error("ball: must be an object");
  require_keys(ball, "ball", {"x", "y", "vx", "vy"});
  w.ball.position = {get_number(ball, "ball", "x"), get_number(ball, "ball", "y")};
  w.ball.velocity = {get_number(ball, "ball", "vx"), get_number(ball, "ball", "vy")};

  w.ours = parse_team(root.at("ours"), "ours");
  w.theirs = parse_team(root.at("theirs"), "theirs");

  w.validate();
  return w;
}

WorldState load_world_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw schema_error("cannot open snapshot file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_world_snapshot(buf.str());
}

std::string serialize_world_snapshot(const WorldState& w) {
  json root;
  root["field"] = {{"length", w.field.length},
                   {"width", w.field.width},
                   {"goal_width", w.field.goal_width},
                   {"defense_depth", w.field.defense_depth},
                   {"defense_width", w.field.defense_width}};
  root["ball"] = {{"x", w.ball.position.x},
                  {"y", w.ball.position.y},
                  {"vx", w.ball.velocity.x},
                  {"vy", w.ball.velocity.y}};
  root["ours"] = json::array();
  for (const RobotState& r : w.ours) root["ours"].push_back(robot_to_json(r));
  root["theirs"] = json::array();
  for (const RobotState& r : w.theirs) root["theirs"].push_back(robot_to_json(r));
  return root.dump(2) + "\n";
}

}  // namespace passplan
