#include "passplan/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "passplan/errors.hpp"

namespace passplan {
namespace {

constexpr char kGridHeader[] =
    "kick_type,dir_index,power_index,angle,power,our_id,our_time,opp_id,opp_time,"
    "receive_x,receive_y,feasible";

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start < text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string::npos) nl = text.size();
    std::string line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(std::move(line));
    start = nl + 1;
  }
  return out;
}

[[noreturn]] void bad_row(size_t line_no, const std::string& what) {
  throw schema_error("csv line " + std::to_string(line_no) + ": " + what);
}

int parse_int_field(const std::string& field, size_t line_no) {
  if (field.empty()) bad_row(line_no, "empty integer field");
  char* end = nullptr;
  const long v = std::strtol(field.c_str(), &end, 10);
  if (end != field.c_str() + field.size()) bad_row(line_no, "bad integer '" + field + "'");
  return static_cast<int>(v);
}

double parse_double_at(const std::string& field, size_t line_no) {
  try {
    return parse_double_field(field);
  } catch (const Error& e) {
    bad_row(line_no, e.what());
  }
}

}  // namespace

std::string format_double(double v) {
  if (std::isinf(v) && v > 0.0) return "never";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double_field(const std::string& field) {
  if (field == "never") return kNever;
  if (field.empty()) throw schema_error("empty number field");
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (end != field.c_str() + field.size()) throw schema_error("bad number '" + field + "'");
  return v;
}

std::string grid_to_csv(const CandidateGrid& g) {
  std::string out = kGridHeader;
  out += '\n';
  for (const PassCandidate& c : g.cells) {
    out += c.kick_type == KickType::flat ? "flat" : "chip";
    out += ',';
    out += std::to_string(c.dir_index);
    out += ',';
    out += std::to_string(c.power_index);
    out += ',';
    out += format_double(direction_angle(c.dir_index, g.grid.n_directions));
    out += ',';
    out += format_double(g.powers[static_cast<size_t>(c.power_index)]);
    out += ',';
    out += std::to_string(c.our_id);
    out += ',';
    out += format_double(c.our_time);
    out += ',';
    out += std::to_string(c.opp_id);
    out += ',';
    out += format_double(c.opp_time);
    out += ',';
    out += format_double(c.receive_point.x);
    out += ',';
    out += format_double(c.receive_point.y);
    out += ',';
    out += c.feasible ? '1' : '0';
    out += '\n';
  }
  return out;
}

CandidateGrid grid_from_csv(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw schema_error("csv: empty input");
  if (lines[0] != kGridHeader) throw schema_error("csv line 1: unexpected header");

  struct Row {
    PassCandidate cell;
    double power = 0.0;
  };
  std::vector<Row> rows;
  rows.reserve(lines.size() - 1);
  int n_dirs = 0, n_powers = 0;
  bool has_flat = false, has_chip = false;
  for (size_t i = 1; i < lines.size(); ++i) {
    const size_t line_no = i + 1;
    const auto f = split_fields(lines[i]);
    if (f.size() != 12) bad_row(line_no, "expected 12 fields");
    Row r;
    if (f[0] == "flat") {
      r.cell.kick_type = KickType::flat;
      has_flat = true;
    } else if (f[0] == "chip") {
      r.cell.kick_type = KickType::chip;
      has_chip = true;
    } else {
      bad_row(line_no, "unknown kick type '" + f[0] + "'");
    }
    r.cell.dir_index = parse_int_field(f[1], line_no);
    r.cell.power_index = parse_int_field(f[2], line_no);
    parse_double_at(f[3], line_no);  // angle is derivable; validate only
    r.power = parse_double_at(f[4], line_no);
    r.cell.our_id = parse_int_field(f[5], line_no);
    r.cell.our_time = parse_double_at(f[6], line_no);
    r.cell.opp_id = parse_int_field(f[7], line_no);
    r.cell.opp_time = parse_double_at(f[8], line_no);
    r.cell.receive_point.x = parse_double_at(f[9], line_no);
    r.cell.receive_point.y = parse_double_at(f[10], line_no);
    if (f[11] == "1") {
      r.cell.feasible = true;
    } else if (f[11] == "0") {
      r.cell.feasible = false;
    } else {
      bad_row(line_no, "feasible must be 0 or 1");
    }
    if (r.cell.dir_index < 0 || r.cell.power_index < 0) bad_row(line_no, "negative index");
    n_dirs = std::max(n_dirs, r.cell.dir_index + 1);
    n_powers = std::max(n_powers, r.cell.power_index + 1);
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw schema_error("csv: no data rows");

  CandidateGrid g;
  g.grid.n_directions = n_dirs;
  g.grid.n_powers = n_powers;
  g.grid.flat = has_flat;
  g.grid.chip = has_chip;
  if (has_flat) g.kick_types.push_back(KickType::flat);
  if (has_chip) g.kick_types.push_back(KickType::chip);
  g.directions = direction_table(n_dirs);
  g.powers.assign(static_cast<size_t>(n_powers), 0.0);
  const size_t expected = g.kick_types.size() * static_cast<size_t>(n_dirs) *
                          static_cast<size_t>(n_powers);
  if (rows.size() != expected) {
    throw schema_error("csv: " + std::to_string(rows.size()) + " rows, expected " +
                       std::to_string(expected));
  }
  g.cells.assign(expected, PassCandidate{});
  for (const Row& r : rows) {
    int slot = 0;
    if (r.cell.kick_type == KickType::chip && has_flat) slot = 1;
    const size_t idx = static_cast<size_t>(g.cell_index(slot, r.cell.dir_index, r.cell.power_index));
    g.cells[idx] = r.cell;
    g.powers[static_cast<size_t>(r.cell.power_index)] = r.power;
  }
  g.grid.power_min = g.powers.front();
  g.grid.power_max = g.powers.back();
  return g;
}

std::string heatmap_to_csv(const std::vector<HeatPoint>& points) {
  std::string out = "x,y,value\n";
  for (const HeatPoint& p : points) {
    out += format_double(p.point.x);
    out += ',';
    out += format_double(p.point.y);
    out += ',';
    out += format_double(p.value);
    out += '\n';
  }
  return out;
}

std::vector<HeatPoint> heatmap_from_csv(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "x,y,value") throw schema_error("csv line 1: expected x,y,value");
  std::vector<HeatPoint> out;
  out.reserve(lines.size() - 1);
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto f = split_fields(lines[i]);
    if (f.size() != 3) bad_row(i + 1, "expected 3 fields");
    HeatPoint p;
    p.point.x = parse_double_at(f[0], i + 1);
    p.point.y = parse_double_at(f[1], i + 1);
    p.value = parse_double_at(f[2], i + 1);
    out.push_back(p);
  }
  return out;
}

std::string run_heatmap_to_csv(const std::vector<RunHeatRow>& rows) {
  std::string out = "x,y,dist_goal,dist_ball,angle_goal,guard_time,exposure,score\n";
  for (const RunHeatRow& r : rows) {
    out += format_double(r.point.x);
    out += ',';
    out += format_double(r.point.y);
    out += ',';
    out += format_double(r.features.dist_to_goal);
    out += ',';
    out += format_double(r.features.dist_to_ball);
    out += ',';
    out += format_double(r.features.angle_to_goal);
    out += ',';
    out += format_double(r.features.guard_time);
    out += ',';
    out += format_double(r.features.defense_exposure);
    out += ',';
    out += format_double(r.score);
    out += '\n';
  }
  return out;
}

std::vector<RunHeatRow> run_heatmap_from_csv(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "x,y,dist_goal,dist_ball,angle_goal,guard_time,exposure,score") {
    throw schema_error("csv line 1: unexpected run-heatmap header");
  }
  std::vector<RunHeatRow> out;
  out.reserve(lines.size() - 1);
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto f = split_fields(lines[i]);
    if (f.size() != 8) bad_row(i + 1, "expected 8 fields");
    RunHeatRow r;
    r.point.x = parse_double_at(f[0], i + 1);
    r.point.y = parse_double_at(f[1], i + 1);
    r.features.dist_to_goal = parse_double_at(f[2], i + 1);
    r.features.dist_to_ball = parse_double_at(f[3], i + 1);
    r.features.angle_to_goal = parse_double_at(f[4], i + 1);
    r.features.guard_time = parse_double_at(f[5], i + 1);
    r.features.defense_exposure = parse_double_at(f[6], i + 1);
    r.score = parse_double_at(f[7], i + 1);
    out.push_back(r);
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw config_error("cannot write " + tmp);
    out << text;
    if (!out.flush()) throw config_error("short write to " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw config_error("cannot rename " + tmp + " to " + path + ": " + ec.message());
}

}  // namespace passplan
