#pragma once

#include <string>
#include <vector>

#include "passplan/dpps.hpp"
#include "passplan/offball.hpp"
#include "passplan/vec2.hpp"

namespace passplan {

/// Shortest round-trippable decimal form (%.17g); +infinity prints as
/// "never", matching the no-intercept sentinel in grid CSVs.
std::string format_double(double v);

/// Inverse of format_double. Throws schema_error on anything else.
double parse_double_field(const std::string& field);

/// One row per cell in canonical (kick_type, dir_index, power_index) order:
/// kick_type,dir_index,power_index,angle,power,our_id,our_time,opp_id,
/// opp_time,receive_x,receive_y,feasible
std::string grid_to_csv(const CandidateGrid& g);

/// Rebuilds a grid from its CSV, enough to render or diff it: dimensions and
/// power table are inferred from the rows, directions recomputed from the
/// direction count. Kicker id, ball origin and telemetry are not stored in
/// the CSV and come back defaulted. Throws schema_error with a line number
/// on malformed input.
CandidateGrid grid_from_csv(const std::string& text);

struct HeatPoint {
  Vec2 point;
  double value = 0.0;
};

/// x,y,value rows in input order.
std::string heatmap_to_csv(const std::vector<HeatPoint>& points);
std::vector<HeatPoint> heatmap_from_csv(const std::string& text);

struct RunHeatRow {
  Vec2 point;
  RunningPointFeatures features;
  double score = 0.0;
};

/// x,y,dist_goal,dist_ball,angle_goal,guard_time,exposure,score — one row
/// per lattice vertex, every criterion in its own column so each can be
/// rendered on its own as well as the weighted total.
std::string run_heatmap_to_csv(const std::vector<RunHeatRow>& rows);
std::vector<RunHeatRow> run_heatmap_from_csv(const std::string& text);

/// Whole-file read; throws config_error when the file cannot be opened.
std::string read_text_file(const std::string& path);

/// Atomic whole-file write: writes path + ".tmp" then renames over path, so
/// readers never observe a half-written file.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace passplan
