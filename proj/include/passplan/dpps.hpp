#pragma once

#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "passplan/ball_model.hpp"
#include "passplan/vec2.hpp"
#include "passplan/world.hpp"

namespace passplan {

struct PlannerConfig;

/// Candidate enumeration: direction k maps to angle -pi + k*(2*pi/n),
/// power j to power_min + j*(power_max - power_min)/(n_powers - 1),
/// endpoints inclusive.
struct SearchGrid {
  int n_directions = 128;
  int n_powers = 64;
  double power_min = 1.0;
  double power_max = 6.5;
  bool flat = true;
  bool chip = true;

  int kick_type_count() const { return (flat ? 1 : 0) + (chip ? 1 : 0); }
  std::vector<KickType> kick_types() const;
  void validate() const;  ///< throws config_error on zero sizes or a bad power range
};

inline double direction_angle(int k, int n_directions) {
  return -std::numbers::pi + k * (2.0 * std::numbers::pi / n_directions);
}

/// Unit direction vectors for every index. Built half-circle-symmetrized:
/// dirs[(n-k) % n] is exactly (dirs[k].x, -dirs[k].y), and dirs[0] is exactly
/// (-1, 0), so a y-mirrored world maps candidates to mirrored indices with
/// bit-identical arithmetic.
std::vector<Vec2> direction_table(int n_directions);

std::vector<double> power_table(int n_powers, double power_min, double power_max);

constexpr double kNever = std::numeric_limits<double>::infinity();

struct PassCandidate {
  KickType kick_type = KickType::flat;
  int dir_index = 0;
  int power_index = 0;
  int our_id = -1;           ///< first intercepting teammate (kicker excluded)
  double our_time = kNever;  ///< kNever when no teammate can intercept
  int opp_id = -1;
  double opp_time = kNever;
  Vec2 receive_point;  ///< ball position at our_time; meaningful iff our_time finite
  bool feasible = false;
};

struct DppsTelemetry {
  std::uint64_t sbip_calls = 0;
  double wall_ms = 0.0;
  int workers = 1;
  std::string kernel;
  bool kicker_in_possession = true;  ///< false = precondition warning
};

struct CandidateGrid {
  SearchGrid grid;
  int kicker_id = -1;
  Vec2 ball_origin;
  std::vector<KickType> kick_types;  ///< major axis of `cells`
  std::vector<Vec2> directions;
  std::vector<double> powers;
  std::vector<PassCandidate> cells;  ///< [kick_type][dir_index][power_index]
  DppsTelemetry telemetry;

  int cell_index(int kick_type_slot, int dir, int power) const {
    return (kick_type_slot * grid.n_directions + dir) * grid.n_powers + power;
  }
  const PassCandidate& at(int kick_type_slot, int dir, int power) const {
    return cells[cell_index(kick_type_slot, dir, power)];
  }
};

/// Dense pass search: for every (kick type, direction, power) cell, kick the
/// ball from its current position and run interception prediction for every
/// robot on the field. Cells are evaluated data-parallel on `workers`
/// threads; the output is bit-identical for any worker count. Throws
/// validation_error when kicker_id is not on team ours.
CandidateGrid run_dpps(const WorldState& world, int kicker_id, const SearchGrid& grid,
                       const PlannerConfig& cfg, int workers);

/// Single plain loop over cells, sharing the per-cell evaluator with
/// run_dpps; the correctness oracle for the parallel path.
CandidateGrid run_dpps_serial(const WorldState& world, int kicker_id, const SearchGrid& grid,
                              const PlannerConfig& cfg);

/// All feasible candidates ordered by (kick_type, dir_index, power_index).
std::vector<PassCandidate> feasible_candidates(const CandidateGrid& g);

/// Cell-for-cell bitwise comparison (ids, times, receive points,
/// feasibility); telemetry is ignored.
bool grids_identical(const CandidateGrid& a, const CandidateGrid& b);

}  // namespace passplan
