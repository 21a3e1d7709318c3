#pragma once

#include <optional>
#include <string>
#include <vector>

#include "passplan/config.hpp"
#include "passplan/csv.hpp"
#include "passplan/dpps.hpp"
#include "passplan/world.hpp"

namespace passplan {

/// Field, robots, ball, one cross per feasible cell (cyan flat, orange
/// chip), and a kick line to the best receive point per kick type (green
/// flat, yellow chip). Output is byte-stable: fixed precision, fixed element
/// order, no timestamps.
std::string render_plan_svg(const WorldState& world, const CandidateGrid& grid,
                            const std::optional<PassCandidate>& best_flat,
                            const std::optional<PassCandidate>& best_chip, const SvgStyle& style);

/// Colored value dots over the field, blue = lowest to red = highest in this
/// point set. Same byte-stability guarantees as render_plan_svg.
std::string render_heatmap_svg(const WorldState& world, const std::vector<HeatPoint>& points,
                               double cell_size_m, const SvgStyle& style);

}  // namespace passplan
