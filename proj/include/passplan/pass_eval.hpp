#pragma once

#include <optional>
#include <utility>

#include "passplan/dpps.hpp"
#include "passplan/world.hpp"

namespace passplan {

struct PlannerConfig;

struct PassFeatures {
  double teammate_intercept_time = 0.0;  ///< s, raw
  double shoot_angle_at_receive = 0.0;   ///< rad, raw (normalized inside the score)
  double dist_receive_to_goal = 0.0;     ///< m, raw
  double refraction_angle = 0.0;         ///< rad between incoming ball and shot line
  double intercept_margin = 0.0;         ///< first_opp - first_our, margin_cap when opp = Never
};

/// Widest unobstructed view of the goal mouth from a point. The window is a
/// y-interval on the goal line; target is its midpoint.
struct GoalView {
  double angle = 0.0;  ///< radians; 0 when fully occluded or behind the line
  double window_lo = 0.0;
  double window_hi = 0.0;
  Vec2 target;
};

/// Opponents are discs of robot_radius occluding segments from `point` to
/// the goal line. Blocked intervals are found by bisection on the exact
/// segment-disc distance predicate over a y-symmetric sample set, so a
/// mirrored world produces the bitwise-mirrored view.
GoalView goal_view(Vec2 point, const WorldState& world, double robot_radius);

/// Angular width of the widest open goal window (0 when fully occluded).
double shoot_angle(Vec2 point, const WorldState& world, double robot_radius = 0.09);

/// Weighted feature score of a feasible candidate. Lengths and angles are
/// normalized by the configured upper bounds and clamped to [0, 1]; times
/// stay raw. Smaller-is-better features enter negated. Throws domain_error
/// for an infeasible candidate.
std::pair<double, PassFeatures> score_pass(const PassCandidate& candidate,
                                           const WorldState& world, const PlannerConfig& cfg);

struct ScoredPass {
  PassCandidate candidate;
  double score = 0.0;
  PassFeatures features;
};

/// Argmax of score_pass over the feasible cells; ties break on
/// (kick_type flat < chip, dir_index, power_index). nullopt = no feasible
/// pass exists.
std::optional<ScoredPass> best_pass(const CandidateGrid& g, const WorldState& world,
                                    const PlannerConfig& cfg);

/// Same search restricted to one kick type when `only` is set.
std::optional<ScoredPass> best_pass(const CandidateGrid& g, const WorldState& world,
                                    const PlannerConfig& cfg, std::optional<KickType> only);

enum class ShotReason { angle_too_small, interceptable, clear };

struct ShotDecision {
  bool shoot = false;
  double shot_angle = 0.0;
  Vec2 shot_target;
  bool blocked = false;  ///< equivalent to !shoot
  ShotReason reason = ShotReason::clear;
};

/// Shoot iff the open goal window is at least angle_threshold wide and no
/// opponent can intercept a shot at shot_power before it crosses the goal
/// line. The shot originates at the ball when the shooter possesses it
/// (within possession_radius), else at the shooter itself.
ShotDecision decide_shot(const RobotState& shooter, const WorldState& world,
                         const PlannerConfig& cfg);

enum class KickOrder { robot_first, kick_first };

struct FreeKickPlan {
  double t_ball = 0.0;   ///< ball travel time to the receive point
  double t_robot = 0.0;  ///< receiver travel time to the receive point
  KickOrder order = KickOrder::kick_first;
  double kick_delay = 0.0;  ///< max(0, t_robot - t_ball): wait so both arrive together
};

/// Times the kick against the receiver's run so ball and robot reach the
/// receive point simultaneously (the receiver waits when it is faster).
FreeKickPlan plan_free_kick(const WorldState& world, int kicker_id, const PassCandidate& target,
                            const PlannerConfig& cfg);

enum class PossessionSide { ours, theirs, contested };

struct PossessionReport {
  PossessionSide side = PossessionSide::contested;
  std::optional<double> our_time;    ///< fastest teammate intercept of the rolling ball
  std::optional<double> their_time;  ///< fastest opponent intercept
};

/// Whoever can intercept the ball's current free-rolling trajectory sooner
/// possesses it; within contest_epsilon (or when neither side can) it is
/// contested. Sampled at thresholds.possession_dt.
PossessionReport possession(const WorldState& world, const PlannerConfig& cfg);

}  // namespace passplan
