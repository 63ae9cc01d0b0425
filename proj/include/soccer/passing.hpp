#ifndef SOCCER_PASSING_HPP
#define SOCCER_PASSING_HPP

#include "soccer/kinematics.hpp"

#include <optional>
#include <vector>

namespace soccer {

struct PassFactorWeights {
    double c_lane = 2.0;
    double c_progress = 1.0;
    double c_receiver_space = 1.0;
    double c_length = 0.5;

    void validate() const;
};

struct PassFactors {
    double e_lane = 0.0;           // min opponent distance to the pass segment / 10
    double e_progress = 0.0;       // forward gain over the ball, 40 m window
    double e_receiver_space = 0.0; // min opponent distance to the target / 10
    double e_length = 0.0;         // 1 - pass length / 40
};

enum class PassKind { Direct, Through };

struct PassCandidate {
    PassKind kind = PassKind::Direct;
    Vec2 target;
    int receiver = 0;
    double initial_speed = 0.0;
    int arrival_cycles = 1;
    double score = 0.0;
};

struct ThroughPassParams {
    int t_start = 35;       // degrees, inclusive
    int t_floor = 3;        // degrees, exclusive
    int r_count = 5;
    double radius_step = 3.0; // meters
    bool mirror = true;

    void validate() const;
};

PassFactors compute_pass_factors(const WorldState &tf_world,
                                 const PlayerState &passer, const Vec2 &target,
                                 const PlayerState &receiver,
                                 const MotionParams &params);

double score_direct_pass(const PassFactors &factors,
                         const PassFactorWeights &weights);

std::optional<PassCandidate> best_direct_pass(const WorldState &tf_world,
                                              const PlayerState &passer,
                                              const PassFactorWeights &weights,
                                              const MotionParams &params,
                                              const FieldSpec &field);

// Polar fan of candidate points around the teammate-to-goal direction.
// t runs t_start down to t_floor+1; within each t, radii longest first;
// +t before -t when mirrored.
std::vector<Vec2> generate_through_targets(const PlayerState &teammate,
                                           const Vec2 &goal,
                                           const ThroughPassParams &p);

std::optional<PassCandidate> find_through_pass(const WorldState &tf_world,
                                               const PlayerState &passer,
                                               const ThroughPassParams &p,
                                               const MotionParams &params,
                                               const FieldSpec &field);

Vec2 offside_hold_target(const WorldState &tf_world, const PlayerState &player,
                         double margin, const FieldSpec &field);

// world after `passer` kicks the ball with `vel` from the current ball
// position; used for receiver-first interception checks
WorldState after_kick(const WorldState &world, const PlayerState &passer,
                      const Vec2 &vel);

} // namespace soccer

#endif
