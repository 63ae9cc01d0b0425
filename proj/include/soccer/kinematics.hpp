#ifndef SOCCER_KINEMATICS_HPP
#define SOCCER_KINEMATICS_HPP

#include "soccer/world.hpp"

#include <optional>

namespace soccer {

struct MotionParams {
    double ball_decay = 0.94;
    double ball_speed_max = 3.0;
    double player_speed_max = 1.05;
    double kickable_dist = 1.085;
    double dash_stamina_cost = 60.0;
    double stamina_recovery = 45.0;
    double stamina_block_threshold = 2600.0;

    void validate() const;
};

struct InterceptOutcome {
    PlayerId reacher;
    int cycle = 0;
    Vec2 point; // free-rolling ball position at `cycle`
};

// one cycle of free rolling: pos += vel, vel *= decay
BallState step_ball(const BallState &ball, const MotionParams &params);

// point-mover reach time: 0 when already kickable, otherwise a flat 1-cycle
// turn penalty plus full-speed travel
int cycles_to_reach(const PlayerState &player, const Vec2 &target,
                    const MotionParams &params);

// First player to reach the free-rolling ball within `horizon` cycles.
// The player recorded as last_kicker is excluded (the kicker is never his
// own interception candidate). Ties at the same cycle go to the smaller
// residual distance, then to opponents of the last kicker's side, then to
// the lower uniform number, then Left.
std::optional<InterceptOutcome> predict_interception(const WorldState &world,
                                                     const MotionParams &params,
                                                     int horizon = 50);

// unclamped initial speed so a ball kicked from rest covers `distance`
// in exactly `n` cycles: d * (1-k) / (1-k^n)
double kick_speed_for(double distance, int n, double ball_decay);

// initial velocity toward target, magnitude clamped to ball_speed_max;
// callers check feasibility by comparing kick_speed_for against the cap
Vec2 kick_velocity_for(const Vec2 &from, const Vec2 &target, int arrival_cycles,
                       const MotionParams &params);

} // namespace soccer

#endif
