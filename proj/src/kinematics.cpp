#include "soccer/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace soccer {

void MotionParams::validate() const {
    if (!(ball_decay > 0.0) || !(ball_decay < 1.0))
        throw std::invalid_argument("motion: ball_decay must be in (0,1)");
    if (!(ball_speed_max > 0.0) || !(player_speed_max > 0.0) ||
        !(kickable_dist > 0.0))
        throw std::invalid_argument("motion: speeds and distances must be positive");
}

BallState step_ball(const BallState &ball, const MotionParams &params) {
    BallState out;
    out.pos = ball.pos + ball.vel;
    out.vel = ball.vel * params.ball_decay;
    return out;
}

int cycles_to_reach(const PlayerState &player, const Vec2 &target,
                    const MotionParams &params) {
    double d = player.pos.dist(target);
    if (d <= params.kickable_dist) return 0;
    return 1 + static_cast<int>(
                   std::ceil((d - params.kickable_dist) / params.player_speed_max));
}

std::optional<InterceptOutcome> predict_interception(const WorldState &world,
                                                     const MotionParams &params,
                                                     int horizon) {
    if (horizon < 1) throw std::invalid_argument("predict_interception: horizon < 1");
    BallState ball = world.ball;
    for (int c = 0; c <= horizon; ++c) {
        const PlayerState *best = nullptr;
        double best_residual = 0.0;
        for (const auto &p : world.players) {
            if (world.last_kicker && p.id() == *world.last_kicker) continue;
            if (cycles_to_reach(p, ball.pos, params) > c) continue;
            double residual = p.pos.dist(ball.pos);
            if (!best) {
                best = &p;
                best_residual = residual;
                continue;
            }
            if (residual < best_residual) {
                best = &p;
                best_residual = residual;
                continue;
            }
            if (residual > best_residual) continue;
            // equal residual: opponents of the kicker first, then lower
            // uniform, then Left
            if (world.last_kicker) {
                bool p_opp = p.side != world.last_kicker->side;
                bool b_opp = best->side != world.last_kicker->side;
                if (p_opp != b_opp) {
                    if (p_opp) { best = &p; best_residual = residual; }
                    continue;
                }
            }
            if (p.uniform < best->uniform ||
                (p.uniform == best->uniform && p.side == TeamSide::Left &&
                 best->side == TeamSide::Right)) {
                best = &p;
                best_residual = residual;
            }
        }
        if (best) return InterceptOutcome{best->id(), c, ball.pos};
        ball = step_ball(ball, params);
    }
    return std::nullopt;
}

double kick_speed_for(double distance, int n, double ball_decay) {
    if (n < 1) throw std::invalid_argument("kick_speed_for: arrival_cycles < 1");
    double k = ball_decay;
    return distance * (1.0 - k) / (1.0 - std::pow(k, n));
}

Vec2 kick_velocity_for(const Vec2 &from, const Vec2 &target, int arrival_cycles,
                       const MotionParams &params) {
    if (arrival_cycles < 1)
        throw std::invalid_argument("kick_velocity_for: arrival_cycles < 1");
    Vec2 diff = target - from;
    double d = diff.norm();
    if (d <= 0.0)
        throw std::invalid_argument("kick_velocity_for: from equals target");
    double speed = kick_speed_for(d, arrival_cycles, params.ball_decay);
    if (speed > params.ball_speed_max) speed = params.ball_speed_max;
    return diff * (speed / d);
}

} // namespace soccer
