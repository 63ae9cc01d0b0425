#include "soccer/defense.hpp"

#include <algorithm>
#include <stdexcept>

namespace soccer {

const FormationRole &FormationSpec::role(int uniform) const {
    if (uniform < 1 || uniform > 11)
        throw std::invalid_argument("formation: unknown uniform " +
                                    std::to_string(uniform));
    return roles[static_cast<std::size_t>(uniform - 1)];
}

void FormationSpec::validate() const {
    for (const auto &r : roles) {
        if (r.attract_x < 0.0 || r.attract_x > 1.0 || r.attract_y < 0.0 ||
            r.attract_y > 1.0)
            throw std::invalid_argument("formation: attraction outside [0,1]");
        if (!r.home.finite())
            throw std::invalid_argument("formation: non-finite home");
    }
}

Vec2 formation_target(const FormationSpec &spec, const Vec2 &ball, int uniform,
                      const FieldSpec &field) {
    const FormationRole &r = spec.role(uniform);
    double x = r.home.x + r.attract_x * ball.x;
    double y = r.home.y + r.attract_y * ball.y;
    x = std::clamp(x, -field.length / 2.0 + 1.0, r.max_x);
    y = std::clamp(y, -field.width / 2.0 + 1.0, field.width / 2.0 - 1.0);
    return {x, y};
}

std::vector<Vec2> opponent_track(const WorldState &tf_world,
                                 const PlayerState &opponent,
                                 const MotionParams &params, int horizon,
                                 const FieldSpec &field, double speed_factor) {
    if (opponent.pos.dist(tf_world.ball.pos) > params.kickable_dist)
        throw std::invalid_argument("opponent_track: opponent lacks the ball");
    Vec2 goal = field.left_goal_center(); // our goal in team frame
    double step = speed_factor * params.player_speed_max;
    std::vector<Vec2> track;
    track.reserve(static_cast<std::size_t>(std::max(horizon, 0)));
    Vec2 cur = opponent.pos;
    for (int c = 0; c < horizon; ++c) {
        Vec2 diff = goal - cur;
        double d = diff.norm();
        if (d <= step) {
            cur = goal; // truncated at the goal line
        } else {
            cur = cur + diff * (step / d);
        }
        track.push_back(cur);
    }
    return track;
}

std::optional<BlockPlan> compute_block_point(const WorldState &tf_world,
                                             const PlayerState &defender,
                                             const PlayerState &opponent,
                                             const MotionParams &params,
                                             const BlockParams &block,
                                             const FieldSpec &field) {
    if (defender.stamina < params.stamina_block_threshold) return std::nullopt;
    auto track = opponent_track(tf_world, opponent, params, block.horizon, field,
                                block.dribble_speed_factor);
    for (int i = 0; i < static_cast<int>(track.size()); ++i) {
        int opp_cycles = i + 1;
        int def_cycles = cycles_to_reach(defender, track[i], params);
        if (def_cycles > opp_cycles) continue;
        if (defender.pos.dist(track[i]) > block.max_block_dist)
            return std::nullopt; // too far to approach
        BlockPlan plan;
        plan.blocker = defender.uniform;
        plan.target_opponent = opponent.id();
        plan.block_point = track[i];
        plan.blocker_cycles = def_cycles;
        plan.opponent_cycles = opp_cycles;
        plan.mode = choose_block_mode(plan, defender, opponent, params, field);
        return plan;
    }
    return std::nullopt;
}

BlockMode choose_block_mode(const BlockPlan & /*plan*/,
                            const PlayerState &defender,
                            const PlayerState &opponent,
                            const MotionParams &params, const FieldSpec &field) {
    double penalty_x = -field.length / 2.0 + 16.5;
    if (opponent.pos.dist(defender.pos) <= 2.0 * params.kickable_dist)
        return BlockMode::Press;
    if (opponent.pos.x < penalty_x) return BlockMode::Press;
    return BlockMode::Wait;
}

std::optional<BlockPlan> assign_blocker(const WorldState &tf_world,
                                        const MotionParams &params,
                                        const BlockParams &block,
                                        const FieldSpec &field) {
    // the carrier: nearest opposing player in kickable range
    const PlayerState *carrier = nullptr;
    const PlayerState *any_owner = nullptr;
    for (const auto &p : tf_world.players) {
        if (p.pos.dist(tf_world.ball.pos) > params.kickable_dist) continue;
        if (!any_owner || p.pos.dist(tf_world.ball.pos) <
                              any_owner->pos.dist(tf_world.ball.pos))
            any_owner = &p;
    }
    if (!any_owner)
        throw std::invalid_argument("assign_blocker: no opponent possesses the ball");
    carrier = any_owner;
    TeamSide defending = opposite(carrier->side);

    std::optional<BlockPlan> best;
    for (const auto &d : tf_world.players) {
        if (d.side != defending) continue;
        auto plan = compute_block_point(tf_world, d, *carrier, params, block, field);
        if (!plan) continue;
        if (!best || plan->blocker_cycles < best->blocker_cycles ||
            (plan->blocker_cycles == best->blocker_cycles &&
             plan->blocker < best->blocker))
            best = plan;
    }
    return best;
}

} // namespace soccer
