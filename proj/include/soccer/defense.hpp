#ifndef SOCCER_DEFENSE_HPP
#define SOCCER_DEFENSE_HPP

#include "soccer/kinematics.hpp"

#include <array>
#include <optional>
#include <vector>

namespace soccer {

struct FormationRole {
    Vec2 home;              // team frame
    double attract_x = 0.0; // [0,1]
    double attract_y = 0.0; // [0,1]
    double max_x = 0.0;     // forward cap
};

struct FormationSpec {
    std::array<FormationRole, 11> roles; // index = uniform - 1

    const FormationRole &role(int uniform) const;
    void validate() const;
};

Vec2 formation_target(const FormationSpec &spec, const Vec2 &ball, int uniform,
                      const FieldSpec &field);

struct BlockParams {
    double max_block_dist = 30.0;     // "not too far" gate
    double dribble_speed_factor = 0.7; // carrier speed relative to a free run
    int horizon = 50;
};

// Predicted carrier positions for cycles 1..horizon: straight line toward
// our goal center at dribble_speed_factor * player_speed_max, truncated at
// the goal line.
std::vector<Vec2> opponent_track(const WorldState &tf_world,
                                 const PlayerState &opponent,
                                 const MotionParams &params, int horizon,
                                 const FieldSpec &field,
                                 double speed_factor = 0.7);

enum class BlockMode { Wait, Press };

struct BlockPlan {
    int blocker = 0; // defender uniform
    PlayerId target_opponent;
    Vec2 block_point;
    int blocker_cycles = 0;
    int opponent_cycles = 0;
    BlockMode mode = BlockMode::Wait;
};

std::optional<BlockPlan> compute_block_point(const WorldState &tf_world,
                                             const PlayerState &defender,
                                             const PlayerState &opponent,
                                             const MotionParams &params,
                                             const BlockParams &block,
                                             const FieldSpec &field);

BlockMode choose_block_mode(const BlockPlan &plan, const PlayerState &defender,
                            const PlayerState &opponent,
                            const MotionParams &params, const FieldSpec &field);

// One blocker for the whole defending side: the feasible plan with the
// fewest blocker cycles, ties by lower uniform.
std::optional<BlockPlan> assign_blocker(const WorldState &tf_world,
                                        const MotionParams &params,
                                        const BlockParams &block,
                                        const FieldSpec &field);

} // namespace soccer

#endif
