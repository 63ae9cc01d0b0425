#ifndef SOCCER_WORLD_HPP
#define SOCCER_WORLD_HPP

#include "soccer/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace soccer {

enum class TeamSide { Left, Right };

inline TeamSide opposite(TeamSide s) {
    return s == TeamSide::Left ? TeamSide::Right : TeamSide::Left;
}

inline const char *side_name(TeamSide s) {
    return s == TeamSide::Left ? "left" : "right";
}

inline char side_char(TeamSide s) { return s == TeamSide::Left ? 'L' : 'R'; }

struct FieldSpec {
    double length = 105.0;
    double width = 68.0;
    double goal_width = 14.02;

    Vec2 left_goal_center() const { return {-length / 2.0, 0.0}; }
    Vec2 right_goal_center() const { return {length / 2.0, 0.0}; }

    bool contains(const Vec2 &p, double margin = 0.0) const {
        return p.x >= -length / 2.0 - margin && p.x <= length / 2.0 + margin &&
               p.y >= -width / 2.0 - margin && p.y <= width / 2.0 + margin;
    }

    void validate() const; // throws std::invalid_argument
};

struct PlayerId {
    TeamSide side = TeamSide::Left;
    int uniform = 1;

    bool operator==(const PlayerId &o) const {
        return side == o.side && uniform == o.uniform;
    }
};

struct PlayerState {
    TeamSide side = TeamSide::Left;
    int uniform = 1;
    Vec2 pos;
    Vec2 vel;
    double body_dir = 0.0; // radians
    double stamina = 8000.0;

    PlayerId id() const { return {side, uniform}; }
};

struct BallState {
    Vec2 pos;
    Vec2 vel;
};

struct WorldState {
    long cycle = 0;
    BallState ball;
    std::vector<PlayerState> players; // 22, 11 per side
    int score_left = 0;
    int score_right = 0;
    std::optional<PlayerId> last_kicker;

    const PlayerState *find(TeamSide side, int uniform) const;
    PlayerState *find(TeamSide side, int uniform);

    void validate(const FieldSpec &field) const; // throws std::invalid_argument
};

// Mirror the world so that `side` attacks toward +x. Left is the identity;
// Right reflects positions and velocities through the origin and rotates
// body directions by pi. Side labels are kept.
WorldState to_team_frame(const WorldState &world, TeamSide side);

// x of the offside line in a team-frame world for the given attacking side:
// max(ball.x, second-rearmost opponent x), clamped to [0, length/2].
double offside_line(const WorldState &tf_world, TeamSide attacking,
                    const FieldSpec &field);

} // namespace soccer

#endif
