#ifndef SOCCER_DRIBBLE_HPP
#define SOCCER_DRIBBLE_HPP

#include "soccer/kinematics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace soccer {

struct DribblePath {
    int id = 0;
    std::vector<Vec2> waypoints; // team frame, >= 2 points
    bool is_main = false;
};

struct DribbleConfig {
    std::vector<DribblePath> paths; // exactly one is_main
    double block_radius = 4.0;
    double lookahead = 10.0;
    double opponent_weight = 1.0;
    double progress_weight = 1.0;

    const DribblePath &main() const;
    const DribblePath *by_id(int id) const;
    void validate() const;
};

// Parse a dribble path config from JSON text. Malformed documents and
// constraint violations are reported via std::invalid_argument.
DribbleConfig load_paths(const std::string &text);

// first waypoint at least 1 m ahead of pos in x; final waypoint otherwise
Vec2 next_waypoint(const DribblePath &path, const Vec2 &pos);

bool is_path_blocked(const WorldState &tf_world, const PlayerState &player,
                     const DribblePath &path, const DribbleConfig &cfg);

double rate_path(const WorldState &tf_world, const PlayerState &player,
                 const DribblePath &path, const DribbleConfig &cfg,
                 const FieldSpec &field);

struct DribbleDecision {
    enum class Kind { Advance, SwitchPath, PassOut };
    Kind kind = Kind::PassOut;
    int path_id = 0;
    Vec2 waypoint;
};

// current_path: the path the player committed to earlier, if any; the
// per-player memory lives with the caller
DribbleDecision choose_dribble(const WorldState &tf_world,
                               const PlayerState &player,
                               const DribbleConfig &cfg,
                               std::optional<int> current_path,
                               const MotionParams &params);

// min opponent distance to the player's lookahead segment chain on `path`;
// shared by blockage, rating and the switch key
double min_opponent_dist_to_lookahead(const WorldState &tf_world,
                                      const PlayerState &player,
                                      const DribblePath &path,
                                      const DribbleConfig &cfg);

} // namespace soccer

#endif
