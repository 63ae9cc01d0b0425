#include "soccer/world.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace soccer {

void FieldSpec::validate() const {
    if (!(length > 0.0) || !(width > 0.0))
        throw std::invalid_argument("field: length and width must be positive");
    if (!(goal_width > 0.0) || !(goal_width < width))
        throw std::invalid_argument("field: goal_width must be in (0, width)");
}

const PlayerState *WorldState::find(TeamSide side, int uniform) const {
    for (const auto &p : players)
        if (p.side == side && p.uniform == uniform) return &p;
    return nullptr;
}

PlayerState *WorldState::find(TeamSide side, int uniform) {
    for (auto &p : players)
        if (p.side == side && p.uniform == uniform) return &p;
    return nullptr;
}

void WorldState::validate(const FieldSpec &field) const {
    if (cycle < 0) throw std::invalid_argument("world: negative cycle");
    if (!ball.pos.finite() || !ball.vel.finite())
        throw std::invalid_argument("world: non-finite ball state");
    if (players.size() != 22)
        throw std::invalid_argument("world: expected 22 players, got " +
                                    std::to_string(players.size()));
    std::set<int> left, right;
    for (const auto &p : players) {
        if (p.uniform < 1 || p.uniform > 11)
            throw std::invalid_argument("world: uniform number out of 1..11");
        auto &seen = (p.side == TeamSide::Left) ? left : right;
        if (!seen.insert(p.uniform).second)
            throw std::invalid_argument("world: duplicate uniform " +
                                        std::to_string(p.uniform));
        if (!p.pos.finite() || !p.vel.finite())
            throw std::invalid_argument("world: non-finite player state");
        if (!field.contains(p.pos, 5.0))
            throw std::invalid_argument("world: player outside field + 5 m margin");
        if (p.stamina < 0.0 || p.stamina > 8000.0)
            throw std::invalid_argument("world: stamina out of [0, 8000]");
    }
    if (left.size() != 11 || right.size() != 11)
        throw std::invalid_argument("world: need 11 players per side");
}

WorldState to_team_frame(const WorldState &world, TeamSide side) {
    WorldState out = world;
    if (side == TeamSide::Left) return out;
    out.ball.pos = -out.ball.pos;
    out.ball.vel = -out.ball.vel;
    for (auto &p : out.players) {
        p.pos = -p.pos;
        p.vel = -p.vel;
        p.body_dir += M_PI;
    }
    return out;
}

double offside_line(const WorldState &tf_world, TeamSide attacking,
                    const FieldSpec &field) {
    std::vector<double> xs;
    for (const auto &p : tf_world.players)
        if (p.side != attacking) xs.push_back(p.pos.x);
    double second_rearmost = -field.length / 2.0;
    if (xs.size() >= 2) {
        std::nth_element(xs.begin(), xs.begin() + 1, xs.end(),
                         std::greater<double>());
        second_rearmost = xs[1];
    } else if (xs.size() == 1) {
        second_rearmost = xs[0];
    }
    double line = std::max(tf_world.ball.pos.x, second_rearmost);
    return std::clamp(line, 0.0, field.length / 2.0);
}

} // namespace soccer
