#ifndef SOCCER_TEST_HELPERS_HPP
#define SOCCER_TEST_HELPERS_HPP

#include "soccer/kinematics.hpp"
#include "soccer/rng.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

namespace soccer::test {

// 22 players spread on both wings, ball at center
inline WorldState make_world() {
    WorldState w;
    for (TeamSide side : {TeamSide::Left, TeamSide::Right})
        for (int u = 1; u <= 11; ++u) {
            PlayerState p;
            p.side = side;
            p.uniform = u;
            double x = (side == TeamSide::Left) ? -30.0 : 30.0;
            p.pos = {x, u * 2.0 - 12.0};
            w.players.push_back(p);
        }
    return w;
}

inline PlayerState &player(WorldState &w, TeamSide side, int uniform) {
    return *w.find(side, uniform);
}

inline WorldState random_world(Rng &rng, const FieldSpec &field = {},
                               double ball_speed_max = 3.0) {
    WorldState w;
    for (TeamSide side : {TeamSide::Left, TeamSide::Right})
        for (int u = 1; u <= 11; ++u) {
            PlayerState p;
            p.side = side;
            p.uniform = u;
            p.pos = {rng.next_range(-field.length / 2.0, field.length / 2.0),
                     rng.next_range(-field.width / 2.0, field.width / 2.0)};
            p.stamina = rng.next_range(0.0, 8000.0);
            w.players.push_back(p);
        }
    w.ball.pos = {rng.next_range(-field.length / 2.0, field.length / 2.0),
                  rng.next_range(-field.width / 2.0, field.width / 2.0)};
    double speed = rng.next_range(0.0, ball_speed_max);
    double angle = rng.next_range(0.0, 2.0 * M_PI);
    w.ball.vel = {speed * std::cos(angle), speed * std::sin(angle)};
    return w;
}

// Independent interception oracle: explicit ball recurrence, full double loop
// over cycles and players, no early exits within a cycle. Excludes the
// last kicker, mirroring the operation's contract.
inline std::optional<InterceptOutcome>
oracle_predict(const WorldState &w, const MotionParams &mp, int horizon = 50) {
    std::vector<Vec2> ball_at;
    {
        Vec2 pos = w.ball.pos;
        Vec2 vel = w.ball.vel;
        for (int c = 0; c <= horizon; ++c) {
            ball_at.push_back(pos);
            pos = pos + vel;
            vel = vel * mp.ball_decay;
        }
    }
    for (int c = 0; c <= horizon; ++c) {
        std::vector<const PlayerState *> reachers;
        for (const auto &p : w.players) {
            if (w.last_kicker && p.id() == *w.last_kicker) continue;
            double d = p.pos.dist(ball_at[static_cast<std::size_t>(c)]);
            int reach = (d <= mp.kickable_dist)
                            ? 0
                            : 1 + static_cast<int>(std::ceil(
                                      (d - mp.kickable_dist) / mp.player_speed_max));
            if (reach <= c) reachers.push_back(&p);
        }
        if (reachers.empty()) continue;
        Vec2 point = ball_at[static_cast<std::size_t>(c)];
        std::sort(reachers.begin(), reachers.end(),
                  [&](const PlayerState *a, const PlayerState *b) {
                      double da = a->pos.dist(point);
                      double db = b->pos.dist(point);
                      if (da != db) return da < db;
                      if (w.last_kicker) {
                          bool ao = a->side != w.last_kicker->side;
                          bool bo = b->side != w.last_kicker->side;
                          if (ao != bo) return ao;
                      }
                      if (a->uniform != b->uniform) return a->uniform < b->uniform;
                      return a->side == TeamSide::Left && b->side == TeamSide::Right;
                  });
        return InterceptOutcome{reachers.front()->id(), c, point};
    }
    return std::nullopt;
}

} // namespace soccer::test

#endif
