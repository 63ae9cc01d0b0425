#include "doctest.h"
#include "helpers.hpp"

#include "soccer/defense.hpp"

using namespace soccer;
using namespace soccer::test;

namespace {

const MotionParams kMotion;
const FieldSpec kField;
const BlockParams kBlock;

FormationSpec uniform_formation(const FormationRole &r) {
    FormationSpec spec;
    spec.roles.fill(r);
    return spec;
}

// world where Right `carrier_uniform` owns the ball and Left defends
WorldState duel_world(const Vec2 &carrier_pos, const Vec2 &defender_pos,
                      int carrier_uniform = 9, int defender_uniform = 4) {
    WorldState w = make_world();
    for (auto &p : w.players) p.pos = {50.0, -30.0}; // park the rest
    player(w, TeamSide::Right, carrier_uniform).pos = carrier_pos;
    player(w, TeamSide::Left, defender_uniform).pos = defender_pos;
    w.ball.pos = carrier_pos + Vec2{0.3, 0.0};
    w.ball.vel = {0, 0};
    return w;
}

// independent re-scan of the blocking rule: explicit track recurrence and a
// plain loop over cycles, gates applied in the stated order
std::optional<std::pair<int, Vec2>>
oracle_block(const WorldState &w, const PlayerState &defender,
             const PlayerState &opponent, const MotionParams &mp,
             const BlockParams &bp, const FieldSpec &field) {
    if (defender.stamina < mp.stamina_block_threshold) return std::nullopt;
    Vec2 goal{-field.length / 2.0, 0.0};
    double step = bp.dribble_speed_factor * mp.player_speed_max;
    Vec2 cur = opponent.pos;
    for (int c = 1; c <= bp.horizon; ++c) {
        Vec2 diff = goal - cur;
        double d = diff.norm();
        cur = (d <= step) ? goal : cur + diff * (step / d);
        double dd = defender.pos.dist(cur);
        int reach = (dd <= mp.kickable_dist)
                        ? 0
                        : 1 + static_cast<int>(
                                  std::ceil((dd - mp.kickable_dist) /
                                            mp.player_speed_max));
        if (reach <= c) {
            if (dd > bp.max_block_dist) return std::nullopt;
            return std::make_pair(c, cur);
        }
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("formation_target linear attraction") {
    FormationRole r{{-10.0, 0.0}, 0.3, 0.2, 40.0};
    FormationSpec spec = uniform_formation(r);
    CHECK(formation_target(spec, {20.0, 10.0}, 5, kField) == Vec2{-4.0, 2.0});
    CHECK(formation_target(spec, {0.0, 0.0}, 5, kField) == r.home);

    r.attract_x = 0.5;
    r.max_x = 5.0;
    spec = uniform_formation(r);
    CHECK(formation_target(spec, {40.0, 0.0}, 1, kField).x ==
          doctest::Approx(5.0));

    CHECK_THROWS_AS(formation_target(spec, {0, 0}, 12, kField),
                    std::invalid_argument);
    CHECK_THROWS_AS(formation_target(spec, {0, 0}, 0, kField),
                    std::invalid_argument);
}

TEST_CASE("formation_target contraction bound in ball position") {
    Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        FormationRole r{{rng.next_range(-45.0, 10.0), rng.next_range(-20.0, 20.0)},
                        rng.next_range(0.0, 1.0), rng.next_range(0.0, 1.0),
                        rng.next_range(-30.0, 50.0)};
        FormationSpec spec = uniform_formation(r);
        Vec2 b1{rng.next_range(-52.0, 52.0), rng.next_range(-33.0, 33.0)};
        Vec2 b2{rng.next_range(-52.0, 52.0), rng.next_range(-33.0, 33.0)};
        double shift = formation_target(spec, b1, 3, kField)
                           .dist(formation_target(spec, b2, 3, kField));
        double bound = std::max(r.attract_x, r.attract_y) * b1.dist(b2);
        CHECK(shift <= bound + 1e-9);
    }
}

TEST_CASE("opponent_track marches at the dribble speed toward our goal") {
    WorldState w = duel_world({-30.0, 10.0}, {50.0, -30.0});
    const PlayerState &opp = player(w, TeamSide::Right, 9);
    auto track = opponent_track(w, opp, kMotion, 10, kField);
    REQUIRE(track.size() == 10);
    Vec2 dir = (Vec2{-52.5, 0.0} - opp.pos).unit();
    Vec2 prev = opp.pos;
    for (const Vec2 &p : track) {
        CHECK(p.dist(prev) == doctest::Approx(0.735));
        CHECK((p - prev).unit().dist(dir) < 1e-9);
        prev = p;
    }
}

TEST_CASE("opponent_track boundaries") {
    WorldState w = duel_world({-52.0, 0.3}, {50.0, -30.0});
    const PlayerState &opp = player(w, TeamSide::Right, 9);
    CHECK(opponent_track(w, opp, kMotion, 0, kField).empty());

    auto track = opponent_track(w, opp, kMotion, 5, kField);
    for (const Vec2 &p : track) CHECK(p == Vec2{-52.5, 0.0}); // truncated

    WorldState no_ball = w;
    no_ball.ball.pos = {40.0, 0.0};
    CHECK_THROWS_AS(opponent_track(no_ball, *no_ball.find(TeamSide::Right, 9),
                                   kMotion, 5, kField),
                    std::invalid_argument);
}

TEST_CASE("compute_block_point for a goal-side defender") {
    WorldState w = duel_world({-20.0, 0.0}, {-23.0, 0.0});
    const PlayerState &def = player(w, TeamSide::Left, 4);
    const PlayerState &opp = player(w, TeamSide::Right, 9);
    auto plan = compute_block_point(w, def, opp, kMotion, kBlock, kField);
    REQUIRE(plan.has_value());
    CHECK(plan->blocker == 4);
    CHECK(plan->target_opponent == opp.id());
    CHECK(plan->opponent_cycles == 2);
    CHECK(plan->blocker_cycles <= plan->opponent_cycles);
    CHECK(plan->block_point.x == doctest::Approx(-21.47));
    CHECK(plan->block_point.y == doctest::Approx(0.0));
    CHECK(plan->mode == BlockMode::Wait); // 3 m apart at midfield
}

TEST_CASE("compute_block_point stamina gate") {
    WorldState w = duel_world({-20.0, 0.0}, {-23.0, 0.0});
    player(w, TeamSide::Left, 4).stamina = 2599.0;
    CHECK(!compute_block_point(w, player(w, TeamSide::Left, 4),
                               player(w, TeamSide::Right, 9), kMotion, kBlock,
                               kField));
    player(w, TeamSide::Left, 4).stamina = 2600.0;
    CHECK(compute_block_point(w, player(w, TeamSide::Left, 4),
                              player(w, TeamSide::Right, 9), kMotion, kBlock,
                              kField)
              .has_value());
}

TEST_CASE("compute_block_point distance gates") {
    // opposite wing, 80 m out: no reachable track point inside the horizon
    WorldState w = duel_world({30.0, 25.0}, {-45.0, -25.0});
    CHECK(!compute_block_point(w, player(w, TeamSide::Left, 4),
                               player(w, TeamSide::Right, 9), kMotion, kBlock,
                               kField));

    // reachable in cycles but more than 30 m away: "too far to approach"
    WorldState w2 = duel_world({30.0, 0.0}, {30.0, -35.0});
    CHECK(!compute_block_point(w2, player(w2, TeamSide::Left, 4),
                               player(w2, TeamSide::Right, 9), kMotion, kBlock,
                               kField));
}

TEST_CASE("choose_block_mode thresholds") {
    BlockPlan plan;
    PlayerState def, opp;
    def.side = TeamSide::Left;
    opp.side = TeamSide::Right;

    def.pos = {-18.5, 0.0};
    opp.pos = {-20.0, 0.0};
    CHECK(choose_block_mode(plan, def, opp, kMotion, kField) == BlockMode::Press);

    def.pos = {0.0, 0.0};
    opp.pos = {-20.0, 0.0};
    CHECK(choose_block_mode(plan, def, opp, kMotion, kField) == BlockMode::Wait);

    def.pos = {-20.0, 0.0};
    opp.pos = {-40.0, 0.0}; // inside the danger zone x < -36
    CHECK(choose_block_mode(plan, def, opp, kMotion, kField) == BlockMode::Press);
}

TEST_CASE("assign_blocker picks the fewest-cycle defender") {
    WorldState w = duel_world({-20.0, 0.0}, {-23.0, 0.0});
    auto plan = assign_blocker(w, kMotion, kBlock, kField);
    REQUIRE(plan.has_value());
    CHECK(plan->blocker == 4); // only defender in range

    player(w, TeamSide::Left, 7).pos = {-45.0, 0.0}; // farther down the track
    plan = assign_blocker(w, kMotion, kBlock, kField);
    REQUIRE(plan.has_value());
    CHECK(plan->blocker == 4); // still fewer cycles than the deep defender

    player(w, TeamSide::Left, 4).pos = {50.0, -30.0};
    player(w, TeamSide::Left, 7).pos = {-23.0, 0.0};
    plan = assign_blocker(w, kMotion, kBlock, kField);
    REQUIRE(plan.has_value());
    CHECK(plan->blocker == 7);
}

TEST_CASE("assign_blocker edge cases") {
    WorldState w = duel_world({-20.0, 0.0}, {-23.0, 0.0});
    for (auto &p : w.players)
        if (p.side == TeamSide::Left) p.stamina = 100.0;
    CHECK(!assign_blocker(w, kMotion, kBlock, kField)); // everyone gated out

    WorldState loose = make_world();
    loose.ball.pos = {0.0, 30.0}; // nobody in kickable range
    CHECK_THROWS_AS(assign_blocker(loose, kMotion, kBlock, kField),
                    std::invalid_argument);
}

TEST_CASE("block plans match the independent re-scan on random worlds") {
    Rng rng(777);
    int plans_seen = 0;
    for (int i = 0; i < 300; ++i) {
        WorldState w = random_world(rng);
        // hand the ball to a random Right player
        int cu = 1 + static_cast<int>(rng.next() % 11);
        PlayerState &carrier = *w.find(TeamSide::Right, cu);
        w.ball.pos = carrier.pos + Vec2{0.2, 0.1};
        w.ball.vel = {0, 0};
        // keep the possession unambiguous
        for (auto &p : w.players)
            if (&p != &carrier && p.pos.dist(w.ball.pos) <= 1.2)
                p.pos = p.pos + Vec2{3.0, 3.0};
        const PlayerState &opp = carrier;

        for (int du = 1; du <= 11; ++du) {
            const PlayerState &def = *w.find(TeamSide::Left, du);
            auto got = compute_block_point(w, def, opp, kMotion, kBlock, kField);
            auto want = oracle_block(w, def, opp, kMotion, kBlock, kField);
            REQUIRE(got.has_value() == want.has_value());
            if (!got) continue;
            ++plans_seen;
            CHECK(got->opponent_cycles == want->first);
            CHECK(got->block_point.dist(want->second) < 1e-12);
            CHECK(got->blocker_cycles <= got->opponent_cycles);
            // the block point sits on the carrier-to-goal ray, goal side
            Vec2 goal{-52.5, 0.0};
            double along = dist_point_to_segment(got->block_point, opp.pos, goal);
            CHECK(along < 1e-9);
            CHECK(got->block_point.dist(goal) < opp.pos.dist(goal));
        }

        // assign_blocker returns the minimum-cycle feasible plan
        auto best = assign_blocker(w, kMotion, kBlock, kField);
        std::optional<int> min_cycles;
        for (int du = 1; du <= 11; ++du) {
            auto p = compute_block_point(w, *w.find(TeamSide::Left, du), opp,
                                         kMotion, kBlock, kField);
            if (p && (!min_cycles || p->blocker_cycles < *min_cycles))
                min_cycles = p->blocker_cycles;
        }
        REQUIRE(best.has_value() == min_cycles.has_value());
        if (best) CHECK(best->blocker_cycles == *min_cycles);
    }
    CHECK(plans_seen > 100); // the comparison actually exercised real plans
}
