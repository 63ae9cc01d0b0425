#include "doctest.h"
#include "helpers.hpp"

#include "soccer/passing.hpp"

using namespace soccer;
using namespace soccer::test;

namespace {

const FieldSpec kField;
const MotionParams kMotion;

// world with the passer on the ball and everyone else parked far away
WorldState possession_world() {
    WorldState w = make_world();
    for (auto &p : w.players) p.pos = {-45.0, 28.0};
    player(w, TeamSide::Left, 7).pos = {0.0, 0.0};
    w.ball.pos = {0.5, 0.0};
    w.ball.vel = {0.0, 0.0};
    return w;
}

// exhaustive re-derivation of best_direct_pass using the oracle predictor
std::optional<PassCandidate> oracle_best_direct(const WorldState &w,
                                                const PlayerState &passer,
                                                const PassFactorWeights &weights) {
    std::optional<PassCandidate> best;
    for (const auto &mate : w.players) {
        if (mate.side != passer.side || mate.uniform == passer.uniform) continue;
        if (!kField.contains(mate.pos)) continue;
        double dist = w.ball.pos.dist(mate.pos);
        if (dist < 1e-6) continue;
        for (int n = 1; n <= 10; ++n) {
            double s = kick_speed_for(dist, n, kMotion.ball_decay);
            if (s > kMotion.ball_speed_max) continue;
            Vec2 vel = kick_velocity_for(w.ball.pos, mate.pos, n, kMotion);
            auto out = oracle_predict(after_kick(w, passer, vel), kMotion);
            if (!out || !(out->reacher == mate.id())) break;
            PassFactors f = compute_pass_factors(w, passer, mate.pos, mate, kMotion);
            PassCandidate c{PassKind::Direct, mate.pos, mate.uniform, s, n,
                            score_direct_pass(f, weights)};
            if (!best || c.score > best->score ||
                (c.score == best->score && c.receiver < best->receiver))
                best = c;
            break; // smallest feasible n only
        }
    }
    return best;
}

} // namespace

TEST_CASE("compute_pass_factors clamps and midpoints") {
    WorldState w = possession_world();
    const PlayerState &passer = player(w, TeamSide::Left, 7);
    PlayerState &mate = player(w, TeamSide::Left, 9);
    mate.pos = {0.5, 10.0}; // target.x == ball.x

    // opponents are all parked 40+ m away
    PassFactors f = compute_pass_factors(w, passer, mate.pos, mate, kMotion);
    CHECK(f.e_lane == doctest::Approx(1.0));
    CHECK(f.e_receiver_space == doctest::Approx(1.0));
    CHECK(f.e_progress == doctest::Approx(0.5));

    // opponent standing exactly on the pass line
    player(w, TeamSide::Right, 3).pos = {0.25, 5.0};
    player(w, TeamSide::Right, 3).pos = (passer.pos + mate.pos) * 0.5;
    f = compute_pass_factors(w, passer, mate.pos, mate, kMotion);
    CHECK(f.e_lane == doctest::Approx(0.0));

    CHECK_THROWS_AS(compute_pass_factors(w, passer, mate.pos,
                                         player(w, TeamSide::Right, 5), kMotion),
                    std::invalid_argument);
}

TEST_CASE("score_direct_pass weighted sum") {
    PassFactorWeights ones{1, 1, 1, 1};
    CHECK(score_direct_pass({0.5, 0.3, 0.2, 0.0}, ones) == doctest::Approx(1.0));
    CHECK(score_direct_pass({0, 0, 0, 0}, ones) == doctest::Approx(0.0));
}

TEST_CASE("best_direct_pass lone teammate") {
    WorldState w = possession_world();
    player(w, TeamSide::Left, 9).pos = {5.0, 2.0};
    PassFactorWeights weights;
    auto c = best_direct_pass(w, player(w, TeamSide::Left, 7), weights, kMotion,
                              kField);
    REQUIRE(c.has_value());
    CHECK(c->receiver == 9);
    CHECK(c->initial_speed <= kMotion.ball_speed_max);
}

TEST_CASE("best_direct_pass rejects passer without ball") {
    WorldState w = possession_world();
    w.ball.pos = {30.0, 30.0};
    CHECK_THROWS_AS(best_direct_pass(w, player(w, TeamSide::Left, 7), {},
                                     kMotion, kField),
                    std::invalid_argument);
}

TEST_CASE("best_direct_pass absent when every lane is covered") {
    WorldState w = possession_world();
    // one teammate, with an opponent camped on him
    player(w, TeamSide::Left, 9).pos = {10.0, 0.0};
    for (int u = 1; u <= 11; ++u)
        player(w, TeamSide::Right, u).pos = {10.0 - 0.1 * u, 0.1 * u};
    auto c = best_direct_pass(w, player(w, TeamSide::Left, 7), {}, kMotion,
                              kField);
    CHECK(!c.has_value());
}

TEST_CASE("best_direct_pass matches exhaustive oracle") {
    Rng rng(2024);
    PassFactorWeights weights;
    int compared = 0;
    for (int i = 0; i < 150; ++i) {
        WorldState w = random_world(rng);
        PlayerState &passer = player(w, TeamSide::Left, 7);
        w.ball.pos = passer.pos + Vec2{0.4, 0.2};
        w.ball.vel = {0, 0};
        auto got = best_direct_pass(w, passer, weights, kMotion, kField);
        auto want = oracle_best_direct(w, passer, weights);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            CHECK(got->receiver == want->receiver);
            CHECK(got->arrival_cycles == want->arrival_cycles);
            ++compared;
        }
    }
    CHECK(compared > 20); // the scenario generator must actually exercise passes
}

TEST_CASE("generate_through_targets defaults produce 320 ordered points") {
    ThroughPassParams p;
    PlayerState mate;
    mate.pos = {0.0, 0.0};
    auto pts = generate_through_targets(mate, {52.5, 0.0}, p);
    REQUIRE(pts.size() == 320);

    // t = 35 block: radii 15,12,9,6,3 with +/- pairs; r = 1 means radius 6
    CHECK(pts[6].x == doctest::Approx(6.0 * std::cos(deg2rad(35))).epsilon(1e-4));
    CHECK(std::abs(pts[6].y) ==
          doctest::Approx(6.0 * std::sin(deg2rad(35))).epsilon(1e-4));
    CHECK(pts[6].x == doctest::Approx(4.9149).epsilon(1e-3));
    CHECK(std::abs(pts[6].y) == doctest::Approx(3.4415).epsilon(1e-3));
    CHECK(pts[7].y == doctest::Approx(-pts[6].y));

    // within each t block distances are non-increasing pairwise, strictly
    // decreasing per radius step, and all multiples of radius_step
    for (std::size_t block = 0; block < 32; ++block) {
        for (std::size_t i = 0; i < 10; i += 2) {
            std::size_t base = block * 10;
            double d = pts[base + i].dist(mate.pos);
            double expect = (5.0 - i / 2) * 3.0;
            CHECK(d == doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("generate_through_targets boundary cases") {
    ThroughPassParams p;
    p.mirror = false;
    p.r_count = 1;
    p.t_start = 4;
    p.t_floor = 3;
    PlayerState mate;
    mate.pos = {10.0, 5.0};
    auto pts = generate_through_targets(mate, {52.5, 0.0}, p);
    CHECK(pts.size() == 1);

    mate.pos = {52.5, 0.0};
    CHECK_THROWS_AS(generate_through_targets(mate, {52.5, 0.0}, p),
                    std::invalid_argument);
}

TEST_CASE("find_through_pass open lane behind the back line") {
    WorldState w = make_world();
    for (auto &p : w.players) p.pos = {-45.0, 28.0};
    PlayerState &passer = player(w, TeamSide::Left, 7);
    passer.pos = {16.0, 0.0};
    w.ball.pos = {16.5, 0.0};
    w.ball.vel = {0, 0};
    PlayerState &receiver = player(w, TeamSide::Left, 9);
    receiver.pos = {25.0, 2.0}; // behind the offside line at 30
    // flat back line: second-rearmost defender defines the line at x = 30
    player(w, TeamSide::Right, 2).pos = {40.0, -20.0};
    player(w, TeamSide::Right, 3).pos = {30.0, -10.0};
    player(w, TeamSide::Right, 4).pos = {30.0, 10.0};
    player(w, TeamSide::Right, 5).pos = {30.0, -20.0};

    ThroughPassParams p;
    auto c = find_through_pass(w, passer, p, kMotion, kField);
    REQUIRE(c.has_value());
    CHECK(c->receiver == 9);
    CHECK(c->kind == PassKind::Through);
    double line = offside_line(w, TeamSide::Left, kField);
    CHECK(c->target.x <= line + 0.5 + 1e-9);
    // oracle agrees the receiver gets there first
    Vec2 vel = kick_velocity_for(w.ball.pos, c->target, c->arrival_cycles, kMotion);
    auto out = oracle_predict(after_kick(w, passer, vel), kMotion);
    REQUIRE(out.has_value());
    CHECK(out->reacher == receiver.id());
}

TEST_CASE("find_through_pass absent without offensive teammates") {
    WorldState w = make_world();
    for (auto &p : w.players)
        if (p.side == TeamSide::Left) p.pos = {-20.0 - p.uniform, 0.0};
    PlayerState &passer = player(w, TeamSide::Left, 7);
    w.ball.pos = passer.pos + Vec2{0.5, 0.0};
    auto c = find_through_pass(w, passer, {}, kMotion, kField);
    CHECK(!c.has_value());
}

TEST_CASE("find_through_pass absent when every point is covered") {
    WorldState w = make_world();
    for (auto &p : w.players) p.pos = {-45.0, 28.0};
    PlayerState &passer = player(w, TeamSide::Left, 7);
    passer.pos = {5.0, 0.0};
    w.ball.pos = {5.5, 0.0};
    PlayerState &receiver = player(w, TeamSide::Left, 9);
    receiver.pos = {20.0, 0.0};
    // a wall of opponents saturating the candidate fan
    int u = 1;
    for (double x = 18.0; x <= 38.0 && u <= 11; x += 2.0, ++u)
        player(w, TeamSide::Right, u).pos = {x, 0.0};
    // remaining opponents cover the wings
    player(w, TeamSide::Right, 11).pos = {24.0, 8.0};
    auto c = find_through_pass(w, passer, {}, kMotion, kField);
    if (c) {
        // if a candidate survives it must still beat the oracle predictor
        Vec2 vel =
            kick_velocity_for(w.ball.pos, c->target, c->arrival_cycles, kMotion);
        auto out = oracle_predict(after_kick(w, passer, vel), kMotion);
        REQUIRE(out.has_value());
        CHECK(out->reacher == PlayerId{TeamSide::Left, c->receiver});
    }
}

TEST_CASE("offside_hold_target arithmetic") {
    WorldState w = make_world();
    // build an offside line at 30: deepest opponents at 35 and 30
    for (int u = 1; u <= 11; ++u)
        player(w, TeamSide::Right, u).pos = {30.0 - (u - 2) * 5.0, 0.0};
    w.ball.pos = {0.0, 0.0};
    PlayerState &p = player(w, TeamSide::Left, 9);
    p.pos = {20.0, -8.0};
    REQUIRE(offside_line(w, TeamSide::Left, kField) == doctest::Approx(30.0));
    Vec2 t = offside_hold_target(w, p, 0.7, kField);
    CHECK(t.x == doctest::Approx(29.3));
    CHECK(t.y == doctest::Approx(-8.0));

    // line at the halfway mark
    for (int u = 1; u <= 11; ++u)
        player(w, TeamSide::Right, u).pos = {-10.0, u * 1.0};
    w.ball.pos = {-20.0, 0.0};
    t = offside_hold_target(w, p, 0.7, kField);
    CHECK(t.x == doctest::Approx(-0.7));

    // defenders behind their own goal line: line clamps to length/2
    for (int u = 1; u <= 11; ++u)
        player(w, TeamSide::Right, u).pos = {54.0, u * 1.0};
    w.ball.pos = {40.0, 0.0};
    t = offside_hold_target(w, p, 0.7, kField);
    CHECK(t.x == doctest::Approx(51.8)); // line 52.5 (clamped), minus margin
}

TEST_CASE("argmax invariant under weight scaling") {
    Rng rng(77);
    PassFactorWeights base;
    for (int i = 0; i < 60; ++i) {
        WorldState w = random_world(rng);
        PlayerState &passer = player(w, TeamSide::Left, 7);
        w.ball.pos = passer.pos + Vec2{0.4, 0.2};
        w.ball.vel = {0, 0};
        auto ref = best_direct_pass(w, passer, base, kMotion, kField);
        for (double lambda : {0.5, 2.0, 10.0}) {
            PassFactorWeights scaled{base.c_lane * lambda, base.c_progress * lambda,
                                     base.c_receiver_space * lambda,
                                     base.c_length * lambda};
            auto got = best_direct_pass(w, passer, scaled, kMotion, kField);
            REQUIRE(got.has_value() == ref.has_value());
            if (ref) CHECK(got->receiver == ref->receiver);
        }
    }
}

TEST_CASE("adding an opponent on the target never raises the score") {
    Rng rng(31);
    PassFactorWeights weights;
    for (int i = 0; i < 60; ++i) {
        WorldState w = random_world(rng);
        PlayerState &passer = player(w, TeamSide::Left, 7);
        w.ball.pos = passer.pos + Vec2{0.4, 0.2};
        w.ball.vel = {0, 0};
        auto c = best_direct_pass(w, passer, weights, kMotion, kField);
        if (!c) continue;
        const PlayerState &mate = *w.find(TeamSide::Left, c->receiver);
        PassFactors before =
            compute_pass_factors(w, passer, c->target, mate, kMotion);
        WorldState w2 = w;
        player(w2, TeamSide::Right, 1).pos = c->target;
        PassFactors after = compute_pass_factors(w2, passer, c->target,
                                                 *w2.find(TeamSide::Left,
                                                          c->receiver),
                                                 kMotion);
        CHECK(score_direct_pass(after, weights) <=
              score_direct_pass(before, weights) + 1e-12);
    }
}
