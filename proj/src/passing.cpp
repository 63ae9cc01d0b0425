#include "soccer/passing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace soccer {

void PassFactorWeights::validate() const {
    if (c_lane < 0.0 || c_progress < 0.0 || c_receiver_space < 0.0 ||
        c_length < 0.0)
        throw std::invalid_argument("pass weights: negative coefficient");
    if (c_lane + c_progress + c_receiver_space + c_length <= 0.0)
        throw std::invalid_argument("pass weights: all coefficients zero");
}

void ThroughPassParams::validate() const {
    if (!(t_start > t_floor) || t_floor < 0)
        throw std::invalid_argument("through params: need t_start > t_floor >= 0");
    if (r_count < 1) throw std::invalid_argument("through params: r_count < 1");
    if (!(radius_step > 0.0))
        throw std::invalid_argument("through params: radius_step <= 0");
}

namespace {

double min_opponent_dist_to_point(const WorldState &w, TeamSide attacking,
                                  const Vec2 &p) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto &pl : w.players)
        if (pl.side != attacking) best = std::min(best, pl.pos.dist(p));
    return best;
}

double min_opponent_dist_to_lane(const WorldState &w, TeamSide attacking,
                                 const Vec2 &a, const Vec2 &b) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto &pl : w.players)
        if (pl.side != attacking)
            best = std::min(best, dist_point_to_segment(pl.pos, a, b));
    return best;
}

bool has_ball(const PlayerState &p, const WorldState &w,
              const MotionParams &params) {
    return p.pos.dist(w.ball.pos) <= params.kickable_dist;
}

} // namespace

PassFactors compute_pass_factors(const WorldState &tf_world,
                                 const PlayerState &passer, const Vec2 &target,
                                 const PlayerState &receiver,
                                 const MotionParams & /*params*/) {
    if (receiver.side != passer.side)
        throw std::invalid_argument("compute_pass_factors: receiver on opposing side");
    PassFactors f;
    f.e_lane = clamp01(
        min_opponent_dist_to_lane(tf_world, passer.side, passer.pos, target) / 10.0);
    f.e_progress = clamp01((target.x - tf_world.ball.pos.x + 20.0) / 40.0);
    f.e_receiver_space =
        clamp01(min_opponent_dist_to_point(tf_world, passer.side, target) / 10.0);
    f.e_length = clamp01(1.0 - passer.pos.dist(target) / 40.0);
    return f;
}

double score_direct_pass(const PassFactors &f, const PassFactorWeights &w) {
    return w.c_lane * f.e_lane + w.c_progress * f.e_progress +
           w.c_receiver_space * f.e_receiver_space + w.c_length * f.e_length;
}

WorldState after_kick(const WorldState &world, const PlayerState &passer,
                      const Vec2 &vel) {
    WorldState out = world;
    out.ball.vel = vel;
    out.last_kicker = passer.id();
    return out;
}

std::optional<PassCandidate> best_direct_pass(const WorldState &tf_world,
                                              const PlayerState &passer,
                                              const PassFactorWeights &weights,
                                              const MotionParams &params,
                                              const FieldSpec &field) {
    if (!has_ball(passer, tf_world, params))
        throw std::invalid_argument("best_direct_pass: passer lacks the ball");
    std::optional<PassCandidate> best;
    for (const auto &mate : tf_world.players) {
        if (mate.side != passer.side || mate.uniform == passer.uniform) continue;
        Vec2 target = mate.pos;
        if (!field.contains(target)) continue;
        double dist = tf_world.ball.pos.dist(target);
        if (dist < 1e-6) continue;
        // smallest arrival count with a kick the ball model can deliver
        int n = 0;
        double speed = 0.0;
        for (int cand = 1; cand <= 10; ++cand) {
            double s = kick_speed_for(dist, cand, params.ball_decay);
            if (s <= params.ball_speed_max) {
                n = cand;
                speed = s;
                break;
            }
        }
        if (n == 0) continue;
        Vec2 vel = kick_velocity_for(tf_world.ball.pos, target, n, params);
        auto outcome = predict_interception(after_kick(tf_world, passer, vel),
                                            params);
        if (!outcome || !(outcome->reacher == mate.id())) continue;
        PassFactors f = compute_pass_factors(tf_world, passer, target, mate, params);
        PassCandidate c;
        c.kind = PassKind::Direct;
        c.target = target;
        c.receiver = mate.uniform;
        c.initial_speed = speed;
        c.arrival_cycles = n;
        c.score = score_direct_pass(f, weights);
        if (!best || c.score > best->score ||
            (c.score == best->score && c.receiver < best->receiver))
            best = c;
    }
    return best;
}

std::vector<Vec2> generate_through_targets(const PlayerState &teammate,
                                           const Vec2 &goal,
                                           const ThroughPassParams &p) {
    p.validate();
    if (teammate.pos.dist(goal) <= 0.0)
        throw std::invalid_argument("generate_through_targets: teammate at goal");
    Vec2 u = (goal - teammate.pos).unit();
    std::vector<Vec2> out;
    out.reserve(static_cast<std::size_t>((p.t_start - p.t_floor) * p.r_count *
                                         (p.mirror ? 2 : 1)));
    for (int t = p.t_start; t > p.t_floor; --t) {
        for (int r = p.r_count - 1; r >= 0; --r) { // longest radius first
            double radius = (r + 1) * p.radius_step;
            double rad = deg2rad(static_cast<double>(t));
            out.push_back(teammate.pos + u.rotated(rad) * radius);
            if (p.mirror) out.push_back(teammate.pos + u.rotated(-rad) * radius);
        }
    }
    return out;
}

std::optional<PassCandidate> find_through_pass(const WorldState &tf_world,
                                               const PlayerState &passer,
                                               const ThroughPassParams &p,
                                               const MotionParams &params,
                                               const FieldSpec &field) {
    if (!has_ball(passer, tf_world, params))
        throw std::invalid_argument("find_through_pass: passer lacks the ball");
    double line = offside_line(tf_world, passer.side, field);
    Vec2 goal = field.right_goal_center();

    std::vector<const PlayerState *> mates;
    for (const auto &pl : tf_world.players)
        if (pl.side == passer.side && pl.uniform != passer.uniform &&
            pl.pos.x > 0.0)
            mates.push_back(&pl);
    std::sort(mates.begin(), mates.end(),
              [](const PlayerState *a, const PlayerState *b) {
                  if (a->pos.x != b->pos.x) return a->pos.x > b->pos.x;
                  return a->uniform < b->uniform;
              });

    for (const PlayerState *mate : mates) {
        if (mate->pos.dist(goal) <= 0.0) continue;
        for (const Vec2 &target : generate_through_targets(*mate, goal, p)) {
            if (target.x > line + 0.5) continue;
            if (!field.contains(target)) continue;
            double dist = tf_world.ball.pos.dist(target);
            if (dist < 1e-6) continue;
            int n = std::max(1, cycles_to_reach(*mate, target, params));
            double speed = kick_speed_for(dist, n, params.ball_decay);
            if (speed > params.ball_speed_max) continue;
            Vec2 vel = kick_velocity_for(tf_world.ball.pos, target, n, params);
            auto outcome =
                predict_interception(after_kick(tf_world, passer, vel), params);
            if (!outcome || !(outcome->reacher == mate->id())) continue;
            PassCandidate c;
            c.kind = PassKind::Through;
            c.target = target;
            c.receiver = mate->uniform;
            c.initial_speed = speed;
            c.arrival_cycles = n;
            c.score = 0.0;
            return c; // first reliable point wins
        }
    }
    return std::nullopt;
}

Vec2 offside_hold_target(const WorldState &tf_world, const PlayerState &player,
                         double margin, const FieldSpec &field) {
    if (!(margin > 0.0))
        throw std::invalid_argument("offside_hold_target: margin <= 0");
    double x = offside_line(tf_world, player.side, field) - margin;
    x = std::min(x, tf_world.ball.pos.x + 30.0);
    x = std::clamp(x, -field.length / 2.0, field.length / 2.0);
    double y = std::clamp(player.pos.y, -field.width / 2.0, field.width / 2.0);
    return {x, y};
}

} // namespace soccer
