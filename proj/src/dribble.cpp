#include "soccer/dribble.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace soccer {

const DribblePath &DribbleConfig::main() const {
    for (const auto &p : paths)
        if (p.is_main) return p;
    throw std::logic_error("dribble config: no main path");
}

const DribblePath *DribbleConfig::by_id(int id) const {
    for (const auto &p : paths)
        if (p.id == id) return &p;
    return nullptr;
}

void DribbleConfig::validate() const {
    if (paths.empty()) throw std::invalid_argument("dribble config: empty path list");
    int mains = 0;
    for (const auto &p : paths) {
        if (p.is_main) ++mains;
        std::ostringstream where;
        where << "dribble config: path id " << p.id;
        if (p.waypoints.size() < 2)
            throw std::invalid_argument(where.str() + ": needs >= 2 waypoints");
        for (std::size_t i = 1; i < p.waypoints.size(); ++i)
            if (p.waypoints[i] == p.waypoints[i - 1])
                throw std::invalid_argument(where.str() +
                                            ": consecutive waypoints equal");
        // team frame: the opponent goal sits at +x, so closer means larger x
        Vec2 goal{52.5, 0.0};
        if (!(p.waypoints.back().dist(goal) < p.waypoints.front().dist(goal)))
            throw std::invalid_argument(
                where.str() + ": final waypoint not closer to the opponent goal");
    }
    if (mains != 1)
        throw std::invalid_argument(
            "dribble config: exactly one path must be main, found " +
            std::to_string(mains));
    if (!(block_radius > 0.0) || !(lookahead > 0.0))
        throw std::invalid_argument("dribble config: radii must be positive");
}

DribbleConfig load_paths(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("dribble config: ") + e.what());
    }
    DribbleConfig cfg;
    try {
        cfg.block_radius = doc.value("block_radius", 4.0);
        cfg.lookahead = doc.value("lookahead", 10.0);
        cfg.opponent_weight = doc.value("opponent_weight", 1.0);
        cfg.progress_weight = doc.value("progress_weight", 1.0);
        for (const auto &jp : doc.at("paths")) {
            DribblePath p;
            p.id = jp.at("id").get<int>();
            p.is_main = jp.value("main", false);
            for (const auto &wp : jp.at("waypoints"))
                p.waypoints.push_back({wp.at(0).get<double>(), wp.at(1).get<double>()});
            cfg.paths.push_back(std::move(p));
        }
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("dribble config: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

namespace {

std::size_t next_waypoint_index(const DribblePath &path, const Vec2 &pos) {
    for (std::size_t i = 0; i < path.waypoints.size(); ++i)
        if (path.waypoints[i].x >= pos.x + 1.0) return i;
    return path.waypoints.size() - 1;
}

// polyline player.pos -> next waypoint -> following waypoints, truncated at
// `lookahead` total length
std::vector<Vec2> lookahead_chain(const DribblePath &path, const Vec2 &pos,
                                  double lookahead) {
    std::vector<Vec2> chain{pos};
    double remaining = lookahead;
    Vec2 cur = pos;
    for (std::size_t i = next_waypoint_index(path, pos);
         i < path.waypoints.size() && remaining > 0.0; ++i) {
        Vec2 wp = path.waypoints[i];
        double seg = cur.dist(wp);
        if (seg <= 0.0) continue;
        if (seg >= remaining) {
            chain.push_back(cur + (wp - cur) * (remaining / seg));
            remaining = 0.0;
        } else {
            chain.push_back(wp);
            remaining -= seg;
            cur = wp;
        }
    }
    if (chain.size() == 1) chain.push_back(pos); // degenerate: at path end
    return chain;
}

double dist_to_path(const DribblePath &path, const Vec2 &pos) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < path.waypoints.size(); ++i)
        best = std::min(best, dist_point_to_segment(pos, path.waypoints[i - 1],
                                                    path.waypoints[i]));
    return best;
}

} // namespace

Vec2 next_waypoint(const DribblePath &path, const Vec2 &pos) {
    return path.waypoints[next_waypoint_index(path, pos)];
}

double min_opponent_dist_to_lookahead(const WorldState &tf_world,
                                      const PlayerState &player,
                                      const DribblePath &path,
                                      const DribbleConfig &cfg) {
    auto chain = lookahead_chain(path, player.pos, cfg.lookahead);
    double best = std::numeric_limits<double>::infinity();
    for (const auto &opp : tf_world.players) {
        if (opp.side == player.side) continue;
        for (std::size_t i = 1; i < chain.size(); ++i)
            best = std::min(best,
                            dist_point_to_segment(opp.pos, chain[i - 1], chain[i]));
    }
    return best;
}

bool is_path_blocked(const WorldState &tf_world, const PlayerState &player,
                     const DribblePath &path, const DribbleConfig &cfg) {
    return min_opponent_dist_to_lookahead(tf_world, player, path, cfg) <=
           cfg.block_radius;
}

double rate_path(const WorldState &tf_world, const PlayerState &player,
                 const DribblePath &path, const DribbleConfig &cfg,
                 const FieldSpec &field) {
    Vec2 goal = field.right_goal_center();
    Vec2 wp = next_waypoint(path, player.pos);
    double progress =
        clamp01((player.pos.dist(goal) - wp.dist(goal)) / cfg.lookahead);
    double opp_term =
        clamp01(min_opponent_dist_to_lookahead(tf_world, player, path, cfg) / 10.0);
    double detour = clamp01(dist_to_path(path, player.pos) / 10.0);
    return cfg.progress_weight * progress + cfg.opponent_weight * opp_term -
           0.2 * detour;
}

DribbleDecision choose_dribble(const WorldState &tf_world,
                               const PlayerState &player,
                               const DribbleConfig &cfg,
                               std::optional<int> current_path,
                               const MotionParams &params) {
    if (player.pos.dist(tf_world.ball.pos) > params.kickable_dist)
        throw std::invalid_argument("choose_dribble: player lacks the ball");
    const DribblePath *cur =
        current_path ? cfg.by_id(*current_path) : nullptr;
    if (!cur) cur = &cfg.main();

    if (!is_path_blocked(tf_world, player, *cur, cfg)) {
        return {DribbleDecision::Kind::Advance, cur->id,
                next_waypoint(*cur, player.pos)};
    }

    // switch key: nearest to the main path's next waypoint, then furthest
    // from the opponents
    Vec2 main_wp = next_waypoint(cfg.main(), player.pos);
    const DribblePath *best = nullptr;
    double best_dist = 0.0, best_opp = 0.0;
    for (const auto &path : cfg.paths) {
        if (is_path_blocked(tf_world, player, path, cfg)) continue;
        double d = next_waypoint(path, player.pos).dist(main_wp);
        double o = min_opponent_dist_to_lookahead(tf_world, player, path, cfg);
        if (!best || d < best_dist || (d == best_dist && o > best_opp)) {
            best = &path;
            best_dist = d;
            best_opp = o;
        }
    }
    if (best)
        return {DribbleDecision::Kind::SwitchPath, best->id,
                next_waypoint(*best, player.pos)};
    return {DribbleDecision::Kind::PassOut, 0, {}};
}

} // namespace soccer
