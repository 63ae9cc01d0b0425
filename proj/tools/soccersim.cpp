// command line front end: run matches, run the blocking ablation, inspect
// single-snapshot decisions, validate configs

#include "CLI11.hpp"

#include "soccer/config_io.hpp"
#include "soccer/engine.hpp"
#include "soccer/replay.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace soccer;

namespace {

std::string fmt(double v, int prec = 3) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

std::string point(const Vec2 &p) {
    return "(" + fmt(p.x) + "," + fmt(p.y) + ")";
}

const PlayerState *ball_owner(const WorldState &tf, TeamSide side,
                              const MotionParams &motion) {
    const PlayerState *best = nullptr;
    for (const auto &p : tf.players) {
        if (p.side != side) continue;
        double d = p.pos.dist(tf.ball.pos);
        if (d > motion.kickable_dist) continue;
        if (!best || d < best->pos.dist(tf.ball.pos)) best = &p;
    }
    return best;
}

int run_analyze(const std::string &snapshot_path, const std::string &skill,
                bool explain, const std::optional<std::string> &config_path) {
    MatchConfig cfg = config_path ? load_match_config(*config_path)
                                  : default_match_config();
    Snapshot snap = load_snapshot(snapshot_path, cfg.field);
    WorldState tf = to_team_frame(snap.world, snap.side);

    if (skill == "block") {
        if (!ball_owner(tf, opposite(snap.side), cfg.motion) &&
            !ball_owner(tf, snap.side, cfg.motion))
            throw std::invalid_argument("analyze: no player owns the ball");
        if (explain) {
            const PlayerState *carrier = nullptr;
            for (const auto &p : tf.players)
                if (p.pos.dist(tf.ball.pos) <= cfg.motion.kickable_dist &&
                    (!carrier ||
                     p.pos.dist(tf.ball.pos) < carrier->pos.dist(tf.ball.pos)))
                    carrier = &p;
            for (const auto &d : tf.players) {
                if (d.side == carrier->side) continue;
                auto plan = compute_block_point(tf, d, *carrier, cfg.motion,
                                                cfg.block, cfg.field);
                std::cout << "defender=" << d.uniform;
                if (plan)
                    std::cout << " point=" << point(plan->block_point)
                              << " blocker_cycles=" << plan->blocker_cycles
                              << " opponent_cycles=" << plan->opponent_cycles
                              << " mode="
                              << (plan->mode == BlockMode::Wait ? "wait" : "press");
                else if (d.stamina < cfg.motion.stamina_block_threshold)
                    std::cout << " plan=none reason=stamina";
                else
                    std::cout << " plan=none reason=unreachable_or_far";
                std::cout << "\n";
            }
        }
        auto plan = assign_blocker(tf, cfg.motion, cfg.block, cfg.field);
        if (plan)
            std::cout << "decision: blocker=" << plan->blocker
                      << " point=" << point(plan->block_point)
                      << " blocker_cycles=" << plan->blocker_cycles
                      << " opponent_cycles=" << plan->opponent_cycles << " mode="
                      << (plan->mode == BlockMode::Wait ? "wait" : "press")
                      << "\n";
        else
            std::cout << "decision: none\n";
        return 0;
    }

    const PlayerState *owner = ball_owner(tf, snap.side, cfg.motion);
    if (!owner)
        throw std::invalid_argument(
            "analyze: no player of the analyzed side owns the ball");

    if (skill == "pass") {
        if (explain) {
            for (const auto &mate : tf.players) {
                if (mate.side != snap.side || mate.uniform == owner->uniform)
                    continue;
                PassFactors f = compute_pass_factors(tf, *owner, mate.pos, mate,
                                                     cfg.motion);
                double dist = tf.ball.pos.dist(mate.pos);
                std::string verdict = "infeasible";
                for (int n = 1; n <= 10 && dist > 1e-6; ++n) {
                    if (kick_speed_for(dist, n, cfg.motion.ball_decay) >
                        cfg.motion.ball_speed_max)
                        continue;
                    Vec2 vel = kick_velocity_for(tf.ball.pos, mate.pos, n,
                                                 cfg.motion);
                    auto out = predict_interception(
                        after_kick(tf, *owner, vel), cfg.motion);
                    if (out && out->reacher == mate.id())
                        verdict = "receiver_first";
                    else if (out)
                        verdict = std::string("intercepted:") +
                                  side_char(out->reacher.side) +
                                  std::to_string(out->reacher.uniform);
                    else
                        verdict = "unreached";
                    break;
                }
                std::cout << "mate=" << mate.uniform << " e_lane=" << fmt(f.e_lane)
                          << " e_progress=" << fmt(f.e_progress)
                          << " e_space=" << fmt(f.e_receiver_space)
                          << " e_length=" << fmt(f.e_length)
                          << " score=" << fmt(score_direct_pass(f, cfg.weights))
                          << " " << verdict << "\n";
            }
        }
        auto c = best_direct_pass(tf, *owner, cfg.weights, cfg.motion, cfg.field);
        if (c)
            std::cout << "decision: direct target=" << point(c->target)
                      << " receiver=" << c->receiver
                      << " speed=" << fmt(c->initial_speed)
                      << " cycles=" << c->arrival_cycles
                      << " score=" << fmt(c->score) << "\n";
        else
            std::cout << "decision: none\n";
        return 0;
    }

    if (skill == "through") {
        if (explain) {
            double line = offside_line(tf, snap.side, cfg.field);
            std::cout << "offside_line=" << fmt(line) << "\n";
            std::vector<const PlayerState *> mates;
            for (const auto &p : tf.players)
                if (p.side == snap.side && p.uniform != owner->uniform &&
                    p.pos.x > 0.0)
                    mates.push_back(&p);
            std::sort(mates.begin(), mates.end(),
                      [](const PlayerState *a, const PlayerState *b) {
                          if (a->pos.x != b->pos.x) return a->pos.x > b->pos.x;
                          return a->uniform < b->uniform;
                      });
            for (const auto *mate : mates) {
                for (const Vec2 &t : generate_through_targets(
                         *mate, cfg.field.right_goal_center(), cfg.through)) {
                    std::string verdict;
                    if (t.x > line + 0.5) verdict = "offside";
                    else if (!cfg.field.contains(t)) verdict = "out_of_bounds";
                    else {
                        double dist = tf.ball.pos.dist(t);
                        int n = std::max(
                            1, cycles_to_reach(*mate, t, cfg.motion));
                        if (dist < 1e-6 ||
                            kick_speed_for(dist, n, cfg.motion.ball_decay) >
                                cfg.motion.ball_speed_max) {
                            verdict = "too_fast";
                        } else {
                            Vec2 vel =
                                kick_velocity_for(tf.ball.pos, t, n, cfg.motion);
                            auto out = predict_interception(
                                after_kick(tf, *owner, vel), cfg.motion);
                            if (out && out->reacher == mate->id()) verdict = "ok";
                            else if (out)
                                verdict = std::string("intercepted:") +
                                          side_char(out->reacher.side) +
                                          std::to_string(out->reacher.uniform);
                            else verdict = "unreached";
                        }
                    }
                    std::cout << "mate=" << mate->uniform
                              << " target=" << point(t) << " " << verdict << "\n";
                    if (verdict == "ok") break;
                }
            }
        }
        auto c = find_through_pass(tf, *owner, cfg.through, cfg.motion, cfg.field);
        if (c)
            std::cout << "decision: through target=" << point(c->target)
                      << " receiver=" << c->receiver
                      << " speed=" << fmt(c->initial_speed)
                      << " cycles=" << c->arrival_cycles << "\n";
        else
            std::cout << "decision: none\n";
        return 0;
    }

    if (skill == "dribble") {
        if (explain) {
            for (const auto &path : cfg.dribble.paths) {
                std::cout << "path=" << path.id
                          << " main=" << (path.is_main ? "yes" : "no")
                          << " blocked="
                          << (is_path_blocked(tf, *owner, path, cfg.dribble)
                                  ? "yes"
                                  : "no")
                          << " rate="
                          << fmt(rate_path(tf, *owner, path, cfg.dribble,
                                           cfg.field))
                          << " min_opp_dist="
                          << fmt(min_opponent_dist_to_lookahead(tf, *owner, path,
                                                                cfg.dribble))
                          << "\n";
            }
        }
        DribbleDecision d =
            choose_dribble(tf, *owner, cfg.dribble, std::nullopt, cfg.motion);
        switch (d.kind) {
        case DribbleDecision::Kind::Advance:
            std::cout << "decision: advance path=" << d.path_id
                      << " waypoint=" << point(d.waypoint) << "\n";
            break;
        case DribbleDecision::Kind::SwitchPath:
            std::cout << "decision: switch path=" << d.path_id
                      << " waypoint=" << point(d.waypoint) << "\n";
            break;
        case DribbleDecision::Kind::PassOut:
            std::cout << "decision: pass_out\n";
            break;
        }
        return 0;
    }

    throw std::invalid_argument("analyze: unknown skill " + skill);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"deterministic 2d soccer micro-simulator"};
    app.require_subcommand(1);

    std::string config_path, replay_path, snapshot_path, out_path, skill;
    std::string blocking = "on", attacker;
    std::optional<std::uint64_t> seed;
    std::optional<int> cycles;
    int matches_per_arm = 5, jobs = 1;
    bool explain = false;

    auto *match = app.add_subcommand("match", "run one match");
    match->add_option("--config", config_path)->required();
    match->add_option("--seed", seed);
    match->add_option("--blocking", blocking)
        ->check(CLI::IsMember({"on", "off"}));
    match->add_option("--attacker", attacker)
        ->check(CLI::IsMember({"weak", "medium", "strong"}));
    match->add_option("--replay", replay_path);
    match->add_option("--cycles", cycles);

    auto *experiment = app.add_subcommand("experiment", "run the blocking ablation");
    experiment->add_option("--config", config_path)->required();
    experiment->add_option("--seed", seed);
    experiment->add_option("--matches-per-arm", matches_per_arm);
    experiment->add_option("--out", out_path);
    experiment->add_option("--jobs", jobs);

    auto *analyze = app.add_subcommand("analyze", "inspect one snapshot decision");
    analyze->add_option("--snapshot", snapshot_path)->required();
    analyze->add_option("--skill", skill)
        ->required()
        ->check(CLI::IsMember({"pass", "through", "dribble", "block"}));
    analyze->add_flag("--explain", explain);
    std::optional<std::string> analyze_config;
    analyze->add_option("--config", analyze_config);

    auto *validate = app.add_subcommand("validate", "check a config file");
    validate->add_option("--config", config_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (match->parsed()) {
            MatchConfig cfg = load_match_config(config_path);
            if (seed) cfg.seed = *seed;
            if (cycles) cfg.cycles = *cycles;
            if (!attacker.empty())
                cfg.attacker_level = attacker_level_from_name(attacker);
            cfg.blocking_enabled = (blocking == "on");
            MatchResult result;
            if (!replay_path.empty()) {
                std::ofstream rf(replay_path, std::ios::binary);
                if (!rf)
                    throw std::invalid_argument("cannot write " + replay_path);
                result = run_match(cfg, &rf);
            } else {
                result = run_match(cfg);
            }
            std::cout << "score " << result.score_left << "-"
                      << result.score_right
                      << " conceded=" << result.conceded_by_left
                      << " seed=" << result.seed << "\n";
            return 0;
        }
        if (experiment->parsed()) {
            MatchConfig cfg = load_match_config(config_path);
            ExperimentReport report = run_experiment(
                cfg, matches_per_arm, seed.value_or(cfg.seed), jobs);
            if (!out_path.empty())
                write_file(out_path, experiment_report_to_json(report));
            print_experiment_table(std::cout, report);
            return 0;
        }
        if (analyze->parsed())
            return run_analyze(snapshot_path, skill, explain, analyze_config);
        if (validate->parsed()) {
            load_match_config(config_path);
            std::cout << "ok\n";
            return 0;
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
