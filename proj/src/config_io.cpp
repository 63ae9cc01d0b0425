#include "soccer/config_io.hpp"

#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace soccer {

using nlohmann::json;

namespace {

void require_version(const json &doc, const char *what) {
    if (!doc.contains("version") || doc.at("version").get<int>() != 1)
        throw std::invalid_argument(std::string(what) +
                                    ": missing or unsupported version (want 1)");
}

Vec2 vec_from(const json &j) {
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json vec_to(const Vec2 &v) { return json::array({v.x, v.y}); }

TeamSide side_from(const std::string &s) {
    if (s == "left") return TeamSide::Left;
    if (s == "right") return TeamSide::Right;
    throw std::invalid_argument("unknown side: " + s);
}

} // namespace

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

MatchConfig parse_match_config(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("match config: ") + e.what());
    }
    MatchConfig cfg;
    try {
        require_version(doc, "match config");
        cfg.cycles = doc.value("cycles", 3000);
        cfg.seed = doc.value("seed", std::uint64_t(1));
        cfg.blocking_enabled = doc.value("blocking", true);
        cfg.attacker_level =
            attacker_level_from_name(doc.value("attacker", std::string("strong")));

        if (doc.contains("field")) {
            const auto &f = doc.at("field");
            cfg.field.length = f.value("length", 105.0);
            cfg.field.width = f.value("width", 68.0);
            cfg.field.goal_width = f.value("goal_width", 14.02);
        }
        if (doc.contains("motion")) {
            const auto &m = doc.at("motion");
            cfg.motion.ball_decay = m.value("ball_decay", 0.94);
            cfg.motion.ball_speed_max = m.value("ball_speed_max", 3.0);
            cfg.motion.player_speed_max = m.value("player_speed_max", 1.05);
            cfg.motion.kickable_dist = m.value("kickable_dist", 1.085);
            cfg.motion.dash_stamina_cost = m.value("dash_stamina_cost", 60.0);
            cfg.motion.stamina_recovery = m.value("stamina_recovery", 45.0);
            cfg.motion.stamina_block_threshold =
                m.value("stamina_block_threshold", 2600.0);
        }
        if (doc.contains("pass_weights")) {
            const auto &w = doc.at("pass_weights");
            cfg.weights.c_lane = w.value("lane", 2.0);
            cfg.weights.c_progress = w.value("progress", 1.0);
            cfg.weights.c_receiver_space = w.value("receiver_space", 1.0);
            cfg.weights.c_length = w.value("length", 0.5);
        }
        if (doc.contains("through")) {
            const auto &t = doc.at("through");
            cfg.through.t_start = t.value("t_start", 35);
            cfg.through.t_floor = t.value("t_floor", 3);
            cfg.through.r_count = t.value("r_count", 5);
            cfg.through.radius_step = t.value("radius_step", 3.0);
            cfg.through.mirror = t.value("mirror", true);
        }
        if (doc.contains("block")) {
            const auto &b = doc.at("block");
            cfg.block.max_block_dist = b.value("max_block_dist", 30.0);
            cfg.block.dribble_speed_factor = b.value("dribble_speed_factor", 0.7);
            cfg.block.horizon = b.value("horizon", 50);
        }
        cfg.dribble = load_paths(doc.at("dribble").dump());
        for (const auto &jr : doc.at("formation")) {
            int uniform = jr.at("uniform").get<int>();
            if (uniform < 1 || uniform > 11)
                throw std::invalid_argument("match config: bad formation uniform");
            FormationRole role;
            role.home = vec_from(jr.at("home"));
            role.attract_x = jr.at("attract_x").get<double>();
            role.attract_y = jr.at("attract_y").get<double>();
            role.max_x = jr.at("max_x").get<double>();
            cfg.formation.roles[static_cast<std::size_t>(uniform - 1)] = role;
        }
        if (doc.at("formation").size() != 11)
            throw std::invalid_argument("match config: formation needs 11 records");
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("match config: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

MatchConfig load_match_config(const std::string &path) {
    return parse_match_config(read_file(path));
}

MatchConfig default_match_config() {
#ifdef SOCCER_DEFAULT_CONFIG
    return load_match_config(SOCCER_DEFAULT_CONFIG);
#else
    throw std::logic_error("no default config path compiled in");
#endif
}

Snapshot parse_snapshot(const std::string &text, const FieldSpec &field) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("snapshot: ") + e.what());
    }
    Snapshot snap;
    try {
        require_version(doc, "snapshot");
        snap.side = side_from(doc.value("side", std::string("left")));
        const auto &jw = doc.at("world");
        WorldState &w = snap.world;
        w.cycle = jw.value("cycle", 0);
        w.ball.pos = vec_from(jw.at("ball").at("pos"));
        w.ball.vel = vec_from(jw.at("ball").at("vel"));
        w.score_left = jw.value("score_left", 0);
        w.score_right = jw.value("score_right", 0);
        if (jw.contains("last_kicker") && !jw.at("last_kicker").is_null()) {
            const auto &lk = jw.at("last_kicker");
            w.last_kicker = PlayerId{side_from(lk.at("side").get<std::string>()),
                                     lk.at("uniform").get<int>()};
        }
        for (const auto &jp : jw.at("players")) {
            PlayerState p;
            p.side = side_from(jp.at("side").get<std::string>());
            p.uniform = jp.at("uniform").get<int>();
            p.pos = vec_from(jp.at("pos"));
            p.vel = vec_from(jp.at("vel"));
            p.body_dir = jp.value("body_dir", 0.0);
            p.stamina = jp.value("stamina", 8000.0);
            w.players.push_back(p);
        }
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("snapshot: ") + e.what());
    }
    snap.world.validate(field);
    return snap;
}

Snapshot load_snapshot(const std::string &path, const FieldSpec &field) {
    return parse_snapshot(read_file(path), field);
}

std::string snapshot_to_json(const Snapshot &snap) {
    json jw;
    jw["cycle"] = snap.world.cycle;
    jw["ball"] = {{"pos", vec_to(snap.world.ball.pos)},
                  {"vel", vec_to(snap.world.ball.vel)}};
    jw["score_left"] = snap.world.score_left;
    jw["score_right"] = snap.world.score_right;
    if (snap.world.last_kicker)
        jw["last_kicker"] = {{"side", side_name(snap.world.last_kicker->side)},
                             {"uniform", snap.world.last_kicker->uniform}};
    else
        jw["last_kicker"] = nullptr;
    json players = json::array();
    for (const auto &p : snap.world.players)
        players.push_back({{"side", side_name(p.side)},
                           {"uniform", p.uniform},
                           {"pos", vec_to(p.pos)},
                           {"vel", vec_to(p.vel)},
                           {"body_dir", p.body_dir},
                           {"stamina", p.stamina}});
    jw["players"] = players;
    json doc;
    doc["version"] = 1;
    doc["side"] = side_name(snap.side);
    doc["world"] = jw;
    return doc.dump(2) + "\n";
}

namespace {

json arm_to_json(const ArmStats &arm) {
    json results = json::array();
    for (const auto &r : arm.results)
        results.push_back({{"seed", r.seed},
                           {"score_left", r.score_left},
                           {"score_right", r.score_right},
                           {"conceded_by_left", r.conceded_by_left},
                           {"cycles_played", r.cycles_played}});
    return {{"total_conceded", arm.total_conceded},
            {"avg_conceded", arm.avg_conceded},
            {"results", results}};
}

ArmStats arm_from_json(const json &j) {
    ArmStats arm;
    arm.total_conceded = j.at("total_conceded").get<int>();
    arm.avg_conceded = j.at("avg_conceded").get<double>();
    for (const auto &jr : j.at("results")) {
        MatchResult r;
        r.seed = jr.at("seed").get<std::uint64_t>();
        r.score_left = jr.at("score_left").get<int>();
        r.score_right = jr.at("score_right").get<int>();
        r.conceded_by_left = jr.at("conceded_by_left").get<int>();
        r.cycles_played = jr.at("cycles_played").get<int>();
        arm.results.push_back(r);
    }
    return arm;
}

} // namespace

std::string experiment_report_to_json(const ExperimentReport &report) {
    json levels = json::array();
    for (const auto &lr : report.levels)
        levels.push_back({{"level", attacker_level_name(lr.level)},
                          {"on", arm_to_json(lr.blocking_on)},
                          {"off", arm_to_json(lr.blocking_off)}});
    json doc;
    doc["version"] = 1;
    doc["matches_per_arm"] = report.matches_per_arm;
    doc["seed"] = report.seed;
    doc["levels"] = levels;
    doc["pooled_on_avg"] = report.pooled_on_avg;
    doc["pooled_off_avg"] = report.pooled_off_avg;
    return doc.dump(2) + "\n";
}

ExperimentReport parse_experiment_report(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("report: ") + e.what());
    }
    ExperimentReport report;
    try {
        require_version(doc, "report");
        report.matches_per_arm = doc.at("matches_per_arm").get<int>();
        report.seed = doc.at("seed").get<std::uint64_t>();
        for (const auto &jl : doc.at("levels")) {
            LevelReport lr;
            lr.level = attacker_level_from_name(jl.at("level").get<std::string>());
            lr.blocking_on = arm_from_json(jl.at("on"));
            lr.blocking_off = arm_from_json(jl.at("off"));
            report.levels.push_back(std::move(lr));
        }
        report.pooled_on_avg = doc.at("pooled_on_avg").get<double>();
        report.pooled_off_avg = doc.at("pooled_off_avg").get<double>();
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("report: ") + e.what());
    }
    return report;
}

void print_experiment_table(std::ostream &os, const ExperimentReport &report) {
    os << "attacker  blocking  matches  total_conceded  avg_conceded  scores\n";
    for (const auto &lr : report.levels) {
        for (const auto *arm : {&lr.blocking_on, &lr.blocking_off}) {
            bool on = (arm == &lr.blocking_on);
            os << std::left << std::setw(10) << attacker_level_name(lr.level)
               << std::setw(10) << (on ? "on" : "off") << std::setw(9)
               << arm->results.size() << std::setw(16) << arm->total_conceded
               << std::setw(14) << std::fixed << std::setprecision(2)
               << arm->avg_conceded;
            for (const auto &r : arm->results)
                os << ' ' << r.score_left << '-' << r.score_right;
            os << "\n";
        }
    }
    os << "pooled averages: on " << std::fixed << std::setprecision(2)
       << report.pooled_on_avg << "  off " << report.pooled_off_avg << "\n";
}

} // namespace soccer
