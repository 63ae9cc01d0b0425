#include "soccer/replay.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace soccer {

namespace {

const char *kHeader = "soccer-replay v1";

std::string fmt(double v, int prec = 3) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

} // namespace

void write_replay_header(std::ostream &os) { os << kHeader << "\n"; }

void write_replay_record(std::ostream &os, const WorldState &pre,
                         const StepEvents &events, int score_left,
                         int score_right) {
    os << "C " << pre.cycle << " B " << fmt(pre.ball.pos.x) << ' '
       << fmt(pre.ball.pos.y) << ' ' << fmt(pre.ball.vel.x) << ' '
       << fmt(pre.ball.vel.y) << " S " << score_left << ' ' << score_right
       << " E ";
    if (events.empty()) {
        os << '-';
    } else {
        for (std::size_t i = 0; i < events.size(); ++i) {
            if (i) os << ',';
            os << events[i];
        }
    }
    for (const auto &p : pre.players)
        os << " P " << side_char(p.side) << ' ' << p.uniform << ' '
           << fmt(p.pos.x) << ' ' << fmt(p.pos.y) << ' ' << fmt(p.stamina, 1);
    os << "\n";
}

AuditReport audit_replay(std::istream &is, const MotionParams &params,
                         const MatchResult &result) {
    AuditReport report;
    auto fail = [&](const std::string &msg) {
        report.ok = false;
        report.violations.push_back(msg);
    };

    std::string line;
    if (!std::getline(is, line) || line != kHeader) {
        fail("missing or unknown replay header");
        return report;
    }

    int last_sl = 0, last_sr = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tok;
        long cycle = 0;
        Vec2 ball_pos;
        double bvx, bvy;
        std::string events;
        ss >> tok >> cycle;
        if (tok != "C") {
            fail("bad record at line for cycle " + std::to_string(cycle));
            continue;
        }
        ss >> tok >> ball_pos.x >> ball_pos.y >> bvx >> bvy; // B
        ss >> tok >> last_sl >> last_sr;                     // S
        ss >> tok >> events;                                 // E

        struct Row {
            char side;
            int uniform;
            Vec2 pos;
            double stamina;
        };
        std::vector<Row> rows;
        while (ss >> tok) {
            Row r;
            ss >> r.side >> r.uniform >> r.pos.x >> r.pos.y >> r.stamina;
            rows.push_back(r);
            if (r.stamina < 0.0 || r.stamina > 8000.0)
                fail("cycle " + std::to_string(cycle) + ": stamina out of range");
        }
        if (rows.size() != 22)
            fail("cycle " + std::to_string(cycle) + ": expected 22 players");

        // kick legality against start-of-cycle positions
        std::istringstream ev(events);
        std::string e;
        while (std::getline(ev, e, ',')) {
            if (e.rfind("kick:", 0) != 0) continue;
            char side = e[5];
            int uniform = std::stoi(e.substr(6));
            bool found = false;
            for (const auto &r : rows) {
                if (r.side != side || r.uniform != uniform) continue;
                found = true;
                // replay precision is 1e-3 per coordinate
                if (r.pos.dist(ball_pos) > params.kickable_dist + 5e-3)
                    fail("cycle " + std::to_string(cycle) + ": kick by " + e +
                         " beyond kickable range");
            }
            if (!found)
                fail("cycle " + std::to_string(cycle) + ": unknown kicker " + e);
        }
        report.records += 1;
    }

    if (last_sl != result.score_left || last_sr != result.score_right)
        fail("final score mismatch with match result");
    if (result.conceded_by_left != result.score_right)
        fail("conceded_by_left does not equal score_right");
    return report;
}

} // namespace soccer
