#ifndef SOCCER_REPLAY_HPP
#define SOCCER_REPLAY_HPP

#include "soccer/engine.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace soccer {

// Line-oriented replay stream, one record per cycle. Positions are the
// start-of-cycle snapshot (kick legality is judged against these), events
// and scores are from the step that followed.
//
//   soccer-replay v1
//   C <cycle> B <bx> <by> <bvx> <bvy> S <sl> <sr> E <ev,ev|-> P L 1 <x> <y> <st> ... P R 11 ...

void write_replay_header(std::ostream &os);
void write_replay_record(std::ostream &os, const WorldState &pre,
                         const StepEvents &events, int score_left,
                         int score_right);

struct AuditReport {
    bool ok = true;
    int records = 0;
    std::vector<std::string> violations;
};

// Post-hoc legality audit: kicks within kickable range, stamina in bounds,
// final score consistent with the match result.
AuditReport audit_replay(std::istream &is, const MotionParams &params,
                         const MatchResult &result);

} // namespace soccer

#endif
