#ifndef SOCCER_ENGINE_HPP
#define SOCCER_ENGINE_HPP

#include "soccer/defense.hpp"
#include "soccer/dribble.hpp"
#include "soccer/passing.hpp"
#include "soccer/rng.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace soccer {

struct Command {
    enum class Kind { Dash, Kick, Idle };
    Kind kind = Kind::Idle;
    Vec2 target;        // Dash destination (absolute frame)
    double power = 1.0; // Dash power fraction 0..1
    Vec2 velocity;      // Kick velocity (absolute frame)

    static Command dash(const Vec2 &to, double power = 1.0) {
        Command c;
        c.kind = Kind::Dash;
        c.target = to;
        c.power = power;
        return c;
    }
    static Command kick(const Vec2 &vel) {
        Command c;
        c.kind = Kind::Kick;
        c.velocity = vel;
        return c;
    }
    static Command idle() { return {}; }
};

enum class AttackerLevel { Weak, Medium, Strong };

const char *attacker_level_name(AttackerLevel level);
AttackerLevel attacker_level_from_name(const std::string &name);

struct MatchConfig {
    int cycles = 3000;
    std::uint64_t seed = 1;
    FieldSpec field;
    MotionParams motion;
    PassFactorWeights weights;
    ThroughPassParams through;
    DribbleConfig dribble;
    FormationSpec formation;
    BlockParams block;
    bool blocking_enabled = true;
    AttackerLevel attacker_level = AttackerLevel::Strong;

    void validate() const;
};

struct MatchResult {
    int score_left = 0;
    int score_right = 0;
    int conceded_by_left = 0;
    int cycles_played = 0;
    std::uint64_t seed = 0;
};

struct FeintState {
    int cycles_left = 0;
    double angle = 0.0;
};

struct MatchState {
    WorldState world;
    std::map<int, int> dribble_path;      // legendary per-player committed path
    std::map<int, FeintState> feints;     // attacker per-player feint memory
    std::vector<PlayerId> offside_flagged; // teammates of last_kicker beyond the line at kick time
    Rng rng;

    explicit MatchState(Rng r = Rng(0)) : rng(r) {}
};

// events produced by one step, e.g. "kick:L7", "goal:R", "offside:L",
// "throwin:R"
using StepEvents = std::vector<std::string>;

MatchState initial_match_state(const MatchConfig &config);

StepEvents step_match(MatchState &state, const std::array<Command, 22> &commands,
                      const MatchConfig &config);

// Skill-composing policy for the Left team; commands indexed by uniform-1.
std::array<Command, 11> legendary_policy(const WorldState &world, TeamSide side,
                                         MatchState &state,
                                         const MatchConfig &config);

// Scripted opposition at three strengths.
std::array<Command, 11> attacker_policy(const WorldState &world, TeamSide side,
                                        AttackerLevel level, MatchState &state,
                                        const MatchConfig &config);

// attacking-side formation used by the scripted policies and kickoff resets
const FormationSpec &attacker_formation();

MatchResult run_match(const MatchConfig &config, std::ostream *replay = nullptr);

struct ArmStats {
    int total_conceded = 0;
    double avg_conceded = 0.0;
    std::vector<MatchResult> results; // ordered by seed
};

struct LevelReport {
    AttackerLevel level = AttackerLevel::Weak;
    ArmStats blocking_on;
    ArmStats blocking_off;
};

struct ExperimentReport {
    int matches_per_arm = 0;
    std::uint64_t seed = 0;
    std::vector<LevelReport> levels; // Weak, Medium, Strong
    double pooled_on_avg = 0.0;
    double pooled_off_avg = 0.0;
};

ExperimentReport run_experiment(const MatchConfig &base, int matches_per_arm,
                                std::uint64_t seed, int jobs = 1);

} // namespace soccer

#endif
