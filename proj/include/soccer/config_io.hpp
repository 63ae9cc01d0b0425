#ifndef SOCCER_CONFIG_IO_HPP
#define SOCCER_CONFIG_IO_HPP

#include "soccer/engine.hpp"

#include <iosfwd>
#include <string>

namespace soccer {

// All documents are JSON with a top-level "version" field (currently 1).
// Validation failures throw std::invalid_argument with a description.

MatchConfig load_match_config(const std::string &path);
MatchConfig parse_match_config(const std::string &text);

// the shipped default tuning (configs/default_match.json)
MatchConfig default_match_config();

struct Snapshot {
    WorldState world;
    TeamSide side = TeamSide::Left; // side to analyze
};

Snapshot load_snapshot(const std::string &path, const FieldSpec &field);
Snapshot parse_snapshot(const std::string &text, const FieldSpec &field);
std::string snapshot_to_json(const Snapshot &snap);

std::string experiment_report_to_json(const ExperimentReport &report);
ExperimentReport parse_experiment_report(const std::string &text);

// Table-2-shaped text summary: one row per attacker level and arm, pooled
// averages last.
void print_experiment_table(std::ostream &os, const ExperimentReport &report);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

} // namespace soccer

#endif
