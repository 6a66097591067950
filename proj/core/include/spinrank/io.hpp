#pragma once

#include <string>
#include <vector>

#include "spinrank/graph.hpp"

namespace spinrank {

// Locale-independent formatting with 12 significant digits ("%.12g").
std::string format_double(double value);

// Strict decimal parse of a full field; throws Error on failure.
double parse_double_field(std::string_view field, const std::string& context);

// Edge-list text format: one edge per line, `FROM;TO;WEIGHT`, no header.
std::vector<LabeledEdge> read_edge_file(const std::string& path);
void write_edge_file(const std::string& path, const SocialNetwork& net);
void write_edge_file(const std::string& path, const std::vector<LabeledEdge>& edges);

// Node-list format: one external label per line.
std::vector<std::string> read_node_file(const std::string& path);
void write_node_file(const std::string& path, const std::vector<std::string>& labels);

// Builds a network whose member set and id order come from the node file.
// Every edge endpoint must appear in the node file.
SocialNetwork load_network(const std::string& node_path, const std::string& edge_path,
                           bool allow_isolated = false);

// Score files: `member;score` per line (extra trailing fields ignored, so
// `member;sp;rank` output can be fed back in).
struct ScoreRow {
    std::string member;
    double score;
};
std::vector<ScoreRow> read_score_file(const std::string& path);

}  // namespace spinrank
