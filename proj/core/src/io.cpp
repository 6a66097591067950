#include "spinrank/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <unordered_map>

#include "spinrank/error.hpp"

namespace spinrank {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

double parse_double_field(std::string_view field, const std::string& context) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw Error(context + ": cannot parse number '" + std::string(field) + "'");
    }
    return value;
}

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError(path, "cannot open for reading");
    }
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError(path, "cannot open for writing");
    }
    return out;
}

// Strips a trailing '\r' so CRLF input parses cleanly.
void chomp(std::string& line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
}

}  // namespace

std::vector<LabeledEdge> read_edge_file(const std::string& path) {
    std::ifstream in = open_input(path);
    std::vector<LabeledEdge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        chomp(line);
        if (line.empty()) {
            continue;
        }
        auto first = line.find(';');
        auto second = first == std::string::npos ? std::string::npos
                                                 : line.find(';', first + 1);
        if (second == std::string::npos) {
            throw MalformedRecordError(line_no, "expected FROM;TO;WEIGHT in " + path);
        }
        LabeledEdge e;
        e.from = line.substr(0, first);
        e.to = line.substr(first + 1, second - first - 1);
        e.weight = parse_double_field(std::string_view(line).substr(second + 1),
                                      path + ":" + std::to_string(line_no));
        edges.push_back(std::move(e));
    }
    return edges;
}

void write_edge_file(const std::string& path, const SocialNetwork& net) {
    std::ofstream out = open_output(path);
    auto src = net.edge_sources();
    auto dst = net.edge_targets();
    auto w = net.edge_weights();
    for (std::size_t e = 0; e < src.size(); ++e) {
        out << net.label(src[e]) << ';' << net.label(dst[e]) << ';'
            << format_double(w[e]) << '\n';
    }
    if (!out) {
        throw IoError(path, "write failure");
    }
}

void write_edge_file(const std::string& path, const std::vector<LabeledEdge>& edges) {
    std::ofstream out = open_output(path);
    for (const LabeledEdge& e : edges) {
        out << e.from << ';' << e.to << ';' << format_double(e.weight) << '\n';
    }
    if (!out) {
        throw IoError(path, "write failure");
    }
}

std::vector<std::string> read_node_file(const std::string& path) {
    std::ifstream in = open_input(path);
    std::vector<std::string> labels;
    std::string line;
    while (std::getline(in, line)) {
        chomp(line);
        if (!line.empty()) {
            labels.push_back(line);
        }
    }
    return labels;
}

void write_node_file(const std::string& path, const std::vector<std::string>& labels) {
    std::ofstream out = open_output(path);
    for (const std::string& label : labels) {
        out << label << '\n';
    }
    if (!out) {
        throw IoError(path, "write failure");
    }
}

SocialNetwork load_network(const std::string& node_path, const std::string& edge_path,
                           bool allow_isolated) {
    std::vector<std::string> labels = read_node_file(node_path);
    std::unordered_map<std::string, MemberId> index;
    index.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = index.try_emplace(labels[i], static_cast<MemberId>(i));
        if (!inserted) {
            throw Error(node_path + ": duplicate label '" + labels[i] + "'");
        }
    }

    std::vector<LabeledEdge> labeled = read_edge_file(edge_path);
    std::vector<WeightedEdge> edges;
    edges.reserve(labeled.size());
    for (const LabeledEdge& e : labeled) {
        auto from = index.find(e.from);
        auto to = index.find(e.to);
        if (from == index.end() || to == index.end()) {
            throw Error(edge_path + ": edge endpoint '" +
                        (from == index.end() ? e.from : e.to) + "' not in node file");
        }
        edges.push_back({from->second, to->second, e.weight});
    }
    const std::size_t member_count = labels.size();
    return SocialNetwork::build_indexed(member_count, std::move(edges), std::move(labels),
                                        allow_isolated);
}

std::vector<ScoreRow> read_score_file(const std::string& path) {
    std::ifstream in = open_input(path);
    std::vector<ScoreRow> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        chomp(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        auto first = line.find(';');
        if (first == std::string::npos) {
            throw MalformedRecordError(line_no, "expected MEMBER;SCORE in " + path);
        }
        auto second = line.find(';', first + 1);
        std::string_view score_field = std::string_view(line).substr(
            first + 1, second == std::string::npos ? std::string::npos : second - first - 1);
        rows.push_back({line.substr(0, first),
                        parse_double_field(score_field, path + ":" + std::to_string(line_no))});
    }
    return rows;
}

}  // namespace spinrank
