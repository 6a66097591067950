#include "spinrank/cdr.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "spinrank/error.hpp"
#include "spinrank/io.hpp"

namespace spinrank {

namespace {

std::int64_t parse_int_field(std::string_view field, std::size_t line_no,
                             const char* what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
        throw MalformedRecordError(line_no, std::string("non-numeric ") + what + " '" +
                                                std::string(field) + "'");
    }
    return value;
}

bool valid_date(int year, int month, int day) {
    static const int days_in_month[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12 || day < 1) {
        return false;
    }
    int limit = days_in_month[month - 1];
    bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    if (month == 2 && leap) {
        limit = 29;
    }
    return day <= limit;
}

}  // namespace

CallRecord parse_cdr_line(std::string_view line, std::size_t line_no) {
    std::string_view fields[5];
    std::size_t count = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            if (count == 5) {
                throw MalformedRecordError(line_no, "expected 5 fields");
            }
            fields[count++] = line.substr(start, i - start);
            start = i + 1;
        }
    }
    if (count != 5) {
        throw MalformedRecordError(line_no, "expected 5 fields, got " + std::to_string(count));
    }

    CallRecord rec;
    rec.caller = std::string(fields[0]);
    rec.receiver = std::string(fields[1]);

    std::string_view date = fields[2];
    std::string_view time = fields[3];
    if (date.size() != 6 || time.size() != 6) {
        throw MalformedRecordError(line_no, "date/time must be YYMMDD,HHMMSS");
    }
    rec.year = 2000 + static_cast<int>(parse_int_field(date.substr(0, 2), line_no, "year"));
    rec.month = static_cast<int>(parse_int_field(date.substr(2, 2), line_no, "month"));
    rec.day = static_cast<int>(parse_int_field(date.substr(4, 2), line_no, "day"));
    rec.hour = static_cast<int>(parse_int_field(time.substr(0, 2), line_no, "hour"));
    rec.minute = static_cast<int>(parse_int_field(time.substr(2, 2), line_no, "minute"));
    rec.second = static_cast<int>(parse_int_field(time.substr(4, 2), line_no, "second"));
    rec.duration_s = parse_int_field(fields[4], line_no, "duration");

    if (!valid_date(rec.year, rec.month, rec.day)) {
        throw MalformedRecordError(line_no, "invalid calendar date");
    }
    if (rec.hour > 23 || rec.minute > 59 || rec.second > 59) {
        throw MalformedRecordError(line_no, "invalid time of day");
    }
    if (rec.duration_s < 0) {
        throw MalformedRecordError(line_no, "negative duration");
    }
    return rec;
}

std::vector<CallRecord> filter_short_calls(const std::vector<CallRecord>& records,
                                           std::int64_t min_duration_s) {
    std::vector<CallRecord> kept;
    kept.reserve(records.size());
    for (const CallRecord& rec : records) {
        if (rec.duration_s >= min_duration_s) {
            kept.push_back(rec);
        }
    }
    return kept;
}

std::vector<CallRecord> restrict_to_subscribers(const std::vector<CallRecord>& records) {
    std::unordered_set<std::string> subscribers;
    for (const CallRecord& rec : records) {
        subscribers.insert(rec.caller);
    }
    std::vector<CallRecord> kept;
    kept.reserve(records.size());
    for (const CallRecord& rec : records) {
        if (subscribers.contains(rec.receiver)) {
            kept.push_back(rec);
        }
    }
    return kept;
}

void Aggregator::add(const CallRecord& record) {
    std::string key = record.caller;
    key.push_back('\0');
    key += record.receiver;
    Pair& p = pairs_[key];
    p.calls += 1;
    p.duration_s += static_cast<std::uint64_t>(record.duration_s);
}

AggregateResult Aggregator::finish() const {
    AggregateResult result;
    result.connections.reserve(pairs_.size());
    for (const auto& [key, pair] : pairs_) {
        auto sep = key.find('\0');
        result.connections.push_back(
            {key.substr(0, sep), key.substr(sep + 1), pair.calls, pair.duration_s});
    }
    std::sort(result.connections.begin(), result.connections.end(),
              [](const ConnectionStats& a, const ConnectionStats& b) {
                  return a.a != b.a ? a.a < b.a : a.b < b.b;
              });

    std::map<std::string, UserStats> users;
    for (const ConnectionStats& c : result.connections) {
        UserStats& caller = users[c.a];
        caller.label = c.a;
        caller.dialled_calls += c.calls;
        caller.outgoing_duration_s += c.duration_s;
        caller.distinct_callees += 1;
        UserStats& receiver = users[c.b];
        receiver.label = c.b;
        receiver.received_calls += c.calls;
        receiver.incoming_duration_s += c.duration_s;
        receiver.distinct_callers += 1;
    }
    result.users.reserve(users.size());
    for (auto& [label, stats] : users) {
        result.users.push_back(std::move(stats));
    }
    return result;
}

AggregateResult aggregate(const std::vector<CallRecord>& records) {
    Aggregator agg;
    for (const CallRecord& rec : records) {
        agg.add(rec);
    }
    return agg.finish();
}

std::vector<LabeledEdge> connection_weights(const std::vector<ConnectionStats>& connections,
                                            WeightKind kind) {
    std::unordered_map<std::string, std::uint64_t> totals;
    for (const ConnectionStats& c : connections) {
        totals[c.a] += kind == WeightKind::Count ? c.calls : c.duration_s;
    }
    std::vector<LabeledEdge> edges;
    edges.reserve(connections.size());
    for (const ConnectionStats& c : connections) {
        std::uint64_t numer = kind == WeightKind::Count ? c.calls : c.duration_s;
        std::uint64_t denom = totals[c.a];
        if (denom == 0) {
            continue;  // possible only for duration kind with all-zero durations
        }
        edges.push_back({c.a, c.b, static_cast<double>(numer) / static_cast<double>(denom)});
    }
    return edges;
}

EmitSummary emit_edge_files(const std::vector<ConnectionStats>& connections,
                            WeightKind kind, const std::string& node_path,
                            const std::string& edge_path) {
    if (connections.empty()) {
        throw EmptyInputError();
    }
    std::vector<std::string> labels;
    labels.reserve(connections.size() * 2);
    for (const ConnectionStats& c : connections) {
        labels.push_back(c.a);
        labels.push_back(c.b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::vector<LabeledEdge> edges = connection_weights(connections, kind);
    write_node_file(node_path, labels);
    write_edge_file(edge_path, edges);
    return {labels.size(), edges.size()};
}

std::string format_summary(const IngestSummary& s) {
    std::ostringstream out;
    out << "total_lines: " << s.total_lines << '\n'
        << "malformed_lines: " << s.malformed_lines << '\n'
        << "total_calls: " << s.total_calls << '\n'
        << "removed_short: " << s.removed_short << '\n'
        << "removed_non_subscriber: " << s.removed_non_subscriber << '\n'
        << "retained_calls: " << s.retained_calls << '\n'
        << "distinct_callers: " << s.distinct_callers << '\n'
        << "distinct_receivers: " << s.distinct_receivers << '\n'
        << "distinct_pairs: " << s.distinct_pairs << '\n';
    return out.str();
}

IngestSummary run_ingest(const std::string& cdr_path, std::int64_t min_duration_s,
                         const std::string& out_dir, bool lenient) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    IngestSummary summary;
    std::unordered_set<std::string> subscribers;

    auto for_each_record = [&](auto&& fn, bool count_stats) {
        std::ifstream in(cdr_path);
        if (!in) {
            throw IoError(cdr_path, "cannot open for reading");
        }
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (line.empty()) {
                continue;
            }
            CallRecord rec;
            try {
                rec = parse_cdr_line(line, line_no);
            } catch (const MalformedRecordError&) {
                if (!lenient) {
                    throw;
                }
                if (count_stats) {
                    ++summary.malformed_lines;
                }
                continue;
            }
            if (count_stats) {
                ++summary.total_lines;
                ++summary.total_calls;
            }
            if (rec.duration_s < min_duration_s) {
                if (count_stats) {
                    ++summary.removed_short;
                }
                continue;
            }
            fn(rec);
        }
    };

    // Pass 1: subscriber set = callers surviving the short-call filter.
    for_each_record([&](const CallRecord& rec) { subscribers.insert(rec.caller); }, true);
    summary.total_lines += summary.malformed_lines;

    // Pass 2: subscriber restriction + aggregation.
    Aggregator agg;
    for_each_record(
        [&](const CallRecord& rec) {
            if (!subscribers.contains(rec.receiver)) {
                ++summary.removed_non_subscriber;
                return;
            }
            ++summary.retained_calls;
            agg.add(rec);
        },
        false);

    AggregateResult result = agg.finish();
    summary.distinct_pairs = result.connections.size();
    for (const UserStats& u : result.users) {
        if (u.dialled_calls > 0) {
            ++summary.distinct_callers;
        }
        if (u.received_calls > 0) {
            ++summary.distinct_receivers;
        }
    }

    fs::path dir(out_dir);
    if (!result.connections.empty()) {
        emit_edge_files(result.connections, WeightKind::Count, (dir / "nodes.txt").string(),
                        (dir / "edges_count.csv").string());
        emit_edge_files(result.connections, WeightKind::Duration, (dir / "nodes.txt").string(),
                        (dir / "edges_duration.csv").string());
    }
    std::ofstream sum_out(dir / "summary.txt");
    if (!sum_out) {
        throw IoError((dir / "summary.txt").string(), "cannot open for writing");
    }
    sum_out << format_summary(summary);
    return summary;
}

}  // namespace spinrank
