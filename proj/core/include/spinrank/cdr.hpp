#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spinrank/graph.hpp"

namespace spinrank {

// One call-detail record: CALLER,RECEIVER,YYMMDD,HHMMSS,DURATION.
struct CallRecord {
    std::string caller;
    std::string receiver;
    int year = 0;  // full year, two-digit input maps to 2000+YY
    int month = 0;
    int day = 0;
    int hour = 0;
    int minute = 0;
    int second = 0;
    std::int64_t duration_s = 0;
};

// Parses one comma-separated CDR line. Throws MalformedRecordError on wrong
// field count, non-numeric duration, or invalid date/time.
CallRecord parse_cdr_line(std::string_view line, std::size_t line_no = 0);

// Per-user call statistics.
struct UserStats {
    std::string label;
    std::uint64_t dialled_calls = 0;
    std::uint64_t received_calls = 0;
    std::uint64_t outgoing_duration_s = 0;
    std::uint64_t incoming_duration_s = 0;
    std::uint64_t distinct_callees = 0;
    std::uint64_t distinct_callers = 0;
};

// Per ordered pair a->b: summed call count and duration.
struct ConnectionStats {
    std::string a;
    std::string b;
    std::uint64_t calls = 0;
    std::uint64_t duration_s = 0;
};

// Retains records with duration_s >= min_duration_s, preserving order.
std::vector<CallRecord> filter_short_calls(const std::vector<CallRecord>& records,
                                           std::int64_t min_duration_s = 3);

// Retains records whose receiver also appears as a caller (two-pass).
std::vector<CallRecord> restrict_to_subscribers(const std::vector<CallRecord>& records);

struct AggregateResult {
    std::vector<UserStats> users;              // sorted by label
    std::vector<ConnectionStats> connections;  // sorted by (a, b)
};

// Streaming aggregator: memory proportional to distinct users + pairs.
class Aggregator {
public:
    void add(const CallRecord& record);
    AggregateResult finish() const;

private:
    struct Pair {
        std::uint64_t calls = 0;
        std::uint64_t duration_s = 0;
    };
    // keyed "a\0b"; labels never contain NUL in CDR input
    std::unordered_map<std::string, Pair> pairs_;
};

AggregateResult aggregate(const std::vector<CallRecord>& records);

enum class WeightKind { Count, Duration };

struct EmitSummary {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
};

// Writes the node file (sorted, deduplicated labels) and the edge file
// `A;B;w` with w per Eq-style normalization over the retained connections.
EmitSummary emit_edge_files(const std::vector<ConnectionStats>& connections,
                            WeightKind kind, const std::string& node_path,
                            const std::string& edge_path);

// In-memory weight computation shared by emit_edge_files.
std::vector<LabeledEdge> connection_weights(const std::vector<ConnectionStats>& connections,
                                            WeightKind kind);

struct IngestSummary {
    std::uint64_t total_lines = 0;
    std::uint64_t malformed_lines = 0;
    std::uint64_t total_calls = 0;
    std::uint64_t removed_short = 0;
    std::uint64_t removed_non_subscriber = 0;
    std::uint64_t retained_calls = 0;
    std::uint64_t distinct_callers = 0;
    std::uint64_t distinct_receivers = 0;
    std::uint64_t distinct_pairs = 0;
};

std::string format_summary(const IngestSummary& summary);

// Full pipeline over a CDR file: parse -> short-call filter -> subscriber
// restriction -> aggregate -> emit node/edge/summary files. Two streaming
// passes over the input; never holds the record stream in memory.
// With lenient=false the first malformed line aborts the run.
IngestSummary run_ingest(const std::string& cdr_path, std::int64_t min_duration_s,
                         const std::string& out_dir, bool lenient = false);

}  // namespace spinrank
