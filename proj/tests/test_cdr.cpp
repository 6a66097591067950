#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "spinrank/cdr.hpp"
#include "spinrank/error.hpp"
#include "spinrank/graph.hpp"
#include "spinrank/io.hpp"

using namespace spinrank;
namespace fs = std::filesystem;

TEST_CASE("cdr line parsing") {
    CallRecord r = parse_cdr_line("4475551234,4475556789,080215,134501,42");
    CHECK(r.caller == "4475551234");
    CHECK(r.receiver == "4475556789");
    CHECK(r.year == 2008);
    CHECK(r.month == 2);
    CHECK(r.day == 15);
    CHECK(r.hour == 13);
    CHECK(r.minute == 45);
    CHECK(r.second == 1);
    CHECK(r.duration_s == 42);
}

TEST_CASE("cdr parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_cdr_line("a,b,080101,120000"), MalformedRecordError);
    CHECK_THROWS_AS(parse_cdr_line("a,b,080101,120000,5,extra"), MalformedRecordError);
    CHECK_THROWS_AS(parse_cdr_line("a,b,080101,120000,abc"), MalformedRecordError);
    CHECK_THROWS_AS(parse_cdr_line("a,b,080101,120000,-5"), MalformedRecordError);
    CHECK_THROWS_AS(parse_cdr_line("a,b,080230,120000,5"), MalformedRecordError);  // Feb 30
    CHECK_THROWS_AS(parse_cdr_line("a,b,070229,120000,5"), MalformedRecordError);  // not leap
    CHECK_NOTHROW(parse_cdr_line("a,b,080229,120000,5"));  // 2008 is a leap year
    CHECK_THROWS_AS(parse_cdr_line("a,b,081301,120000,5"), MalformedRecordError);  // month 13
    CHECK_THROWS_AS(parse_cdr_line("a,b,080101,240000,5"), MalformedRecordError);  // hour 24
    CHECK_THROWS_AS(parse_cdr_line("a,b,080101,125960,5"), MalformedRecordError);  // second 60
    CHECK_THROWS_AS(parse_cdr_line("a,b,8011,120000,5"), MalformedRecordError);    // short date
}

TEST_CASE("short-call filter keeps order and boundary") {
    std::vector<CallRecord> records;
    for (std::int64_t d : {0, 2, 3, 10}) {
        CallRecord r;
        r.caller = "a";
        r.receiver = "b";
        r.duration_s = d;
        records.push_back(r);
    }
    auto kept = filter_short_calls(records, 3);
    REQUIRE(kept.size() == 2);
    CHECK(kept[0].duration_s == 3);  // boundary duration is retained
    CHECK(kept[1].duration_s == 10);
}

TEST_CASE("subscriber restriction drops receivers that never call") {
    auto rec = [](const char* c, const char* r) {
        CallRecord x;
        x.caller = c;
        x.receiver = r;
        x.duration_s = 5;
        return x;
    };
    std::vector<CallRecord> records = {rec("a", "b"), rec("b", "a"), rec("a", "x"),
                                       rec("b", "c"), rec("c", "a")};
    auto kept = restrict_to_subscribers(records);
    REQUIRE(kept.size() == 4);  // a->x dropped: x never calls
    for (const CallRecord& r : kept) {
        CHECK(r.receiver != "x");
    }
}

TEST_CASE("aggregation builds user and connection tables") {
    auto rec = [](const char* c, const char* r, std::int64_t d) {
        CallRecord x;
        x.caller = c;
        x.receiver = r;
        x.duration_s = d;
        return x;
    };
    AggregateResult agg = aggregate({rec("a", "b", 10), rec("a", "b", 20), rec("a", "c", 5),
                                     rec("b", "a", 7)});
    REQUIRE(agg.connections.size() == 3);
    CHECK(agg.connections[0].a == "a");
    CHECK(agg.connections[0].b == "b");
    CHECK(agg.connections[0].calls == 2);
    CHECK(agg.connections[0].duration_s == 30);

    REQUIRE(agg.users.size() == 3);
    const UserStats& a = agg.users[0];
    CHECK(a.label == "a");
    CHECK(a.dialled_calls == 3);
    CHECK(a.received_calls == 1);
    CHECK(a.outgoing_duration_s == 35);
    CHECK(a.incoming_duration_s == 7);
    CHECK(a.distinct_callees == 2);
    CHECK(a.distinct_callers == 1);
    const UserStats& c = agg.users[2];
    CHECK(c.label == "c");
    CHECK(c.dialled_calls == 0);
    CHECK(c.received_calls == 1);
}

TEST_CASE("connection weights normalize per caller") {
    std::vector<ConnectionStats> conns = {
        {"a", "b", 3, 30}, {"a", "c", 1, 10}, {"b", "a", 2, 100}};
    auto count = connection_weights(conns, WeightKind::Count);
    REQUIRE(count.size() == 3);
    CHECK(count[0].weight == doctest::Approx(0.75));
    CHECK(count[1].weight == doctest::Approx(0.25));
    CHECK(count[2].weight == doctest::Approx(1.0));
    auto dur = connection_weights(conns, WeightKind::Duration);
    CHECK(dur[0].weight == doctest::Approx(0.75));
    CHECK(dur[1].weight == doctest::Approx(0.25));
    CHECK(dur[2].weight == doctest::Approx(1.0));
}

TEST_CASE("strict ingest aborts on the first malformed line") {
    fs::path dir = fs::temp_directory_path() / "cdr_strict_test";
    fs::create_directories(dir);
    {
        std::ofstream out(dir / "calls.csv");
        out << "a,b,080101,120000,10\n";
        out << "garbage line\n";
    }
    CHECK_THROWS_AS(run_ingest((dir / "calls.csv").string(), 3, dir.string(), false),
                    MalformedRecordError);
    fs::remove_all(dir);
}

TEST_CASE("lenient ingest counts malformed lines and emits normalized files") {
    fs::path dir = fs::temp_directory_path() / "cdr_lenient_test";
    fs::create_directories(dir);
    {
        std::ofstream out(dir / "calls.csv");
        out << "a,b,080101,120000,10\n";
        out << "b,a,080101,120100,20\n";
        out << "a,b,080101,120200,1\n";   // short
        out << "a,z,080101,120300,30\n";  // z never calls
        out << "not,a,cdr\n";             // malformed
    }
    IngestSummary s = run_ingest((dir / "calls.csv").string(), 3, dir.string(), true);
    CHECK(s.total_lines == 5);
    CHECK(s.malformed_lines == 1);
    CHECK(s.total_calls == 4);
    CHECK(s.removed_short == 1);
    CHECK(s.removed_non_subscriber == 1);
    CHECK(s.retained_calls == 2);
    CHECK(s.distinct_pairs == 2);

    SocialNetwork net = load_network((dir / "nodes.txt").string(),
                                     (dir / "edges_count.csv").string());
    CHECK(validate_commitment(net).ok());
    fs::remove_all(dir);
}
