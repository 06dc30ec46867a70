#include "ddsim/csv.hpp"
#include "ddsim/errors.hpp"
#include "ddsim/log_ops.hpp"
#include "ddsim/time.hpp"

#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

using namespace ddsim;
using fixtures::at;
using fixtures::sequence_log;

namespace {

EventLog parse(const std::string& text, const ColumnMapping& m = {}) {
    std::istringstream in(text);
    return parse_csv(in, m);
}

const char* kHeader = "case_id,activity,resource,start_timestamp,end_timestamp\n";

}  // namespace

TEST(Time, ParsesOffsetsAndFractions) {
    const auto a = parse_timestamp("2024-01-01T10:00:00.123+00:00");
    const auto b = parse_timestamp("2024-01-01 12:00:00.123456+02:00");
    const auto c = parse_timestamp("2024-01-01T10:00:00.123Z");
    ASSERT_TRUE(a && b && c);
    EXPECT_EQ(*a, *b);
    EXPECT_EQ(*a, *c);
    EXPECT_EQ(format_timestamp(*a), "2024-01-01T10:00:00.123+00:00");
    EXPECT_FALSE(parse_timestamp("2024-13-01T00:00:00"));
    EXPECT_FALSE(parse_timestamp("yesterday"));
}

TEST(Trace, OrdersByStartEndLabel) {
    using fixtures::event;
    Trace t("c", {event("c", "B", 10, 20), event("c", "A", 10, 20), event("c", "C", 0, 5), event("c", "D", 10, 15)});
    std::vector<std::string> expect{"C", "D", "A", "B"};
    EXPECT_EQ(t.activities(), expect);
    EXPECT_EQ(t.cycle_time(), std::chrono::seconds(20));
}

TEST(Trace, RejectsBadEvents) {
    using fixtures::event;
    EXPECT_THROW(Trace("c", {event("c", "A", 10, 5)}), ValidationError);
    EXPECT_THROW(Trace("c", {event("d", "A", 0, 5)}), ValidationError);
    EXPECT_THROW(Trace("c", {event("c", "", 0, 5)}), ValidationError);
}

TEST(EventLog, RejectsDuplicateCases) {
    auto t = fixtures::trace("x", {{"A", "", 0, 1}});
    EXPECT_THROW(EventLog({t, t}), ValidationError);
}

TEST(Csv, TwoRowsOneCase) {
    const auto log = parse(std::string(kHeader) +
                           "1,A,ann,2024-01-01T00:00:00.000+00:00,2024-01-01T00:01:00.000+00:00\n"
                           "1,B,bob,2024-01-01T00:02:00.000+00:00,2024-01-01T00:03:00.000+00:00\n");
    ASSERT_EQ(log.size(), 1u);
    EXPECT_EQ(log.num_events(), 2u);
    EXPECT_EQ(log.activity_alphabet(), (std::set<std::string>{"A", "B"}));
    EXPECT_EQ(log.resource_alphabet(), (std::set<std::string>{"ann", "bob"}));
}

TEST(Csv, EndBeforeStartCitesLine) {
    std::string text = kHeader;
    for (int i = 0; i < 3; ++i)
        text += "c" + std::to_string(i) + ",A,,2024-01-01T00:00:00Z,2024-01-01T00:01:00Z\n";
    text += "bad,A,,2024-01-01T00:05:00Z,2024-01-01T00:01:00Z\n";  // line 5
    try {
        parse(text);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        ASSERT_EQ(e.lines().size(), 1u);
        EXPECT_EQ(e.lines()[0], 5u);
        EXPECT_EQ(e.case_ids(), std::vector<std::string>{"bad"});
    }
}

TEST(Csv, MissingColumnNamed) {
    try {
        parse("case_id,resource,start_timestamp,end_timestamp\n1,r,2024-01-01T00:00:00Z,2024-01-01T00:00:00Z\n");
        FAIL();
    } catch (const SchemaError& e) {
        EXPECT_EQ(e.column(), "activity");
    }
    // resource is optional: absent column leaves resources empty
    const auto log =
        parse("case_id,activity,start_timestamp,end_timestamp\n1,A,2024-01-01T00:00:00Z,2024-01-01T00:00:00Z\n");
    EXPECT_EQ(log[0][0].resource, "");
}

TEST(Csv, BadTimestampCitesLine) {
    try {
        parse(std::string(kHeader) + "1,A,,2024-01-01T00:00:00Z,2024-01-01T00:00:00Z\n1,B,,soon,later\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(Csv, QuotedFieldsAndCustomColumns) {
    ColumnMapping m{"Case", "Task", "Who", "Begin", "Finish"};
    const auto log = parse(
        "Case,Task,Who,Begin,Finish\n"
        "\"k,1\",\"Check \"\"x\"\"\",,2024-01-01T00:00:00Z,2024-01-01T00:00:01Z\n",
        m);
    ASSERT_EQ(log.size(), 1u);
    EXPECT_EQ(log[0].case_id(), "k,1");
    EXPECT_EQ(log[0][0].activity, "Check \"x\"");
    EXPECT_TRUE(log[0][0].resource.empty());
}

TEST(Csv, RoundTripIsIdentity) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto log = fixtures::random_log(seed, 40);
        std::ostringstream out;
        write_csv(log, out);
        const auto again = parse(out.str());
        EXPECT_EQ(again, log);
        std::ostringstream out2;
        write_csv(again, out2);
        EXPECT_EQ(out2.str(), out.str());
    }
}

TEST(Csv, AbsentResourceRoundTrips) {
    const auto log = EventLog({fixtures::trace("c", {{"A", "", 0, 1.5}, {"B", "", 2, 3}})});
    std::ostringstream out;
    write_csv(log, out);
    EXPECT_NE(out.str().find(",A,,"), std::string::npos);
    EXPECT_EQ(parse(out.str()), log);
}

TEST(Statistics, HandArithmetic) {
    const auto one = EventLog({fixtures::trace("c", {{"A", "", 0, 60}})});
    auto s = compute_statistics(one);
    EXPECT_DOUBLE_EQ(s.mean_duration_seconds, 60.0);
    EXPECT_EQ(s.max_duration, std::chrono::seconds(60));

    const auto two = EventLog({fixtures::trace("a", {{"A", "", 0, 4}, {"B", "", 6, 10}}),
                               fixtures::trace("b", {{"A", "", 100, 130}})});
    s = compute_statistics(two);
    EXPECT_DOUBLE_EQ(s.mean_duration_seconds, 20.0);
    EXPECT_EQ(s.max_duration, std::chrono::seconds(30));
    EXPECT_EQ(s.num_events, 3u);
    EXPECT_DOUBLE_EQ(s.avg_activities_per_trace, 1.5);
    EXPECT_EQ(s.max_activities_per_trace, 2u);
    EXPECT_THROW(compute_statistics(EventLog{}), EmptyInputError);
}

TEST(Statistics, EventCountIsSumOfLengths) {
    for (std::uint64_t seed = 10; seed < 20; ++seed) {
        const auto log = fixtures::random_log(seed, 25);
        std::size_t sum = 0;
        for (const auto& t : log.traces()) sum += t.size();
        EXPECT_EQ(compute_statistics(log).num_events, sum);
    }
}

TEST(TemporalSplit, SevenThree) {
    const auto log = sequence_log(fixtures::repeat({"A"}, 10));
    const auto s = temporal_split(log, 0.7);
    ASSERT_EQ(s.train.size(), 7u);
    ASSERT_EQ(s.test.size(), 3u);
    EXPECT_EQ(s.train[6].case_id(), "c1006");
    EXPECT_EQ(s.test[0].case_id(), "c1007");
}

TEST(TemporalSplit, OrdersByStartNotInputOrder) {
    auto log = sequence_log(fixtures::repeat({"A"}, 4));
    auto ts = log.traces();
    std::reverse(ts.begin(), ts.end());
    const auto s = temporal_split(EventLog(ts), 0.5);
    EXPECT_EQ(s.train[0].case_id(), "c1000");
    EXPECT_EQ(s.train[1].case_id(), "c1001");
}

TEST(TemporalSplit, Errors) {
    const auto three = sequence_log(fixtures::repeat({"A"}, 3));
    EXPECT_THROW(temporal_split(three, 0.7), DegenerateSplitError);
    EXPECT_THROW(temporal_split(three, 0.0), ArgumentError);
    EXPECT_THROW(temporal_split(three, 1.0), ArgumentError);
    EXPECT_THROW(temporal_split(sequence_log({{"A"}}), 0.5), InsufficientDataError);
    EXPECT_EQ(split_point(8616, 0.7), 6032u);
}

TEST(TemporalSplit, PreservesTraces) {
    const auto log = fixtures::random_log(3, 57);
    const auto s = temporal_split(log, 0.7);
    std::multiset<std::string> in, out;
    for (const auto& t : log.traces()) in.insert(t.case_id());
    for (const auto* part : {&s.train, &s.test})
        for (const auto& t : part->traces()) out.insert(t.case_id());
    EXPECT_EQ(in, out);
    EXPECT_EQ(s.train.size(), split_point(57, 0.7));
}

TEST(Concurrency, Definition) {
    auto rel = discover_concurrency(sequence_log({{"A", "B"}, {"B", "A"}}));
    EXPECT_EQ(rel.size(), 1u);
    EXPECT_TRUE(rel.contains("A", "B"));
    EXPECT_TRUE(rel.contains("B", "A"));
    EXPECT_TRUE(discover_concurrency(sequence_log({{"A", "B"}, {"A", "B"}})).empty());

    rel = discover_concurrency(sequence_log({{"A", "B", "C"}, {"A", "C", "B"}, {"C", "A", "B"}}));
    EXPECT_EQ(rel.size(), 2u);
    EXPECT_TRUE(rel.contains("B", "C"));
    EXPECT_TRUE(rel.contains("C", "A"));
}

TEST(Concurrency, MatchesBruteForceAndIgnoresOrder) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto log = fixtures::random_log(seed, 12, 4, 5);
        std::set<std::pair<std::string, std::string>> df;
        for (const auto& t : log.traces())
            for (std::size_t i = 0; i + 1 < t.size(); ++i) df.emplace(t[i].activity, t[i + 1].activity);
        const auto rel = discover_concurrency(log);
        for (const auto& a : log.activity_alphabet())
            for (const auto& b : log.activity_alphabet()) {
                const bool expect = a != b && df.count({a, b}) && df.count({b, a});
                EXPECT_EQ(rel.contains(a, b), expect) << a << b;
                EXPECT_EQ(rel.contains(a, b), rel.contains(b, a));
            }
        auto ts = log.traces();
        std::reverse(ts.begin(), ts.end());
        EXPECT_EQ(discover_concurrency(EventLog(ts)), rel);
    }
}
