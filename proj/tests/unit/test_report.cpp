#include "dcvopt/report.hpp"
#include "dcvopt/scenarios.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

using namespace dcvopt;
using namespace dcvopt::testing;

TEST(Report, EmptyReportIsValid)
{
    const Report r{"dcvcheck", {}};
    const std::string m = render_machine(r);
    const auto j = nlohmann::json::parse(m);
    EXPECT_EQ(j["format"], "dcvopt-report");
    EXPECT_EQ(j["version"], 1);
    EXPECT_TRUE(j["results"].empty());
    EXPECT_EQ(parse_machine_report(m), r);
    EXPECT_EQ(render_text(r), "command: dcvcheck\n");
}

TEST(Report, RationalsAreExact)
{
    Report r{"x", {}};
    r.results.push_back(ReportEntry{"c", "ok", {}, {}, {}});
    r.results[0].number("half", Q(1, 2)).number("three", 3).vector("v", RationalVector{Q(-1, 3), 0});
    const auto j = nlohmann::json::parse(render_machine(r));
    const auto& fields = j["results"][0]["fields"];
    EXPECT_EQ(fields[0]["rational"], "1/2");
    EXPECT_EQ(fields[1]["rational"], "3");
    EXPECT_EQ(fields[2]["vector"], nlohmann::json::array({"-1/3", "0"}));
    const std::string text = render_text(r);
    EXPECT_NE(text.find("  half = 1/2\n"), std::string::npos);
    EXPECT_NE(text.find("  v = (-1/3, 0)\n"), std::string::npos);
}

TEST(Report, TextLayout)
{
    Report r{"cmd", {}};
    ReportEntry e{"weak-min", "Falsified", {}, {"a note"}, {"a flag"}};
    e.text("witness", "here");
    r.results.push_back(e);
    EXPECT_EQ(render_text(r),
              "command: cmd\n[weak-min] Falsified\n  witness = here\n  note: a note\n  DISCREPANCY: a flag\n");
    EXPECT_EQ(emit_report(r, ReportFormat::Text), render_text(r));
    EXPECT_EQ(emit_report(r, ReportFormat::Machine), render_machine(r));
}

TEST(Report, LookupHelpers)
{
    Report r{"cmd", {ReportEntry{"a", "s", {}, {}, {}}}};
    r.results[0].number("n", 2);
    ASSERT_NE(r.find("a"), nullptr);
    EXPECT_EQ(r.find("b"), nullptr);
    ASSERT_NE(r.results[0].field("n"), nullptr);
    EXPECT_EQ(std::get<Rational>(r.results[0].field("n")->value), 2);
    EXPECT_EQ(r.results[0].field("m"), nullptr);
}

TEST(Report, MalformedMachineInput)
{
    EXPECT_THROW(parse_machine_report("not json"), Error);
    EXPECT_THROW(parse_machine_report(R"({"format": "other", "version": 1, "command": "", "results": []})"), Error);
    EXPECT_THROW(parse_machine_report(R"({"format": "dcvopt-report", "version": 2, "command": "", "results": []})"),
                 Error);
    EXPECT_THROW(
        parse_machine_report(
            R"({"format": "dcvopt-report", "version": 1, "command": "", "results": [{"check": "c", "status": "s", "fields": [{"name": "n", "rational": "1/0"}], "notes": [], "flags": []}]})"),
        Error);
}

TEST(Report, ScenarioRoundTripAndDeterminism)
{
    for (const auto& name : scenario_names()) {
        const Report r = run_scenario(name).report;
        const std::string m = render_machine(r);
        EXPECT_EQ(parse_machine_report(m), r) << name;
        EXPECT_EQ(render_machine(run_scenario(name).report), m) << name;
        EXPECT_EQ(render_text(run_scenario(name).report), render_text(r)) << name;
    }
}
