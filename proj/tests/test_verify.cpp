#include <gtest/gtest.h>

#include <json.hpp>

#include "fixmahon/error.hpp"
#include "fixmahon/verify.hpp"

using namespace fixmahon;

TEST(Suites, RegistryNames) {
  const auto& names = suite_names();
  EXPECT_GE(names.size(), 20u);
  for (const char* n : {"series-agreement", "theorem-1.1", "theorem-1.3", "theorem-6.1", "prop-7.1", "golden"})
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
}

TEST(Suites, EachSuitePassesAtSmallCaps) {
  Caps caps;
  caps.n_max = 4;
  caps.r_max = 2;
  caps.alphabet_max = 3;
  for (const std::string& name : suite_names()) {
    Report r = run_suite(name, caps);
    EXPECT_TRUE(r.passed) << name << ": " << (r.failures.empty() ? "" : r.failures[0].check);
    EXPECT_EQ(r.suite, name);
    EXPECT_GT(r.checked, 0u) << name;
    for (const Audit& a : r.audits) EXPECT_TRUE(a.matches()) << name << " " << a.name;
  }
}

TEST(Suites, NamedExamplesPass) {
  Caps six;
  six.n_max = 6;
  EXPECT_TRUE(run_suite("theorem-1.3", six).passed);
  EXPECT_TRUE(run_suite("theorem-6.1", six).passed);
  EXPECT_TRUE(run_suite("prop-7.1", six).passed);
}

TEST(Suites, RejectsUnknownNamesAndOversizedCaps) {
  EXPECT_THROW(run_suite("theorem-9.9"), PreconditionError);
  Caps big;
  big.n_max = kMaxPermutationLength + 1;
  EXPECT_THROW(run_suite("theorem-1.1", big), PreconditionError);
  Caps letters;
  letters.r_max = kMaxLetter + 1;
  EXPECT_THROW(run_suite("theorem-2.1", letters), PreconditionError);
}

TEST(Suites, AllMergesInRegistryOrder) {
  Caps caps;
  caps.n_max = 3;
  caps.r_max = 1;
  caps.alphabet_max = 2;
  auto parts = run_all_suites(caps);
  ASSERT_EQ(parts.size(), suite_names().size());
  for (std::size_t i = 0; i < parts.size(); ++i) EXPECT_EQ(parts[i].suite, suite_names()[i]);
  Report all = run_suite("all", caps);
  Report merged = merge_reports("all", parts);
  EXPECT_EQ(all.checked, merged.checked);
  EXPECT_EQ(all.audits.size(), merged.audits.size());
  EXPECT_TRUE(all.passed);
}

TEST(Reports, MergeKeepsFirstFailure) {
  Report a{"a", true, 3, {}, {}};
  Report b{"b", false, 2, {{"d", 1, 2}}, {{"check one", "w=12"}, {"check two", "w=21"}}};
  Report c{"c", false, 1, {}, {{"check three", "w=3"}}};
  Report m = merge_reports("all", {a, b, c});
  EXPECT_FALSE(m.passed);
  EXPECT_EQ(m.checked, 6u);
  ASSERT_EQ(m.failures.size(), 3u);
  EXPECT_EQ(m.failures[0].counterexample, "w=12");
}

TEST(Reports, Formats) {
  Report r{"demo", false, 5, {{"sizes", 4, 4}}, {{"maj w = inv", "w=1 0"}}};
  std::string text = render_report(r, ReportFormat::text);
  EXPECT_NE(text.find("demo: FAIL"), std::string::npos) << text;
  EXPECT_NE(text.find("w=1 0"), std::string::npos);
  std::string csv = render_report(r, ReportFormat::csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "suite,status,checked,audits,failures,first_check,first_counterexample");
  auto j = nlohmann::json::parse(render_report(r, ReportFormat::json));
  EXPECT_EQ(j["suite"], "demo");
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["checked"], 5);
  EXPECT_EQ(j["failures"][0]["counterexample"], "w=1 0");
  EXPECT_EQ(parse_report_format("json"), ReportFormat::json);
  EXPECT_THROW(parse_report_format("xml"), ParseError);
  auto many = nlohmann::json::parse(render_reports({r, r}, ReportFormat::json));
  EXPECT_EQ(many["suites"].size(), 2u);
}

TEST(Tables, AllReproduceWithEmptyDiff) {
  const auto& names = table_names();
  for (const char* n : {"s4-table", "v-decomposition-1223", "running-example", "composition-455116", "lac-example"})
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  for (const std::string& name : names) {
    TableReproduction t = reproduce_table(name);
    EXPECT_TRUE(t.matches()) << name << "\n" << t.diff;
    EXPECT_EQ(t.rendered, t.golden);
  }
  EXPECT_THROW(reproduce_table("nope"), PreconditionError);
}

TEST(Tables, RowCounts) {
  auto lines = [](const std::string& s) { return std::count(s.begin(), s.end(), '\n'); };
  EXPECT_EQ(lines(reproduce_table("s4-table").rendered), 10);  // header and 9 rows
  EXPECT_EQ(lines(reproduce_table("v-decomposition-1223").rendered), 13);
}

TEST(Tables, LineDiff) {
  EXPECT_EQ(line_diff("a\nb\n", "a\nb\n"), "");
  std::string d = line_diff("a\nb\nc\n", "a\nx\nc\n");
  EXPECT_NE(d.find("-b"), std::string::npos);
  EXPECT_NE(d.find("+x"), std::string::npos);
  EXPECT_EQ(d.find("-a"), std::string::npos);
}
