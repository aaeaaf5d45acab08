#include <gtest/gtest.h>

#include "qonsager/errors.hpp"
#include "qonsager/report.hpp"
#include "qonsager/suites.hpp"

using namespace qonsager;

namespace {

  Report sample() {
    Report r;
    r.suite = "demo";
    r.config.emplace_back("mode", "exact");
    r.check("b/second", "Lemma Two", [] { return std::optional<std::string>(); });
    r.check("a/first", "Lemma One", [] { return std::optional<std::string>("entry (1,1)"); });
    r.check("c/throws", "Lemma Three", []() -> std::optional<std::string> {
      throw Error("boom");
    });
    return r;
  }

  std::string strip_timestamp(std::string s) {
    auto at = s.find(",\n  \"timestamp\"");
    return at == std::string::npos ? s : s.substr(0, at);
  }

}  // namespace

TEST(Report, CountsMatchRecords) {
  Report r = sample();
  EXPECT_EQ(r.passed() + r.failed(), r.checks.size());
  EXPECT_EQ(r.failed(), 2U);
  EXPECT_FALSE(r.ok());
  for (auto const& c : r.checks) {
    EXPECT_EQ(c.passed, c.detail.empty()) << c.name;
  }
  EXPECT_NE(r.checks[2].detail.find("boom"), std::string::npos);
}

TEST(Report, EmptyReportIsValidJson) {
  Report r;
  r.suite = "empty";
  Report back = parse_report(emit_json(r));
  EXPECT_EQ(back.suite, "empty");
  EXPECT_TRUE(back.checks.empty());
  EXPECT_NE(emit_json(r).find("\"total\": 0"), std::string::npos);
}

TEST(Report, JsonRoundTripKeepsSummary) {
  Report r    = sample();
  Report back = parse_report(emit_json(r));
  auto   a = summarize(r), b = summarize(back);
  EXPECT_EQ(a.suite, b.suite);
  EXPECT_EQ(a.total, b.total);
  EXPECT_EQ(a.passed, b.passed);
  EXPECT_EQ(a.failed, b.failed);
  EXPECT_EQ(back.config, r.config);
}

TEST(Report, ChecksAreSortedByName) {
  Report back = parse_report(emit_json(sample()));
  ASSERT_EQ(back.checks.size(), 3U);
  EXPECT_EQ(back.checks[0].name, "a/first");
  EXPECT_EQ(back.checks[0].anchor, "Lemma One");
  EXPECT_EQ(back.checks[2].name, "c/throws");
}

TEST(Report, FieldOrderAndTimestampPlacement) {
  std::string j = emit_json(sample());
  auto        s = j.find("\"suite\""), c = j.find("\"config\""), k = j.find("\"checks\""),
       m = j.find("\"summary\""), t = j.find("\"timestamp\"");
  EXPECT_LT(s, c);
  EXPECT_LT(c, k);
  EXPECT_LT(k, m);
  EXPECT_LT(m, t);
  EXPECT_EQ(emit_json(sample(), false), strip_timestamp(j) + "\n}\n");
}

TEST(Report, TextIsLinePerCheck) {
  std::string t = emit_text(sample());
  EXPECT_NE(t.find("FAIL a/first  [Lemma One]  entry (1,1)"), std::string::npos);
  EXPECT_NE(t.find("PASS b/second"), std::string::npos);
  EXPECT_NE(t.find("1/3 passed, 2 failed"), std::string::npos);
}

TEST(Report, MalformedJsonRejected) {
  EXPECT_THROW(parse_report("{not json"), ParseError);
}

TEST(Suites, ConfigValidation) {
  SuiteConfig c;
  c.suite = "nope";
  EXPECT_THROW(validate(c), UsageError);
  c.suite         = "scalars";
  c.probabilistic = true;
  EXPECT_THROW(validate(c), UsageError);
  c.seed = 3;
  EXPECT_NO_THROW(validate(c));
  c.suite       = "evidence";
  c.word_length = 0;
  EXPECT_THROW(validate(c), UsageError);
}

TEST(Suites, SameSeedSameReport) {
  SuiteConfig c;
  c.suite         = "scalars";
  c.probabilistic = true;
  c.seed          = 21;
  EXPECT_EQ(emit_json(run_suite(c), false), emit_json(run_suite(c), false));
  EXPECT_TRUE(run_suite(c).ok());
}
