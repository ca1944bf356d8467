#include "ctkit/harness.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ctkit;

namespace {

RunConfig config(const std::string& id) {
  RunConfig c;
  c.identity = id;
  return c;
}

std::vector<std::string> dump(const std::vector<VerifyReport>& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs) out.push_back(report_json(r, false).dump());
  return out;
}

}  // namespace

TEST(Harness, RegistryNamesUnique) {
  std::set<std::string> names;
  for (const auto& info : identity_registry()) EXPECT_TRUE(names.insert(info.name).second) << info.name;
  EXPECT_NE(find_identity("q-dyson"), nullptr);
  EXPECT_EQ(find_identity("nope"), nullptr);
}

TEST(Harness, ParseRange) {
  EXPECT_EQ(parse_range("3"), std::make_pair(3, 3));
  EXPECT_EQ(parse_range("1-4"), std::make_pair(1, 4));
  EXPECT_THROW(parse_range("a"), UsageError);
  EXPECT_THROW(parse_range("1-"), UsageError);
}

TEST(Harness, ValidateRejects) {
  RunConfig c = config("q-dyson");
  c.n_lo = 3;
  c.n_hi = 2;
  EXPECT_THROW(validate(c), UsageError);
  c = config("q-dyson");
  c.jobs = 0;
  EXPECT_THROW(validate(c), UsageError);
  c = config("q-dyson");
  c.format = "xml";
  EXPECT_THROW(validate(c), UsageError);
  EXPECT_THROW(run(config("nope")), UsageError);
}

TEST(Harness, EveryIdentityPassesSmallGrid) {
  for (const auto& info : identity_registry()) {
    RunConfig c = config(info.name);
    c.n_lo = 2;
    c.n_hi = 2;
    c.a_max = 1;
    c.m_max = 2;
    const auto reports = run(c);
    EXPECT_FALSE(reports.empty()) << info.name;
    for (const auto& r : reports) EXPECT_TRUE(r.equal) << report_text(r, false) << ' ' << r.detail;
    EXPECT_EQ(exit_status(reports), 0) << info.name;
  }
}

TEST(Harness, TModesAgree) {
  for (TMode mode : {TMode::symbolic, TMode::qa, TMode::zero}) {
    RunConfig c = config("kadell-t");
    c.t_mode = mode;
    c.n_lo = c.n_hi = 3;
    c.a_max = 1;
    EXPECT_EQ(exit_status(run(c)), 0) << tmode_name(mode);
  }
}

TEST(Harness, DeterministicAcrossJobs) {
  RunConfig c = config("q-dyson");
  c.n_lo = 1;
  c.n_hi = 3;
  c.a_max = 2;
  const auto one = dump(run(c));
  c.jobs = 4;
  std::vector<std::string> streamed;
  const auto four = dump(run(c, [&](const VerifyReport& r) { streamed.push_back(report_json(r, false).dump()); }));
  EXPECT_EQ(one, four);
  EXPECT_EQ(one, streamed);
}

TEST(Harness, ExitStatus) {
  VerifyReport ok = make_report("x", {}, "1", "1");
  VerifyReport bad = make_report("x", {}, "1", "2");
  VerifyReport slow = make_report("x", {}, "", "");
  slow.equal = false;
  slow.status = "timeout";
  EXPECT_EQ(bad.status, "mismatch");
  EXPECT_EQ(exit_status({ok}), 0);
  EXPECT_EQ(exit_status({ok, bad}), 1);
  EXPECT_EQ(exit_status({ok, slow}), 3);
  EXPECT_EQ(exit_status({slow, bad}), 1);
  EXPECT_EQ(exit_status({}), 0);
}

TEST(Harness, ErrorsAndTimeoutsAreReported) {
  Case throws{{}, []() -> std::pair<std::string, std::string> { throw std::runtime_error("boom"); }};
  const VerifyReport e = run_case("x", throws, std::nullopt);
  EXPECT_EQ(e.status, "error");
  EXPECT_EQ(e.detail, "boom");
  EXPECT_FALSE(e.equal);

  RunConfig c = config("poincare");
  c.n_lo = c.n_hi = 4;
  c.a_max = 3;
  c.budget = std::chrono::milliseconds(1);
  const auto reports = run(c);
  bool timed_out = false;
  for (const auto& r : reports) timed_out = timed_out || r.status == "timeout";
  EXPECT_TRUE(timed_out);
  EXPECT_EQ(exit_status(reports), 3);
}

TEST(Harness, JsonReportShape) {
  RunConfig c = config("q-dyson");
  c.n_lo = c.n_hi = 2;
  c.a_max = 1;
  c.format = "json";
  const auto reports = run(c);
  const auto j = nlohmann::json::parse(format_report(reports.back(), c));
  EXPECT_EQ(j["identity"], "q-dyson");
  EXPECT_EQ(j["params"]["a"], nlohmann::json({1, 1}));
  EXPECT_EQ(j["lhs"], "1 + q");
  EXPECT_EQ(j["equal"], true);
  EXPECT_FALSE(j.contains("millis"));
  c.timing = true;
  EXPECT_TRUE(nlohmann::json::parse(format_report(reports.back(), c)).contains("millis"));
}
