#include <gtest/gtest.h>

#include "scrollsec/report.hpp"

using namespace scrollsec;

namespace {

RunConfig classify_config(const std::string& scroll, const std::string& point, std::uint32_t q) {
  RunConfig c;
  c.scroll = scroll;
  c.point = point;
  c.q = q;
  return c;
}

}  // namespace

TEST(Classify, Examples) {
  auto r = run_command("classify", classify_config("S(3)", "1,0,0,1", 7));
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.report["label"], "TwoPoints");
  EXPECT_EQ(r.report["depth"], 2);
  EXPECT_EQ(r.report["acm"], true);
  EXPECT_EQ(r.report["schema"], 1);
  EXPECT_EQ(r.report["point"][0], "1");

  r = run_command("classify", classify_config("S(1,2)", "0,0,1,0,-1", 7));
  EXPECT_EQ(r.report["label"], "Conic");
  EXPECT_EQ(r.report["depth"], 3);
  EXPECT_EQ(r.report["acm"], true);
  EXPECT_EQ(r.report["point"][4], "6");

  r = run_command("classify", classify_config("S(3)+cone(0)", "0,1,0,0,1", 7));
  EXPECT_EQ(r.report["label"], "TwoPoints");
  EXPECT_EQ(r.report["depth"], 3);
  EXPECT_EQ(r.report["dim_sigma"], 1);
}

TEST(Classify, ErrorsMapToExitCodes) {
  EXPECT_EQ(run_command("classify", classify_config("S(3)", "1,0,0,0", 7)).exit_code, kExitOnVariety);
  EXPECT_EQ(run_command("classify", classify_config("S(3", "1,0,0,1", 7)).exit_code, kExitUsage);
  EXPECT_EQ(run_command("classify", classify_config("S(3)", "1,0,1", 7)).exit_code, kExitUsage);
  EXPECT_EQ(run_command("classify", classify_config("S(3)", "1,x,0,1", 7)).exit_code, kExitUsage);
  EXPECT_EQ(run_command("classify", classify_config("S(3)", "0,0,0,0", 7)).exit_code, kExitUsage);
  EXPECT_EQ(run_command("classify", classify_config("S(3)", "1,0,0,1", 9)).exit_code, kExitUsage);
  EXPECT_EQ(run_command("frobnicate", classify_config("S(3)", "1,0,0,1", 7)).exit_code, kExitUsage);
  const auto r = run_command("classify", classify_config("S(3)", "1,0,0,0", 7));
  EXPECT_EQ(r.report["error"], "POnVariety");
}

TEST(Sample, Censuses) {
  RunConfig c;
  c.scroll = "S(1,1,1)";
  auto r = run_command("sample", c);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.report["census"]["QuadricSurface"], 200);

  c.scroll = "S(1,2)";
  r = run_command("sample", c);
  const auto& census = r.report["census"];
  EXPECT_EQ(census["Conic"].get<int>() + census["TwoLines"].get<int>(), 200);
  EXPECT_GT(census["Conic"].get<int>(), 0);
  EXPECT_GT(census["TwoLines"].get<int>(), 0);

  c.scroll = "S(1,1,2,3)";
  c.n = 500;
  r = run_command("sample", c);
  EXPECT_EQ(r.exit_code, kExitOk);
  for (auto l : kAllLabels) EXPECT_GT(r.report["census"][to_string(l)].get<int>(), 0) << to_string(l);
  EXPECT_EQ(r.report["agreement_failures"], 0);
}

TEST(Atlas, SmallBoundsContents) {
  RunConfig c;
  c.bounds = {3, 3, -1};
  c.n = 10;
  const auto r = run_command("atlas", c);
  EXPECT_EQ(r.exit_code, kExitOk);
  std::vector<std::string> names;
  for (const auto& e : r.report["entries"]) names.push_back(e["scroll"]);
  EXPECT_EQ(names, (std::vector<std::string>{"S(3)", "S(1,2)", "S(1,1,1)"}));

  c.bounds = {4, 3, 0};
  const auto r2 = run_command("atlas", c);
  bool found = false;
  for (const auto& e : r2.report["entries"])
    if (e["scroll"] == "S(2,2)") {
      found = true;
      EXPECT_EQ(e["case"], "b-iii");
      EXPECT_EQ(e["locus"], "U");
      EXPECT_EQ(e["verification"]["inside_acm"], 10);
      EXPECT_EQ(e["verification"]["outside_acm"], 0);
    }
  EXPECT_TRUE(found);
}

TEST(OracleCheck, EmptyDiffs) {
  RunConfig c;
  c.q = 5;
  c.n = 25;
  for (const char* s : {"S(3)", "S(3)+cone(0)"}) {
    c.scroll = s;
    const auto r = run_command("oracle-check", c);
    EXPECT_EQ(r.exit_code, kExitOk) << s;
    EXPECT_TRUE(r.report["diff"].empty()) << s;
  }
  EXPECT_EQ(run_command("oracle-check", c).report["lift_checks"], 25);
  c.q = 7;
  c.scroll = "S(2,2)";
  EXPECT_TRUE(run_command("oracle-check", c).report["diff"].empty());
  c.q = 103;
  EXPECT_EQ(run_command("oracle-check", c).exit_code, kExitUsage);
}

TEST(Determinism, SameSeedSameBytes) {
  RunConfig c;
  c.scroll = "S(1,2,3)+cone(1)";
  c.seed = 99;
  c.n = 100;
  EXPECT_EQ(render(run_command("sample", c).report), render(run_command("sample", c).report));
  c.seed = 100;
  const auto other = render(run_command("sample", c).report);
  c.seed = 99;
  EXPECT_NE(render(run_command("sample", c).report), other);
}
