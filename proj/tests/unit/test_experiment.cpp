#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "jackson/experiment.hpp"

using namespace jackson;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("jackson_exp_" + name);
  fs::remove_all(p);
  return p;
}

json quick() {
  return json{{"seed", 3},
              {"N", 256},
              {"checks",
               {{{"id", "jackson-1.4"}, {"params", {{"f", "abs_sin"}, {"n_max", 4}}}},
                {{"id", "orlicz-sandwich"}, {"count", 4}}}}};
}

}  // namespace

TEST(Config, ParsesBothParamStyles) {
  const auto c = parse_config(quick());
  ASSERT_EQ(c.checks.size(), 2u);
  EXPECT_EQ(c.checks[1].params, json({{"count", 4}}));
  EXPECT_EQ(*c.N, 256u);
  EXPECT_EQ(c.seed, 3u);
}

TEST(Config, ErrorsNameFieldOrId) {
  auto msg = [](json j) -> std::string {
    try {
      parse_config(j);
    } catch (const ParamError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(msg({{"checks", {{{"id", "jackson-99"}}}}}).find("jackson-99"), std::string::npos);
  EXPECT_NE(msg({{"checks", {"jackson-1.4"}}, {"N", 7}}).find("'N'"), std::string::npos);
  EXPECT_NE(msg({{"checks", json::array()}}).find("checks"), std::string::npos);
  EXPECT_NE(msg({{"checks", {"jackson-1.4"}}, {"formats", {"xml"}}}).find("formats[0]"), std::string::npos);
  EXPECT_NE(msg({{"checks", {"jackson-1.4"}}, {"colour", 1}}).find("colour"), std::string::npos);
}

TEST(Experiment, WritesReportsAndSummary) {
  auto cfg = parse_config(quick());
  cfg.out = scratch("write");
  const auto res = run_experiment(cfg, 2);
  EXPECT_TRUE(res.all_pass());
  EXPECT_TRUE(fs::exists(cfg.out / "01_jackson-1.4.json"));
  EXPECT_TRUE(fs::exists(cfg.out / "01_jackson-1.4.csv"));
  EXPECT_TRUE(fs::exists(cfg.out / "02_orlicz-sandwich.csv"));
  EXPECT_EQ(res.files.size(), 5u);  // 2 JSON + 3 CSV
  const auto summary = slurp(cfg.out / "summary.csv");
  EXPECT_EQ(summary.rfind("id,verdict,constant,runtime_ms\n", 0), 0u);
  EXPECT_EQ(std::count(summary.begin(), summary.end(), '\n'), 3);
  const auto j = json::parse(slurp(cfg.out / "01_jackson-1.4.json"));
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["seed"], 3);
}

TEST(Experiment, SameSeedSameCsvWhateverTheJobCount) {
  auto a = parse_config(quick());
  auto b = a;
  a.out = scratch("det_a");
  b.out = scratch("det_b");
  run_experiment(a, 1);
  run_experiment(b, 2);
  for (const char* f : {"01_jackson-1.4.csv", "02_orlicz-sandwich.csv"}) EXPECT_EQ(slurp(a.out / f), slurp(b.out / f)) << f;
}

TEST(Experiment, BadParamsNameThePath) {
  auto cfg = parse_config(json{{"checks", {{{"id", "jackson-1.4"}, {"r", -1}}}}});
  cfg.out = scratch("bad");
  try {
    run_experiment(cfg);
    FAIL();
  } catch (const ParamError& e) {
    EXPECT_NE(std::string(e.what()).find("checks[0].params.r"), std::string::npos) << e.what();
  }
}

TEST(Experiment, FailedVerdictIsReported) {
  // an impossible spread bound forces a fail on a family with a varying ratio
  auto cfg = parse_config(json{{"N", 256}, {"checks", {{{"id", "jackson-1.4"}, {"spread_bound", 1.0}, {"n_max", 6}}}}});
  cfg.out = scratch("fail");
  cfg.write_json = false;
  const auto res = run_experiment(cfg);
  EXPECT_FALSE(res.all_pass());
  EXPECT_EQ(res.files.size(), 2u);
}
