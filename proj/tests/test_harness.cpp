#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "qlab/harness/experiments.hpp"

using namespace qlab;

namespace {

ExperimentConfig config(const std::string& name, int n = 0, std::uint64_t trials = 0, std::uint64_t seed = 0) {
  ExperimentConfig cfg;
  cfg.experiment = name;
  cfg.n = n;
  cfg.trials = trials;
  cfg.seed = seed;
  return with_defaults(cfg);
}

}  // namespace

TEST(Config, ParsesAndFillsDefaults) {
  const auto cfg = parse_config(ordered_json::parse(R"({"experiment":"money-counterfeit","seed":9})"));
  EXPECT_EQ(cfg.n, 6);
  EXPECT_EQ(cfg.q, 16u);
  EXPECT_EQ(cfg.trials, 500u);
  EXPECT_EQ(cfg.seed, 9u);
  EXPECT_EQ(parse_config(to_json(cfg)).seed, cfg.seed);
}

TEST(Config, RejectsUnknownNames) {
  EXPECT_THROW(parse_config(ordered_json::parse(R"({"experiment":"grover"})")), std::invalid_argument);
  EXPECT_THROW(parse_config(ordered_json::parse(R"({"experiment":"metrics","colour":1})")), std::invalid_argument);
  EXPECT_THROW(parse_config(ordered_json::parse(R"({"n":2})")), std::invalid_argument);
  EXPECT_THROW(parse_config(ordered_json::parse(R"({"experiment":"metrics","tolerances":{"gap":1}})")),
               std::invalid_argument);
  EXPECT_THROW(parse_config(ordered_json::parse("[1]")), std::invalid_argument);
}

TEST(Config, ReadsSequenceOfObjects) {
  const std::string path = ::testing::TempDir() + "qlab_configs.json";
  {
    std::ofstream out(path);
    out << R"({"experiment":"metrics"})" << "\n\n" << R"({"experiment":"otp-uniformity","n":2})" << "\n";
  }
  const auto cfgs = read_config_file(path);
  ASSERT_EQ(cfgs.size(), 2u);
  EXPECT_EQ(cfgs[1].n, 2);
  std::remove(path.c_str());
}

TEST(Registry, EveryExperimentIsListedOnce) {
  std::set<std::string> names;
  for (const auto& e : experiments()) {
    EXPECT_TRUE(names.insert(e.name).second);
    EXPECT_FALSE(e.thresholds.empty());
    EXPECT_GT(e.max_seconds, 0);
  }
  for (const char* n : {"otp-uniformity", "scheme-roundtrip", "ind-game", "unobf-attack", "blackbox-baseline",
                        "hom-pipeline", "money-verify", "money-counterfeit", "witenc-roundtrip", "metrics"})
    EXPECT_EQ(names.count(n), 1u) << n;
}

TEST(Experiments, OtpUniformityExample) {
  const auto r = run_experiment(config("otp-uniformity", 2));
  EXPECT_TRUE(r.pass());
  EXPECT_LE(r.results["max_deviation"].get<double>(), 1e-10);
  EXPECT_EQ(r.to_json()["verdict"], "pass");
}

TEST(Experiments, UnobfAttackExample) {
  const auto r = run_experiment(config("unobf-attack", 2, 200));
  EXPECT_TRUE(r.pass());
  EXPECT_GE(r.results["gap"].get<double>(), 0.9);
  EXPECT_EQ(r.rows.size(), 400u);
}

TEST(Experiments, ByteIdenticalReruns) {
  for (const auto& e : experiments()) {
    auto cfg = config(e.name, 0, std::min<std::uint64_t>(e.trials, 12), 1234);
    const auto a = run_experiment(cfg);
    const auto b = run_experiment(cfg);
    EXPECT_EQ(a.to_json().dump(), b.to_json().dump()) << e.name;
    EXPECT_EQ(a.to_csv(), b.to_csv()) << e.name;
  }
}

TEST(Experiments, SeedChangesTrialData) {
  const auto a = run_experiment(config("money-counterfeit", 0, 20, 1));
  const auto b = run_experiment(config("money-counterfeit", 0, 20, 2));
  EXPECT_NE(a.to_csv(), b.to_csv());
}

TEST(Experiments, ToleranceOverrideDecidesVerdict) {
  auto cfg = config("money-counterfeit", 0, 20);
  cfg.tolerances["mean_fidelity"] = 1e-6;
  const auto r = run_experiment(cfg);
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.to_json()["verdict"], "fail");
  EXPECT_DOUBLE_EQ(r.checks.at(0).threshold, 1e-6);
}

TEST(Experiments, CsvShapes) {
  const auto trials = run_experiment(config("scheme-roundtrip", 2, 5));
  const auto csv = trials.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "trial,plaintext,trace_distance");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
  const auto summary = run_experiment(config("metrics")).to_csv();
  EXPECT_EQ(summary.substr(0, summary.find('\n')), "name,value,relation,threshold,pass");
}

TEST(Experiments, RuntimeCeilingAndBadWidth) {
  auto cfg = config("money-counterfeit", 0, 500);
  cfg.max_seconds = 1e-9;
  EXPECT_THROW(run_experiment(cfg), RuntimeCeilingError);
  EXPECT_THROW(run_experiment(config("unobf-attack", 9)), std::invalid_argument);
}

TEST(MoneyReports, CarryDocumentedFields) {
  const auto mint = money_mint_report(3, 5);
  EXPECT_EQ(mint["n"], 3);
  EXPECT_EQ(money_mint_report(3, 5).dump(), mint.dump());
  const auto v = money_verify_report(4, 1);
  EXPECT_NEAR(v["accept_prob"].get<double>(), 1.0, 1e-9);
  const auto a = money_attack_report(4, 8, 2, "basis-probe");
  EXPECT_EQ(a["queries_used"], 8);
  EXPECT_LT(a["fidelity"].get<double>(), 1.0);
  EXPECT_NEAR(money_attack_report(4, 0, 2, "out-of-band")["fidelity"].get<double>(), 1.0, 1e-12);
  EXPECT_THROW(money_attack_report(4, 0, 2, "psychic"), std::invalid_argument);
}
