#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace qlab {

using ordered_json = nlohmann::ordered_json;

struct ExperimentConfig {
  std::string experiment;
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t q = 0;
  std::uint64_t seed = 0;
  /// Overrides for the registered thresholds, by name.
  std::map<std::string, double> tolerances;
  double max_seconds = 0;
};

/// Fills unset fields (zero) from the experiment's defaults. Throws
/// std::invalid_argument for unknown experiments, keys, or tolerance names.
ExperimentConfig parse_config(const ordered_json& j);
ExperimentConfig with_defaults(ExperimentConfig cfg);
ordered_json to_json(const ExperimentConfig& cfg);

/// Reads a file holding a sequence of JSON config objects.
std::vector<ExperimentConfig> read_config_file(const std::string& path);

class RuntimeCeilingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wall-clock budget checked between trials. Does not affect results.
class Deadline {
 public:
  explicit Deadline(double seconds);
  void check() const;

 private:
  std::chrono::steady_clock::time_point end_;
  double seconds_;
};

struct Check {
  std::string name;
  double value = 0;
  std::string relation;  // "<=" or ">="
  double threshold = 0;
  bool pass = false;
};

struct Report {
  ExperimentConfig config;
  ordered_json results = ordered_json::object();
  std::vector<Check> checks;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  bool pass() const;
  ordered_json to_json() const;
  /// One line per trial when the experiment records them, else name,value pairs.
  std::string to_csv() const;
};

struct ExperimentInfo {
  std::string name;
  std::string summary;
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t q = 0;
  double max_seconds = 0;
  /// Registered thresholds by name; a config may override any of them.
  std::vector<std::pair<std::string, double>> thresholds;
};

const std::vector<ExperimentInfo>& experiments();
const ExperimentInfo& experiment_info(const std::string& name);

/// Deterministic in the config; timing never enters the report.
Report run_experiment(const ExperimentConfig& cfg);

ordered_json money_mint_report(int n, std::uint64_t seed);
ordered_json money_verify_report(int n, std::uint64_t seed);
ordered_json money_attack_report(int n, std::uint64_t q, std::uint64_t seed, const std::string& strategy);

}  // namespace qlab
