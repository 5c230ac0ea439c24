// Command-line front end: run experiments, list them, and drive the money scheme.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qlab/harness/experiments.hpp"

namespace {

void print_summary(std::ostream& out, const std::vector<qlab::Report>& reports) {
  char line[256];
  std::snprintf(line, sizeof line, "%-20s %-26s %14s %4s %14s  %s\n", "experiment", "check", "value", "", "threshold",
                "verdict");
  out << line;
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      std::snprintf(line, sizeof line, "%-20s %-26s %14.6g %4s %14.6g  %s\n", r.config.experiment.c_str(),
                    c.name.c_str(), c.value, c.relation.c_str(), c.threshold, c.pass ? "pass" : "FAIL");
      out << line;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qlab: quantum obfuscation and encryption experiments"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List experiments and their defaults");

  auto* run = app.add_subcommand("run", "Run one experiment, or every config in a file");
  std::string experiment, config_path, out_path, format = "json";
  int n = 0;
  std::uint64_t trials = 0, q = 0, seed = 0;
  double max_seconds = 0;
  std::vector<std::string> tolerance_args;
  run->add_option("experiment", experiment, "Experiment name");
  run->add_option("--n", n, "Problem size in qubits");
  run->add_option("--trials", trials, "Number of trials");
  run->add_option("--q", q, "Query budget");
  run->add_option("--seed", seed, "Master seed");
  run->add_option("--max-seconds", max_seconds, "Runtime ceiling");
  run->add_option("--tol", tolerance_args, "Threshold override, name=value")->delimiter(',');
  run->add_option("--config", config_path, "File of JSON config objects")->check(CLI::ExistingFile);
  run->add_option("--out", out_path, "Append reports to this file");
  run->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));

  int money_n = 4;
  std::uint64_t money_q = 16, money_seed = 0;
  std::string strategy = "basis-probe";
  auto* mint_cmd = app.add_subcommand("mint", "Mint a bill and describe it");
  auto* verify_cmd = app.add_subcommand("verify", "Mint a bill and verify the note and a random candidate");
  auto* attack_cmd = app.add_subcommand("attack", "Run a query-bounded counterfeiter");
  for (auto* c : {mint_cmd, verify_cmd, attack_cmd}) {
    c->add_option("--n", money_n, "Note width in qubits");
    c->add_option("--seed", money_seed, "Seed");
  }
  attack_cmd->add_option("--q", money_q, "Oracle queries");
  attack_cmd->add_option("--strategy", strategy, "basis-probe or out-of-band");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const auto& e : qlab::experiments()) {
        std::cout << e.name << "  n=" << e.n << " trials=" << e.trials;
        if (e.q) std::cout << " q=" << e.q;
        std::cout << "  " << e.summary << '\n';
      }
      return 0;
    }
    if (mint_cmd->parsed()) {
      std::cout << qlab::money_mint_report(money_n, money_seed).dump() << '\n';
      return 0;
    }
    if (verify_cmd->parsed()) {
      const auto r = qlab::money_verify_report(money_n, money_seed);
      std::cout << r.dump() << '\n';
      return r["accept_prob"].get<double>() >= 1 - 1e-9 ? 0 : 1;
    }
    if (attack_cmd->parsed()) {
      std::cout << qlab::money_attack_report(money_n, money_q, money_seed, strategy).dump() << '\n';
      return 0;
    }

    std::vector<qlab::ExperimentConfig> configs;
    if (!config_path.empty()) {
      configs = qlab::read_config_file(config_path);
    } else {
      if (experiment.empty()) throw std::invalid_argument("run needs an experiment name or --config");
      qlab::ExperimentConfig cfg;
      cfg.experiment = experiment;
      cfg.n = n;
      cfg.trials = trials;
      cfg.q = q;
      cfg.seed = seed;
      cfg.max_seconds = max_seconds;
      for (const auto& arg : tolerance_args) {
        const auto eq = arg.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--tol expects name=value, got " + arg);
        cfg.tolerances[arg.substr(0, eq)] = std::stod(arg.substr(eq + 1));
      }
      configs.push_back(qlab::with_defaults(cfg));
    }

    std::vector<qlab::Report> reports;
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path, std::ios::app);
      if (!file) throw std::runtime_error("cannot open " + out_path);
    }
    std::ostream& sink = out_path.empty() ? std::cout : file;
    for (const auto& cfg : configs) {
      reports.push_back(qlab::run_experiment(cfg));
      const auto& r = reports.back();
      if (format == "csv") sink << r.to_csv();
      else sink << r.to_json().dump() << '\n';
    }
    print_summary(out_path.empty() ? std::cerr : std::cout, reports);
    for (const auto& r : reports)
      if (!r.pass()) return 1;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
