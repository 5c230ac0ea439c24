#include "qlab/harness/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "qlab/enc/game.hpp"
#include "qlab/enc/obf_schemes.hpp"
#include "qlab/enc/scheme.hpp"
#include "qlab/money/money.hpp"
#include "qlab/obf/attack.hpp"
#include "qlab/obf/families.hpp"
#include "qlab/sim/metrics.hpp"
#include "qlab/sim/pauli.hpp"
#include "qlab/sim/simulator.hpp"
#include "qlab/witenc/witenc.hpp"

namespace qlab {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double threshold(const ExperimentConfig& cfg, const std::string& name) {
  if (auto it = cfg.tolerances.find(name); it != cfg.tolerances.end()) return it->second;
  for (const auto& [key, value] : experiment_info(cfg.experiment).thresholds)
    if (key == name) return value;
  throw std::logic_error("unregistered threshold " + name);
}

void at_most(Report& r, const std::string& name, double value, double limit) {
  r.checks.push_back({name, value, "<=", limit, value <= limit});
}

void at_least(Report& r, const std::string& name, double value, double limit) {
  r.checks.push_back({name, value, ">=", limit, value >= limit});
}

BitString nonzero_bits(int n, Rng& rng) {
  for (;;) {
    auto b = BitString::random(static_cast<std::size_t>(n), rng);
    if (b.to_uint() != 0) return b;
  }
}

void require_width(const ExperimentConfig& cfg, int lo, int hi) {
  if (cfg.n < lo || cfg.n > hi)
    throw std::invalid_argument(cfg.experiment + ": n must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

using Runner = std::function<void(const ExperimentConfig&, Report&, const Deadline&)>;

void otp_uniformity(const ExperimentConfig& cfg, Report& r, const Deadline& deadline) {
  require_width(cfg, 1, 4);
  Rng rng(cfg.seed);
  r.columns = {"width", "trial", "deviation"};
  double worst = 0;
  for (int w = 1; w <= cfg.n; ++w) {
    const std::uint64_t pads = std::uint64_t{1} << (2 * w);
    const Matrix flat = Matrix::Identity(1 << w, 1 << w) / double(1 << w);
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
      deadline.check();
      const auto rho = t % 2 ? sample_random_mixed_state(w, 2, rng) : sample_random_state(w, rng);
      Matrix avg = Matrix::Zero(1 << w, 1 << w);
      for (std::uint64_t k = 0; k < pads; ++k) avg += qotp_encrypt(PauliString::from_index(w, k), rho).density();
      const double dev = (avg / double(pads) - flat).cwiseAbs().maxCoeff();
      worst = std::max(worst, dev);
      r.rows.push_back({std::to_string(w), std::to_string(t), num(dev)});
    }
  }
  r.results["max_deviation"] = worst;
  at_most(r, "max_deviation", worst, threshold(cfg, "max_deviation"));
}

void scheme_roundtrip(const ExperimentConfig& cfg, Report& r, const Deadline& deadline) {
  require_width(cfg, 1, 8);
  const PrfScheme scheme(cfg.n);
  Rng rng(cfg.seed);
  r.columns = {"trial", "plaintext", "trace_distance"};
  double worst = 0, total = 0;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    deadline.check();
    const bool mixed = t % 4 == 3;
    const auto key = scheme.keygen(rng);
    const auto rho = mixed ? sample_random_mixed_state(cfg.n, 2, rng) : sample_random_state(cfg.n, rng);
    const double td = trace_distance(scheme.decrypt(key, scheme.encrypt(key, rho, rng)), rho);
    worst = std::max(worst, td);
    total += td;
    r.rows.push_back({std::to_string(t), mixed ? "mixed" : "pure", num(td)});
  }
  r.results["scheme"] = scheme.name();
  r.results["max_trace_distance"] = worst;
  r.results["mean_trace_distance"] = cfg.trials ? total / double(cfg.trials) : 0.0;
  at_most(r, "max_trace_distance", worst, threshold(cfg, "max_trace_distance"));
}

ordered_json game_json(const GameResult& g) {
  return {{"scheme", g.scheme}, {"adversary", g.adversary}, {"mode", to_string(g.mode)}, {"n", g.n},
          {"trials", g.trials}, {"wins", g.wins},       {"advantage", g.advantage},  {"ci95", g.ci95}};
}

void ind_game_calibration(const ExperimentConfig& cfg, Report& r, const Deadline& deadline) {
  require_width(cfg, 1, 6);
  const std::uint64_t broken_trials = std::max<std::uint64_t>(1, cfg.trials / 20);
  const std::uint64_t ideal_trials = std::max<std::uint64_t>(1, cfg.trials / 5);
  CoinFlipAdversary coin;
  BasisAdversary basis;
  const auto fair = ind_game(PrfScheme(cfg.n), coin, GameMode::Ind, cfg.trials, derive_seed(cfg.seed, 0));
  deadline.check();
  const auto broken = ind_game(ConstantPauliScheme(2), basis, GameMode::Cpa, broken_trials, derive_seed(cfg.seed, 1));
  deadline.check();
  const auto ideal = ind_game(PrfScheme(cfg.n, true), basis, GameMode::Ind, ideal_trials, derive_seed(cfg.seed, 2));
  r.columns = {"game", "scheme", "adversary", "mode", "trials", "wins", "advantage"};
  for (const auto& [label, g] : {std::pair{"coin-flip", &fair}, {"broken", &broken}, {"ideal", &ideal}}) {
    r.results[label] = game_json(*g);
    r.rows.push_back({label, g->scheme, g->adversary, to_string(g->mode), std::to_string(g->trials),
                      std::to_string(g->wins), num(g->advantage)});
  }
  at_most(r, "coin_flip_advantage", fair.advantage, threshold(cfg, "coin_flip_advantage"));
  at_least(r, "broken_advantage", broken.advantage, threshold(cfg, "broken_advantage"));
  at_most(r, "ideal_advantage", ideal.advantage, threshold(cfg, "ideal_advantage"));
}

void unobf_attack(const ExperimentConfig& cfg, Report& r, const Deadline& deadline) {
  require_width(cfg, 1, 3);
  const FamilyLayout layout{cfg.n, 2};
  Rng rng(cfg.seed);
  r.columns = {"trial", "family", "bit", "interpretations"};
  std::uint64_t ones[2] = {0, 0};
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    deadline.check();
    for (int secret = 0; secret < 2; ++secret) {
      const auto s = sample_unobf_family(cfg.n, secret, rng);
      std::vector<ObfuscatedProgram> copies{plain_obfuscate(s.circuit.as_circuit(), BitString::random(64, rng))};
      const auto out = adversary_homomorphic(copies, layout);
      ones[secret] += static_cast<std::uint64_t>(out.bit);
      r.rows.push_back({std::to_string(t), secret == 0 ? "F" : "G", std::to_string(out.bit),
                        std::to_string(out.interpretations)});
    }
  }
  const double f = cfg.trials ? double(ones[0]) / double(cfg.trials) : 0.0;
  const double g = cfg.trials ? double(ones[1]) / double(cfg.trials) : 0.0;
  r.results["obfuscator"] = PlainObfuscator::kInterpreterId;
  r.results["accept_rate_F"] = f;
  r.results["accept_rate_G"] = g;
  r.results["gap"] = f - g;
  at_least(r, "gap", f - g, threshold(cfg, "gap"));
}

void blackbox(const ExperimentConfig& cfg, Report& r, const Deadline& deadline) {
  require_width(cfg, 1, 10);
  Rng rng(cfg.seed);
  r.columns = {"trial", "secret", "guess", "hits"};
  std::uint64_t correct = 0, queries = 0;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    if (t % 256 == 0) deadline.check();
    const int secret = static_cast<int>(rng() & 1U);
    const auto a = nonzero_bits(cfg.n, rng);
    const auto b = nonzero_bits(cfg.n, rng);
    CountingOracle main(secret == 0 ? make_point_circuit(a, b) : identity_circuit(2 * cfg.n), cfg.q);
    const auto out = blackbox_baseline({&main}, cfg.q, rng);
    correct += out.guess == secret;
    queries += out.queries;
    r.rows.push_back({std::to_string(t), std::to_string(secret), std::to_string(out.guess), std::to_string(out.hits)});
  }
  const double adv = cfg.trials ? std::abs(2.0 * double(correct) / double(cfg.trials) - 1.0) : 0.0;
  const double bound = double(cfg.q) / std::ldexp(1.0, cfg.n);
  r.results["advantage"] = adv;
  r.results["query_bound"] = bound;
  r.results["queries_used"] = queries;
  at_most(r, "advantage", adv, bound + threshold(cfg, "advantage_slack"));
}

void hom_pipeline(const ExperimentConfig& cfg, Report& r, const Deadline& deadline) {
  require_width(cfg, 1, 3);
  auto obf = std::make_shared<PlainObfuscator>();
  const HomEvalScheme scheme(obf, PkScheme(obf, PrfScheme(cfg.n)));
  const auto alphabet = scheme.alphabet();
  Rng rng(cfg.seed);
  r.columns = {"trial", "gates", "trace_distance"};
  double worst = 0;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    deadline.check();
    auto keys = scheme.keygen(rng);
    const auto rho = t % 4 == 3 ? sample_random_mixed_state(cfg.n, 2, rng) : sample_random_state(cfg.n, rng);
    auto ct = scheme.encrypt(keys.pk, rho, rng);
    QuantumCircuit direct(cfg.n);
    std::string names;
    for (std::uint64_t i = 0; i < t % 9; ++i) {
      const auto& g = alphabet[rng() % alphabet.size()];
      ct = scheme.eval(keys.eval, ct, g);
      if (g.name != "i") direct.add(Gate::named(g.name == "cx" ? "x" : g.name, {g.targets.back()},
                                                g.name == "cx" ? std::vector<int>{g.targets[0]} : std::vector<int>{}));
      names += (names.empty() ? "" : " ") + g.name;
      for (int q : g.targets) names += std::to_string(q);
    }
    const double td = trace_distance(scheme.decrypt(keys.sk, ct), run_circuit(direct, rho));
    worst = std::max(worst, td);
    r.rows.push_back({std::to_string(t), names, num(td)});
  }
  r.results["alphabet_size"] = alphabet.size();
  r.results["max_trace_distance"] = worst;
  at_most(r, "max_trace_distance", worst, threshold(cfg, "max_trace_distance"));
}

void money_verify(const ExperimentConfig& cfg, Report& r, const Deadline& deadline) {
  require_width(cfg, 1, kMaxNoteQubits);
  Rng rng(cfg.seed);
  MintRegistry registry;
  const PlainObfuscator obf;
  r.columns = {"trial", "accept_probability", "overlap_squared", "repeat_fidelity"};
  double worst_err = 0, worst_repeat = 1;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    deadline.check();
    auto bill = mint(cfg.n, obf, rng, registry);
    const auto phi = sample_random_state(cfg.n, rng);
    const double p = verify(bill.verifier, phi).accept_probability;
    const double want = std::norm(bill.note.amplitudes().dot(phi.amplitudes()));
    worst_err = std::max(worst_err, std::abs(p - want));
    QuantumState current = bill.note;
    double accept = 1;
    for (int i = 0; i < 5; ++i) {
      auto v = verify(bill.verifier, current);
      accept = std::min(accept, v.accept_probability);
      current = *v.accepted;
    }
    const double fid = std::min(accept, fidelity(current, bill.note));
    worst_repeat = std::min(worst_repeat, fid);
    r.rows.push_back({std::to_string(t), num(p), num(want), num(fid)});
  }
  r.results["max_accept_error"] = worst_err;
  r.results["min_repeat_fidelity"] = worst_repeat;
  at_most(r, "max_accept_error", worst_err, threshold(cfg, "max_accept_error"));
  at_least(r, "min_repeat_fidelity", worst_repeat, threshold(cfg, "min_repeat_fidelity"));
}

void money_counterfeit(const ExperimentConfig& cfg, Report& r, const Deadline& deadline) {
  require_width(cfg, 1, kMaxNoteQubits);
  Rng rng(cfg.seed);
  MintRegistry registry;
  const PlainObfuscator obf;
  r.columns = {"trial", "queries", "fidelity"};
  double total = 0;
  std::uint64_t queries = 0;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    deadline.check();
    auto bill = mint(cfg.n, obf, rng, registry);
    CountingOracle oracle(program_circuit(bill.verifier), cfg.q);
    const auto forged = counterfeit(oracle, cfg.q, ForgeStrategy::BasisProbe, rng);
    const double fid = fidelity(forged.clone, bill.note);
    total += fid;
    queries += forged.queries;
    r.rows.push_back({std::to_string(t), std::to_string(forged.queries), num(fid)});
  }
  const double mean = cfg.trials ? total / double(cfg.trials) : 0.0;
  r.results["strategy"] = to_string(ForgeStrategy::BasisProbe);
  r.results["mean_fidelity"] = mean;
  r.results["random_guess_fidelity"] = std::ldexp(1.0, -cfg.n);
  r.results["queries_used"] = queries;
  at_most(r, "mean_fidelity", mean, threshold(cfg, "mean_fidelity"));
}

void witenc_roundtrip(const ExperimentConfig& cfg, Report& r, const Deadline& deadline) {
  require_width(cfg, 1, 3);
  Rng rng(cfg.seed);
  const PlainObfuscator obf;
  const int lo = std::min(2, cfg.n);
  r.columns = {"trial", "width", "completeness_fidelity", "no_instance_distance"};
  double margin = 1, excess = -1;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    deadline.check();
    const int w = lo + static_cast<int>(t % std::uint64_t(cfg.n - lo + 1));
    const double slack = std::ldexp(1.0, -w);
    const auto yes = make_yes_instance(w, rng);
    const auto rho = sample_random_state(w, rng);
    auto ct = we_encrypt(yes, rho, obf, BitString::random(64, rng));
    const double fid = fidelity(we_decrypt(ct, *yes.witness), rho);
    const auto no = make_no_instance(w, rng);
    const auto a = sample_random_state(w, rng);
    const auto b = sample_random_state(w, rng);
    const auto d = channel_distance_estimate(program_circuit(we_encrypt(no, a, obf)),
                                             program_circuit(we_encrypt(no, b, obf)), 4, rng());
    margin = std::min(margin, fid - (1.0 - slack));
    excess = std::max(excess, d.estimate - slack);
    r.rows.push_back({std::to_string(t), std::to_string(w), num(fid), num(d.estimate)});
  }
  r.results["completeness_margin"] = margin;
  r.results["soundness_excess"] = excess;
  at_least(r, "completeness_margin", margin, -threshold(cfg, "completeness_slack"));
  at_most(r, "soundness_excess", excess, threshold(cfg, "soundness_slack"));
}

void metrics(const ExperimentConfig& cfg, Report& r, const Deadline&) {
  QuantumCircuit plus(1);
  plus.h(0);
  const double td = trace_distance(QuantumState::zero(1), run_circuit(plus, QuantumState::zero(1)));
  QuantumCircuit z(1), id(1), x(1);
  z.z(0);
  x.x(0);
  const double pid = phase_invariant_distance(z, id);
  const auto ch = channel_distance_estimate(x, id, 8, cfg.seed);
  r.results["trace_distance_zero_plus"] = td;
  r.results["phase_invariant_distance_z_i"] = pid;
  r.results["channel_distance_x_i"] = ch.estimate;
  at_most(r, "trace_distance_error", std::abs(td - std::sqrt(0.5)), threshold(cfg, "exact_tolerance"));
  at_most(r, "phase_distance_error", std::abs(pid - std::sqrt(2.0)), threshold(cfg, "exact_tolerance"));
  at_least(r, "channel_distance", ch.estimate, threshold(cfg, "channel_distance"));
}

struct Entry {
  ExperimentInfo info;
  Runner run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"otp-uniformity", "uniform Pauli mixture of random plaintexts equals the maximally mixed state", 3, 20, 0, 5,
        {{"max_deviation", 1e-10}}},
       otp_uniformity},
      {{"scheme-roundtrip", "PRF-pad scheme decrypts random plaintexts exactly", 3, 200, 0, 30,
        {{"max_trace_distance", 1e-9}}},
       scheme_roundtrip},
      {{"ind-game", "game harness calibration: fair coin, broken scheme, ideal randomness", 3, 10000, 0, 120,
        {{"coin_flip_advantage", 0.05}, {"broken_advantage", 0.9}, {"ideal_advantage", 0.1}}},
       ind_game_calibration},
      {{"unobf-attack", "homomorphic attack separates the two unobfuscatable families", 2, 200, 0, 120,
        {{"gap", 0.9}}},
       unobf_attack},
      {{"blackbox-baseline", "random classical probes against a hidden point circuit", 8, 5000, 8, 60,
        {{"advantage_slack", 0.05}}},
       blackbox},
      {{"hom-pipeline", "gate-by-gate homomorphic evaluation matches direct application", 2, 200, 0, 60,
        {{"max_trace_distance", 1e-8}}},
       hom_pipeline},
      {{"money-verify", "verification accepts with the overlap squared and can be repeated", 4, 100, 0, 60,
        {{"max_accept_error", 1e-8}, {"min_repeat_fidelity", 1 - 1e-8}}},
       money_verify},
      {{"money-counterfeit", "query-bounded forger stays far from the note", 6, 500, 16, 60,
        {{"mean_fidelity", 0.1}}},
       money_counterfeit},
      {{"witenc-roundtrip", "witness decryption completeness and no-instance hiding", 3, 20, 0, 120,
        {{"completeness_slack", 1e-6}, {"soundness_slack", 1e-4}}},
       witenc_roundtrip},
      {{"metrics", "reference values of the distance measures", 1, 1, 0, 5,
        {{"exact_tolerance", 1e-10}, {"channel_distance", 0.99}}},
       metrics},
  };
  return entries;
}

const Entry& entry(const std::string& name) {
  for (const auto& e : registry())
    if (e.info.name == name) return e;
  throw std::invalid_argument("unknown experiment: " + name);
}

}  // namespace

const std::vector<ExperimentInfo>& experiments() {
  static const std::vector<ExperimentInfo> infos = [] {
    std::vector<ExperimentInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const ExperimentInfo& experiment_info(const std::string& name) { return entry(name).info; }

ExperimentConfig with_defaults(ExperimentConfig cfg) {
  const auto& info = experiment_info(cfg.experiment);
  if (cfg.n == 0) cfg.n = info.n;
  if (cfg.trials == 0) cfg.trials = info.trials;
  if (cfg.q == 0) cfg.q = info.q;
  if (cfg.max_seconds <= 0) cfg.max_seconds = info.max_seconds;
  for (const auto& kv : cfg.tolerances) {
    bool known = false;
    for (const auto& t : info.thresholds) known = known || t.first == kv.first;
    if (!known) throw std::invalid_argument(cfg.experiment + " has no threshold named " + kv.first);
  }
  return cfg;
}

ExperimentConfig parse_config(const ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  ExperimentConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "experiment") cfg.experiment = value.get<std::string>();
    else if (key == "n") cfg.n = value.get<int>();
    else if (key == "trials") cfg.trials = value.get<std::uint64_t>();
    else if (key == "q") cfg.q = value.get<std::uint64_t>();
    else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
    else if (key == "max_seconds") cfg.max_seconds = value.get<double>();
    else if (key == "tolerances") cfg.tolerances = value.get<std::map<std::string, double>>();
    else throw std::invalid_argument("unknown config key: " + key);
  }
  if (cfg.experiment.empty()) throw std::invalid_argument("config lacks an experiment name");
  return with_defaults(cfg);
}

ordered_json to_json(const ExperimentConfig& cfg) {
  ordered_json tol = ordered_json::object();
  for (const auto& [k, v] : cfg.tolerances) tol[k] = v;
  return {{"experiment", cfg.experiment}, {"n", cfg.n}, {"trials", cfg.trials}, {"q", cfg.q},
          {"seed", cfg.seed}, {"tolerances", tol}, {"max_seconds", cfg.max_seconds}};
}

std::vector<ExperimentConfig> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  std::vector<ExperimentConfig> out;
  while (in >> std::ws && in.peek() != std::char_traits<char>::eof()) {
    ordered_json j;
    in >> j;
    out.push_back(parse_config(j));
  }
  return out;
}

Deadline::Deadline(double seconds)
    : end_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                  std::chrono::duration<double>(seconds))),
      seconds_(seconds) {}

void Deadline::check() const {
  if (std::chrono::steady_clock::now() > end_)
    throw RuntimeCeilingError("experiment exceeded its " + num(seconds_) + " s ceiling");
}

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

ordered_json Report::to_json() const {
  ordered_json checks_json = ordered_json::array();
  for (const auto& c : checks)
    checks_json.push_back(
        {{"name", c.name}, {"value", c.value}, {"relation", c.relation}, {"threshold", c.threshold}, {"pass", c.pass}});
  return {{"experiment", config.experiment}, {"config", qlab::to_json(config)}, {"results", results},
          {"checks", checks_json},           {"trial_rows", rows.size()},      {"verdict", pass() ? "pass" : "fail"}};
}

std::string Report::to_csv() const {
  std::ostringstream out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto& c = cells[i];
      out << (i ? "," : "");
      if (c.find_first_of(",\"\n ") != std::string::npos) {
        out << '"';
        for (char ch : c) out << (ch == '"' ? "\"\"" : std::string(1, ch));
        out << '"';
      } else {
        out << c;
      }
    }
    out << '\n';
  };
  if (!rows.empty()) {
    line(columns);
    for (const auto& r : rows) line(r);
  } else {
    line({"name", "value", "relation", "threshold", "pass"});
    for (const auto& c : checks) line({c.name, num(c.value), c.relation, num(c.threshold), c.pass ? "1" : "0"});
  }
  return out.str();
}

Report run_experiment(const ExperimentConfig& raw) {
  const auto cfg = with_defaults(raw);
  Report report;
  report.config = cfg;
  const Deadline deadline(cfg.max_seconds);
  entry(cfg.experiment).run(cfg, report, deadline);
  return report;
}

ordered_json money_mint_report(int n, std::uint64_t seed) {
  Rng rng(seed);
  MintRegistry registry;
  auto bill = mint(n, PlainObfuscator(), rng, registry);
  return {{"n", n},
          {"seed", seed},
          {"serial", bill.serial},
          {"verifier_interpreter", bill.verifier.interpreter_id},
          {"verifier_bytes", bill.verifier.size()},
          {"note_norm", bill.note.amplitudes().norm()}};
}

ordered_json money_verify_report(int n, std::uint64_t seed) {
  Rng rng(seed);
  MintRegistry registry;
  auto bill = mint(n, PlainObfuscator(), rng, registry);
  const auto genuine = verify(bill.verifier, bill.note);
  const auto stranger = sample_random_state(n, rng);
  const auto other = verify(bill.verifier, stranger);
  return {{"n", n},
          {"seed", seed},
          {"serial", bill.serial},
          {"accept_prob", genuine.accept_probability},
          {"random_candidate_accept_prob", other.accept_probability},
          {"random_candidate_overlap_squared", std::norm(bill.note.amplitudes().dot(stranger.amplitudes()))}};
}

ordered_json money_attack_report(int n, std::uint64_t q, std::uint64_t seed, const std::string& strategy) {
  const auto s = parse_forge_strategy(strategy);
  Rng rng(seed);
  MintRegistry registry;
  auto bill = mint(n, PlainObfuscator(), rng, registry);
  CountingOracle oracle(program_circuit(bill.verifier), q);
  const auto forged = counterfeit(oracle, q, s, rng, s == ForgeStrategy::OutOfBand ? &bill.note : nullptr);
  return {{"n", n},
          {"q", q},
          {"seed", seed},
          {"strategy", strategy},
          {"fidelity", fidelity(forged.clone, bill.note)},
          {"queries_used", forged.queries}};
}

}  // namespace qlab
