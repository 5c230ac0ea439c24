#include <gtest/gtest.h>

#include "qlab/enc/game.hpp"
#include "qlab/enc/obf_schemes.hpp"
#include "qlab/enc/scheme.hpp"
#include "qlab/sim/errors.hpp"
#include "qlab/sim/metrics.hpp"
#include "qlab/sim/pauli.hpp"
#include "qlab/sim/simulator.hpp"
#include "reference.hpp"

using namespace qlab;

namespace {

std::shared_ptr<const Obfuscator> plain() { return std::make_shared<PlainObfuscator>(); }

void expect_roundtrips(const SymScheme& s, int pure_count, int mixed_count, std::uint64_t seed) {
  Rng rng(seed);
  const int m = s.message_qubits();
  double worst = 0;
  for (int i = 0; i < pure_count + mixed_count; ++i) {
    const auto key = s.keygen(rng);
    const auto rho = i < pure_count ? sample_random_state(m, rng) : sample_random_mixed_state(m, 1 + i % 3, rng);
    const auto ct = s.encrypt(key, rho, rng);
    EXPECT_EQ(ct.payload.num_qubits(), m);
    worst = std::max(worst, trace_distance(s.decrypt(key, ct), rho));
  }
  EXPECT_LE(worst, 1e-9) << s.name();
}

/// Tries the decryption oracle during the guess.
class PeekingAdversary : public Adversary {
 public:
  std::string name() const override { return "peeking"; }
  QuantumState choose(OracleHandle& o, Rng&) override { return QuantumState::zero(o.message_qubits()); }
  int guess(const Ciphertext& c, OracleHandle& o, Rng&) override {
    o.decrypt(c);
    return 0;
  }
};

/// Uses the decryption oracle in phase one only.
class LunchtimeAdversary : public Adversary {
 public:
  std::string name() const override { return "lunchtime"; }
  QuantumState choose(OracleHandle& o, Rng&) override {
    const auto ct = o.encrypt(QuantumState::zero(o.message_qubits()));
    o.decrypt(ct);
    return QuantumState::zero(o.message_qubits());
  }
  int guess(const Ciphertext&, OracleHandle&, Rng& rng) override { return static_cast<int>(rng() & 1U); }
};

/// Entangles the message with a side register and checks the challenger
/// leaves the side register alone.
class EntanglingAdversary : public Adversary {
 public:
  std::string name() const override { return "entangling"; }
  QuantumState choose(OracleHandle& o, Rng&) override {
    const int m = o.message_qubits();
    QuantumCircuit c(2 * m);
    for (int q = 0; q < m; ++q) c.h(q).cx(q, m + q);
    return run_circuit(c, QuantumState::zero(2 * m));
  }
  int guess(const Ciphertext& ct, OracleHandle& o, Rng&) override {
    const int m = o.message_qubits();
    side = partial_trace(ct.payload, qubit_range(m, m));
    return 0;
  }
  std::optional<QuantumState> side;
};

}  // namespace

TEST(Qotp, Examples) {
  Rng rng(1);
  const auto rho = sample_random_mixed_state(2, 2, rng);
  EXPECT_LT(trace_distance(qotp_encrypt(PauliString::identity(2), rho), rho), 1e-12);
  EXPECT_LT(trace_distance(qotp_encrypt(PauliString(BitString::from_string("10")), QuantumState::zero(1)),
                           QuantumState::basis(1, 1)),
            1e-12);
  for (int n = 1; n <= 3; ++n) {
    const auto s = sample_random_mixed_state(n, 2, rng);
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << (2 * n)); ++r) {
      const auto p = PauliString::from_index(n, r);
      EXPECT_LT((qotp_encrypt(p, qotp_encrypt(p, s)).density() - s.density()).norm(), 1e-10);
    }
  }
  EXPECT_THROW(qotp_encrypt(PauliString::identity(3), rho), DimensionError);
}

TEST(PrfScheme, RoundTrips) {
  const PrfScheme s(3);
  Rng rng(2);
  const auto key = s.keygen(rng);
  const auto ct = s.encrypt(key, QuantumState::zero(3), rng);
  EXPECT_LT(trace_distance(s.decrypt(key, ct), QuantumState::zero(3)), 1e-10);
  expect_roundtrips(s, 200, 50, 3);
  expect_roundtrips(PrfScheme(2, true), 200, 50, 4);
  expect_roundtrips(PrfScheme(1), 200, 50, 5);
}

TEST(PrfScheme, CiphertextMatchesReferencePad) {
  // Payload must be P_{f_k(r)} applied as a Kronecker-product matrix.
  const PrfScheme s(2);
  Rng rng(6);
  const auto key = s.keygen(rng);
  const auto rho = sample_random_state(2, rng);
  const auto ct = s.encrypt(key, rho, rng);
  const auto p = s.pad(key)(ct.tag);
  ref::M u = ref::M::Identity(1, 1);
  for (int q = 0; q < 2; ++q) {
    ref::M local = ref::I2();
    if (p.x(q)) local = local * ref::X();
    if (p.z(q)) local = local * ref::Z();
    u = ref::kron(u, local);
  }
  EXPECT_LT((ct.payload.amplitudes() - u * rho.amplitudes()).norm(), 1e-12);
}

TEST(PrfScheme, WrongKeyGarbles) {
  const PrfScheme s(3);
  Rng rng(7);
  double total = 0;
  const int trials = 200;
  for (int i = 0; i < trials; ++i) {
    const auto key = s.keygen(rng);
    auto wrong = s.keygen(rng);
    while (wrong == key) wrong = s.keygen(rng);
    const auto rho = sample_random_state(3, rng);
    total += trace_distance(s.decrypt(wrong, s.encrypt(key, rho, rng)), rho);
  }
  EXPECT_GT(total / trials, 0.2);
}

TEST(Game, CoinFlipIsFair) {
  const PrfScheme s(2);
  CoinFlipAdversary adv;
  const auto r = ind_game(s, adv, GameMode::Ind, 10000, 11);
  EXPECT_LE(r.advantage, 0.05);
  EXPECT_LE(r.wins, r.trials);
  EXPECT_LE(ind_game(s, adv, GameMode::Cpa, 1000, 12).advantage, 0.08);
  EXPECT_GT(r.ci95, 0.0);
  EXPECT_LT(r.ci95, 0.02);
}

TEST(Game, BrokenSchemeIsDefeated) {
  const ConstantPauliScheme broken(2);
  BasisAdversary adv;
  const auto r = ind_game(broken, adv, GameMode::Cpa, 500, 13);
  EXPECT_GE(r.advantage, 0.9);
}

TEST(Game, IdealRandomnessResistsBasisMeasurement) {
  const PrfScheme ideal(3, true);
  BasisAdversary adv;
  EXPECT_LE(ind_game(ideal, adv, GameMode::Ind, 2000, 14).advantage, 0.1);
  EXPECT_LE(ind_game(ideal, adv, GameMode::Ind, 1000, 15).advantage, 0.1);
}

TEST(Game, OraclePermissionsAreEnforced) {
  const PrfScheme s(2);
  PeekingAdversary peek;
  EXPECT_THROW(ind_game(s, peek, GameMode::Cca1, 1, 1), ContractError);
  EXPECT_THROW(ind_game(s, peek, GameMode::Cpa, 1, 1), ContractError);
  LunchtimeAdversary lunch;
  EXPECT_NO_THROW(ind_game(s, lunch, GameMode::Cca1, 5, 1));
  EXPECT_THROW(ind_game(s, lunch, GameMode::Cpa, 1, 1), ContractError);
  EXPECT_THROW(ind_game(s, lunch, GameMode::Ind, 1, 1), ContractError);
  Rng rng(1);
  const auto key = s.keygen(rng);
  OracleHandle h(s, key, GameMode::Cpa, rng);
  EXPECT_THROW(h.encrypt_with(QuantumState::zero(2), BitString::from_string("01")), ContractError);
  h.allow_chosen_randomness(true);
  EXPECT_EQ(h.encrypt_with(QuantumState::zero(2), BitString::from_string("01")).tag.to_string(), "01");
}

TEST(Game, ForgetfulMapKeepsSideRegister) {
  const PrfScheme s(1);
  EntanglingAdversary adv;
  ind_game(s, adv, GameMode::Ind, 1, 99);
  ASSERT_TRUE(adv.side.has_value());
  EXPECT_LT((adv.side->density() - Matrix::Identity(2, 2) / 2.0).norm(), 1e-10);
}

TEST(Game, ReproducibleFromSeed) {
  const PrfScheme s(2);
  BasisAdversary adv;
  const auto a = ind_game(s, adv, GameMode::Cpa, 300, 5);
  const auto b = ind_game(s, adv, GameMode::Cpa, 300, 5);
  EXPECT_EQ(a.wins, b.wins);
}

TEST(ObfCpa, RoundTripAndUnlockCircuit) {
  const ObfCpaScheme s(plain(), 2);
  expect_roundtrips(s, 200, 50, 21);
  const auto r = PauliString(BitString::from_string("1101"));
  const auto k = BitString::from_string("10");
  const auto u = s.unlock_circuit(r, k);
  Rng rng(3);
  const auto y = sample_random_state(2, rng);
  const auto out = run_circuit(u, QuantumState::basis(k).tensor(y));
  EXPECT_LT(trace_distance(out, QuantumState::basis(k).tensor(pauli_apply(r, y, true))), 1e-12);
  const auto other = BitString::from_string("01");
  const auto same = run_circuit(u, QuantumState::basis(other).tensor(y));
  EXPECT_LT(trace_distance(same, QuantumState::basis(other).tensor(y)), 1e-12);
  expect_roundtrips(ObfCpaScheme(plain(), 3), 200, 50, 22);
}

TEST(PkScheme, RoundTripAndKeyExposure) {
  const PkScheme s(plain(), PrfScheme(2));
  Rng rng(31);
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    auto keys = s.keygen(rng);
    const auto rho = i < 150 ? sample_random_state(2, rng) : sample_random_mixed_state(2, 2, rng);
    worst = std::max(worst, trace_distance(s.decrypt(keys.sk, s.encrypt(keys.pk, rho, rng)), rho));
  }
  EXPECT_LE(worst, 1e-9);
  // The plain obfuscator leaves the hard-wired secret key readable.
  auto keys = s.keygen(rng);
  EXPECT_TRUE(program_circuit(keys.pk).same_as(s.enc_circuit(keys.sk)));
  // Tags are the encryption randomness.
  Rng a(77), b(77);
  const auto c1 = s.encrypt(keys.pk, QuantumState::zero(2), a);
  const auto c2 = s.encrypt(keys.pk, QuantumState::zero(2), a);
  const auto r1 = BitString::random(2, b);
  const auto r2 = BitString::random(2, b);
  EXPECT_EQ(c1.tag, r1);
  EXPECT_EQ(c2.tag, r2);
  EXPECT_EQ(c1.tag != c2.tag, r1 != r2);
}

TEST(HomEval, Examples) {
  const HomEvalScheme s(plain(), PkScheme(plain(), PrfScheme(2)));
  Rng rng(41);
  auto keys = s.keygen(rng);
  const auto zero = QuantumState::zero(2);
  auto ct = s.encrypt(keys.pk, zero, rng);
  EXPECT_LT(trace_distance(s.decrypt(keys.sk, s.eval(keys.eval, ct, {"i", {}})), zero), 1e-9);
  EXPECT_LT(trace_distance(s.decrypt(keys.sk, s.eval(keys.eval, ct, {"x", {0}})), QuantumState::basis(2, 0b10)), 1e-9);
  const auto rho = sample_random_state(2, rng);
  auto c = s.encrypt(keys.pk, rho, rng);
  c = s.eval(keys.eval, s.eval(keys.eval, c, {"h", {1}}), {"h", {1}});
  EXPECT_LT(trace_distance(s.decrypt(keys.sk, c), rho), 1e-9);
  EXPECT_THROW(s.eval(keys.eval, c, {"cx", {0, 0}}), std::invalid_argument);
  EXPECT_THROW(s.eval(keys.eval, c, {"x", {5}}), std::out_of_range);
  EXPECT_THROW(s.eval(keys.eval, c, {"rz", {0}}), std::invalid_argument);
}

TEST(HomEval, GateSequencesComposeWithDirectApplication) {
  const HomEvalScheme s(plain(), PkScheme(plain(), PrfScheme(2)));
  const auto alpha = s.alphabet();
  Rng rng(42);
  for (int rep = 0; rep < 60; ++rep) {
    auto keys = s.keygen(rng);
    const auto rho = rep % 4 == 0 ? sample_random_mixed_state(2, 2, rng) : sample_random_state(2, rng);
    auto ct = s.encrypt(keys.pk, rho, rng);
    QuantumCircuit direct(2);
    const int len = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < len; ++i) {
      const auto& g = alpha[rng() % alpha.size()];
      ct = s.eval(keys.eval, ct, g);
      if (g.name == "cx") direct.cx(g.targets[0], g.targets[1]);
      else if (g.name != "i") direct.add(Gate::named(g.name, {g.targets[0]}));
    }
    EXPECT_LT(trace_distance(s.decrypt(keys.sk, ct), run_circuit(direct, rho)), 1e-8);
  }
}
