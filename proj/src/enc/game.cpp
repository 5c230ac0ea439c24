#include "qlab/enc/game.hpp"

#include <cmath>
#include <stdexcept>

#include "qlab/sim/errors.hpp"
#include "qlab/sim/simulator.hpp"

namespace qlab {

std::string to_string(GameMode mode) {
  switch (mode) {
    case GameMode::Ind:
      return "IND";
    case GameMode::Cpa:
      return "IND-CPA";
    case GameMode::Cca1:
      return "IND-CCA1";
  }
  return "?";
}

GameMode parse_game_mode(const std::string& text) {
  if (text == "IND" || text == "ind") return GameMode::Ind;
  if (text == "IND-CPA" || text == "cpa") return GameMode::Cpa;
  if (text == "IND-CCA1" || text == "cca1") return GameMode::Cca1;
  throw std::invalid_argument("unknown game mode: " + text);
}

OracleHandle::OracleHandle(const SymScheme& scheme, const BitString& key, GameMode mode, Rng& rng)
    : scheme_(scheme), key_(key), mode_(mode), rng_(rng) {}

Ciphertext OracleHandle::encrypt(const QuantumState& state) {
  if (mode_ == GameMode::Ind) throw ContractError("IND mode grants no encryption oracle");
  ++enc_calls_;
  return scheme_.encrypt(key_, state, rng_);
}

Ciphertext OracleHandle::encrypt_with(const QuantumState& state, const BitString& r) {
  if (!chosen_randomness_) throw ContractError("chosen-randomness encryption is disabled");
  if (mode_ == GameMode::Ind) throw ContractError("IND mode grants no encryption oracle");
  const auto* prf = dynamic_cast<const PrfScheme*>(&scheme_);
  if (prf == nullptr) throw ContractError("scheme does not accept external randomness");
  ++enc_calls_;
  return prf->encrypt_with(key_, state, r);
}

QuantumState OracleHandle::decrypt(const Ciphertext& ct) {
  if (mode_ != GameMode::Cca1) throw ContractError(to_string(mode_) + " grants no decryption oracle");
  if (phase_two_) throw ContractError("decryption oracle is revoked after the challenge");
  ++dec_calls_;
  return scheme_.decrypt(key_, ct);
}

double wilson_half_width(std::uint64_t k, std::uint64_t t) {
  if (t == 0) return 0.0;
  constexpr double z = 1.959963984540054;
  const double p = static_cast<double>(k) / static_cast<double>(t);
  const double tn = static_cast<double>(t);
  return z * std::sqrt(p * (1 - p) / tn + z * z / (4 * tn * tn)) / (1 + z * z / tn);
}

GameResult ind_game(const SymScheme& scheme, Adversary& adversary, GameMode mode, std::uint64_t trials,
                    std::uint64_t seed) {
  const int m = scheme.message_qubits();
  GameResult res;
  res.scheme = scheme.name();
  res.adversary = adversary.name();
  res.mode = mode;
  res.n = m;
  res.trials = trials;
  res.seed = seed;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    Rng adv_rng(derive_seed(seed ^ 0xad5e7a11ULL, t));
    const auto key = scheme.keygen(rng);
    OracleHandle oracles(scheme, key, mode, rng);
    const auto state = adversary.choose(oracles, adv_rng);
    if (state.num_qubits() < m) throw DimensionError("challenge state smaller than the message");
    oracles.enter_phase_two();
    const int coin = static_cast<int>(rng() & 1U);
    QuantumState message = state;
    if (coin == 1) {
      const auto side = qubit_range(m, state.num_qubits() - m);
      message = side.empty() ? QuantumState::zero(m) : QuantumState::zero(m).tensor(reduce(state, side));
    }
    const auto challenge = scheme.encrypt(key, message, rng);
    if (adversary.guess(challenge, oracles, adv_rng) == coin) ++res.wins;
  }
  const double rate = trials ? static_cast<double>(res.wins) / static_cast<double>(trials) : 0.5;
  res.advantage = std::abs(2 * rate - 1);
  res.ci95 = wilson_half_width(res.wins, trials);
  return res;
}

QuantumState CoinFlipAdversary::choose(OracleHandle& oracles, Rng&) {
  return QuantumState::zero(oracles.message_qubits());
}

int CoinFlipAdversary::guess(const Ciphertext&, OracleHandle&, Rng& rng) { return static_cast<int>(rng() & 1U); }

QuantumState BasisAdversary::choose(OracleHandle& oracles, Rng& rng) {
  const int m = oracles.message_qubits();
  mask_ = BitString(static_cast<std::size_t>(m));
  try {
    const auto probe = oracles.encrypt(QuantumState::zero(m));
    mask_ = sample_measurement(probe.payload, qubit_range(0, m), rng);
  } catch (const ContractError&) {
    // No encryption oracle in this mode: keep the zero mask.
  }
  return QuantumState::basis(m, (std::uint64_t{1} << m) - 1);
}

int BasisAdversary::guess(const Ciphertext& challenge, OracleHandle& oracles, Rng& rng) {
  const int m = oracles.message_qubits();
  const auto seen = sample_measurement(challenge.payload, qubit_range(0, m), rng) ^ mask_;
  return seen.to_uint() == (std::uint64_t{1} << m) - 1 ? 0 : 1;
}

}  // namespace qlab
