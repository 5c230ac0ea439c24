#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qlab/enc/scheme.hpp"

namespace qlab {

enum class GameMode { Ind, Cpa, Cca1 };

std::string to_string(GameMode mode);
GameMode parse_game_mode(const std::string& text);

/// Oracles handed to the adversary. Which calls are allowed depends on the
/// mode and the phase; forbidden calls throw ContractError.
class OracleHandle {
 public:
  OracleHandle(const SymScheme& scheme, const BitString& key, GameMode mode, Rng& rng);

  Ciphertext encrypt(const QuantumState& state);
  /// Encryption with adversary-chosen randomness; off unless enabled.
  Ciphertext encrypt_with(const QuantumState& state, const BitString& r);
  QuantumState decrypt(const Ciphertext& ct);

  void enter_phase_two() { phase_two_ = true; }
  void allow_chosen_randomness(bool on) { chosen_randomness_ = on; }
  std::uint64_t encrypt_calls() const { return enc_calls_; }
  std::uint64_t decrypt_calls() const { return dec_calls_; }
  int message_qubits() const { return scheme_.message_qubits(); }

 private:
  const SymScheme& scheme_;
  const BitString& key_;
  GameMode mode_;
  Rng& rng_;
  bool phase_two_ = false;
  bool chosen_randomness_ = false;
  std::uint64_t enc_calls_ = 0;
  std::uint64_t dec_calls_ = 0;
};

/// Two-phase adversary. choose() returns the challenge state: the first m
/// qubits are the message, any further qubits are a side register that the
/// challenger leaves alone. guess() sees the challenge ciphertext, whose
/// payload keeps the side register after the message qubits.
class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual std::string name() const = 0;
  virtual QuantumState choose(OracleHandle& oracles, Rng& rng) = 0;
  virtual int guess(const Ciphertext& challenge, OracleHandle& oracles, Rng& rng) = 0;
};

struct GameResult {
  std::string scheme;
  std::string adversary;
  GameMode mode = GameMode::Ind;
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t wins = 0;
  double advantage = 0.0;  // |2 wins / trials - 1|
  double ci95 = 0.0;       // Wilson half-width on the win rate
  std::uint64_t seed = 0;
};

/// Wilson score interval half-width at 95% for k successes in t trials.
double wilson_half_width(std::uint64_t k, std::uint64_t t);

/// Per trial: fresh key, phase one, challenger coin c (0: encrypt the
/// adversary's message, 1: encrypt |0^m> in its place), phase two with
/// Enc only, win iff guess = c. Trial t uses seed derive_seed(seed, t).
GameResult ind_game(const SymScheme& scheme, Adversary& adversary, GameMode mode, std::uint64_t trials,
                    std::uint64_t seed);

/// Guesses with a fair coin.
class CoinFlipAdversary : public Adversary {
 public:
  std::string name() const override { return "coin-flip"; }
  QuantumState choose(OracleHandle& oracles, Rng& rng) override;
  int guess(const Ciphertext& challenge, OracleHandle& oracles, Rng& rng) override;
};

/// Sends |1...1>, measures the payload in the computational basis and
/// guesses "real message" iff it reads 1...1 after undoing a learned X
/// mask. In CPA or CCA1 mode the mask comes from encrypting |0^m> once;
/// otherwise it is zero.
class BasisAdversary : public Adversary {
 public:
  std::string name() const override { return "basis-measurement"; }
  QuantumState choose(OracleHandle& oracles, Rng& rng) override;
  int guess(const Ciphertext& challenge, OracleHandle& oracles, Rng& rng) override;

 private:
  BitString mask_;
};

}  // namespace qlab
