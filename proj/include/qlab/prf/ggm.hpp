#pragma once

#include <cstdint>
#include <functional>

#include "qlab/sim/bits.hpp"

namespace qlab {

/// Length-doubling generator {0,1}^s -> {0,1}^{2s}.
struct PrgSpec {
  std::size_t seed_len = 0;
  std::function<BitString(const BitString&)> expand;

  BitString operator()(const BitString& seed) const;

  /// Keyed splitmix expansion. Deterministic and fast; not a vetted PRG.
  static PrgSpec test_grade(std::size_t seed_len, std::uint64_t salt = 0x9e3779b97f4a7c15ULL);
};

struct PrfKey {
  BitString key;
  std::size_t input_len = 0;
  std::size_t output_len = 0;

  PrfKey(BitString k, std::size_t in, std::size_t out);
  static PrfKey random(std::size_t n, std::size_t output_len, Rng& rng);
};

/// GGM tree walk: bit 0 selects the left half of each expansion. Outputs
/// longer than the key take one more expansion at the leaf (up to twice the
/// key length); shorter outputs truncate the leaf.
BitString ggm_eval(const PrfKey& key, const BitString& x, const PrgSpec& prg);
BitString ggm_eval(const PrfKey& key, const BitString& x);

/// `bits` pseudorandom bits bound to (key, label), from a GGM walk over the
/// 32-bit label.
BitString prf_derive(const BitString& key, std::uint32_t label, std::size_t bits);

}  // namespace qlab
