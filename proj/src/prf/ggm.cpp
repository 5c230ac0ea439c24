#include "qlab/prf/ggm.hpp"

#include "qlab/sim/errors.hpp"

namespace qlab {

BitString PrgSpec::operator()(const BitString& seed) const {
  if (seed.size() != seed_len) throw DimensionError("PRG seed length mismatch");
  BitString out = expand(seed);
  if (out.size() != 2 * seed_len) throw DimensionError("PRG must double its input length");
  return out;
}

PrgSpec PrgSpec::test_grade(std::size_t seed_len, std::uint64_t salt) {
  PrgSpec spec;
  spec.seed_len = seed_len;
  spec.expand = [seed_len, salt](const BitString& seed) {
    std::uint64_t h = mix64(salt ^ seed_len);
    std::uint64_t chunk = 0;
    for (std::size_t i = 0; i < seed.size(); ++i) {
      chunk = (chunk << 1) | (seed[i] ? 1U : 0U);
      if (i % 64 == 63 || i + 1 == seed.size()) {
        h = mix64(h ^ chunk);
        chunk = 0;
      }
    }
    BitString out(2 * seed_len);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i % 64 == 0) word = mix64(h + 0x2545f4914f6cdd1dULL * (i / 64 + 1));
      out.set(i, (word >> (63 - i % 64)) & 1U);
    }
    return out;
  };
  return spec;
}

PrfKey::PrfKey(BitString k, std::size_t in, std::size_t out) : key(std::move(k)), input_len(in), output_len(out) {
  if (key.empty()) throw DimensionError("PRF key must be non-empty");
  if (output_len > 2 * key.size()) throw DimensionError("PRF output at most twice the key length");
}

PrfKey PrfKey::random(std::size_t n, std::size_t output_len, Rng& rng) {
  return PrfKey(BitString::random(n, rng), n, output_len);
}

BitString ggm_eval(const PrfKey& key, const BitString& x, const PrgSpec& prg) {
  if (x.size() != key.input_len) throw DimensionError("PRF input length mismatch");
  const std::size_t s = key.key.size();
  BitString node = key.key;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const BitString e = prg(node);
    node = x[i] ? e.slice(s, s) : e.slice(0, s);
  }
  if (key.output_len <= s) return node.slice(0, key.output_len);
  return prg(node).slice(0, key.output_len);
}

BitString ggm_eval(const PrfKey& key, const BitString& x) {
  return ggm_eval(key, x, PrgSpec::test_grade(key.key.size()));
}

BitString prf_derive(const BitString& key, std::uint32_t label, std::size_t bits) {
  const PrfKey k(key, 32, bits);
  return ggm_eval(k, BitString::from_uint(label, 32), PrgSpec::test_grade(key.size(), 0x6a09e667f3bcc909ULL));
}

}  // namespace qlab
