#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <memory>

#include "qlab/obf/families.hpp"
#include "qlab/obf/program.hpp"
#include "qlab/prf/ggm.hpp"
#include "qlab/prf/owf.hpp"
#include "qlab/sim/errors.hpp"
#include "qlab/sim/simulator.hpp"

using namespace qlab;

namespace {

/// Independent recursive GGM: f(k, x) = f(half_{x_0}(G(k)), x_1..), written
/// over raw bit vectors.
std::vector<std::uint8_t> ref_ggm(const PrgSpec& prg, std::vector<std::uint8_t> seed,
                                  const std::vector<std::uint8_t>& x, std::size_t pos, std::size_t out_len) {
  const std::size_t s = seed.size();
  if (pos == x.size()) {
    if (out_len <= s) return {seed.begin(), seed.begin() + static_cast<std::ptrdiff_t>(out_len)};
    const auto e = prg(BitString(seed)).bits();
    return {e.begin(), e.begin() + static_cast<std::ptrdiff_t>(out_len)};
  }
  const auto e = prg(BitString(seed)).bits();
  const auto off = x[pos] ? static_cast<std::ptrdiff_t>(s) : 0;
  return ref_ggm(prg, {e.begin() + off, e.begin() + off + static_cast<std::ptrdiff_t>(s)}, x, pos + 1, out_len);
}

}  // namespace

TEST(Prg, DoublesAndIsDeterministic) {
  const auto prg = PrgSpec::test_grade(5);
  const auto seed = BitString::from_string("10110");
  EXPECT_EQ(prg(seed).size(), 10u);
  EXPECT_EQ(prg(seed), prg(seed));
  EXPECT_THROW(prg(BitString::from_string("1")), DimensionError);
}

TEST(Ggm, OneBitInputsAreHalvesOfTheExpansion) {
  Rng rng(1);
  const auto prg = PrgSpec::test_grade(6);
  const auto k = PrfKey::random(6, 6, rng);
  PrfKey one(k.key, 1, 6);
  const auto e = prg(k.key);
  EXPECT_EQ(ggm_eval(one, BitString::from_string("0")), e.slice(0, 6));
  EXPECT_EQ(ggm_eval(one, BitString::from_string("1")), e.slice(6, 6));
  EXPECT_THROW(ggm_eval(one, BitString::from_string("01")), DimensionError);
}

TEST(Ggm, MatchesRecursiveReferenceOnAllInputs) {
  Rng rng(2);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t out : {n, 2 * n, n / 2 + 1}) {
      const auto key = PrfKey::random(n, out, rng);
      const auto prg = PrgSpec::test_grade(n);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        const auto xb = BitString::from_uint(x, n);
        ASSERT_EQ(ggm_eval(key, xb).bits(), ref_ggm(prg, key.key.bits(), xb.bits(), 0, out));
      }
    }
  }
}

TEST(Ggm, Deterministic) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto key = PrfKey::random(8, 16, rng);
    const auto x = BitString::random(8, rng);
    EXPECT_EQ(ggm_eval(key, x), ggm_eval(PrfKey(key.key, 8, 16), x));
  }
}

namespace {

/// Length-doubling map drawn uniformly at random, as a lookup table.
PrgSpec random_table_prg(std::size_t s, Rng& rng) {
  auto table = std::make_shared<std::vector<BitString>>();
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << s); ++i) table->push_back(BitString::random(2 * s, rng));
  return PrgSpec{s, [table](const BitString& seed) { return (*table)[seed.to_uint()]; }};
}

/// Colliding pairs among 1000 outputs for random keys and random inputs.
double collision_pairs(const PrgSpec& prg, Rng& rng) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (int i = 0; i < 1000; ++i) {
    const auto key = PrfKey::random(8, 16, rng);
    ++counts[ggm_eval(key, BitString::random(8, rng), prg).to_uint()];
  }
  double pairs = 0;
  for (const auto& [v, c] : counts) pairs += static_cast<double>(c * (c - 1) / 2);
  return pairs;
}

}  // namespace

TEST(Ggm, CollisionRateNearIdeal) {
  // Tiny seeds make every tree level a map on 256 values, so even an ideal
  // generator collides far more often than a random 16-bit function would.
  // The reference is GGM over uniformly random length-doubling tables.
  Rng rng(4);
  std::vector<double> ideal;
  for (int i = 0; i < 30; ++i) ideal.push_back(collision_pairs(random_table_prg(8, rng), rng));
  double mean = 0, var = 0;
  for (double v : ideal) mean += v / ideal.size();
  for (double v : ideal) var += (v - mean) * (v - mean) / (ideal.size() - 1);
  const double observed = collision_pairs(PrgSpec::test_grade(8), rng);
  EXPECT_NEAR(observed, mean, 3 * std::sqrt(var)) << "ideal mean " << mean;
}

TEST(Owf, DeterministicAndDistinguishesTheHiddenBit) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto a = BitString::random(4, rng);
    const auto r = BitString::random(16, rng);
    const bool b = rng() & 1;
    EXPECT_EQ(owf_eval(a, b, r), owf_eval(a, b, r));
    EXPECT_NE(owf_eval(a, false, r), owf_eval(a, true, r));
  }
}

TEST(Owf, OutputParsesToTheFunctionallyEquivalentPointCircuit) {
  const auto a = BitString::from_string("101");
  const auto text = owf_eval(a, true, BitString::from_string("0110"));
  ObfuscatedProgram p;
  p.description = text;
  p.arity = 4;
  p.interpreter_id = PlainObfuscator::kInterpreterId;
  const auto c = program_circuit(p);
  EXPECT_EQ(run_basis(c, 0b1010), 0b1011u);
  EXPECT_EQ(run_basis(c, 0b1000), 0b1000u);
}

TEST(Owf, RejectsQuantumOutputObfuscators) {
  const auto a = BitString::from_string("1");
  Codebook book{{make_point_circuit_bit(a, false), make_point_circuit_bit(a, true)}};
  CodebookObfuscator obf("owf-book", book);
  EXPECT_THROW(owf_eval(a, true, BitString(), obf), ContractError);
}
