#include <gtest/gtest.h>

#include "qlab/enc/circuits.hpp"
#include "qlab/obf/attack.hpp"
#include "qlab/obf/combine.hpp"
#include "qlab/obf/families.hpp"
#include "qlab/obf/program.hpp"
#include "qlab/prf/ggm.hpp"
#include "qlab/sim/errors.hpp"
#include "qlab/sim/metrics.hpp"
#include "qlab/sim/pauli.hpp"
#include "qlab/sim/simulator.hpp"

using namespace qlab;

namespace {

BitString bs(const char* s) { return BitString::from_string(s); }

QuantumCircuit random_circuit(int n, int gates, Rng& rng) {
  static const char* kNames[] = {"x", "h", "s", "t", "z", "y"};
  QuantumCircuit c(n);
  std::uniform_int_distribution<int> q(0, n - 1), name(0, 5);
  for (int i = 0; i < gates; ++i) {
    const int t = q(rng);
    if (n > 1 && (rng() & 1)) {
      int ctl = q(rng);
      while (ctl == t) ctl = q(rng);
      c.add(Gate::named(kNames[name(rng)], {t}, {ctl}));
    } else {
      c.add(Gate::named(kNames[name(rng)], {t}));
    }
  }
  return c;
}

/// Reference decryption of one slot: inverse of P_{f_k(tag)} computed
/// directly from the GGM function.
QuantumState ref_decrypt(const BitString& key, const BitString& tag, const QuantumState& payload) {
  const PrfKey k(key, key.size(), 2 * key.size());
  return pauli_apply(PauliString(ggm_eval(k, tag)), payload, true);
}

/// Runs one branch of a family circuit with classical tags and returns
/// (payload state, tags) after splitting off the classical registers.
struct BranchRun {
  QuantumState payload;
  std::vector<BitString> tags;
};

BranchRun run_branch(const QuantumCircuit& family, const FamilyLayout& L, Branch branch, const QuantumState& payload,
                     const std::vector<BitString>& tags, std::uint64_t gate) {
  BitString tail;
  for (const auto& t : tags) tail = tail.concat(t);
  tail = tail.concat(BitString::from_uint(gate, static_cast<std::size_t>(L.gate_bits())));
  const auto in = QuantumState::basis(BitString::from_uint(static_cast<std::uint64_t>(branch), 2))
                      .tensor(payload)
                      .tensor(QuantumState::basis(tail));
  const auto out = run_circuit(family, in);
  auto fixed = qubit_range(0, 2);
  const auto rest = qubit_range(2 + L.slots * L.n, L.slots * L.n + L.gate_bits());
  fixed.insert(fixed.end(), rest.begin(), rest.end());
  auto split = split_basis(out, fixed);
  EXPECT_TRUE(split.has_value());
  BranchRun r{split->second, {}};
  for (int s = 0; s < L.slots; ++s) r.tags.push_back(split->first.slice(static_cast<std::size_t>(2 + s * L.n), L.n));
  return r;
}

}  // namespace

TEST(PlainObfuscator, Examples) {
  const auto id = identity_circuit(2);
  auto p = plain_obfuscate(id, bs("0110"));
  Rng rng(1);
  const auto rho = sample_random_mixed_state(2, 2, rng);
  EXPECT_LT(trace_distance(interpret(p, rho), rho), 1e-12);

  const auto c = make_point_circuit(bs("10"), bs("11"));
  auto pc = plain_obfuscate(c, bs("1"));
  const auto out = interpret(pc, QuantumState::basis(bs("1000")));
  EXPECT_NEAR(out.probabilities()(0b1011), 1.0, 1e-12);
  EXPECT_TRUE(program_circuit(pc).same_as(c));
  EXPECT_EQ(program_circuit(pc).serialize(), c.serialize());
}

TEST(PlainObfuscator, DeterministicInCircuitAndRandomness) {
  const auto c = make_point_circuit(bs("01"), bs("10"));
  EXPECT_EQ(plain_obfuscate(c, bs("101")).description, plain_obfuscate(c, bs("101")).description);
  EXPECT_NE(plain_obfuscate(c, bs("101")).description, plain_obfuscate(c, bs("100")).description);
}

TEST(PlainObfuscator, FunctionalEquivalenceOnRandomCircuits) {
  Rng rng(2);
  for (int rep = 0; rep < 500; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto c = random_circuit(n, 1 + static_cast<int>(rng() % 20), rng);
    auto p = plain_obfuscate(c, BitString::random(8, rng));
    const auto in = sample_random_state(n, rng);
    EXPECT_LT(trace_distance(interpret(p, in), run_circuit(c, in)), 1e-9);
    // Size stays polynomial: bounded by a fixed multiple of the gate count.
    EXPECT_LE(p.size(), 200 + 400 * c.size());
  }
}

TEST(Interpret, HadamardAndUseCounting) {
  QuantumCircuit h(1);
  h.h(0);
  auto p = PlainObfuscator(1).obfuscate(h, BitString());
  const auto out = interpret(p, QuantumState::zero(1));
  EXPECT_NEAR(std::abs(out.amplitudes()(1)), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_THROW(interpret(p, QuantumState::zero(1)), ContractError);
  auto q = plain_obfuscate(h, BitString());
  EXPECT_THROW(interpret(q, QuantumState::zero(2)), DimensionError);
  q.interpreter_id = "nobody";
  EXPECT_THROW(interpret(q, QuantumState::zero(1)), ContractError);
}

TEST(Interpret, QuantumFormMatchesClassicalForm) {
  Rng rng(3);
  Codebook book;
  for (int i = 0; i < 3; ++i) book.circuits.push_back(random_circuit(2, 6, rng));
  CodebookObfuscator obf("test-book-3", book, 1);
  for (std::size_t i = 0; i < 3; ++i) {
    auto quantum = obf.obfuscate(book.circuits[i], BitString());
    EXPECT_EQ(quantum.form, ProgramForm::QuantumState);
    auto classical = plain_obfuscate(book.circuits[i], BitString());
    const auto in = sample_random_state(2, rng);
    EXPECT_LT(trace_distance(interpret(quantum, in), interpret(classical, in)), 1e-10);
    EXPECT_THROW(interpret(quantum, in), ContractError);
  }
  EXPECT_THROW(obf.obfuscate(identity_circuit(3), BitString()), ContractError);
}

TEST(Combine, Examples) {
  QuantumCircuit x(1);
  x.x(0);
  const auto c = combine({x, identity_circuit(1)}).as_circuit();
  EXPECT_NEAR(run_circuit(c, QuantumState::basis(2, 0b00)).probabilities()(0b01), 1.0, 1e-12);
  EXPECT_NEAR(run_circuit(c, QuantumState::basis(2, 0b10)).probabilities()(0b10), 1.0, 1e-12);
  EXPECT_THROW(combine({x, identity_circuit(2)}), DimensionError);
  EXPECT_THROW(combine({x}), std::invalid_argument);

  const auto a = bs("01"), b = bs("11");
  const auto cd = combine({make_point_circuit(a, b), identity_circuit(4)}).as_circuit();
  EXPECT_NEAR(run_circuit(cd, QuantumState::basis(bs("00100"))).probabilities()(0b00111), 1.0, 1e-12);
}

TEST(Combine, DispatchMatchesSelectedBranchExactly) {
  Rng rng(4);
  for (int n = 1; n <= 3; ++n) {
    std::vector<QuantumCircuit> branches;
    for (int i = 0; i < 3; ++i) branches.push_back(random_circuit(n, 8, rng));
    const auto cc = combine(branches);
    const auto c = cc.as_circuit();
    EXPECT_LE(c.size(), 3 * 8u);
    for (std::uint64_t s = 0; s < 4; ++s) {
      for (std::uint64_t x = 0; x < (1u << n); ++x) {
        const auto out = run_circuit(c, QuantumState::basis(n + 2, (s << n) | x));
        const auto expect = s < 3 ? run_circuit(branches[s], QuantumState::basis(n, x)) : QuantumState::basis(n, x);
        const auto full = QuantumState::basis(2, s).tensor(expect);
        EXPECT_LT((out.amplitudes() - full.amplitudes()).norm(), 1e-12);
      }
    }
  }
}

TEST(PointCircuit, Examples) {
  const auto a = bs("10"), b = bs("01");
  const auto c = make_point_circuit(a, b);
  EXPECT_EQ(run_basis(c, 0b1000), 0b1001u);
  for (std::uint64_t x = 0; x < 4; ++x) {
    for (std::uint64_t y = 0; y < 4; ++y) {
      const auto in = (x << 2) | y;
      const auto once = run_basis(c, in);
      EXPECT_EQ(once, x == 0b10 ? (in ^ 0b01) : in);
      EXPECT_EQ(run_basis(c, once), in);
    }
  }
  EXPECT_THROW(make_point_circuit(bs("1"), bs("10")), DimensionError);
}

TEST(Checker, FiresOnlyForMatchingCodebookEntry) {
  const auto a = bs("10"), b = bs("11");
  Codebook book{{make_point_circuit(a, b), identity_circuit(4)}};
  const auto d = make_checker_circuit(a, b, book);
  // Advice 0 selects C_{a,b}: output flips. Advice 1 selects identity: no flip.
  EXPECT_EQ(run_basis(d, 0b00), 0b01u);
  EXPECT_EQ(run_basis(d, 0b10), 0b10u);
}

TEST(Checker, RandomInputsRarelyFire) {
  // Codebook of all point circuits with b != 0 plus the identity.
  const int n = 2;
  Codebook book;
  for (std::uint64_t ai = 0; ai < 4; ++ai)
    for (std::uint64_t bi = 1; bi < 4; ++bi)
      book.circuits.push_back(make_point_circuit(BitString::from_uint(ai, n), BitString::from_uint(bi, n)));
  book.circuits.push_back(identity_circuit(4));
  const int m = book.advice_qubits();
  std::uint64_t fired = 0, total = 0;
  for (std::uint64_t ai = 0; ai < 4; ++ai) {
    for (std::uint64_t bi = 0; bi < 4; ++bi) {
      if (ai == bi) continue;
      const auto d = make_checker_circuit(BitString::from_uint(ai, n), BitString::from_uint(bi, n), book, true);
      for (std::uint64_t p = 0; p < (1u << m); ++p) {
        const auto out = run_basis(d, p << 1);
        fired += (out >> 4) & 1;  // outputs: advice, flag, work x, work y
        ++total;
        // Work register returns to |a, 0>.
        EXPECT_EQ(out & 0xF, ai << 2);
      }
    }
  }
  EXPECT_LE(static_cast<double>(fired) / total, 1.0 / 4);
}

TEST(UnobfFamily, BranchContracts) {
  const FamilyLayout L{2, 2};
  EXPECT_EQ(L.alphabet().size(), 13u);
  EXPECT_EQ(L.width(), 12);
  const FamilySecret sec{bs("01"), bs("10"), bs("11"), bs("10")};
  const auto fam = make_family_circuit(identity_circuit(4), sec, L).as_circuit();
  const std::vector<BitString> zero_tags{bs("00"), bs("00")};

  // E on |0>: ciphertext of |a> under tag r.
  const auto e = run_branch(fam, L, Branch::Enc, QuantumState::zero(4), zero_tags, kEncFlagSecret);
  EXPECT_EQ(e.tags[0], sec.r);
  const auto slot0 = reduce(e.payload, L.payload_qubits(0));
  EXPECT_LT(trace_distance(ref_decrypt(sec.key, e.tags[0], slot0), QuantumState::basis(sec.a).to_mixed()), 1e-10);

  // Hom with X on slot 0 qubit 1 applied to Enc(|00>) gives Enc(|01>).
  const auto e0 = run_branch(fam, L, Branch::Enc, QuantumState::zero(4), zero_tags, kEncFlagPlain);
  const auto g = *L.alphabet_index(Gate::named("x", {L.payload(0, 1)}));
  const auto h = run_branch(fam, L, Branch::Hom, e0.payload, e0.tags, g);
  const auto hs = reduce(h.payload, L.payload_qubits(0));
  EXPECT_LT(trace_distance(ref_decrypt(sec.key, h.tags[0], hs), QuantumState::basis(bs("01")).to_mixed()), 1e-10);

  // B on Enc(b) in slot 1 writes a into slot 0; on Enc(anything else) leaves 0.
  for (std::uint64_t y = 0; y < 4; ++y) {
    const auto ey = run_branch(fam, L, Branch::Enc, QuantumState::basis(4, y << 2), zero_tags, kEncFlagPlain);
    const auto ct = reduce(ey.payload, L.payload_qubits(0));
    const auto b_in = QuantumState::zero(2).tensor(ct);
    const auto b = run_branch(fam, L, Branch::Check, b_in, {bs("00"), ey.tags[0]}, 0);
    const auto out0 = reduce(b.payload, L.payload_qubits(0)).probabilities();
    const std::uint64_t expect = y == sec.b.to_uint() ? sec.a.to_uint() : 0;
    EXPECT_NEAR(out0(static_cast<Eigen::Index>(expect)), 1.0, 1e-10) << "y=" << y;
  }
}

TEST(UnobfFamily, MainBranchAndSharedBranches) {
  Rng rng(5);
  const auto s0 = sample_unobf_family(2, 0, rng);
  Rng rng2(5);
  const auto s1 = sample_unobf_family(2, 1, rng2);
  EXPECT_EQ(s0.witness.a, s1.witness.a);
  const auto c0 = s0.circuit.as_circuit(), c1 = s1.circuit.as_circuit();
  const FamilyLayout L{2, 2};
  const auto a = s0.witness.a.to_uint(), b = s0.witness.b.to_uint();
  const int w = L.width();
  const std::uint64_t in = (a << (w - 2)) ;  // selector 00, slot0 = a, slot1 = 0
  EXPECT_EQ(run_basis(c0, in), in | (b << (w - 4)));
  for (std::uint64_t x = 0; x < 16; ++x) EXPECT_EQ(run_basis(c1, x << (w - 4)), x << (w - 4));
  // Non-main branches coincide.
  EXPECT_EQ(c0.size() - c1.size(), make_point_circuit(s0.witness.a, s0.witness.b).size());
  for (std::size_t i = 1; i < 4; ++i)
    EXPECT_EQ(s0.circuit.branches[i].serialize(), s1.circuit.branches[i].serialize());
}

TEST(Attack, ClassicalFormSeparatesFamilies) {
  Rng rng(6);
  const FamilyLayout L{2, 2};
  int f_hits = 0, g_hits = 0;
  for (int i = 0; i < 10; ++i) {
    for (int secret = 0; secret < 2; ++secret) {
      const auto s = sample_unobf_family(2, secret, rng);
      std::vector<ObfuscatedProgram> copies{plain_obfuscate(s.circuit.as_circuit(), BitString::random(4, rng))};
      const auto r = adversary_homomorphic(copies, L);
      (secret == 0 ? f_hits : g_hits) += r.bit;
      EXPECT_EQ(r.interpretations, 3 + make_point_circuit(s.witness.a, s.witness.b).size() * (secret == 0));
    }
  }
  EXPECT_EQ(f_hits, 10);
  EXPECT_EQ(g_hits, 0);
}

TEST(Attack, StateFormConsumesDocumentedUses) {
  Rng rng(7);
  const FamilyLayout L{2, 3};
  EXPECT_EQ(L.alphabet().size(), 31u);
  for (int secret = 0; secret < 2; ++secret) {
    auto s0 = sample_unobf_family(2, 0, rng, 3);
    const auto f = s0.circuit.as_circuit();
    const auto g = make_family_circuit(identity_circuit(4), s0.witness, L).as_circuit();
    Codebook book{{f, g}};
    const std::string id = "attack-book-" + std::to_string(secret);
    CodebookObfuscator probe(id, book, std::nullopt);
    const auto uses = state_attack_uses(probe.codebook(), L);
    EXPECT_EQ(uses, 2u + 1u + make_point_circuit(s0.witness.a, s0.witness.b).size() + 1u);
    CodebookObfuscator obf(id, book, uses);
    const auto& target = secret == 0 ? f : g;
    std::vector<ObfuscatedProgram> copies{obf.obfuscate(target, BitString()), obf.obfuscate(target, BitString())};
    const auto r = adversary_homomorphic(copies, L);
    EXPECT_EQ(r.bit, secret == 0 ? 1 : 0);
    EXPECT_EQ(r.interpretations, uses);
    EXPECT_EQ(*copies[0].uses_remaining, 0u);
    std::vector<ObfuscatedProgram> one{obf.obfuscate(target, BitString())};
    EXPECT_THROW(adversary_homomorphic(one, L), ContractError);
  }
}

TEST(Baseline, NoQueriesNoInformationAndHintDetects) {
  Rng rng(8);
  const auto a = BitString::random(8, rng);
  const auto b = BitString::from_string("00000001");
  CountingOracle point(make_point_circuit(a, b));
  std::vector<CountingOracle*> oracles{&point};
  const auto r0 = blackbox_baseline(oracles, 0, rng);
  EXPECT_EQ(r0.queries, 0u);
  EXPECT_EQ(point.query_count(), 0u);
  const auto r = blackbox_baseline(oracles, 4, rng, a);
  EXPECT_EQ(r.guess, 0);
  EXPECT_EQ(point.query_count(), 4u);
  CountingOracle limited(make_point_circuit(a, b), 2);
  std::vector<CountingOracle*> lim{&limited};
  EXPECT_THROW(blackbox_baseline(lim, 3, rng), ContractError);
}
