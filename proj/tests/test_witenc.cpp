#include <gtest/gtest.h>

#include <cmath>

#include "qlab/sim/errors.hpp"
#include "qlab/sim/metrics.hpp"
#include "qlab/sim/pauli.hpp"
#include "qlab/sim/simulator.hpp"
#include "qlab/witenc/witenc.hpp"

using namespace qlab;

namespace {
PlainObfuscator plain;
}

TEST(ToyVerifier, CompletenessAndSoundnessProfile) {
  Rng rng(1);
  for (int n = 1; n <= 3; ++n) {
    const auto yes = make_yes_instance(n, rng);
    ASSERT_TRUE(yes.witness.has_value());
    EXPECT_GE(accept_probability(yes, *yes.witness), 1.0 - std::ldexp(1.0, -n));
    const auto no = make_no_instance(n, rng);
    EXPECT_FALSE(no.witness.has_value());
    // Accept operator is a projector scaled by sin^2; its norm bounds every witness.
    const int dim = 1 << n;
    Matrix accept_op = Matrix::Zero(dim, dim);
    for (int x = 0; x < dim; ++x) {
      const auto out = run_circuit(no.circuit, QuantumState::basis(n, x));
      for (int y = 0; y < dim; ++y) {
        const auto outy = run_circuit(no.circuit, QuantumState::basis(n, y));
        Complex s = 0;
        for (int w = 0; w < dim; ++w) s += std::conj(outy.amplitudes()(2 * w + 1)) * out.amplitudes()(2 * w + 1);
        accept_op(y, x) = s;
      }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(accept_op);
    EXPECT_LE(eig.eigenvalues().maxCoeff(), std::ldexp(1.0, -n) + 1e-12);
    for (int i = 0; i < 20; ++i) EXPECT_LE(accept_probability(no, sample_random_state(n, rng)), std::ldexp(1.0, -n));
  }
}

TEST(WitnessEncryption, ValidWitnessRecoversPayload) {
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const int n = 2 + i % 2;
    const auto v = make_yes_instance(n, rng);
    const auto rho = i % 4 == 0 ? sample_random_mixed_state(n, 2, rng) : sample_random_state(n, rng);
    auto ct = we_encrypt(v, rho, plain);
    EXPECT_GE(fidelity(we_decrypt(ct, *v.witness), rho), 1.0 - std::ldexp(1.0, -n) - 1e-6);
  }
}

TEST(WitnessEncryption, GarbageWitnessGivesMostlyZero) {
  Rng rng(3);
  const auto v = make_yes_instance(2, rng);
  const auto rho = sample_random_state(2, rng);
  auto ct = we_encrypt(v, rho, plain);
  const auto out = we_decrypt(ct, QuantumState::maximally_mixed(2));
  // Maximally mixed witness is accepted with probability 1/4.
  const double p = accept_probability(v, QuantumState::maximally_mixed(2));
  EXPECT_NEAR(p, 0.25, 1e-9);
  EXPECT_GE(fidelity(out, QuantumState::zero(2)), 1.0 - p - 1e-9);
  const Matrix want = (1 - p) * QuantumState::zero(2).density() + p * rho.density();
  EXPECT_LT((out.density() - want).norm(), 1e-9);
}

TEST(WitnessEncryption, NoInstanceHidesPayload) {
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const int n = 2 + i % 2;
    const auto v = make_no_instance(n, rng);
    const auto a = sample_random_state(n, rng);
    const auto b = sample_random_state(n, rng);
    const auto ca = program_circuit(we_encrypt(v, a, plain));
    const auto cb = program_circuit(we_encrypt(v, b, plain));
    const auto d = channel_distance_estimate(ca, cb, 4, derive_seed(4, i));
    EXPECT_LE(d.estimate, std::ldexp(1.0, -n) + 1e-4);
    EXPECT_LE(d.lower, d.estimate + 1e-12);
  }
}

TEST(WitnessEncryption, Contracts) {
  Rng rng(5);
  const auto v = make_yes_instance(2, rng);
  auto once = we_encrypt(v, QuantumState::basis(2, 1), PlainObfuscator(1));
  EXPECT_GE(fidelity(we_decrypt(once, *v.witness), QuantumState::basis(2, 1)), 1.0 - 1e-9);
  EXPECT_THROW(we_decrypt(once, *v.witness), ContractError);
  auto ct = we_encrypt(v, QuantumState::basis(2, 1), plain);
  EXPECT_THROW(we_decrypt(ct, QuantumState::zero(3)), DimensionError);
  EXPECT_THROW(we_encrypt(v, QuantumState::zero(kMaxWitnessPayloadQubits + 1), plain), CapacityError);
  EXPECT_THROW(make_yes_instance(kMaxWitnessPayloadQubits + 1, rng), CapacityError);
}
