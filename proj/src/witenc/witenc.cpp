#include "qlab/witenc/witenc.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "qlab/enc/circuits.hpp"
#include "qlab/sim/errors.hpp"
#include "qlab/sim/pauli.hpp"
#include "qlab/sim/simulator.hpp"

namespace qlab {

namespace {

std::string instance_name(const char* prefix, Rng& rng) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s-%08llx", prefix, static_cast<unsigned long long>(rng() & 0xffffffffULL));
  return buf;
}

void check_width(int n) {
  if (n < 1) throw DimensionError("witness needs at least one qubit");
  if (n > kMaxWitnessPayloadQubits) throw CapacityError("witness register too wide");
}

/// |purification> on (payload, reference), reference index least significant.
Vector purification(const QuantumState& rho) {
  const auto d = static_cast<Eigen::Index>(rho.dim());
  Vector out = Vector::Zero(d * d);
  if (rho.is_pure()) {
    for (Eigen::Index i = 0; i < d; ++i) out(i * d) = rho.amplitudes()(i);
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(rho.density());
  for (Eigen::Index k = 0; k < d; ++k) {
    const double w = std::max(0.0, eig.eigenvalues()(k));
    for (Eigen::Index i = 0; i < d; ++i) out(i * d + k) = std::sqrt(w) * eig.eigenvectors()(i, k);
  }
  return out / out.norm();
}

}  // namespace

ToyVerifier make_yes_instance(int n, Rng& rng) {
  check_width(n);
  const Matrix prep = sample_haar_unitary(n, rng);
  ToyVerifier v;
  v.instance_id = instance_name("yes", rng);
  v.kind = InstanceKind::Yes;
  v.witness_qubits = n;
  v.circuit = QuantumCircuit(n, 1);
  v.circuit.unitary(prep.adjoint(), qubit_range(0, n), "unprep");
  v.circuit.mcx(qubit_range(0, n), std::vector<std::uint8_t>(n, 0), n);
  v.circuit.set_outputs(qubit_range(0, n + 1));
  v.witness = QuantumState::pure(prep.col(0));
  return v;
}

ToyVerifier make_no_instance(int n, Rng& rng) {
  check_width(n);
  const double theta = std::asin(std::sqrt(std::ldexp(1.0, -(n + 1))));
  Matrix tilt(2, 2);
  tilt << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  ToyVerifier v;
  v.instance_id = instance_name("no", rng);
  v.kind = InstanceKind::No;
  v.witness_qubits = n;
  v.circuit = QuantumCircuit(n, 1);
  v.circuit.unitary(sample_haar_unitary(n, rng), qubit_range(0, n), "mix");
  v.circuit.add(Gate::custom(tilt, {n}, "tilt").with_controls(qubit_range(0, n), std::vector<std::uint8_t>(n, 0)));
  v.circuit.set_outputs(qubit_range(0, n + 1));
  return v;
}

double accept_probability(const ToyVerifier& v, const QuantumState& witness) {
  const int n = v.witness_qubits;
  if (witness.num_qubits() != n) throw DimensionError("witness arity mismatch");
  const auto out = run_circuit(v.circuit, witness);
  return project(out, {n}, BitString::from_string("1")).probability;
}

QuantumCircuit witness_lock_circuit(const ToyVerifier& v, const QuantumState& payload) {
  const int n = v.witness_qubits;
  const int m = payload.num_qubits();
  if (m < 1 || m > kMaxWitnessPayloadQubits) throw CapacityError("payload outside the supported width");
  const int accept = n, out = n + 1, fresh = n + 1 + m;
  QuantumCircuit c(n, 1 + 3 * m);
  std::vector<int> mapping(n + 1);
  std::iota(mapping.begin(), mapping.end(), 0);
  c.append(v.circuit, mapping);
  std::vector<int> pair = qubit_range(fresh, 2 * m);
  c.unitary(unitary_with_first_column(purification(payload)), pair, "payload");
  for (int i = 0; i < m; ++i) c.add(Gate::named("swap", {out + i, fresh + i}, {accept}, {1}));
  c.set_outputs(qubit_range(out, m));
  return c;
}

ObfuscatedProgram we_encrypt(const ToyVerifier& v, const QuantumState& payload, const Obfuscator& obf,
                             const BitString& randomness) {
  return obf.obfuscate(witness_lock_circuit(v, payload), randomness);
}

QuantumState we_decrypt(ObfuscatedProgram& ct, const QuantumState& witness) {
  if (witness.num_qubits() != ct.arity) throw DimensionError("witness arity mismatch");
  return interpret(ct, witness);
}

}  // namespace qlab
