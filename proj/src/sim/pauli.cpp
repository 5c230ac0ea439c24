#include "qlab/sim/pauli.hpp"

#include <random>

#include "qlab/sim/errors.hpp"
#include "qlab/sim/simulator.hpp"

namespace qlab {

PauliString::PauliString(BitString bits) : bits_(std::move(bits)) {
  if (bits_.size() % 2 != 0) throw DimensionError("Pauli string needs an even number of bits");
}

PauliString PauliString::identity(int num_qubits) {
  return PauliString(BitString(2 * static_cast<std::size_t>(num_qubits)));
}

PauliString PauliString::random(int num_qubits, Rng& rng) {
  return PauliString(BitString::random(2 * static_cast<std::size_t>(num_qubits), rng));
}

PauliString PauliString::from_index(int num_qubits, std::uint64_t index) {
  return PauliString(BitString::from_uint(index, 2 * static_cast<std::size_t>(num_qubits)));
}

Matrix PauliString::as_unitary() const {
  Matrix u = Matrix::Identity(1, 1);
  const Matrix x_m = named_gate_matrix("x");
  const Matrix z_m = named_gate_matrix("z");
  for (int q = 0; q < num_qubits(); ++q) {
    Matrix local = Matrix::Identity(2, 2);
    if (x(q)) local = local * x_m;
    if (z(q)) local = local * z_m;
    Matrix next(u.rows() * 2, u.cols() * 2);
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
      for (Eigen::Index j = 0; j < u.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = u(i, j) * local;
    }
    u = std::move(next);
  }
  return u;
}

void append_pauli(QuantumCircuit& circuit, const PauliString& r, const std::vector<int>& qubits, bool adjoint,
                  const std::vector<int>& controls, const std::vector<std::uint8_t>& values) {
  if (static_cast<int>(qubits.size()) != r.num_qubits()) throw DimensionError("Pauli string length mismatch");
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    const int q = static_cast<int>(i);
    // X^x Z^z acts as Z first; its adjoint Z^z X^x acts as X first.
    if (!adjoint) {
      if (r.z(q)) circuit.add(Gate::named("z", {qubits[i]}, controls, values));
      if (r.x(q)) circuit.add(Gate::named("x", {qubits[i]}, controls, values));
    } else {
      if (r.x(q)) circuit.add(Gate::named("x", {qubits[i]}, controls, values));
      if (r.z(q)) circuit.add(Gate::named("z", {qubits[i]}, controls, values));
    }
  }
}

QuantumState pauli_apply(const PauliString& r, const QuantumState& state, bool adjoint) {
  if (r.num_qubits() != state.num_qubits()) throw DimensionError("Pauli string length mismatch");
  QuantumCircuit c(state.num_qubits());
  std::vector<int> qubits(static_cast<std::size_t>(state.num_qubits()));
  for (int q = 0; q < state.num_qubits(); ++q) qubits[static_cast<std::size_t>(q)] = q;
  append_pauli(c, r, qubits, adjoint);
  return run_circuit(c, state);
}

namespace {

Matrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = g(rng);
      const double im = g(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

void check_pure_limit(int n) {
  if (n < 0 || n > kMaxPureQubits) throw CapacityError("qubit count exceeds the pure-state limit");
}

}  // namespace

QuantumState sample_random_state(int num_qubits, Rng& rng) {
  check_pure_limit(num_qubits);
  Vector v = ginibre(Eigen::Index{1} << num_qubits, 1, rng).col(0);
  v /= v.norm();
  return QuantumState::pure_unchecked(std::move(v));
}

QuantumState sample_random_state(int num_qubits, std::uint64_t seed) {
  Rng rng(seed);
  return sample_random_state(num_qubits, rng);
}

QuantumState sample_random_mixed_state(int num_qubits, int rank, Rng& rng) {
  if (num_qubits > kMaxMixedQubits) throw CapacityError("qubit count exceeds the mixed-state limit");
  const Matrix g = ginibre(Eigen::Index{1} << num_qubits, rank, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return QuantumState::mixed_unchecked(std::move(rho));
}

Matrix sample_haar_unitary(int num_qubits, Rng& rng) {
  if (num_qubits > kMaxMixedQubits) throw CapacityError("qubit count exceeds the unitary limit");
  const auto d = Eigen::Index{1} << num_qubits;
  const Matrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < d; ++i) {
    const Complex diag = r(i, i);
    if (std::abs(diag) > 0) q.col(i) *= diag / std::abs(diag);
  }
  return q;
}

Matrix unitary_with_first_column(const Vector& column) {
  const auto d = column.size();
  Matrix seed = Matrix::Identity(d, d);
  seed.col(0) = column;
  Eigen::HouseholderQR<Matrix> qr(seed);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  // Q's first column equals the input up to a phase; rotate it back.
  const Complex phase = q.col(0).dot(column);
  q.col(0) *= phase / std::abs(phase);
  return q;
}

}  // namespace qlab
