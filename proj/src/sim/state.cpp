#include "qlab/sim/state.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qlab/sim/errors.hpp"

namespace qlab {

int qubits_for_dimension(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw DimensionError("dimension " + std::to_string(dim) + " is not a power of two");
  }
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

QuantumState QuantumState::pure(Vector amplitudes, double tol) {
  QuantumState s = pure_unchecked(std::move(amplitudes));
  s.validate(tol);
  return s;
}

QuantumState QuantumState::mixed(Matrix density, double tol) {
  QuantumState s = mixed_unchecked(std::move(density));
  s.validate(tol);
  return s;
}

QuantumState QuantumState::pure_unchecked(Vector amplitudes) {
  const int n = qubits_for_dimension(static_cast<std::size_t>(amplitudes.size()));
  if (n > kMaxPureQubits) throw CapacityError("pure state exceeds qubit ceiling");
  return QuantumState(n, std::move(amplitudes));
}

QuantumState QuantumState::mixed_unchecked(Matrix density) {
  if (density.rows() != density.cols()) throw DimensionError("density matrix must be square");
  const int n = qubits_for_dimension(static_cast<std::size_t>(density.rows()));
  if (n > kMaxMixedQubits) throw CapacityError("mixed state exceeds qubit ceiling");
  return QuantumState(n, std::move(density));
}

QuantumState QuantumState::basis(int num_qubits, std::uint64_t index) {
  if (num_qubits > kMaxPureQubits) throw CapacityError("pure state exceeds qubit ceiling");
  Vector v = Vector::Zero(Eigen::Index{1} << num_qubits);
  if (index >= static_cast<std::uint64_t>(v.size())) throw std::out_of_range("basis index");
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return QuantumState(num_qubits, std::move(v));
}

QuantumState QuantumState::basis(const BitString& bits) {
  return basis(static_cast<int>(bits.size()), bits.to_uint());
}

QuantumState QuantumState::maximally_mixed(int num_qubits) {
  const auto d = Eigen::Index{1} << num_qubits;
  return mixed_unchecked(Matrix::Identity(d, d) / static_cast<double>(d));
}

const Vector& QuantumState::amplitudes() const {
  if (!is_pure()) throw std::logic_error("amplitudes() requires a pure state");
  return std::get<Vector>(data_);
}

Matrix QuantumState::density() const {
  if (is_pure()) {
    const auto& v = std::get<Vector>(data_);
    return v * v.adjoint();
  }
  return std::get<Matrix>(data_);
}

QuantumState QuantumState::to_mixed() const {
  if (!is_pure()) return *this;
  return mixed_unchecked(density());
}

Eigen::VectorXd QuantumState::probabilities() const {
  if (is_pure()) return std::get<Vector>(data_).cwiseAbs2();
  return std::get<Matrix>(data_).diagonal().real();
}

QuantumState QuantumState::tensor(const QuantumState& other) const {
  if (is_pure() && other.is_pure()) {
    const auto& a = amplitudes();
    const auto& b = other.amplitudes();
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return pure_unchecked(std::move(out));
  }
  Matrix a = density();
  Matrix b = other.density();
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return mixed_unchecked(std::move(out));
}

void QuantumState::validate(double tol) const {
  if (is_pure()) {
    const double norm = std::get<Vector>(data_).norm();
    if (std::abs(norm - 1.0) > tol) throw std::invalid_argument("pure state is not normalized");
    return;
  }
  const auto& m = std::get<Matrix>(data_);
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(m.trace().real() - 1.0) > tol || std::abs(m.trace().imag()) > tol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
}

}  // namespace qlab
