#include "qlab/sim/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qlab/sim/errors.hpp"

namespace qlab {
namespace {

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

bool is_named_gate(const std::string& name) {
  static const std::vector<std::string> kNames = {"i", "x", "y", "z", "h", "s", "sdg", "t", "tdg", "swap"};
  return std::find(kNames.begin(), kNames.end(), name) != kNames.end();
}

Matrix named_gate_matrix(const std::string& name) {
  using namespace std::complex_literals;
  const double r = 1.0 / std::numbers::sqrt2;
  if (name == "i") return Matrix::Identity(2, 2);
  if (name == "x") return mat2(0, 1, 1, 0);
  if (name == "y") return mat2(0, -1i, 1i, 0);
  if (name == "z") return mat2(1, 0, 0, -1);
  if (name == "h") return mat2(r, r, r, -r);
  if (name == "s") return mat2(1, 0, 0, 1i);
  if (name == "sdg") return mat2(1, 0, 0, -1i);
  if (name == "t") return mat2(1, 0, 0, std::polar(1.0, std::numbers::pi / 4));
  if (name == "tdg") return mat2(1, 0, 0, std::polar(1.0, -std::numbers::pi / 4));
  if (name == "swap") {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
    return m;
  }
  throw std::invalid_argument("unknown gate name: " + name);
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return ((m.adjoint() * m) - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

Gate Gate::named(const std::string& name, std::vector<int> targets, std::vector<int> controls,
                 std::vector<std::uint8_t> values) {
  Gate g;
  g.kind = GateKind::Unitary;
  g.name = name;
  g.matrix = named_gate_matrix(name);
  if (g.matrix.rows() != (Eigen::Index{1} << targets.size())) {
    throw DimensionError("gate " + name + " has wrong number of targets");
  }
  g.targets = std::move(targets);
  if (values.empty()) values.assign(controls.size(), 1);
  if (values.size() != controls.size()) throw DimensionError("control values length mismatch");
  g.controls = std::move(controls);
  g.control_values = std::move(values);
  return g;
}

Gate Gate::custom(Matrix matrix, std::vector<int> targets, std::string name) {
  if (matrix.rows() != (Eigen::Index{1} << targets.size()) || matrix.cols() != matrix.rows()) {
    throw DimensionError("custom gate matrix does not match target count");
  }
  if (!is_unitary(matrix)) throw std::invalid_argument("custom gate matrix is not unitary");
  Gate g;
  g.kind = GateKind::Unitary;
  g.name = std::move(name);
  g.matrix = std::move(matrix);
  g.targets = std::move(targets);
  return g;
}

Gate Gate::measure(int qubit) {
  Gate g;
  g.kind = GateKind::Measure;
  g.name = "measure";
  g.targets = {qubit};
  return g;
}

Gate Gate::discard(int qubit) {
  Gate g;
  g.kind = GateKind::Discard;
  g.name = "discard";
  g.targets = {qubit};
  return g;
}

Gate Gate::with_controls(const std::vector<int>& qubits, const std::vector<std::uint8_t>& values) const {
  if (qubits.size() != values.size()) throw DimensionError("control values length mismatch");
  if (kind == GateKind::Discard && !qubits.empty()) {
    throw std::invalid_argument("discard gates cannot be controlled");
  }
  Gate g = *this;
  g.controls.insert(g.controls.begin(), qubits.begin(), qubits.end());
  g.control_values.insert(g.control_values.begin(), values.begin(), values.end());
  return g;
}

Gate Gate::remapped(const std::vector<int>& mapping) const {
  Gate g = *this;
  for (auto& t : g.targets) t = mapping.at(static_cast<std::size_t>(t));
  for (auto& c : g.controls) c = mapping.at(static_cast<std::size_t>(c));
  return g;
}

Gate Gate::adjoint() const {
  if (kind != GateKind::Unitary) throw std::logic_error("only unitary gates have an adjoint");
  Gate g = *this;
  g.matrix = matrix.adjoint();
  if (name == "s") g.name = "sdg";
  else if (name == "sdg") g.name = "s";
  else if (name == "t") g.name = "tdg";
  else if (name == "tdg") g.name = "t";
  return g;
}

bool Gate::is_permutation() const {
  if (kind != GateKind::Unitary) return false;
  for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
    int ones = 0;
    for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
      const Complex v = matrix(r, c);
      if (std::abs(v - Complex(1.0)) < 1e-12) {
        ++ones;
      } else if (std::abs(v) > 1e-12) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return true;
}

int Gate::max_qubit() const {
  int m = -1;
  for (int t : targets) m = std::max(m, t);
  for (int c : controls) m = std::max(m, c);
  return m;
}

bool Gate::same_as(const Gate& other, double tol) const {
  if (kind != other.kind || name != other.name || targets != other.targets ||
      controls != other.controls || control_values != other.control_values) {
    return false;
  }
  if (kind != GateKind::Unitary) return true;
  if (matrix.rows() != other.matrix.rows()) return false;
  return (matrix - other.matrix).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace qlab
