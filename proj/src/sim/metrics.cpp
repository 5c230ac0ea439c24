#include "qlab/sim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qlab/sim/errors.hpp"
#include "qlab/sim/pauli.hpp"
#include "qlab/sim/simulator.hpp"

namespace qlab {

namespace {

Matrix psd_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

void require_same_size(const QuantumState& a, const QuantumState& b) {
  if (a.num_qubits() != b.num_qubits()) throw DimensionError("states have different qubit counts");
}

}  // namespace

double trace_distance(const QuantumState& a, const QuantumState& b) {
  require_same_size(a, b);
  if (a.is_pure() && b.is_pure()) {
    // 1 - |<a|b>|^2 via the phase-aligned difference, which stays accurate
    // for nearly equal states where the direct subtraction cancels.
    const Complex o = a.amplitudes().dot(b.amplitudes());
    const double mag = std::abs(o);
    const Complex align = mag > 0 ? std::conj(o) / mag : Complex(1.0);
    const double gap = 0.5 * (a.amplitudes() - align * b.amplitudes()).squaredNorm();
    return std::clamp(std::sqrt(std::max(0.0, gap * (1.0 + mag))), 0.0, 1.0);
  }
  const Matrix diff = a.density() - b.density();
  Eigen::SelfAdjointEigenSolver<Matrix> es(diff, Eigen::EigenvaluesOnly);
  return std::clamp(0.5 * es.eigenvalues().cwiseAbs().sum(), 0.0, 1.0);
}

double fidelity(const QuantumState& a, const QuantumState& b) {
  require_same_size(a, b);
  if (a.is_pure() && b.is_pure()) return std::norm(a.amplitudes().dot(b.amplitudes()));
  if (a.is_pure()) return std::clamp((a.amplitudes().adjoint() * b.density() * a.amplitudes())(0, 0).real(), 0.0, 1.0);
  if (b.is_pure()) return fidelity(b, a);
  const Matrix sa = psd_sqrt(a.density());
  const Matrix inner = sa * b.density() * sa;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (inner + inner.adjoint()), Eigen::EigenvaluesOnly);
  const double root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::clamp(root * root, 0.0, 1.0);
}

double phase_invariant_distance(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) throw DimensionError("unitaries have different sizes");
  const Matrix w = v.adjoint() * u;
  Eigen::ComplexEigenSolver<Matrix> es(w, false);
  std::vector<double> phases;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) phases.push_back(std::arg(es.eigenvalues()(i)));
  std::sort(phases.begin(), phases.end());
  // Smallest arc of the circle holding every eigenphase; the best alpha sits
  // at its midpoint.
  double max_gap = phases.front() + 2.0 * std::numbers::pi - phases.back();
  for (std::size_t i = 1; i < phases.size(); ++i) max_gap = std::max(max_gap, phases[i] - phases[i - 1]);
  const double arc = 2.0 * std::numbers::pi - max_gap;
  return 2.0 * std::sin(std::max(0.0, arc) / 4.0);
}

double phase_invariant_distance(const QuantumCircuit& u, const QuantumCircuit& v) {
  if (!u.is_unitary() || !v.is_unitary()) throw std::invalid_argument("circuit contains measurement or discard");
  if (u.arity() != v.arity()) throw DimensionError("circuits have different arity");
  return phase_invariant_distance(circuit_unitary(u), circuit_unitary(v));
}

QuantumState run_with_reference(const QuantumCircuit& c, const QuantumState& input) {
  const int n = c.arity();
  const int r = input.num_qubits() - n;
  if (r < 0) throw DimensionError("input smaller than circuit arity");
  QuantumCircuit ext(n + r, c.ancillas());
  std::vector<int> mapping(static_cast<std::size_t>(c.width()));
  for (int q = 0; q < c.width(); ++q) mapping[static_cast<std::size_t>(q)] = q < n ? q : q + r;
  ext.append(c, mapping);
  std::vector<int> outs;
  for (int q : c.outputs()) outs.push_back(mapping[static_cast<std::size_t>(q)]);
  for (int q = n; q < n + r; ++q) outs.push_back(q);
  ext.set_outputs(outs);
  return run_circuit(ext, input);
}

QuantumState maximally_entangled(int n) {
  const auto d = Eigen::Index{1} << n;
  Vector v = Vector::Zero(d * d);
  for (Eigen::Index i = 0; i < d; ++i) v(i * d + i) = 1.0;
  v /= std::sqrt(static_cast<double>(d));
  return QuantumState::pure_unchecked(std::move(v));
}

ChannelDistance channel_distance_estimate(const QuantumCircuit& c, const QuantumCircuit& d, int random_probes,
                                          std::uint64_t seed) {
  if (c.arity() != d.arity()) throw DimensionError("channels have different input arity");
  if (c.outputs().size() != d.outputs().size()) throw DimensionError("channels have different output arity");
  const int n = c.arity();
  ChannelDistance out;
  const auto choi = maximally_entangled(n);
  out.lower = trace_distance(run_with_reference(c, choi), run_with_reference(d, choi));
  out.estimate = out.lower;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    const auto probe = QuantumState::basis(n, i);
    out.estimate = std::max(out.estimate, trace_distance(run_circuit(c, probe), run_circuit(d, probe)));
  }
  Rng rng(seed);
  for (int k = 0; k < random_probes; ++k) {
    const auto probe = sample_random_state(2 * n, rng);
    out.estimate = std::max(out.estimate, trace_distance(run_with_reference(c, probe), run_with_reference(d, probe)));
  }
  return out;
}

}  // namespace qlab
