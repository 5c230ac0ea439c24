#include "qlab/sim/simulator.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <stdexcept>

#include "kernels.hpp"
#include "qlab/sim/errors.hpp"

namespace qlab {
namespace {

using detail::bit_of;
using detail::SparseAmps;

constexpr int kSparseThreshold = 14;

/// Index helpers for gathering a subset of qubits out of a full index.
struct QubitSubset {
  std::vector<std::uint64_t> bits;  // register bit of each listed qubit

  QubitSubset(const std::vector<int>& qubits, int total) {
    for (int q : qubits) bits.push_back(bit_of(q, total));
  }
  std::uint64_t gather(std::uint64_t idx) const {
    std::uint64_t v = 0;
    for (auto b : bits) v = (v << 1) | ((idx & b) ? 1U : 0U);
    return v;
  }
  std::uint64_t scatter(std::uint64_t value) const {
    std::uint64_t idx = 0;
    const std::size_t k = bits.size();
    for (std::size_t i = 0; i < k; ++i) {
      if ((value >> (k - 1 - i)) & 1U) idx |= bits[i];
    }
    return idx;
  }
  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (auto b : bits) m |= b;
    return m;
  }
};

std::vector<int> complement(const std::vector<int>& keep, int total) {
  std::vector<bool> kept(static_cast<std::size_t>(total), false);
  for (int q : keep) {
    if (q < 0 || q >= total) throw std::out_of_range("qubit index out of range");
    if (kept[static_cast<std::size_t>(q)]) throw std::invalid_argument("duplicate qubit index");
    kept[static_cast<std::size_t>(q)] = true;
  }
  std::vector<int> rest;
  for (int q = 0; q < total; ++q) {
    if (!kept[static_cast<std::size_t>(q)]) rest.push_back(q);
  }
  return rest;
}

/// Output register of a pure simulation given its nonzero amplitudes.
QuantumState reduce_pure(const std::vector<std::pair<std::uint64_t, Complex>>& entries, int total,
                         const std::vector<int>& outputs) {
  const QubitSubset out(outputs, total);
  const QubitSubset rest(complement(outputs, total), total);
  std::map<std::uint64_t, Vector> groups;
  const auto dim = Eigen::Index{1} << outputs.size();
  for (const auto& [idx, amp] : entries) {
    auto [it, inserted] = groups.try_emplace(rest.gather(idx));
    if (inserted) it->second = Vector::Zero(dim);
    it->second(static_cast<Eigen::Index>(out.gather(idx))) += amp;
  }
  for (auto it = groups.begin(); it != groups.end();) {
    it = it->second.squaredNorm() < 1e-24 ? groups.erase(it) : std::next(it);
  }
  if (groups.size() == 1) {
    Vector v = groups.begin()->second;
    v /= v.norm();
    return QuantumState::pure_unchecked(std::move(v));
  }
  if (static_cast<int>(outputs.size()) > kMaxMixedQubits) {
    throw CapacityError("entangled output register too large for a density operator");
  }
  Matrix rho = Matrix::Zero(dim, dim);
  for (const auto& [key, v] : groups) rho.noalias() += v * v.adjoint();
  rho /= rho.trace().real();
  return QuantumState::mixed_unchecked(std::move(rho));
}

class Engine {
 public:
  enum class Repr { Dense, Sparse, Density };

  Engine(const QuantumState& input, int width, bool want_mixed) : width_(width) {
    const int anc = width - input.num_qubits();
    if (input.is_pure() && !want_mixed) {
      const auto& a = input.amplitudes();
      if (width >= kSparseThreshold) {
        repr_ = Repr::Sparse;
        for (Eigen::Index i = 0; i < a.size(); ++i) {
          if (a(i) != Complex(0.0)) sparse_[static_cast<std::uint64_t>(i) << anc] = a(i);
        }
      } else {
        repr_ = Repr::Dense;
        dense_ = Vector::Zero(Eigen::Index{1} << width);
        for (Eigen::Index i = 0; i < a.size(); ++i) dense_(i << anc) = a(i);
      }
      return;
    }
    if (width > kMaxMixedQubits) throw CapacityError("circuit too wide for density-operator simulation");
    repr_ = Repr::Density;
    const Matrix in = input.density();
    const auto d = Eigen::Index{1} << width;
    rho_ = Matrix::Zero(d, d);
    for (Eigen::Index r = 0; r < in.rows(); ++r) {
      for (Eigen::Index c = 0; c < in.cols(); ++c) rho_(r << anc, c << anc) = in(r, c);
    }
  }

  void apply(const Gate& g, Rng* rng) {
    if (g.kind != GateKind::Unitary && repr_ != Repr::Density && rng == nullptr && !deterministic(g)) {
      to_density();
    }
    switch (g.kind) {
      case GateKind::Unitary:
        apply_unitary(g);
        break;
      case GateKind::Measure:
        if (repr_ == Repr::Density) {
          dephase(g);
        } else {
          sample_measure(g, rng);
        }
        break;
      case GateKind::Discard:
        if (repr_ == Repr::Density) {
          reset_density(g.targets[0]);
        } else {
          Gate m = Gate::measure(g.targets[0]);
          if (sample_measure(m, rng) == 1) apply_unitary(Gate::named("x", {g.targets[0]}));
        }
        break;
    }
  }

  QuantumState output(const std::vector<int>& outputs) const {
    if (repr_ == Repr::Density) {
      return partial_trace(QuantumState::mixed_unchecked(rho_), outputs);
    }
    std::vector<std::pair<std::uint64_t, Complex>> entries;
    if (repr_ == Repr::Sparse) {
      entries.assign(sparse_.begin(), sparse_.end());
      std::sort(entries.begin(), entries.end(), [](auto& a, auto& b) { return a.first < b.first; });
    } else {
      for (Eigen::Index i = 0; i < dense_.size(); ++i) {
        if (dense_(i) != Complex(0.0)) entries.emplace_back(static_cast<std::uint64_t>(i), dense_(i));
      }
    }
    return reduce_pure(entries, width_, outputs);
  }

 private:
  void apply_unitary(const Gate& g) {
    switch (repr_) {
      case Repr::Dense:
        detail::apply_dense(dense_.data(), width_, detail::make_plan(g, width_), g.matrix);
        break;
      case Repr::Sparse:
        detail::apply_sparse(sparse_, detail::make_plan(g, width_), g.matrix);
        break;
      case Repr::Density: {
        // Column-major storage read as a 2w-qubit vector: column qubits first.
        const int total = 2 * width_;
        detail::apply_dense(rho_.data(), total, detail::make_plan(g, total, width_), g.matrix);
        const Matrix conj = g.matrix.conjugate();
        detail::apply_dense(rho_.data(), total, detail::make_plan(g, total, 0), conj);
        break;
      }
    }
  }

  bool controls_hold(const Gate& g, std::uint64_t idx) const {
    for (std::size_t i = 0; i < g.controls.size(); ++i) {
      const bool bit = (idx & bit_of(g.controls[i], width_)) != 0;
      if (bit != (g.control_values[i] != 0)) return false;
    }
    return true;
  }

  void dephase(const Gate& g) {
    const auto tb = bit_of(g.targets[0], width_);
    const auto d = rho_.rows();
    for (Eigen::Index c = 0; c < d; ++c) {
      const bool cc = controls_hold(g, static_cast<std::uint64_t>(c));
      for (Eigen::Index r = 0; r < d; ++r) {
        const bool rc = controls_hold(g, static_cast<std::uint64_t>(r));
        bool keep;
        if (rc && cc) {
          keep = ((static_cast<std::uint64_t>(r) ^ static_cast<std::uint64_t>(c)) & tb) == 0;
        } else {
          keep = !rc && !cc;
        }
        if (!keep) rho_(r, c) = 0.0;
      }
    }
  }

  void reset_density(int q) {
    const auto b = static_cast<Eigen::Index>(bit_of(q, width_));
    const auto d = rho_.rows();
    Matrix out = Matrix::Zero(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
      if (c & b) continue;
      for (Eigen::Index r = 0; r < d; ++r) {
        if (r & b) continue;
        out(r, c) = rho_(r, c) + rho_(r | b, c | b);
      }
    }
    rho_ = std::move(out);
  }

  /// Outcome probabilities {0, 1, control not satisfied} of a measurement.
  std::array<double, 3> outcome_weights(const Gate& g) {
    const auto tb = bit_of(g.targets[0], width_);
    std::array<double, 3> p{0.0, 0.0, 0.0};
    for_each_amp([&](std::uint64_t idx, Complex& a) { p[classify(g, tb, idx)] += std::norm(a); });
    return p;
  }

  /// A measurement with a single possible outcome needs no branching.
  bool deterministic(const Gate& g) {
    const auto p = outcome_weights(g);
    const double total = p[0] + p[1] + p[2];
    return *std::max_element(p.begin(), p.end()) >= total * (1.0 - 1e-12);
  }

  void to_density() {
    if (width_ > kMaxMixedQubits) {
      throw CapacityError("branching measurement on a register too wide for density-operator simulation");
    }
    Vector v;
    if (repr_ == Repr::Sparse) {
      v = Vector::Zero(Eigen::Index{1} << width_);
      for (const auto& [idx, amp] : sparse_) v(static_cast<Eigen::Index>(idx)) = amp;
      sparse_.clear();
    } else {
      v = std::move(dense_);
    }
    rho_ = v * v.adjoint();
    repr_ = Repr::Density;
  }

  int classify(const Gate& g, std::uint64_t tb, std::uint64_t idx) const {
    if (!controls_hold(g, idx)) return 2;
    return (idx & tb) ? 1 : 0;
  }

  template <typename Fn>
  void for_each_amp(Fn&& fn) {
    if (repr_ == Repr::Sparse) {
      for (auto& [idx, amp] : sparse_) fn(idx, amp);
    } else {
      for (Eigen::Index i = 0; i < dense_.size(); ++i) fn(static_cast<std::uint64_t>(i), dense_(i));
    }
  }

  /// Returns 0/1 for the measured outcome, or -1 when the state landed
  /// outside the controlled subspace.
  int sample_measure(const Gate& g, Rng* rng) {
    const auto tb = bit_of(g.targets[0], width_);
    const auto p = outcome_weights(g);
    int outcome;
    if (rng == nullptr) {
      outcome = static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin());
    } else {
      std::uniform_real_distribution<double> u(0.0, p[0] + p[1] + p[2]);
      const double draw = u(*rng);
      outcome = draw < p[0] ? 0 : (draw < p[0] + p[1] ? 1 : 2);
    }
    const double scale = 1.0 / std::sqrt(p[static_cast<std::size_t>(outcome)]);
    for_each_amp([&](std::uint64_t idx, Complex& a) {
      a = classify(g, tb, idx) == outcome ? a * scale : Complex(0.0);
    });
    if (repr_ == Repr::Sparse) {
      for (auto it = sparse_.begin(); it != sparse_.end();) {
        it = it->second == Complex(0.0) ? sparse_.erase(it) : std::next(it);
      }
    }
    return outcome == 2 ? -1 : outcome;
  }

  int width_;
  Repr repr_ = Repr::Dense;
  Vector dense_;
  SparseAmps sparse_;
  Matrix rho_;
};

}  // namespace

QuantumState run_circuit(const QuantumCircuit& circuit, const QuantumState& input, Rng* rng) {
  if (input.num_qubits() != circuit.arity()) {
    throw DimensionError("run_circuit: input has " + std::to_string(input.num_qubits()) +
                         " qubits, circuit arity is " + std::to_string(circuit.arity()));
  }
  Engine engine(input, circuit.width(), !input.is_pure());
  for (const auto& g : circuit.gates()) engine.apply(g, rng);
  return engine.output(circuit.outputs());
}

QuantumState partial_trace(const QuantumState& state, const std::vector<int>& keep) {
  const int n = state.num_qubits();
  const auto traced = complement(keep, n);
  if (traced.empty()) return permute_qubits(state, keep);
  const QubitSubset k(keep, n);
  const QubitSubset t(traced, n);
  const auto dk = Eigen::Index{1} << keep.size();
  const auto dt = std::uint64_t{1} << traced.size();
  std::vector<std::uint64_t> sk(static_cast<std::size_t>(dk));
  for (Eigen::Index i = 0; i < dk; ++i) sk[static_cast<std::size_t>(i)] = k.scatter(static_cast<std::uint64_t>(i));
  Matrix out = Matrix::Zero(dk, dk);
  if (state.is_pure()) {
    const auto& a = state.amplitudes();
    Vector v(dk);
    for (std::uint64_t e = 0; e < dt; ++e) {
      const auto te = t.scatter(e);
      for (Eigen::Index i = 0; i < dk; ++i) v(i) = a(static_cast<Eigen::Index>(sk[static_cast<std::size_t>(i)] | te));
      out.noalias() += v * v.adjoint();
    }
  } else {
    const Matrix rho = state.density();
    for (std::uint64_t e = 0; e < dt; ++e) {
      const auto te = t.scatter(e);
      for (Eigen::Index j = 0; j < dk; ++j) {
        const auto cj = static_cast<Eigen::Index>(sk[static_cast<std::size_t>(j)] | te);
        for (Eigen::Index i = 0; i < dk; ++i) {
          out(i, j) += rho(static_cast<Eigen::Index>(sk[static_cast<std::size_t>(i)] | te), cj);
        }
      }
    }
  }
  return QuantumState::mixed_unchecked(std::move(out));
}

QuantumState permute_qubits(const QuantumState& state, const std::vector<int>& order) {
  const int n = state.num_qubits();
  if (static_cast<int>(order.size()) != n || !complement(order, n).empty()) {
    throw DimensionError("permute_qubits: order must list every qubit once");
  }
  const QubitSubset src(order, n);
  const auto d = static_cast<Eigen::Index>(state.dim());
  std::vector<Eigen::Index> map(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) map[static_cast<std::size_t>(i)] = static_cast<Eigen::Index>(src.scatter(static_cast<std::uint64_t>(i)));
  if (state.is_pure()) {
    const auto& a = state.amplitudes();
    Vector out(d);
    for (Eigen::Index i = 0; i < d; ++i) out(i) = a(map[static_cast<std::size_t>(i)]);
    return QuantumState::pure_unchecked(std::move(out));
  }
  const Matrix rho = state.density();
  Matrix out(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) out(i, j) = rho(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]);
  }
  return QuantumState::mixed_unchecked(std::move(out));
}

Matrix circuit_unitary(const QuantumCircuit& circuit) {
  if (!circuit.is_unitary()) throw std::invalid_argument("circuit contains measurement or discard");
  if (circuit.ancillas() != 0 || !circuit.outputs_are_inputs()) {
    throw std::invalid_argument("circuit_unitary requires no ancillas and identity outputs");
  }
  const int n = circuit.arity();
  const auto d = Eigen::Index{1} << n;
  Matrix u(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    Vector col = Vector::Zero(d);
    col(c) = 1.0;
    for (const auto& g : circuit.gates()) {
      detail::apply_dense(col.data(), n, detail::make_plan(g, n), g.matrix);
    }
    u.col(c) = col;
  }
  return u;
}

std::uint64_t run_basis(const QuantumCircuit& circuit, std::uint64_t input) {
  const int w = circuit.width();
  if (w > 64) throw CapacityError("run_basis supports at most 64 qubits");
  std::uint64_t state = input << circuit.ancillas();
  for (const auto& g : circuit.gates()) {
    if (g.kind == GateKind::Measure) continue;
    if (g.kind == GateKind::Discard) {
      state &= ~bit_of(g.targets[0], w);
      continue;
    }
    bool fire = true;
    for (std::size_t i = 0; i < g.controls.size() && fire; ++i) {
      fire = ((state & bit_of(g.controls[i], w)) != 0) == (g.control_values[i] != 0);
    }
    if (!fire) continue;
    const std::size_t k = g.targets.size();
    std::uint64_t pattern = 0;
    for (std::size_t t = 0; t < k; ++t) pattern = (pattern << 1) | ((state & bit_of(g.targets[t], w)) ? 1U : 0U);
    // Basis states must map to basis states; phases are dropped.
    Eigen::Index row = 0;
    for (; row < g.matrix.rows(); ++row) {
      if (std::abs(g.matrix(row, static_cast<Eigen::Index>(pattern))) > 1.0 - 1e-9) break;
    }
    if (row == g.matrix.rows()) throw std::invalid_argument("run_basis requires gates that permute basis states");
    for (std::size_t t = 0; t < k; ++t) {
      const auto b = bit_of(g.targets[t], w);
      if ((static_cast<std::uint64_t>(row) >> (k - 1 - t)) & 1U) state |= b;
      else state &= ~b;
    }
  }
  return QubitSubset(circuit.outputs(), w).gather(state);
}

Projection project(const QuantumState& state, const std::vector<int>& qubits, const BitString& values) {
  if (qubits.size() != values.size()) throw DimensionError("project: values length mismatch");
  const int n = state.num_qubits();
  complement(qubits, n);
  const QubitSubset sub(qubits, n);
  const auto want = values.to_uint();
  const auto d = static_cast<Eigen::Index>(state.dim());
  Projection out;
  if (state.is_pure()) {
    Vector v = state.amplitudes();
    for (Eigen::Index i = 0; i < d; ++i) {
      if (sub.gather(static_cast<std::uint64_t>(i)) != want) v(i) = 0.0;
    }
    out.probability = v.squaredNorm();
    if (out.probability > 0.0) out.state = QuantumState::pure_unchecked(v / std::sqrt(out.probability));
    return out;
  }
  Matrix rho = state.density();
  for (Eigen::Index j = 0; j < d; ++j) {
    const bool jm = sub.gather(static_cast<std::uint64_t>(j)) == want;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (!jm || sub.gather(static_cast<std::uint64_t>(i)) != want) rho(i, j) = 0.0;
    }
  }
  out.probability = rho.trace().real();
  if (out.probability > 0.0) out.state = QuantumState::mixed_unchecked(rho / out.probability);
  return out;
}

std::optional<std::pair<BitString, QuantumState>> split_basis(const QuantumState& state,
                                                              const std::vector<int>& qubits, double tol) {
  const int n = state.num_qubits();
  const auto rest = complement(qubits, n);
  const QubitSubset sub(qubits, n);
  const auto probs = state.probabilities();
  std::vector<double> marginal(std::size_t{1} << qubits.size(), 0.0);
  for (Eigen::Index i = 0; i < probs.size(); ++i) marginal[sub.gather(static_cast<std::uint64_t>(i))] += probs(i);
  const auto best = static_cast<std::uint64_t>(std::max_element(marginal.begin(), marginal.end()) - marginal.begin());
  if (marginal[best] < 1.0 - tol) return std::nullopt;
  const BitString value = BitString::from_uint(best, qubits.size());
  if (rest.empty()) return std::make_pair(value, QuantumState::basis(0, 0));
  const QubitSubset r(rest, n);
  const auto fixed = sub.scatter(best);
  const auto dr = Eigen::Index{1} << rest.size();
  if (state.is_pure()) {
    const auto& a = state.amplitudes();
    Vector v(dr);
    for (Eigen::Index i = 0; i < dr; ++i) v(i) = a(static_cast<Eigen::Index>(fixed | r.scatter(static_cast<std::uint64_t>(i))));
    v /= v.norm();
    return std::make_pair(value, QuantumState::pure_unchecked(std::move(v)));
  }
  const Matrix rho = state.density();
  Matrix m(dr, dr);
  for (Eigen::Index j = 0; j < dr; ++j) {
    for (Eigen::Index i = 0; i < dr; ++i) {
      m(i, j) = rho(static_cast<Eigen::Index>(fixed | r.scatter(static_cast<std::uint64_t>(i))),
                    static_cast<Eigen::Index>(fixed | r.scatter(static_cast<std::uint64_t>(j))));
    }
  }
  m /= m.trace().real();
  return std::make_pair(value, QuantumState::mixed_unchecked(std::move(m)));
}

BitString sample_measurement(const QuantumState& state, const std::vector<int>& qubits, Rng& rng) {
  const int n = state.num_qubits();
  complement(qubits, n);
  const QubitSubset sub(qubits, n);
  const auto probs = state.probabilities();
  std::vector<double> marginal(std::size_t{1} << qubits.size(), 0.0);
  for (Eigen::Index i = 0; i < probs.size(); ++i) marginal[sub.gather(static_cast<std::uint64_t>(i))] += probs(i);
  std::discrete_distribution<std::uint64_t> dist(marginal.begin(), marginal.end());
  return BitString::from_uint(dist(rng), qubits.size());
}

std::optional<QuantumState> as_pure(const QuantumState& state, double tol) {
  if (state.is_pure()) return state;
  Eigen::SelfAdjointEigenSolver<Matrix> es(state.density());
  const auto top = es.eigenvalues().size() - 1;
  if (es.eigenvalues()(top) < 1.0 - tol) return std::nullopt;
  Vector v = es.eigenvectors().col(top);
  v /= v.norm();
  return QuantumState::pure_unchecked(std::move(v));
}

QuantumState reduce(const QuantumState& state, const std::vector<int>& keep, double tol) {
  auto r = partial_trace(state, keep);
  auto p = as_pure(r, tol);
  return p ? *p : r;
}

QuantumState apply_gate(const QuantumState& state, const Gate& gate) {
  QuantumCircuit c(state.num_qubits());
  c.add(gate);
  return run_circuit(c, state);
}

}  // namespace qlab
