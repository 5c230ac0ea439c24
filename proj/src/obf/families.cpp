#include "qlab/obf/families.hpp"

#include <stdexcept>

#include "qlab/prf/ggm.hpp"
#include "qlab/sim/errors.hpp"

namespace qlab {

namespace {

std::vector<std::uint8_t> bits_of(const BitString& s) {
  std::vector<std::uint8_t> v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v[i] = s[i] ? 1 : 0;
  return v;
}

BitString random_nonzero(std::size_t n, Rng& rng) {
  BitString s;
  do {
    s = BitString::random(n, rng);
  } while (s.is_zero());
  return s;
}

}  // namespace

QuantumCircuit make_point_circuit(const BitString& a, const BitString& b) {
  if (a.size() != b.size() || a.empty()) throw DimensionError("point circuit needs |a| = |b| > 0");
  const int n = static_cast<int>(a.size());
  QuantumCircuit c(2 * n);
  for (int j = 0; j < n; ++j) {
    if (b[static_cast<std::size_t>(j)]) c.mcx(qubit_range(0, n), bits_of(a), n + j);
  }
  return c;
}

QuantumCircuit make_point_circuit_bit(const BitString& a, bool b) {
  if (a.empty()) throw DimensionError("point circuit needs a non-empty point");
  const int n = static_cast<int>(a.size());
  QuantumCircuit c(n + 1);
  if (b) c.mcx(qubit_range(0, n), bits_of(a), n);
  return c;
}

QuantumCircuit make_checker_circuit(const BitString& a, const BitString& b, const Codebook& codebook,
                                    bool expose_work) {
  if (a.size() != b.size()) throw DimensionError("checker needs |a| = |b|");
  const int n = static_cast<int>(a.size());
  if (codebook.circuits.empty() || codebook.arity() != 2 * n) {
    throw DimensionError("checker codebook must hold 2n-qubit circuits");
  }
  const auto j = codebook.interpreter_circuit();
  if (!j.is_unitary()) throw std::invalid_argument("checker interpreter must be unitary");
  const int m = codebook.advice_qubits();
  const int out = m;
  const int work = m + 1;
  QuantumCircuit c(m + 1, 2 * n + j.ancillas());
  std::vector<int> mapping(static_cast<std::size_t>(j.width()));
  for (int q = 0; q < j.width(); ++q) mapping[static_cast<std::size_t>(q)] = q < m ? q : q + 1;
  append_xor_constant(c, a, qubit_range(work, n));
  c.append(j, mapping);
  c.mcx(qubit_range(work + n, n), bits_of(b), out);
  c.append(j.inverse(), mapping);
  auto outs = qubit_range(0, m + 1);
  if (expose_work) {
    const auto w = qubit_range(work, 2 * n);
    outs.insert(outs.end(), w.begin(), w.end());
  }
  c.set_outputs(outs);
  return c;
}

int FamilyLayout::gate_bits() const { return selector_bits(alphabet().size()); }

std::vector<Gate> FamilyLayout::alphabet() const {
  if (n <= 0 || slots < 2 || slots > 3) throw std::invalid_argument("family layout needs n > 0 and 2 or 3 slots");
  std::vector<Gate> out;
  out.push_back(Gate::named("i", {payload(0, 0)}));
  for (int s = 0; s < slots; ++s) {
    for (int i = 0; i < n; ++i) out.push_back(Gate::named("x", {payload(s, i)}));
  }
  const auto x_reg = payload_qubits(0);
  for (int jq = 0; jq < n; ++jq) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      out.push_back(Gate::named("x", {payload(1, jq)}, x_reg, value_bits(v, static_cast<std::size_t>(n))));
    }
  }
  if (slots == 3) {
    for (std::uint8_t adv = 0; adv < 2; ++adv) {
      for (int jq = 0; jq < n; ++jq) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
          auto ctl = x_reg;
          ctl.insert(ctl.begin(), payload(2, 0));
          auto val = value_bits(v, static_cast<std::size_t>(n));
          val.insert(val.begin(), adv);
          out.push_back(Gate::named("x", {payload(1, jq)}, ctl, val));
        }
      }
    }
  }
  return out;
}

std::optional<std::size_t> FamilyLayout::alphabet_index(const Gate& g) const {
  const auto alpha = alphabet();
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i].same_as(g)) return i;
  }
  return std::nullopt;
}

BitString hom_tag_shift(const BitString& key, std::uint64_t g, int slot, int n) {
  return prf_derive(key, static_cast<std::uint32_t>(g * 4 + static_cast<std::uint64_t>(slot)),
                    static_cast<std::size_t>(n));
}

HelperBranches make_helper_branches(const FamilySecret& secret, const FamilyLayout& layout) {
  const int n = layout.n;
  if (secret.a.size() != static_cast<std::size_t>(n) || secret.b.size() != static_cast<std::size_t>(n) ||
      secret.key.size() != static_cast<std::size_t>(n) || secret.r.size() != static_cast<std::size_t>(n)) {
    throw DimensionError("family secret lengths must equal n");
  }
  const auto pad = prf_pauli(secret.key, n);
  const int w = layout.width();
  const auto gate_reg = layout.gate_qubits();
  const auto gb = static_cast<std::size_t>(layout.gate_bits());
  HelperBranches out{QuantumCircuit(w), QuantumCircuit(w), QuantumCircuit(w)};

  auto& e = out.enc;
  append_xor_constant(e, secret.r, layout.tag_qubits(0));
  append_xor_constant(e, secret.a, layout.payload_qubits(0), gate_reg, value_bits(kEncFlagSecret, gb));
  append_tag_controlled_pauli(e, pad, layout.tag_qubits(0), layout.payload_qubits(0), false);

  auto& h = out.hom;
  for (int s = 0; s < layout.slots; ++s) {
    append_tag_controlled_pauli(h, pad, layout.tag_qubits(s), layout.payload_qubits(s), true);
  }
  const auto alpha = layout.alphabet();
  for (std::size_t g = 0; g < alpha.size(); ++g) {
    const auto ctl = value_bits(g, gb);
    if (g != 0) h.add(alpha[g].with_controls(gate_reg, ctl));
    for (int s = 0; s < layout.slots; ++s) {
      append_xor_constant(h, hom_tag_shift(secret.key, g, s, n), layout.tag_qubits(s), gate_reg, ctl);
    }
  }
  for (int s = 0; s < layout.slots; ++s) {
    append_tag_controlled_pauli(h, pad, layout.tag_qubits(s), layout.payload_qubits(s), false);
  }

  auto& b = out.check;
  append_tag_controlled_pauli(b, pad, layout.tag_qubits(1), layout.payload_qubits(1), true);
  for (int q : layout.payload_qubits(1)) b.measure(q);
  append_xor_constant(b, secret.a, layout.payload_qubits(0), layout.payload_qubits(1), bits_of(secret.b));
  return out;
}

CombinedCircuit make_helper_family(const FamilySecret& secret, const FamilyLayout& layout) {
  auto br = make_helper_branches(secret, layout);
  return combine({std::move(br.enc), std::move(br.hom), std::move(br.check)});
}

QuantumCircuit embed_main(const QuantumCircuit& main, const FamilyLayout& layout) {
  const int n = layout.n;
  if (main.arity() != 2 * n || main.ancillas() != 0 || !main.outputs_are_inputs()) {
    throw DimensionError("main circuit must act on 2n qubits without ancillas");
  }
  QuantumCircuit c(layout.width());
  auto mapping = layout.payload_qubits(0);
  const auto y = layout.payload_qubits(1);
  mapping.insert(mapping.end(), y.begin(), y.end());
  c.append(main, mapping);
  return c;
}

CombinedCircuit make_family_circuit(const QuantumCircuit& main, const FamilySecret& secret,
                                    const FamilyLayout& layout) {
  auto br = make_helper_branches(secret, layout);
  return combine({embed_main(main, layout), std::move(br.enc), std::move(br.hom), std::move(br.check)});
}

UnobfSample sample_unobf_family(int n, int secret, Rng& rng, int slots) {
  const auto un = static_cast<std::size_t>(n);
  UnobfSample s;
  s.secret = secret;
  s.witness.a = random_nonzero(un, rng);
  s.witness.b = random_nonzero(un, rng);
  s.witness.key = BitString::random(un, rng);
  s.witness.r = BitString::random(un, rng);
  const FamilyLayout layout{n, slots};
  const auto main = secret == 0 ? make_point_circuit(s.witness.a, s.witness.b) : identity_circuit(2 * n);
  s.circuit = make_family_circuit(main, s.witness, layout);
  return s;
}

UnobfSample sample_unobf_family(int n, Rng& rng, int slots) {
  const int secret = static_cast<int>(rng() & 1U);
  return sample_unobf_family(n, secret, rng, slots);
}

}  // namespace qlab
