#include "qlab/sim/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qlab/sim/errors.hpp"

namespace qlab {
namespace {

constexpr std::string_view kHeader = "qlab-circuit 1";

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<int> split_ints(std::string_view s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    out.push_back(std::stoi(std::string(s.substr(pos, comma - pos))));
    pos = comma + 1;
  }
  return out;
}

std::string_view expect_field(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key || token.size() <= key.size() || token[key.size()] != '=') {
    throw std::invalid_argument("circuit parse: expected field '" + std::string(key) + "'");
  }
  return token.substr(key.size() + 1);
}

Matrix parse_matrix(std::string_view s) {
  std::vector<Complex> entries;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw std::invalid_argument("circuit parse: malformed matrix entry");
    const auto close = s.find(')', pos);
    const auto comma = s.find(',', pos);
    if (close == std::string_view::npos || comma == std::string_view::npos || comma > close) {
      throw std::invalid_argument("circuit parse: malformed matrix entry");
    }
    const double re = std::stod(std::string(s.substr(pos + 1, comma - pos - 1)));
    const double im = std::stod(std::string(s.substr(comma + 1, close - comma - 1)));
    entries.emplace_back(re, im);
    pos = close + 1;
  }
  Eigen::Index d = 1;
  while (static_cast<std::size_t>(d * d) < entries.size()) d <<= 1;
  if (static_cast<std::size_t>(d * d) != entries.size()) {
    throw std::invalid_argument("circuit parse: matrix is not square power-of-two");
  }
  Matrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = entries[static_cast<std::size_t>(r * d + c)];
  }
  return m;
}

}  // namespace

QuantumCircuit::QuantumCircuit(int arity, int ancillas) : arity_(arity), ancillas_(ancillas) {
  if (arity < 0 || ancillas < 0) throw std::invalid_argument("negative register size");
  outputs_.resize(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i) outputs_[static_cast<std::size_t>(i)] = i;
}

void QuantumCircuit::set_outputs(std::vector<int> outputs) {
  std::set<int> seen;
  for (int q : outputs) {
    if (q < 0 || q >= width()) throw std::out_of_range("output qubit out of range");
    if (!seen.insert(q).second) throw std::invalid_argument("duplicate output qubit");
  }
  outputs_ = std::move(outputs);
}

bool QuantumCircuit::outputs_are_inputs() const {
  if (static_cast<int>(outputs_.size()) != arity_) return false;
  for (int i = 0; i < arity_; ++i) {
    if (outputs_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

QuantumCircuit& QuantumCircuit::add(Gate gate) {
  std::set<int> seen;
  auto check = [&](int q) {
    if (q < 0 || q >= width()) throw std::out_of_range("gate qubit out of range");
    if (!seen.insert(q).second) throw std::invalid_argument("gate qubits must be distinct");
  };
  for (int q : gate.targets) check(q);
  for (int q : gate.controls) check(q);
  if (gate.targets.empty()) throw std::invalid_argument("gate has no targets");
  if (gate.controls.size() != gate.control_values.size()) throw DimensionError("control values length mismatch");
  switch (gate.kind) {
    case GateKind::Unitary:
      if (gate.matrix.rows() != (Eigen::Index{1} << gate.targets.size())) {
        throw DimensionError("gate matrix does not match target count");
      }
      if (!qlab::is_unitary(gate.matrix)) throw std::invalid_argument("gate matrix is not unitary");
      break;
    case GateKind::Measure:
      if (gate.targets.size() != 1) throw std::invalid_argument("measure acts on one qubit");
      break;
    case GateKind::Discard:
      if (gate.targets.size() != 1 || !gate.controls.empty()) {
        throw std::invalid_argument("discard acts on one uncontrolled qubit");
      }
      break;
  }
  gates_.push_back(std::move(gate));
  return *this;
}

QuantumCircuit& QuantumCircuit::mcx(const std::vector<int>& controls,
                                    const std::vector<std::uint8_t>& values, int target) {
  return add(Gate::named("x", {target}, controls, values));
}

QuantumCircuit& QuantumCircuit::unitary(Matrix m, std::vector<int> targets, std::string name) {
  return add(Gate::custom(std::move(m), std::move(targets), std::move(name)));
}

QuantumCircuit& QuantumCircuit::append(const QuantumCircuit& other, const std::vector<int>& mapping) {
  if (static_cast<int>(mapping.size()) != other.width()) {
    throw DimensionError("append: mapping must cover every qubit of the appended circuit");
  }
  for (const auto& g : other.gates()) add(g.remapped(mapping));
  return *this;
}

bool QuantumCircuit::is_unitary() const {
  return std::all_of(gates_.begin(), gates_.end(),
                     [](const Gate& g) { return g.kind == GateKind::Unitary; });
}

bool QuantumCircuit::is_permutation() const {
  return std::all_of(gates_.begin(), gates_.end(), [](const Gate& g) { return g.is_permutation(); });
}

QuantumCircuit QuantumCircuit::inverse() const {
  if (!is_unitary()) throw std::logic_error("inverse requires a unitary circuit");
  QuantumCircuit out(arity_, ancillas_);
  out.outputs_ = outputs_;
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) out.gates_.push_back(it->adjoint());
  return out;
}

std::string QuantumCircuit::serialize() const {
  std::ostringstream os;
  os << kHeader << '\n';
  os << "arity " << arity_ << '\n';
  os << "ancillas " << ancillas_ << '\n';
  os << "outputs " << join(outputs_) << '\n';
  for (const auto& g : gates_) {
    std::vector<int> values(g.control_values.begin(), g.control_values.end());
    switch (g.kind) {
      case GateKind::Unitary: {
        os << "unitary " << g.name << " targets=" << join(g.targets) << " controls=" << join(g.controls)
           << " values=" << join(values) << " matrix=";
        for (Eigen::Index r = 0; r < g.matrix.rows(); ++r) {
          for (Eigen::Index c = 0; c < g.matrix.cols(); ++c) {
            os << '(' << format_double(g.matrix(r, c).real()) << ',' << format_double(g.matrix(r, c).imag())
               << ')';
          }
        }
        break;
      }
      case GateKind::Measure:
        os << "measure targets=" << join(g.targets) << " controls=" << join(g.controls)
           << " values=" << join(values);
        break;
      case GateKind::Discard:
        os << "discard targets=" << join(g.targets);
        break;
    }
    os << '\n';
  }
  os << "end\n";
  return os.str();
}

QuantumCircuit QuantumCircuit::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  auto next_line = [&]() -> std::string {
    if (!std::getline(is, line)) throw std::invalid_argument("circuit parse: unexpected end of input");
    return line;
  };
  if (next_line() != kHeader) throw std::invalid_argument("circuit parse: bad header");
  auto read_count = [&](std::string_view key) {
    const std::string l = next_line();
    if (l.rfind(std::string(key) + " ", 0) != 0) {
      throw std::invalid_argument("circuit parse: expected '" + std::string(key) + "'");
    }
    return std::stoi(l.substr(key.size() + 1));
  };
  const int arity = read_count("arity");
  const int ancillas = read_count("ancillas");
  QuantumCircuit c(arity, ancillas);
  {
    const std::string l = next_line();
    if (l.rfind("outputs", 0) != 0) throw std::invalid_argument("circuit parse: expected 'outputs'");
    c.set_outputs(l.size() > 8 ? split_ints(std::string_view(l).substr(8)) : std::vector<int>{});
  }
  while (true) {
    const std::string l = next_line();
    if (l == "end") break;
    std::istringstream ls(l);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) throw std::invalid_argument("circuit parse: empty gate line");
    auto values_of = [](std::string_view s) {
      std::vector<std::uint8_t> v;
      for (int x : split_ints(s)) v.push_back(static_cast<std::uint8_t>(x != 0));
      return v;
    };
    Gate g;
    if (tok[0] == "unitary" && tok.size() == 6) {
      g.kind = GateKind::Unitary;
      g.name = tok[1];
      g.targets = split_ints(expect_field(tok[2], "targets"));
      g.controls = split_ints(expect_field(tok[3], "controls"));
      g.control_values = values_of(expect_field(tok[4], "values"));
      g.matrix = parse_matrix(expect_field(tok[5], "matrix"));
      if (is_named_gate(g.name) && (g.matrix - named_gate_matrix(g.name)).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("circuit parse: matrix does not match gate name " + g.name);
      }
    } else if (tok[0] == "measure" && tok.size() == 4) {
      g = Gate::measure(0);
      g.targets = split_ints(expect_field(tok[1], "targets"));
      g.controls = split_ints(expect_field(tok[2], "controls"));
      g.control_values = values_of(expect_field(tok[3], "values"));
    } else if (tok[0] == "discard" && tok.size() == 2) {
      g = Gate::discard(0);
      g.targets = split_ints(expect_field(tok[1], "targets"));
    } else {
      throw std::invalid_argument("circuit parse: unrecognized gate line: " + l);
    }
    c.add(std::move(g));
  }
  return c;
}

bool QuantumCircuit::same_as(const QuantumCircuit& other) const {
  if (arity_ != other.arity_ || ancillas_ != other.ancillas_ || outputs_ != other.outputs_ ||
      gates_.size() != other.gates_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    if (!gates_[i].same_as(other.gates_[i])) return false;
  }
  return true;
}

QuantumCircuit identity_circuit(int n) { return QuantumCircuit(n); }

}  // namespace qlab
