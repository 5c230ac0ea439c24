#include "qlab/obf/program.hpp"

#include <map>
#include <mutex>

#include "qlab/obf/combine.hpp"
#include "qlab/sim/errors.hpp"
#include "qlab/sim/simulator.hpp"

namespace qlab {

namespace {

constexpr std::string_view kRandomnessPrefix = "randomness ";

void consume(ObfuscatedProgram& p) {
  if (!p.uses_remaining) return;
  if (*p.uses_remaining == 0) throw ContractError("obfuscated program has no uses left");
  --*p.uses_remaining;
}

struct Registry {
  std::mutex mu;
  std::map<std::string, std::shared_ptr<const Codebook>> books;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

std::size_t ObfuscatedProgram::size() const {
  return form == ProgramForm::ClassicalDescription ? description.size()
                                                   : static_cast<std::size_t>(state->num_qubits());
}

ObfuscatedProgram PlainObfuscator::obfuscate(const QuantumCircuit& circuit, const BitString& randomness) const {
  ObfuscatedProgram p;
  p.form = ProgramForm::ClassicalDescription;
  p.description = circuit.serialize();
  p.description += kRandomnessPrefix;
  p.description += randomness.empty() ? "-" : randomness.to_hex() + ":" + std::to_string(randomness.size());
  p.description += '\n';
  p.arity = circuit.arity();
  p.uses_remaining = uses_;
  p.interpreter_id = kInterpreterId;
  return p;
}

ObfuscatedProgram plain_obfuscate(const QuantumCircuit& circuit, const BitString& randomness) {
  return PlainObfuscator().obfuscate(circuit, randomness);
}

QuantumCircuit program_circuit(const ObfuscatedProgram& program) {
  if (program.form != ProgramForm::ClassicalDescription) {
    throw ContractError("program is a quantum state, not a circuit description");
  }
  if (program.interpreter_id != PlainObfuscator::kInterpreterId) {
    throw ContractError("unknown interpreter id: " + program.interpreter_id);
  }
  const auto& d = program.description;
  const auto pos = d.rfind(kRandomnessPrefix);
  if (pos == std::string::npos) throw std::invalid_argument("malformed program: missing randomness line");
  return QuantumCircuit::parse(std::string_view(d).substr(0, pos));
}

QuantumState interpret(ObfuscatedProgram& program, const QuantumState& input, Rng* rng) {
  if (input.num_qubits() != program.arity) throw DimensionError("interpreter input arity mismatch");
  if (program.form == ProgramForm::ClassicalDescription) {
    const auto circuit = program_circuit(program);
    consume(program);
    return run_circuit(circuit, input, rng);
  }
  const auto book = find_codebook(program.interpreter_id);
  if (!book) throw ContractError("unknown interpreter id: " + program.interpreter_id);
  consume(program);
  return run_circuit(book->interpreter_circuit(), program.state->tensor(input), rng);
}

QuantumState interpret_with_side(ObfuscatedProgram& program, const QuantumState& input, Rng* rng) {
  if (input.num_qubits() < program.arity) throw DimensionError("interpreter input smaller than program arity");
  if (input.num_qubits() == program.arity) return interpret(program, input, rng);
  QuantumCircuit circuit;
  QuantumState full = input;
  if (program.form == ProgramForm::ClassicalDescription) {
    circuit = program_circuit(program);
  } else {
    const auto book = find_codebook(program.interpreter_id);
    if (!book) throw ContractError("unknown interpreter id: " + program.interpreter_id);
    circuit = book->interpreter_circuit();
    full = program.state->tensor(input);
  }
  consume(program);
  const int side = full.num_qubits() - circuit.arity();
  QuantumCircuit wide(circuit.arity() + side, circuit.ancillas());
  std::vector<int> mapping(static_cast<std::size_t>(circuit.width()));
  for (int q = 0; q < circuit.width(); ++q) {
    mapping[static_cast<std::size_t>(q)] = q < circuit.arity() ? q : q + side;
  }
  wide.append(circuit, mapping);
  std::vector<int> outs;
  for (int q : circuit.outputs()) outs.push_back(mapping[static_cast<std::size_t>(q)]);
  for (int q = circuit.arity(); q < circuit.arity() + side; ++q) outs.push_back(q);
  wide.set_outputs(outs);
  return run_circuit(wide, full, rng);
}

QuantumState interpret_controlled(ObfuscatedProgram& program, const QuantumState& input) {
  if (input.num_qubits() != program.arity + 1) throw DimensionError("controlled interpreter input arity mismatch");
  const auto circuit = program_circuit(program);
  consume(program);
  QuantumCircuit c(circuit.arity() + 1, circuit.ancillas());
  std::vector<int> mapping(static_cast<std::size_t>(circuit.width()));
  for (int q = 0; q < circuit.width(); ++q) mapping[static_cast<std::size_t>(q)] = q + 1;
  for (const auto& g : circuit.gates()) c.add(g.remapped(mapping).with_controls({0}, {1}));
  std::vector<int> outs{0};
  for (int q : circuit.outputs()) outs.push_back(q + 1);
  c.set_outputs(outs);
  return run_circuit(c, input);
}

int Codebook::advice_qubits() const { return selector_bits(circuits.size()); }

int Codebook::arity() const { return circuits.front().arity(); }

QuantumCircuit Codebook::interpreter_circuit() const {
  auto c = combine(circuits).as_circuit();
  const int m = advice_qubits();
  std::vector<int> outs;
  for (int q : circuits.front().outputs()) outs.push_back(m + q);
  c.set_outputs(outs);
  return c;
}

std::optional<std::size_t> Codebook::index_of(const QuantumCircuit& circuit) const {
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    if (circuits[i].same_as(circuit)) return i;
  }
  return std::nullopt;
}

void register_codebook(const std::string& id, Codebook codebook) {
  if (codebook.circuits.size() < 2) throw std::invalid_argument("codebook needs at least two circuits");
  auto& r = registry();
  std::lock_guard lock(r.mu);
  r.books[id] = std::make_shared<const Codebook>(std::move(codebook));
}

std::shared_ptr<const Codebook> find_codebook(const std::string& id) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  const auto it = r.books.find(id);
  return it == r.books.end() ? nullptr : it->second;
}

CodebookObfuscator::CodebookObfuscator(std::string id, Codebook codebook, std::optional<std::uint64_t> uses)
    : id_(std::move(id)), uses_(uses) {
  register_codebook(id_, std::move(codebook));
  codebook_ = find_codebook(id_);
}

ObfuscatedProgram CodebookObfuscator::obfuscate(const QuantumCircuit& circuit, const BitString&) const {
  const auto idx = codebook_->index_of(circuit);
  if (!idx) throw ContractError("circuit is not in the interpreter's codebook");
  ObfuscatedProgram p;
  p.form = ProgramForm::QuantumState;
  p.state = QuantumState::basis(codebook_->advice_qubits(), *idx);
  p.arity = circuit.arity();
  p.uses_remaining = uses_;
  p.interpreter_id = id_;
  return p;
}

}  // namespace qlab
