#include "qlab/prf/owf.hpp"

#include "qlab/obf/families.hpp"
#include "qlab/sim/errors.hpp"

namespace qlab {

std::string owf_eval(const BitString& a, bool b, const BitString& r, const Obfuscator& obf) {
  const auto program = obf.obfuscate(make_point_circuit_bit(a, b), r);
  if (program.form != ProgramForm::ClassicalDescription) {
    throw ContractError("one-way function needs an obfuscator with classical output");
  }
  return program.description;
}

std::string owf_eval(const BitString& a, bool b, const BitString& r) {
  return owf_eval(a, b, r, PlainObfuscator());
}

}  // namespace qlab
