#pragma once

#include <string>

#include "qlab/obf/program.hpp"

namespace qlab {

/// f(a, b, r): the obfuscation of the one-bit point circuit for (a, b) with
/// randomness r, as bytes. Requires an obfuscator with classical output.
std::string owf_eval(const BitString& a, bool b, const BitString& r, const Obfuscator& obf);
std::string owf_eval(const BitString& a, bool b, const BitString& r);

}  // namespace qlab
