#pragma once

#include <string>

#include "symgate/gates.hpp"

namespace symgate {

// Round-trip-safe numeric formatting ("%.17g") used for all CLI output.
std::string format_double(double x);

std::string basis_to_string(BasisTag basis);

// Accepts "comp-sym", "spin1", "bell-sym"; throws std::invalid_argument.
BasisTag basis_from_string(const std::string& name);

// Gate JSON schema:
//   {"basis": "comp-sym"|"spin1"|"bell-sym",
//    "matrix": [[[re,im],[re,im],[re,im]] x3]}
// Row-major 3x3; complex entries as 2-element arrays. Malformed documents
// raise std::invalid_argument naming the offending field; a well-formed but
// non-unitary matrix raises NotUnitaryError.
SymmetricGate gate_from_json(const std::string& text);

std::string gate_to_json(const SymmetricGate& g);

}  // namespace symgate
