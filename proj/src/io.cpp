#include "symgate/io.hpp"

#include <cstdio>

#include <json.hpp>

namespace symgate {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string basis_to_string(BasisTag basis) {
  switch (basis) {
    case BasisTag::CompSym:
      return "comp-sym";
    case BasisTag::Spin1:
      return "spin1";
    case BasisTag::BellSym:
      return "bell-sym";
  }
  return "comp-sym";
}

BasisTag basis_from_string(const std::string& name) {
  if (name == "comp-sym") return BasisTag::CompSym;
  if (name == "spin1") return BasisTag::Spin1;
  if (name == "bell-sym") return BasisTag::BellSym;
  throw std::invalid_argument(
      "field 'basis' must be one of comp-sym, spin1, bell-sym; got '" + name +
      "'");
}

SymmetricGate gate_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("gate file is not valid JSON: ") +
                                e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("gate file must be a JSON object");
  }
  if (!doc.contains("basis") || !doc["basis"].is_string()) {
    throw std::invalid_argument("field 'basis' missing or not a string");
  }
  const BasisTag basis = basis_from_string(doc["basis"].get<std::string>());

  if (!doc.contains("matrix") || !doc["matrix"].is_array()) {
    throw std::invalid_argument("field 'matrix' missing or not an array");
  }
  const auto& rows = doc["matrix"];
  if (rows.size() != 3) {
    throw std::invalid_argument("field 'matrix' must have exactly 3 rows");
  }
  Matrix3c m;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 3) {
      throw std::invalid_argument("field 'matrix' row " + std::to_string(i) +
                                  " must have exactly 3 entries");
    }
    for (std::size_t j = 0; j < 3; ++j) {
      const auto& entry = rows[i][j];
      if (!entry.is_array() || entry.size() != 2 ||
          !entry[0].is_number() || !entry[1].is_number()) {
        throw std::invalid_argument("field 'matrix' entry (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) +
                                    ") must be a [re, im] pair");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return make_gate(m, basis);
}

std::string gate_to_json(const SymmetricGate& g) {
  std::string out = "{\"basis\": \"" + basis_to_string(g.basis) +
                    "\", \"matrix\": [";
  for (int i = 0; i < 3; ++i) {
    out += i == 0 ? "[" : ", [";
    for (int j = 0; j < 3; ++j) {
      const Complex z = g.matrix(i, j);
      if (j != 0) out += ", ";
      out += "[" + format_double(z.real()) + ", " + format_double(z.imag()) +
             "]";
    }
    out += "]";
  }
  out += "]}";
  return out;
}

}  // namespace symgate
