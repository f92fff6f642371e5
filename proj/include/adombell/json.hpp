#pragma once

// JSON form of MultiPoly: an array of {"coeff": "p/q", "monomial": {"u1": 2, ...}}
// in graded-lex order.

#include "adombell/multipoly.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace adombell {

inline nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json mono = nlohmann::json::object();
    for (const auto& [v, e] : m.factors()) mono[v.name()] = e;
    arr.push_back({{"coeff", to_string(c)}, {"monomial", std::move(mono)}});
  }
  return arr;
}

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
inline MultiPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  MultiPoly p;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("monomial") || !t["coeff"].is_string() ||
        !t["monomial"].is_object()) {
      throw std::invalid_argument("malformed polynomial term: " + t.dump());
    }
    std::vector<Monomial::Factor> fs;
    for (const auto& [name, e] : t["monomial"].items()) {
      if (!e.is_number_unsigned()) throw std::invalid_argument("exponent must be a nonnegative integer");
      fs.emplace_back(Var::parse(name), e.get<unsigned>());
    }
    p.add_term(Monomial::from_factors(std::move(fs)), parse_rational(t["coeff"].get<std::string>()));
  }
  return p;
}

}  // namespace adombell
