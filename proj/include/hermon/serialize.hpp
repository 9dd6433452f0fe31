#pragma once

// Canonical JSON wire format for spinor polynomials. Terms appear in the
// canonical order (state grade, state indices, z exponents, zbar exponents),
// so equal polynomials always serialize to byte-identical text.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hermon/fock.hpp"
#include "hermon/spinor_poly.hpp"

namespace hermon {

inline std::string serialize(const SpinorPolynomial& f) {
  nlohmann::ordered_json root;
  root["n"] = f.n();
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [state, poly] : f.components())
    for (const auto& [m, c] : poly.terms()) {
      nlohmann::ordered_json t;
      t["z"] = m.z;
      t["zbar"] = m.zbar;
      t["fock"] = state.indices();
      t["re"] = rat_to_string(c.re());
      t["im"] = rat_to_string(c.im());
      terms.push_back(std::move(t));
    }
  root["terms"] = std::move(terms);
  return root.dump();
}

inline SpinorPolynomial deserialize(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("deserialize: invalid JSON: ") + e.what());
  }
  try {
    const unsigned n = j.at("n").get<unsigned>();
    SpinorPolynomial f(n);
    for (const auto& t : j.at("terms")) {
      auto zv = t.at("z").get<std::vector<std::uint32_t>>();
      auto bv = t.at("zbar").get<std::vector<std::uint32_t>>();
      if (zv.size() != n || bv.size() != n)
        throw std::invalid_argument("deserialize: exponent vector length != n");
      auto fock = t.at("fock").get<std::vector<unsigned>>();
      for (std::size_t i = 0; i < fock.size(); ++i) {
        if (fock[i] < 1 || fock[i] > n)
          throw std::invalid_argument("deserialize: fock index out of range");
        if (i > 0 && fock[i] <= fock[i - 1])
          throw std::invalid_argument("deserialize: fock indices not strictly increasing");
      }
      GaussianRational c(rat_from_string(t.at("re").get<std::string>()),
                         rat_from_string(t.at("im").get<std::string>()));
      ScalarPolynomial p(n);
      p.add_term(Monomial{std::move(zv), std::move(bv)}, c);
      f += SpinorPolynomial(p, FockSubset::from_indices(fock));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("deserialize: schema violation: ") + e.what());
  }
}

}  // namespace hermon
