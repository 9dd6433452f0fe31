#pragma once

// Math-mode LaTeX emission, for eyeballing elements and operators against
// displayed formulas. Conventions: \fd_j for the creation letter, f_j for the
// annihilation letter, \bar{z}_j for conjugated variables, I for the vacuum
// spinor, \mathrm{id} for the empty operator word.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "hermon/operator_poly.hpp"
#include "hermon/spinor_poly.hpp"

namespace hermon {
namespace latex_detail {

inline std::string rational(const BigRat& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  std::string sign = num < 0 ? "-" : "";
  BigInt mag = num < 0 ? BigInt(-num) : num;
  return sign + "\\tfrac{" + mag.str() + "}{" + den.str() + "}";
}

inline std::string coefficient(const GaussianRational& c) {
  if (c.im() == 0) return rational(c.re());
  if (c.re() == 0) {
    if (c.im() == 1) return "\\mathrm{i}";
    if (c.im() == -1) return "-\\mathrm{i}";
    return rational(c.im()) + "\\,\\mathrm{i}";
  }
  std::string im_part = c.im() > 0 ? " + " + rational(c.im()) : " - " + rational(BigRat(-c.im()));
  return "\\left(" + rational(c.re()) + im_part + "\\,\\mathrm{i}\\right)";
}

inline std::string monomial(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& sym, unsigned j, std::uint32_t e) {
    if (e == 0) return;
    if (!first) os << " ";
    first = false;
    os << sym << "_{" << j << "}";
    if (e > 1) os << "^{" << e << "}";
  };
  for (std::size_t j = 0; j < m.z.size(); ++j) emit("z", static_cast<unsigned>(j + 1), m.z[j]);
  for (std::size_t j = 0; j < m.zbar.size(); ++j)
    emit("\\bar{z}", static_cast<unsigned>(j + 1), m.zbar[j]);
  return os.str();
}

// One product term: signed coefficient then symbols; "tail" is the symbol
// string the coefficient multiplies (may be empty for constants).
inline std::string term(const GaussianRational& c, const std::string& tail) {
  std::string cs = coefficient(c);
  if (tail.empty()) return cs;
  if (cs == "1") return tail;
  if (cs == "-1") return "-" + tail;
  return cs + "\\," + tail;
}

// Join pre-rendered terms, folding a leading '-' into the separator.
inline std::string join(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == 0) {
      out = parts[i];
    } else if (!parts[i].empty() && parts[i][0] == '-') {
      out += " - " + parts[i].substr(1);
    } else {
      out += " + " + parts[i];
    }
  }
  return out;
}

}  // namespace latex_detail

inline std::string emit_latex(const ScalarPolynomial& p) {
  std::vector<std::string> parts;
  for (const auto& [m, c] : p.terms()) parts.push_back(latex_detail::term(c, latex_detail::monomial(m)));
  return latex_detail::join(parts);
}

inline std::string emit_latex(const SpinorPolynomial& f) {
  std::vector<std::string> parts;
  for (const auto& [state, poly] : f.components()) {
    std::string st;
    for (unsigned j : state.indices()) st += "\\fd_{" + std::to_string(j) + "}";
    st += st.empty() ? "I" : " I";
    if (poly.terms().size() == 1) {
      const auto& [m, c] = *poly.terms().begin();
      std::string mono = latex_detail::monomial(m);
      std::string tail = mono.empty() ? st : mono + " " + st;
      parts.push_back(latex_detail::term(c, tail));
    } else {
      parts.push_back("\\left(" + emit_latex(poly) + "\\right) " + st);
    }
  }
  return latex_detail::join(parts);
}

inline std::string emit_latex(const OperatorPolynomial& x) {
  std::vector<std::string> parts;
  for (const auto& [word, poly] : x.terms()) {
    std::string ws;
    for (const auto& letter : word)
      ws += (letter.dagger ? "\\fd_{" : "f_{") + std::to_string(letter.j) + "}";
    if (ws.empty()) ws = "\\mathrm{id}";
    if (poly.terms().size() == 1) {
      const auto& [m, c] = *poly.terms().begin();
      std::string mono = latex_detail::monomial(m);
      std::string tail = mono.empty() ? ws : mono + "\\," + ws;
      parts.push_back(latex_detail::term(c, tail));
    } else {
      parts.push_back("\\left(" + emit_latex(poly) + "\\right)\\," + ws);
    }
  }
  return latex_detail::join(parts);
}

}  // namespace hermon
