#pragma once

// Sparse polynomials over the Gaussian rationals in z_1..z_n, zbar_1..zbar_n.
// Terms live in an ordered map, so iteration order is canonical; zero
// coefficients are never stored.

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "hermon/monomial.hpp"
#include "hermon/rational.hpp"

namespace hermon {

class ScalarPolynomial {
 public:
  using TermMap = std::map<Monomial, GaussianRational>;

  ScalarPolynomial() = default;
  explicit ScalarPolynomial(unsigned n) : n_(n) {}

  static ScalarPolynomial constant(unsigned n, GaussianRational c) {
    ScalarPolynomial p(n);
    p.add_term(Monomial(n), std::move(c));
    return p;
  }
  static ScalarPolynomial one(unsigned n) { return constant(n, 1); }

  // 1-based variable builders.
  static ScalarPolynomial z(unsigned n, unsigned j) {
    ScalarPolynomial p(n);
    Monomial m(n);
    m.z.at(j - 1) = 1;
    p.add_term(m, 1);
    return p;
  }
  static ScalarPolynomial zbar(unsigned n, unsigned j) {
    ScalarPolynomial p(n);
    Monomial m(n);
    m.zbar.at(j - 1) = 1;
    p.add_term(m, 1);
    return p;
  }

  unsigned n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Monomial& m, const GaussianRational& c) {
    if (m.n() != n_) throw std::invalid_argument("ScalarPolynomial: monomial dimension mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ScalarPolynomial& operator+=(const ScalarPolynomial& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  ScalarPolynomial& operator-=(const ScalarPolynomial& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend ScalarPolynomial operator+(ScalarPolynomial a, const ScalarPolynomial& b) { return a += b; }
  friend ScalarPolynomial operator-(ScalarPolynomial a, const ScalarPolynomial& b) { return a -= b; }

  ScalarPolynomial operator-() const {
    ScalarPolynomial r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  ScalarPolynomial operator*(const ScalarPolynomial& o) const {
    check_dim(o);
    ScalarPolynomial r(n_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  ScalarPolynomial operator*(const GaussianRational& c) const {
    ScalarPolynomial r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, t] : terms_) r.terms_.emplace(m, t * c);
    return r;
  }
  friend ScalarPolynomial operator*(const GaussianRational& c, const ScalarPolynomial& p) {
    return p * c;
  }

  // Complex conjugation: conjugate coefficients, swap z/zbar exponents.
  ScalarPolynomial conjugated() const {
    ScalarPolynomial r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m.conjugated(), c.conj());
    return r;
  }

  ScalarPolynomial derive_z(unsigned j) const { return derive(j, /*bar=*/false); }
  ScalarPolynomial derive_zbar(unsigned j) const { return derive(j, /*bar=*/true); }

  ScalarPolynomial pow(unsigned k) const {
    ScalarPolynomial r = one(n_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  // Bidegree of a bihomogeneous polynomial; nullopt when mixed or zero.
  std::optional<std::pair<unsigned, unsigned>> bidegree() const {
    std::optional<std::pair<unsigned, unsigned>> bd;
    for (const auto& [m, c] : terms_) {
      auto mb = m.bidegree();
      if (!bd)
        bd = mb;
      else if (*bd != mb)
        return std::nullopt;
    }
    return bd;
  }

  std::map<std::pair<unsigned, unsigned>, ScalarPolynomial> bidegree_split() const {
    std::map<std::pair<unsigned, unsigned>, ScalarPolynomial> parts;
    for (const auto& [m, c] : terms_) {
      auto [it, inserted] = parts.emplace(m.bidegree(), ScalarPolynomial(n_));
      it->second.add_term(m, c);
    }
    return parts;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  // Floating-point evaluation, used only by tests for numeric cross-checks.
  std::complex<double> eval(const std::vector<std::complex<double>>& at) const {
    if (at.size() != n_) throw std::invalid_argument("ScalarPolynomial::eval: dimension mismatch");
    std::complex<double> sum = 0.0;
    for (const auto& [m, c] : terms_) {
      std::complex<double> t(c.re().convert_to<double>(), c.im().convert_to<double>());
      for (unsigned j = 0; j < n_; ++j) {
        for (std::uint32_t e = 0; e < m.z[j]; ++e) t *= at[j];
        for (std::uint32_t e = 0; e < m.zbar[j]; ++e) t *= std::conj(at[j]);
      }
      sum += t;
    }
    return sum;
  }

  friend bool operator==(const ScalarPolynomial& a, const ScalarPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const ScalarPolynomial& a, const ScalarPolynomial& b) { return !(a == b); }

 private:
  void check_dim(const ScalarPolynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("ScalarPolynomial: dimension mismatch");
  }

  ScalarPolynomial derive(unsigned j, bool bar) const {
    if (j < 1 || j > n_) throw std::invalid_argument("ScalarPolynomial: variable index out of range");
    ScalarPolynomial r(n_);
    for (const auto& [m, c] : terms_) {
      const auto& exps = bar ? m.zbar : m.z;
      std::uint32_t e = exps[j - 1];
      if (e == 0) continue;
      Monomial d = m;
      (bar ? d.zbar : d.z)[j - 1] = e - 1;
      r.add_term(d, c * GaussianRational(static_cast<long long>(e)));
    }
    return r;
  }

  unsigned n_ = 0;
  TermMap terms_;
};

}  // namespace hermon
