#pragma once

// Operators of the form sum_w c_w(z, zbar) . w, with scalar polynomial
// coefficients and words w in the Witt letters; they act on spinor-valued
// polynomials by pointwise multiplication and left Clifford action. Such an
// operator is ScalarPolynomial-linear, so its action on the 2^n constant basis
// states determines it; equality and proportionality tests exploit that.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hermon/spinor_poly.hpp"

namespace hermon {

class OperatorPolynomial {
 public:
  OperatorPolynomial() = default;
  explicit OperatorPolynomial(unsigned n) : n_(n) {}

  static OperatorPolynomial zero(unsigned n) { return OperatorPolynomial(n); }
  static OperatorPolynomial identity(unsigned n) {
    OperatorPolynomial p(n);
    p.add_term({}, ScalarPolynomial::one(n));
    return p;
  }
  static OperatorPolynomial from_scalar(const ScalarPolynomial& c) {
    OperatorPolynomial p(c.n());
    p.add_term({}, c);
    return p;
  }
  static OperatorPolynomial from_word(unsigned n, const WittWord& w) {
    OperatorPolynomial p(n);
    p.add_term(w.letters(), ScalarPolynomial::constant(n, w.scalar()));
    return p;
  }

  unsigned n() const { return n_; }
  bool is_structurally_zero() const { return terms_.empty(); }
  const std::map<std::vector<WittLetter>, ScalarPolynomial>& terms() const { return terms_; }

  void add_term(std::vector<WittLetter> word, const ScalarPolynomial& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(word);
    if (it == terms_.end()) {
      terms_.emplace(std::move(word), coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  OperatorPolynomial& operator+=(const OperatorPolynomial& o) {
    check_dim(o.n_);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  OperatorPolynomial& operator-=(const OperatorPolynomial& o) {
    check_dim(o.n_);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend OperatorPolynomial operator+(OperatorPolynomial a, const OperatorPolynomial& b) {
    return a += b;
  }
  friend OperatorPolynomial operator-(OperatorPolynomial a, const OperatorPolynomial& b) {
    return a -= b;
  }
  OperatorPolynomial operator-() const { return *this * GaussianRational(-1); }

  OperatorPolynomial operator*(const GaussianRational& s) const {
    OperatorPolynomial r(n_);
    for (const auto& [w, c] : terms_) r.add_term(w, c * s);
    return r;
  }
  friend OperatorPolynomial operator*(const GaussianRational& s, const OperatorPolynomial& p) {
    return p * s;
  }
  friend OperatorPolynomial operator*(const ScalarPolynomial& g, const OperatorPolynomial& p) {
    p.check_dim(g.n());
    OperatorPolynomial r(p.n_);
    for (const auto& [w, c] : p.terms_) r.add_term(w, g * c);
    return r;
  }

  // Composition; the right factor acts first. Scalar coefficients commute
  // with the Clifford action, so words concatenate and coefficients multiply.
  OperatorPolynomial operator*(const OperatorPolynomial& o) const {
    check_dim(o.n_);
    OperatorPolynomial r(n_);
    for (const auto& [w1, c1] : terms_)
      for (const auto& [w2, c2] : o.terms_) {
        std::vector<WittLetter> cat = w1;
        cat.insert(cat.end(), w2.begin(), w2.end());
        r.add_term(std::move(cat), c1 * c2);
      }
    return r;
  }

  SpinorPolynomial apply(const SpinorPolynomial& f) const {
    check_dim(f.n());
    SpinorPolynomial out(n_);
    for (const auto& [w, c] : terms_)
      out += c * f.apply_word(WittWord(GaussianRational(1), w));
    return out;
  }

  // Images of the 2^n constant basis states, the operator's complete fingerprint.
  std::vector<SpinorPolynomial> state_images() const {
    std::vector<SpinorPolynomial> imgs;
    imgs.reserve(std::size_t(1) << n_);
    for (std::uint32_t m = 0; m < (std::uint32_t(1) << n_); ++m)
      imgs.push_back(apply(SpinorPolynomial::from_spinor(
          n_, SpinorElement::basis_state(n_, FockSubset(m)))));
    return imgs;
  }

 private:
  void check_dim(unsigned m) const {
    if (n_ != m) throw std::invalid_argument("OperatorPolynomial: dimension mismatch");
  }

  unsigned n_ = 0;
  std::map<std::vector<WittLetter>, ScalarPolynomial> terms_;
};

inline SpinorPolynomial apply_factor(const OperatorPolynomial& x, const SpinorPolynomial& f) {
  return x.apply(f);
}

inline bool equal_on_states(const OperatorPolynomial& a, const OperatorPolynomial& b) {
  if (a.n() != b.n()) return false;
  auto ia = a.state_images(), ib = b.state_images();
  return ia == ib;
}

inline bool is_zero_operator(const OperatorPolynomial& a) {
  for (const auto& img : a.state_images())
    if (!img.is_zero()) return false;
  return true;
}

// lambda with a == lambda . b, as maps on spinor polynomials; nullopt when no
// such nonzero scalar exists. Two zero operators count as proportional (1).
inline std::optional<GaussianRational> proportional_on_states(const OperatorPolynomial& a,
                                                              const OperatorPolynomial& b) {
  if (a.n() != b.n()) return std::nullopt;
  auto ia = a.state_images(), ib = b.state_images();
  GaussianRational lambda;
  bool have = false;
  for (std::size_t k = 0; k < ia.size(); ++k) {
    if (ib[k].is_zero()) {
      if (!ia[k].is_zero()) return std::nullopt;
      continue;
    }
    if (!have) {
      const auto& [state, poly] = *ib[k].components().begin();
      const auto& [mono, coeff] = *poly.terms().begin();
      auto it = ia[k].components().find(state);
      if (it == ia[k].components().end()) return std::nullopt;
      auto jt = it->second.terms().find(mono);
      if (jt == it->second.terms().end()) return std::nullopt;
      lambda = jt->second / coeff;
      if (lambda.is_zero()) return std::nullopt;
      have = true;
    }
    if (ia[k] != ib[k] * lambda) return std::nullopt;
  }
  if (!have) {
    // b vanished on every state; proportional iff a did too (checked above).
    return GaussianRational(1);
  }
  return lambda;
}

// Vector-variable multiplication operators over the first `modes` coordinates.
inline OperatorPolynomial op_z(unsigned n, unsigned modes) {
  OperatorPolynomial p(n);
  for (unsigned j = 1; j <= modes; ++j)
    p.add_term({WittLetter{false, j}}, ScalarPolynomial::z(n, j));
  return p;
}
inline OperatorPolynomial op_zdag(unsigned n, unsigned modes) {
  OperatorPolynomial p(n);
  for (unsigned j = 1; j <= modes; ++j)
    p.add_term({WittLetter{true, j}}, ScalarPolynomial::zbar(n, j));
  return p;
}
inline OperatorPolynomial op_z(unsigned n) { return op_z(n, n); }
inline OperatorPolynomial op_zdag(unsigned n) { return op_zdag(n, n); }
// Truncations to the first n-1 coordinates.
inline OperatorPolynomial op_ztilde(unsigned n) { return op_z(n, n - 1); }
inline OperatorPolynomial op_ztilde_dag(unsigned n) { return op_zdag(n, n - 1); }

// f_n z_n - fd_n zbar_n, the last-mode half of the vector pair.
inline OperatorPolynomial op_last_pair(unsigned n) {
  OperatorPolynomial p(n);
  p.add_term({WittLetter{false, n}}, ScalarPolynomial::z(n, n));
  p.add_term({WittLetter{true, n}}, -ScalarPolynomial::zbar(n, n));
  return p;
}

inline OperatorPolynomial op_creation(unsigned n, unsigned j) {
  OperatorPolynomial p(n);
  p.add_term({WittLetter{true, j}}, ScalarPolynomial::one(n));
  return p;
}
inline OperatorPolynomial op_annihilation(unsigned n, unsigned j) {
  OperatorPolynomial p(n);
  p.add_term({WittLetter{false, j}}, ScalarPolynomial::one(n));
  return p;
}

}  // namespace hermon
