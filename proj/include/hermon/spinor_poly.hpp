#pragma once

// Spinor-valued polynomials on C^n: finite sums f = sum_A f_A(z, zbar) A with
// scalar polynomial components indexed by Fock basis states. All arithmetic is
// exact over the Gaussian rationals.

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "hermon/fock.hpp"
#include "hermon/scalar_poly.hpp"

namespace hermon {

// Parameters (n, a, b, r) of a space of homogeneous spinor-valued polynomials:
// bidegree (a, b) and pure spinor grade r. Grade 0 states are annihilated by
// every f_j and grade n states by every fd_j, which forces a = 0 at r = 0 and
// b = 0 at r = n for the kernels studied here.
struct SpaceLabel {
  unsigned n = 0;
  unsigned a = 0;
  unsigned b = 0;
  unsigned r = 0;

  bool valid() const {
    if (r > n) return false;
    if (r == 0 && a > 0) return false;
    if (r == n && b > 0) return false;
    return true;
  }

  friend bool operator==(const SpaceLabel& x, const SpaceLabel& y) {
    return x.n == y.n && x.a == y.a && x.b == y.b && x.r == y.r;
  }
  friend bool operator!=(const SpaceLabel& x, const SpaceLabel& y) { return !(x == y); }
};

class SpinorPolynomial {
 public:
  SpinorPolynomial() = default;
  explicit SpinorPolynomial(unsigned n) : n_(n) {}

  // f_A(z, zbar) placed on the single state A.
  SpinorPolynomial(const ScalarPolynomial& f, FockSubset a) : n_(f.n()) {
    add_component(a, f);
  }

  static SpinorPolynomial from_spinor(unsigned n, const SpinorElement& s) {
    SpinorPolynomial p(n);
    for (const auto& [a, c] : s.comps()) p.add_component(a, ScalarPolynomial::constant(n, c));
    return p;
  }

  unsigned n() const { return n_; }
  bool is_zero() const { return comps_.empty(); }
  const std::map<FockSubset, ScalarPolynomial>& components() const { return comps_; }

  ScalarPolynomial component(FockSubset a) const {
    auto it = comps_.find(a);
    return it == comps_.end() ? ScalarPolynomial(n_) : it->second;
  }

  void add_component(FockSubset a, const ScalarPolynomial& f) {
    if (f.is_zero()) return;
    auto it = comps_.find(a);
    if (it == comps_.end()) {
      comps_.emplace(a, f);
    } else {
      it->second += f;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  SpinorPolynomial& operator+=(const SpinorPolynomial& o) {
    check_dim(o.n_);
    for (const auto& [a, f] : o.comps_) add_component(a, f);
    return *this;
  }
  SpinorPolynomial& operator-=(const SpinorPolynomial& o) {
    check_dim(o.n_);
    for (const auto& [a, f] : o.comps_) add_component(a, -f);
    return *this;
  }
  friend SpinorPolynomial operator+(SpinorPolynomial x, const SpinorPolynomial& y) {
    return x += y;
  }
  friend SpinorPolynomial operator-(SpinorPolynomial x, const SpinorPolynomial& y) {
    return x -= y;
  }
  SpinorPolynomial operator-() const { return *this * GaussianRational(-1); }

  SpinorPolynomial operator*(const GaussianRational& c) const {
    SpinorPolynomial r(n_);
    for (const auto& [a, f] : comps_) r.add_component(a, f * c);
    return r;
  }
  friend SpinorPolynomial operator*(const GaussianRational& c, const SpinorPolynomial& p) {
    return p * c;
  }

  // Pointwise scalar-polynomial multiple (scalars commute with the states).
  friend SpinorPolynomial operator*(const ScalarPolynomial& g, const SpinorPolynomial& p) {
    p.check_dim(g.n());
    SpinorPolynomial r(p.n_);
    for (const auto& [a, f] : p.comps_) r.add_component(a, g * f);
    return r;
  }

  friend bool operator==(const SpinorPolynomial& x, const SpinorPolynomial& y) {
    return x.n_ == y.n_ && x.comps_ == y.comps_;
  }
  friend bool operator!=(const SpinorPolynomial& x, const SpinorPolynomial& y) {
    return !(x == y);
  }

  SpinorPolynomial derive_z(unsigned j) const {
    SpinorPolynomial r(n_);
    for (const auto& [a, f] : comps_) r.add_component(a, f.derive_z(j));
    return r;
  }
  SpinorPolynomial derive_zbar(unsigned j) const {
    SpinorPolynomial r(n_);
    for (const auto& [a, f] : comps_) r.add_component(a, f.derive_zbar(j));
    return r;
  }

  SpinorPolynomial grade_component(unsigned r) const {
    SpinorPolynomial q(n_);
    for (const auto& [a, f] : comps_)
      if (a.grade() == r) q.add_component(a, f);
    return q;
  }

  std::optional<unsigned> pure_grade() const {
    std::optional<unsigned> g;
    for (const auto& [a, f] : comps_) {
      if (!g)
        g = a.grade();
      else if (*g != a.grade())
        return std::nullopt;
    }
    return g;
  }

  // Common (zdeg, zbardeg) of every term, nullopt if mixed.
  std::optional<std::pair<unsigned, unsigned>> bidegree() const {
    std::optional<std::pair<unsigned, unsigned>> bd;
    for (const auto& [a, f] : comps_) {
      auto b = f.bidegree();
      if (!b) return std::nullopt;
      if (!bd)
        bd = b;
      else if (*bd != *b)
        return std::nullopt;
    }
    return bd;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [a, f] : comps_) d = std::max(d, f.degree());
    return d;
  }

  SpinorPolynomial apply_word(const WittWord& w) const {
    SpinorPolynomial r(n_);
    for (const auto& [a, f] : comps_) {
      if (auto step = apply_letters(w.letters(), a))
        r.add_component(step->second, f * (w.scalar() * GaussianRational(step->first)));
    }
    return r;
  }

 private:
  void check_dim(unsigned m) const {
    if (n_ != m) throw std::invalid_argument("SpinorPolynomial: dimension mismatch");
  }

  unsigned n_ = 0;
  std::map<FockSubset, ScalarPolynomial> comps_;
};

inline SpinorPolynomial apply_creation(unsigned j, const SpinorPolynomial& p) {
  return p.apply_word(WittWord::creation_op(j));
}
inline SpinorPolynomial apply_annihilation(unsigned j, const SpinorPolynomial& p) {
  return p.apply_word(WittWord::annihilation_op(j));
}
inline SpinorPolynomial apply_word(const WittWord& w, const SpinorPolynomial& p) {
  return p.apply_word(w);
}
inline SpinorPolynomial grade_projection(const SpinorPolynomial& p, unsigned r) {
  return p.grade_component(r);
}

// Split over S_n = S_{n-1} + fd_n S_{n-1}, componentwise on states.
inline std::pair<SpinorPolynomial, SpinorPolynomial> split_last_mode(const SpinorPolynomial& p) {
  unsigned n = p.n();
  if (n == 0) throw std::invalid_argument("split_last_mode: no modes");
  SpinorPolynomial first(n), second(n);
  for (const auto& [a, f] : p.components()) {
    if (!a.contains(n)) {
      first.add_component(a, f);
    } else {
      auto step = annihilation(n, a);
      second.add_component(step->second, f * GaussianRational(step->first));
    }
  }
  return {first, second};
}

}  // namespace hermon
