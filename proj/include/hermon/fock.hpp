#pragma once

// Fermionic Fock realization of spinor space: basis states are subsets A of
// {1..n}, standing for the wedge words fd_{k_1}...fd_{k_r} I with k_1 < ... < k_r.
// Left multiplication by fd_j / f_j carries the sign (-1)^{#{k in A : k < j}}.
// The duality relations f_j fd_k + fd_k f_j = delta_{jk} make the states an
// orthonormal set for the spinor inner product used downstream.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hermon/rational.hpp"

namespace hermon {

class FockSubset {
 public:
  FockSubset() = default;
  explicit FockSubset(std::uint32_t mask) : mask_(mask) {}

  static FockSubset empty() { return FockSubset(); }
  static FockSubset full(unsigned n) { return FockSubset((n >= 32 ? 0u : (1u << n)) - 1u); }
  static FockSubset from_indices(const std::vector<unsigned>& idx) {
    std::uint32_t m = 0;
    for (unsigned j : idx) {
      if (j < 1 || j > 32) throw std::invalid_argument("FockSubset: index out of range");
      std::uint32_t bit = 1u << (j - 1);
      if (m & bit) throw std::invalid_argument("FockSubset: duplicate index");
      if (bit <= (m & bit)) throw std::invalid_argument("FockSubset: indices must increase");
      m |= bit;
    }
    return FockSubset(m);
  }

  std::uint32_t mask() const { return mask_; }
  bool contains(unsigned j) const { return (mask_ >> (j - 1)) & 1u; }
  unsigned grade() const { return static_cast<unsigned>(std::popcount(mask_)); }

  std::vector<unsigned> indices() const {
    std::vector<unsigned> idx;
    for (unsigned j = 1; j <= 32; ++j)
      if (contains(j)) idx.push_back(j);
    return idx;
  }

  // #{k in A : k < j}, the anticommutation sign exponent.
  unsigned count_below(unsigned j) const {
    return static_cast<unsigned>(std::popcount(mask_ & ((1u << (j - 1)) - 1u)));
  }

  FockSubset with(unsigned j) const { return FockSubset(mask_ | (1u << (j - 1))); }
  FockSubset without(unsigned j) const { return FockSubset(mask_ & ~(1u << (j - 1))); }

  friend bool operator==(FockSubset a, FockSubset b) { return a.mask_ == b.mask_; }
  friend bool operator!=(FockSubset a, FockSubset b) { return a.mask_ != b.mask_; }
  // Grade first, then lexicographic on the sorted index lists; this is the
  // canonical term order of the serialization format.
  friend bool operator<(FockSubset a, FockSubset b) {
    unsigned ga = a.grade(), gb = b.grade();
    if (ga != gb) return ga < gb;
    return a.indices() < b.indices();
  }

 private:
  std::uint32_t mask_ = 0;
};

// fd_j applied to a basis state: zero when j already occupied.
inline std::optional<std::pair<int, FockSubset>> creation(unsigned j, FockSubset a) {
  if (a.contains(j)) return std::nullopt;
  int sign = (a.count_below(j) % 2 == 0) ? 1 : -1;
  return std::make_pair(sign, a.with(j));
}

// f_j applied to a basis state: zero when j unoccupied.
inline std::optional<std::pair<int, FockSubset>> annihilation(unsigned j, FockSubset a) {
  if (!a.contains(j)) return std::nullopt;
  int sign = (a.count_below(j) % 2 == 0) ? 1 : -1;
  return std::make_pair(sign, a.without(j));
}

struct WittLetter {
  bool dagger = false;  // true: fd_j, false: f_j
  unsigned j = 1;
  friend bool operator==(const WittLetter& a, const WittLetter& b) {
    return a.dagger == b.dagger && a.j == b.j;
  }
  friend bool operator<(const WittLetter& a, const WittLetter& b) {
    if (a.dagger != b.dagger) return b.dagger;  // plain letters sort first
    return a.j < b.j;
  }
};

// Letters compose as written: {l_0, l_1, ..., l_k} acts as l_0(l_1(...l_k(state))).
inline std::optional<std::pair<int, FockSubset>> apply_letters(const std::vector<WittLetter>& w,
                                                               FockSubset a) {
  int sign = 1;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto step = it->dagger ? creation(it->j, a) : annihilation(it->j, a);
    if (!step) return std::nullopt;
    sign *= step->first;
    a = step->second;
  }
  return std::make_pair(sign, a);
}

// Finite Gaussian-rational combination of Fock basis states.
class SpinorElement {
 public:
  SpinorElement() = default;
  explicit SpinorElement(unsigned n) : n_(n) {}

  static SpinorElement basis_state(unsigned n, FockSubset a) {
    SpinorElement s(n);
    s.add(a, 1);
    return s;
  }
  static SpinorElement vacuum(unsigned n) { return basis_state(n, FockSubset::empty()); }

  unsigned n() const { return n_; }
  bool is_zero() const { return comps_.empty(); }
  const std::map<FockSubset, GaussianRational>& comps() const { return comps_; }

  void add(FockSubset a, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = comps_.find(a);
    if (it == comps_.end()) {
      comps_.emplace(a, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  SpinorElement& operator+=(const SpinorElement& o) {
    check_dim(o);
    for (const auto& [a, c] : o.comps_) add(a, c);
    return *this;
  }
  SpinorElement& operator-=(const SpinorElement& o) {
    check_dim(o);
    for (const auto& [a, c] : o.comps_) add(a, -c);
    return *this;
  }
  friend SpinorElement operator+(SpinorElement x, const SpinorElement& y) { return x += y; }
  friend SpinorElement operator-(SpinorElement x, const SpinorElement& y) { return x -= y; }
  SpinorElement operator*(const GaussianRational& c) const {
    SpinorElement r(n_);
    for (const auto& [a, v] : comps_) r.add(a, v * c);
    return r;
  }
  SpinorElement operator-() const { return *this * GaussianRational(-1); }

  friend bool operator==(const SpinorElement& x, const SpinorElement& y) {
    return x.n_ == y.n_ && x.comps_ == y.comps_;
  }
  friend bool operator!=(const SpinorElement& x, const SpinorElement& y) { return !(x == y); }

  // Pure spinor grade, or nullopt when components mix grades.
  std::optional<unsigned> pure_grade() const {
    std::optional<unsigned> g;
    for (const auto& [a, c] : comps_) {
      unsigned ga = a.grade();
      if (!g)
        g = ga;
      else if (*g != ga)
        return std::nullopt;
    }
    return g;
  }

  SpinorElement grade_component(unsigned r) const {
    SpinorElement s(n_);
    for (const auto& [a, c] : comps_)
      if (a.grade() == r) s.add(a, c);
    return s;
  }

  // Sesquilinear inner product in which the basis states are orthonormal
  // (conjugate-linear in the first argument).
  GaussianRational inner(const SpinorElement& o) const {
    check_dim(o);
    GaussianRational sum;
    for (const auto& [a, c] : comps_) {
      auto it = o.comps_.find(a);
      if (it != o.comps_.end()) sum += c.conj() * it->second;
    }
    return sum;
  }

 private:
  void check_dim(const SpinorElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("SpinorElement: dimension mismatch");
  }

  unsigned n_ = 0;
  std::map<FockSubset, GaussianRational> comps_;
};

inline SpinorElement apply_creation(unsigned j, const SpinorElement& s) {
  SpinorElement r(s.n());
  for (const auto& [a, c] : s.comps()) {
    if (auto step = creation(j, a)) r.add(step->second, c * GaussianRational(step->first));
  }
  return r;
}

inline SpinorElement apply_annihilation(unsigned j, const SpinorElement& s) {
  SpinorElement r(s.n());
  for (const auto& [a, c] : s.comps()) {
    if (auto step = annihilation(j, a)) r.add(step->second, c * GaussianRational(step->first));
  }
  return r;
}

// Scalar multiple of a word in the Witt letters, acting by left multiplication.
class WittWord {
 public:
  WittWord() = default;
  explicit WittWord(GaussianRational scalar) : scalar_(std::move(scalar)) {}
  WittWord(GaussianRational scalar, std::vector<WittLetter> letters)
      : scalar_(std::move(scalar)), letters_(std::move(letters)) {}

  static WittWord identity() { return WittWord(GaussianRational(1)); }
  static WittWord creation_op(unsigned j) { return WittWord(1, {WittLetter{true, j}}); }
  static WittWord annihilation_op(unsigned j) { return WittWord(1, {WittLetter{false, j}}); }

  const GaussianRational& scalar() const { return scalar_; }
  const std::vector<WittLetter>& letters() const { return letters_; }

  // Composition: (w * v)(s) = w(v(s)).
  WittWord operator*(const WittWord& v) const {
    std::vector<WittLetter> cat = letters_;
    cat.insert(cat.end(), v.letters_.begin(), v.letters_.end());
    return WittWord(scalar_ * v.scalar_, std::move(cat));
  }

  // Hermitian adjoint: reverse the letters, swap f <-> fd, conjugate the scalar.
  // <w s, t> = <s, hermitian_adjoint(w) t> for the orthonormal-state pairing.
  WittWord hermitian_adjoint() const {
    std::vector<WittLetter> rev(letters_.rbegin(), letters_.rend());
    for (auto& l : rev) l.dagger = !l.dagger;
    return WittWord(scalar_.conj(), std::move(rev));
  }

  SpinorElement apply(const SpinorElement& s) const {
    SpinorElement r(s.n());
    for (const auto& [a, c] : s.comps()) {
      if (auto step = apply_letters(letters_, a))
        r.add(step->second, c * scalar_ * GaussianRational(step->first));
    }
    return r;
  }

 private:
  GaussianRational scalar_{1};
  std::vector<WittLetter> letters_;
};

inline SpinorElement apply_word(const WittWord& w, const SpinorElement& s) { return w.apply(s); }

// S_n = S_{n-1} + fd_n S_{n-1}: returns (part without mode n, part t with
// fd_n t = remainder). The second component picks up (-1)^{grade-1} per state.
inline std::pair<SpinorElement, SpinorElement> split_last_mode(const SpinorElement& s) {
  unsigned n = s.n();
  if (n == 0) throw std::invalid_argument("split_last_mode: no modes");
  SpinorElement first(n), second(n);
  for (const auto& [a, c] : s.comps()) {
    if (!a.contains(n)) {
      first.add(a, c);
    } else {
      auto step = annihilation(n, a);  // fd_n (A minus n) = sign * A with the same sign
      second.add(step->second, c * GaussianRational(step->first));
    }
  }
  return {first, second};
}

}  // namespace hermon
