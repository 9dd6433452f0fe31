#pragma once

// Monomials z^p zbar^q in n commuting complex variables, dense exponent vectors.
// Mode indices are 1-based throughout (z_1 .. z_n), matching the operator algebra.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hermon {

struct Monomial {
  std::vector<std::uint32_t> z;
  std::vector<std::uint32_t> zbar;

  Monomial() = default;
  explicit Monomial(unsigned n) : z(n, 0), zbar(n, 0) {}
  Monomial(std::vector<std::uint32_t> ze, std::vector<std::uint32_t> zbe)
      : z(std::move(ze)), zbar(std::move(zbe)) {
    if (z.size() != zbar.size()) throw std::invalid_argument("Monomial: exponent vectors differ in size");
  }

  unsigned n() const { return static_cast<unsigned>(z.size()); }

  unsigned zdeg() const { return std::accumulate(z.begin(), z.end(), 0u); }
  unsigned zbardeg() const { return std::accumulate(zbar.begin(), zbar.end(), 0u); }
  unsigned degree() const { return zdeg() + zbardeg(); }
  std::pair<unsigned, unsigned> bidegree() const { return {zdeg(), zbardeg()}; }

  // Complex conjugation swaps the z and zbar exponents.
  Monomial conjugated() const { return Monomial(zbar, z); }

  Monomial operator*(const Monomial& o) const {
    if (n() != o.n()) throw std::invalid_argument("Monomial: dimension mismatch");
    Monomial m(*this);
    for (unsigned j = 0; j < n(); ++j) {
      m.z[j] += o.z[j];
      m.zbar[j] += o.zbar[j];
    }
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.z == b.z && a.zbar == b.zbar;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.z != b.z) return a.z < b.z;
    return a.zbar < b.zbar;
  }
};

}  // namespace hermon
