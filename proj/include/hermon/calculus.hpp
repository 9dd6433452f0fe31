#pragma once

// Differential and multiplication operators on spinor-valued polynomials, the
// sphere inner product, and Gram matrices. Everything is exact: the sphere
// integral of a monomial is a closed-form rational.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hermon/spinor_poly.hpp"

namespace hermon {

enum class VectorKind {
  Plain,   // derivative: sum_j fd_j d/dz_j      multiplication: sum_j f_j z_j
  Dagger,  // derivative: sum_j f_j d/dzbar_j    multiplication: sum_j fd_j zbar_j
};

// The two Hermitian Dirac operators.
inline SpinorPolynomial hermitian_dirac(const SpinorPolynomial& f, VectorKind which) {
  unsigned n = f.n();
  SpinorPolynomial r(n);
  for (unsigned j = 1; j <= n; ++j) {
    if (which == VectorKind::Plain)
      r += apply_creation(j, f.derive_z(j));
    else
      r += apply_annihilation(j, f.derive_zbar(j));
  }
  return r;
}

// Multiplication by the vector variable or its Hermitian conjugate.
inline SpinorPolynomial mult_vector(const SpinorPolynomial& f, VectorKind which) {
  unsigned n = f.n();
  SpinorPolynomial r(n);
  for (unsigned j = 1; j <= n; ++j) {
    if (which == VectorKind::Plain)
      r += apply_annihilation(j, ScalarPolynomial::z(n, j) * f);
    else
      r += apply_creation(j, ScalarPolynomial::zbar(n, j) * f);
  }
  return r;
}

// Euclidean Dirac operator in the Witt decomposition: 2 (dagger - plain).
inline SpinorPolynomial euclidean_dirac(const SpinorPolynomial& f) {
  return (hermitian_dirac(f, VectorKind::Dagger) - hermitian_dirac(f, VectorKind::Plain)) *
         GaussianRational(2);
}

// The twisted Dirac operator: 2i (dagger + plain).
inline SpinorPolynomial dirac_J(const SpinorPolynomial& f) {
  return (hermitian_dirac(f, VectorKind::Dagger) + hermitian_dirac(f, VectorKind::Plain)) *
         (GaussianRational(2) * GaussianRational::i());
}

// Laplacian of R^{2n}, acting componentwise: sum_j 4 d2/dz_j dzbar_j.
inline SpinorPolynomial laplacian(const SpinorPolynomial& f) {
  unsigned n = f.n();
  SpinorPolynomial r(n);
  for (unsigned j = 1; j <= n; ++j)
    r += f.derive_z(j).derive_zbar(j) * GaussianRational(4);
  return r;
}

struct MonogenicityReport {
  bool holds = false;
  SpinorPolynomial plain_image;   // image under the plain Hermitian Dirac operator
  SpinorPolynomial dagger_image;  // image under the dagger one
};

inline MonogenicityReport hermitian_monogenicity(const SpinorPolynomial& f) {
  MonogenicityReport rep;
  rep.plain_image = hermitian_dirac(f, VectorKind::Plain);
  rep.dagger_image = hermitian_dirac(f, VectorKind::Dagger);
  rep.holds = rep.plain_image.is_zero() && rep.dagger_image.is_zero();
  return rep;
}

inline bool is_hermitian_monogenic(const SpinorPolynomial& f) {
  return hermitian_monogenicity(f).holds;
}

// The (n, a, b, r) of a nonzero element homogeneous in bidegree and grade;
// nullopt when bidegree or grade is mixed. Throws on the zero polynomial.
inline std::optional<SpaceLabel> label_of(const SpinorPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("label_of: zero polynomial has no label");
  auto bd = f.bidegree();
  auto g = f.pure_grade();
  if (!bd || !g) return std::nullopt;
  return SpaceLabel{f.n(), bd->first, bd->second, *g};
}

// Integral over the unit sphere S^{2n-1} (normalized measure) of
// z^p zbar^q: zero unless p == q, and then (n-1)! prod_j p_j! / (n-1+|p|)!.
inline BigRat sphere_monomial_integral(const Monomial& m) {
  if (m.z != m.zbar) return BigRat(0);
  unsigned n = m.n();
  BigInt num = factorial(n - 1);
  unsigned total = 0;
  for (unsigned j = 0; j < n; ++j) {
    num *= factorial(m.z[j]);
    total += m.z[j];
  }
  return BigRat(num, factorial(n - 1 + total));
}

// Sphere inner product <f, g> = sum_A integral conj(f_A) g_A, conjugate-linear
// in the first slot. Terms pair only when the conjugated product is balanced,
// i.e. the per-variable difference zdeg - zbardeg agrees between f and g; terms
// are bucketed on that key so only matching pairs are visited.
inline GaussianRational inner_product(const SpinorPolynomial& f, const SpinorPolynomial& g) {
  if (f.n() != g.n()) throw std::invalid_argument("inner_product: dimension mismatch");
  unsigned n = f.n();
  GaussianRational total;
  for (const auto& [state, fa] : f.components()) {
    auto it = g.components().find(state);
    if (it == g.components().end()) continue;
    const ScalarPolynomial& ga = it->second;

    std::map<std::vector<long long>, std::vector<const std::pair<const Monomial, GaussianRational>*>>
        buckets;
    for (const auto& term : ga.terms()) {
      std::vector<long long> key(n);
      for (unsigned j = 0; j < n; ++j)
        key[j] = static_cast<long long>(term.first.z[j]) -
                 static_cast<long long>(term.first.zbar[j]);
      buckets[key].push_back(&term);
    }

    for (const auto& [mf, cf] : fa.terms()) {
      std::vector<long long> key(n);
      for (unsigned j = 0; j < n; ++j)
        key[j] = static_cast<long long>(mf.z[j]) - static_cast<long long>(mf.zbar[j]);
      auto bit = buckets.find(key);
      if (bit == buckets.end()) continue;
      for (const auto* gterm : bit->second) {
        // conj(z^a zbar^b) * z^c zbar^d = z^{b+c} zbar^{a+d}; balanced by key match.
        Monomial prod(n);
        for (unsigned j = 0; j < n; ++j) {
          prod.z[j] = mf.zbar[j] + gterm->first.z[j];
          prod.zbar[j] = mf.z[j] + gterm->first.zbar[j];
        }
        BigRat w = sphere_monomial_integral(prod);
        if (w != 0) total += cf.conj() * gterm->second * GaussianRational(w);
      }
    }
  }
  return total;
}

inline std::vector<std::vector<GaussianRational>> gram_matrix(
    const std::vector<SpinorPolynomial>& basis) {
  std::size_t m = basis.size();
  std::vector<std::vector<GaussianRational>> g(m, std::vector<GaussianRational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      g[i][j] = inner_product(basis[i], basis[j]);
      if (j != i) g[j][i] = g[i][j].conj();
    }
  return g;
}

}  // namespace hermon
