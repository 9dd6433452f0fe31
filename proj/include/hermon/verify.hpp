#pragma once

// Verification suites behind the `verify` subcommand. Each suite returns a
// CheckReport; defaults match the certification bounds the project ships with.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hermon/branching.hpp"
#include "hermon/calculus.hpp"
#include "hermon/jacobi.hpp"
#include "hermon/kernel.hpp"
#include "hermon/report.hpp"

namespace hermon {

// f_j f_k + f_k f_j = 0, daggered likewise, and f_j f†_k + f†_k f_j = δ_jk,
// verified on every Fock basis state.
inline CheckReport verify_car(unsigned n_max = 4) {
  CheckReport rep;
  for (unsigned n = 1; n <= n_max; ++n)
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
      SpinorElement st = SpinorElement::basis_state(n, FockSubset(mask));
      for (unsigned j = 1; j <= n; ++j)
        for (unsigned k = 1; k <= n; ++k) {
          auto fail = [&](const std::string& what) {
            std::ostringstream os;
            os << "car: " << what << " fails at n=" << n << " j=" << j << " k=" << k
               << " state mask=" << mask;
            rep.failures.push_back(os.str());
          };
          ++rep.checked;
          if (!(apply_annihilation(j, apply_annihilation(k, st)) +
                apply_annihilation(k, apply_annihilation(j, st)))
                   .is_zero())
            fail("{f_j, f_k} = 0");
          ++rep.checked;
          if (!(apply_creation(j, apply_creation(k, st)) +
                apply_creation(k, apply_creation(j, st)))
                   .is_zero())
            fail("{f+_j, f+_k} = 0");
          ++rep.checked;
          SpinorElement anti =
              apply_annihilation(j, apply_creation(k, st)) +
              apply_creation(k, apply_annihilation(j, st));
          SpinorElement want = (j == k) ? st : SpinorElement(n);
          if (!(anti == want)) fail("{f_j, f+_k} = delta_jk");
        }
    }
  return rep;
}

// Second-order operator identities on every monomial-times-state input of
// total degree <= deg_max: the componentwise Laplacian agrees with the
// Hermitian-Dirac anticommutator, both Hermitian Dirac operators square to
// zero, and the vector-variable anticommutator is |z|^2 times the identity.
inline CheckReport verify_laplacian(std::vector<unsigned> dims = {1, 2, 3},
                                    unsigned deg_max = 4) {
  CheckReport rep;
  using VectorKind::Dagger;
  using VectorKind::Plain;
  for (unsigned n : dims) {
    ScalarPolynomial norm2(n);
    for (unsigned j = 1; j <= n; ++j)
      norm2 += ScalarPolynomial::z(n, j) * ScalarPolynomial::zbar(n, j);
    for (unsigned deg = 0; deg <= deg_max; ++deg)
      for (const auto& e : oracle::compositions(deg, 2 * n)) {
        Monomial m{std::vector<std::uint32_t>(e.begin(), e.begin() + n),
                   std::vector<std::uint32_t>(e.begin() + n, e.end())};
        ScalarPolynomial mp(n);
        mp.add_term(m, GaussianRational(1));
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
          SpinorPolynomial f(mp, FockSubset(mask));
          auto fail = [&](const std::string& what) {
            std::ostringstream os;
            os << "laplacian: " << what << " fails at n=" << n << " mask=" << mask
               << " monomial deg=" << deg;
            rep.failures.push_back(os.str());
          };
          ++rep.checked;
          SpinorPolynomial anti = hermitian_dirac(hermitian_dirac(f, Dagger), Plain) +
                                  hermitian_dirac(hermitian_dirac(f, Plain), Dagger);
          if (!(laplacian(f) == anti * GaussianRational(4)))
            fail("Delta = 4(dz dz+ + dz+ dz)");
          ++rep.checked;
          if (!hermitian_dirac(hermitian_dirac(f, Plain), Plain).is_zero())
            fail("(dz)^2 = 0");
          ++rep.checked;
          if (!hermitian_dirac(hermitian_dirac(f, Dagger), Dagger).is_zero())
            fail("(dz+)^2 = 0");
          ++rep.checked;
          SpinorPolynomial vec = mult_vector(mult_vector(f, Dagger), Plain) +
                                 mult_vector(mult_vector(f, Plain), Dagger);
          if (!(vec == norm2 * f)) fail("z z+ + z+ z = |z|^2 id");
        }
      }
  }
  return rep;
}

inline CheckReport verify_qprops(unsigned l_max = 6, unsigned a_max = 6, unsigned b_max = 6) {
  return check_q_identities(l_max, a_max, b_max);
}

inline CheckReport verify_jacobi(unsigned l_max = 6, unsigned a_max = 6, unsigned b_max = 6) {
  return check_jacobi_recurrences(l_max, a_max, b_max);
}

inline CheckReport verify_appell(unsigned a_max = 4, unsigned b_max = 4) {
  return appell_check(a_max, b_max);
}

// Degree-k monogenic spaces: every assembled element is Dirac-closed and the
// total count matches both the closed dimension formula and the brute-force
// kernel dimension.
inline CheckReport verify_theorem1(std::vector<unsigned> dims = {2, 3}, unsigned k_max = 3) {
  CheckReport rep;
  for (unsigned n : dims)
    for (unsigned k = 0; k <= k_max; ++k) {
      auto basis = fischer_basis(n, k);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        ++rep.checked;
        if (!euclidean_dirac(basis[i]).is_zero()) {
          std::ostringstream os;
          os << "theorem1: element " << i << " of (n=" << n << ",k=" << k
             << ") is not Dirac-closed";
          rep.failures.push_back(os.str());
        }
      }
      BigInt formula = (BigInt(1) << n) * (binomial_gen(k + 2 * n - 1, 2 * n - 1) -
                                           binomial_gen(k + 2 * n - 2, 2 * n - 1));
      ++rep.checked;
      if (BigInt(basis.size()) != formula) {
        std::ostringstream os;
        os << "theorem1: count " << basis.size() << " != closed formula " << formula
           << " at (n=" << n << ",k=" << k << ")";
        rep.failures.push_back(os.str());
      }
      std::size_t oracle_dim = monogenic_kernel_dim(n, k);
      ++rep.checked;
      if (basis.size() != oracle_dim) {
        std::ostringstream os;
        os << "theorem1: count " << basis.size() << " != kernel dimension " << oracle_dim
           << " at (n=" << n << ",k=" << k << ")";
        rep.failures.push_back(os.str());
      }
    }
  return rep;
}

inline CheckReport verify_theorem2(std::vector<unsigned> dims = {2, 3}, unsigned k_max = 2) {
  CheckReport rep;
  for (unsigned n : dims)
    for (unsigned k = 0; k <= k_max; ++k) {
      CheckReport one = theorem2_check(n, k);
      std::ostringstream os;
      os << "theorem2 (n=" << n << ",k=" << k << "): ";
      for (auto& note : one.notes) rep.notes.push_back(os.str() + note);
      one.notes.clear();
      rep.merge(one);
    }
  return rep;
}

namespace detail {

inline void check_gram_diagonal(const std::vector<SpinorPolynomial>& basis,
                                const std::string& what, CheckReport& rep) {
  auto g = gram_matrix(basis);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      ++rep.checked;
      bool ok = (i == j) ? (g[i][j].im() == 0 && g[i][j].re() > 0) : g[i][j].is_zero();
      if (!ok) {
        std::ostringstream os;
        os << "orthogonality: " << what << " gram[" << i << "][" << j
           << "] = " << to_string(g[i][j]) << (i == j ? " (want positive real)" : " (want 0)");
        rep.failures.push_back(os.str());
      }
    }
}

}  // namespace detail

inline CheckReport verify_orthogonality(std::vector<unsigned> dims = {2, 3}, unsigned a_max = 3,
                                        unsigned b_max = 3) {
  CheckReport rep;
  for (unsigned n : dims)
    for (unsigned a = 0; a <= a_max; ++a)
      for (unsigned b = 0; b <= b_max; ++b)
        for (unsigned r = 0; r <= n; ++r) {
          if (!SpaceLabel{n, a, b, r}.valid()) continue;
          std::vector<SpinorPolynomial> basis;
          for (auto& node : build_basis(n, a, b, r)) basis.push_back(std::move(node.element));
          std::ostringstream what;
          what << "build_basis(" << n << "," << a << "," << b << "," << r << ")";
          detail::check_gram_diagonal(basis, what.str(), rep);
        }
  for (unsigned a = 0; a <= a_max; ++a)
    for (unsigned b = 0; b <= b_max; ++b)
      for (unsigned r = 0; r <= 2; ++r) {
        if (!SpaceLabel{2, a, b, r}.valid()) continue;
        std::vector<SpinorPolynomial> basis;
        for (auto& e : basis_dim2(a, b, r)) basis.push_back(std::move(e.element));
        std::ostringstream what;
        what << "basis_dim2(" << a << "," << b << "," << r << ")";
        detail::check_gram_diagonal(basis, what.str(), rep);
      }
  return rep;
}

// Counting: closed-form list sizes in dimension 2, and the recursive
// dimension against the brute-force kernel dimension.
inline CheckReport verify_dims(std::vector<unsigned> dims = {2, 3}, unsigned a_max = 2,
                               unsigned b_max = 2, unsigned dim2_max = 4) {
  CheckReport rep;
  for (unsigned a = 0; a <= dim2_max; ++a)
    for (unsigned b = 0; b <= dim2_max; ++b) {
      auto expect = [&](unsigned r, std::size_t want) {
        ++rep.checked;
        std::size_t got = basis_dim2(a, b, r).size();
        if (got != want) {
          std::ostringstream os;
          os << "dims: basis_dim2(" << a << "," << b << "," << r << ") has " << got
             << " elements, want " << want;
          rep.failures.push_back(os.str());
        }
      };
      if (a == 0) expect(0, b + 1);
      if (b == 0) expect(2, a + 1);
      expect(1, a + b + 2);
    }
  for (unsigned n : dims)
    for (unsigned a = 0; a <= a_max; ++a)
      for (unsigned b = 0; b <= b_max; ++b)
        for (unsigned r = 0; r <= n; ++r) {
          ++rep.checked;
          unsigned long long got = dimension(n, a, b, r);
          std::size_t want =
              SpaceLabel{n, a, b, r}.valid() ? hmonogenic_kernel_dim(n, a, b, r) : 0;
          if (got != want) {
            std::ostringstream os;
            os << "dims: dimension(" << n << "," << a << "," << b << "," << r << ") = " << got
               << " but kernel dimension = " << want;
            rep.failures.push_back(os.str());
          }
        }
  return rep;
}

// ---------------------------------------------------------------------------

struct SuiteOptions {
  std::optional<unsigned> a_max;
  std::optional<unsigned> b_max;
  std::optional<unsigned> n;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "appell",   "qprops",   "jacobi",        "car", "laplacian",
      "theorem1", "theorem2", "orthogonality", "dims"};
  return names;
}

inline CheckReport run_suite(const std::string& name, const SuiteOptions& opt = {}) {
  auto dims_or = [&](std::vector<unsigned> dflt) {
    return opt.n ? std::vector<unsigned>{*opt.n} : dflt;
  };
  if (name == "appell") return verify_appell(opt.a_max.value_or(4), opt.b_max.value_or(4));
  if (name == "qprops") return verify_qprops(6, opt.a_max.value_or(6), opt.b_max.value_or(6));
  if (name == "jacobi") return verify_jacobi(6, opt.a_max.value_or(6), opt.b_max.value_or(6));
  if (name == "car") return verify_car(opt.n.value_or(4));
  if (name == "laplacian") return verify_laplacian(dims_or({1, 2, 3}));
  if (name == "theorem1") return verify_theorem1(dims_or({2, 3}));
  if (name == "theorem2") return verify_theorem2(dims_or({2, 3}));
  if (name == "orthogonality")
    return verify_orthogonality(dims_or({2, 3}), opt.a_max.value_or(3), opt.b_max.value_or(3));
  if (name == "dims")
    return verify_dims(dims_or({2, 3}), opt.a_max.value_or(2), opt.b_max.value_or(2));
  throw std::invalid_argument("unknown suite: " + name);
}

// Report as printable text; one stable format for all suites.
inline std::string format_report(const std::string& suite, const CheckReport& rep) {
  std::ostringstream os;
  os << "suite " << suite << ": checked " << rep.checked << ", skipped " << rep.skipped
     << ", failures " << rep.failures.size() << "\n";
  for (const auto& f : rep.failures) os << "  FAIL " << f << "\n";
  for (const auto& n : rep.notes) os << "  note " << n << "\n";
  os << (rep.ok() ? "PASS" : "FAIL") << " " << suite << "\n";
  return os.str();
}

}  // namespace hermon
