#pragma once

// Embedding factors: the operator polynomials that map a basis of the
// (n-1)-variable Hermitian monogenic space with label (c, d, s) into the
// n-variable space with label (a, b, r). Four generic cases depending on the
// degree jumps u = a-c, v = b-d and on whether the grade is kept (s = r) or
// raised by the trailing fd_n (s = r-1), plus the two anti-/holomorphic
// endpoint grades r = 0 and r = n.

#include <sstream>
#include <stdexcept>
#include <vector>

#include "hermon/jacobi.hpp"
#include "hermon/operator_poly.hpp"

namespace hermon {

enum class CaseTag : int { I = 0, II = 1, III = 2, IV = 3, R0 = 4, RN = 5 };

inline const char* to_string(CaseTag t) {
  switch (t) {
    case CaseTag::I: return "i";
    case CaseTag::II: return "ii";
    case CaseTag::III: return "iii";
    case CaseTag::IV: return "iv";
    case CaseTag::R0: return "r0";
    case CaseTag::RN: return "rn";
  }
  return "?";
}

// One step of the branching: which case produced the child, the degree
// parameters (l, j) of that case, and the child label (c, d, s).
struct BranchCase {
  CaseTag tag = CaseTag::I;
  long long l = 0;
  long long j = 0;
  unsigned c = 0;
  unsigned d = 0;
  unsigned s = 0;

  friend bool operator==(const BranchCase& x, const BranchCase& y) {
    return x.tag == y.tag && x.l == y.l && x.j == y.j && x.c == y.c && x.d == y.d && x.s == y.s;
  }
};

// Degree-m polynomial slice of the monogenic embedding (m = -1 gives the zero
// operator, the natural lower boundary of the recursions it appears in).
inline OperatorPolynomial s_poly(int m, long long j, long long i, unsigned n) {
  if (n < 2) throw std::invalid_argument("s_poly: need n >= 2");
  if (m < 0) return OperatorPolynomial::zero(n);
  OperatorPolynomial tilde_diff = op_ztilde(n) - op_ztilde_dag(n);
  OperatorPolynomial pair = op_last_pair(n);
  if (m % 2 == 0) {
    int l = m / 2;
    OperatorPolynomial out = OperatorPolynomial::from_scalar(qpoly(l, i + n - 2, j, n));
    out -= qpoly(l - 1, i + n - 1, j + 1, n) * (pair * tilde_diff);
    return out;
  }
  int l = (m - 1) / 2;
  OperatorPolynomial out =
      GaussianRational(l + j + 1) * (qpoly(l, i + n - 1, j, n) * tilde_diff);
  out -= GaussianRational(l + i + n - 1) * (qpoly(l, i + n - 2, j + 1, n) * pair);
  return out;
}

namespace detail {

[[noreturn]] inline void x_factor_error(const std::string& what) {
  throw std::invalid_argument("x_factor: " + what);
}

// (t1 . ztilde + t2 . ztilde_dag)
inline OperatorPolynomial tilde_combo(unsigned n, long long t1, long long t2) {
  return GaussianRational(t1) * op_ztilde(n) + GaussianRational(t2) * op_ztilde_dag(n);
}

}  // namespace detail

// Case classification for the factor mapping label (n-1, c, d, s) into
// (n, a, b, r). Throws when a side condition of the decomposition is violated.
inline BranchCase classify_branch(unsigned n, unsigned r, unsigned s, unsigned a, unsigned b,
                                  unsigned c, unsigned d) {
  if (n < 2) detail::x_factor_error("need n >= 2");
  if (!SpaceLabel{n, a, b, r}.valid()) {
    std::ostringstream os;
    os << "parent label (n=" << n << ", a=" << a << ", b=" << b << ", r=" << r << ") is invalid";
    detail::x_factor_error(os.str());
  }
  if (!SpaceLabel{n - 1, c, d, s}.valid()) {
    std::ostringstream os;
    os << "child label (n=" << n - 1 << ", c=" << c << ", d=" << d << ", s=" << s
       << ") is invalid";
    detail::x_factor_error(os.str());
  }
  if (c > a) detail::x_factor_error("child degree c exceeds a");
  if (d > b) detail::x_factor_error("child degree d exceeds b");

  if (r == 0) {
    // Anti-holomorphic endpoint: only grade-0 children, pure zbar_n powers.
    if (s != 0) detail::x_factor_error("r = 0 admits only grade-0 children");
    return BranchCase{CaseTag::R0, 0, static_cast<long long>(b - d), c, d, s};
  }
  if (r == n) {
    // Holomorphic endpoint: only grade n-1 children, pure z_n powers times fd_n.
    if (s != n - 1) detail::x_factor_error("r = n admits only grade n-1 children");
    return BranchCase{CaseTag::RN, 0, static_cast<long long>(a - c), c, d, s};
  }
  if (s != r && s + 1 != r)
    detail::x_factor_error("child grade s must equal r or r-1");

  long long u = static_cast<long long>(a) - c;
  long long v = static_cast<long long>(b) - d;
  if (s == r) {
    if (u <= v) return BranchCase{CaseTag::I, u, v - u, c, d, s};
    return BranchCase{CaseTag::III, v, u - v, c, d, s};
  }
  if (u < v) return BranchCase{CaseTag::II, u, v - u, c, d, s};
  return BranchCase{CaseTag::IV, v, u - v, c, d, s};
}

// The embedding factor itself, unnormalized.
inline OperatorPolynomial x_factor(unsigned n, unsigned r, unsigned s, unsigned a, unsigned b,
                                   unsigned c, unsigned d) {
  BranchCase bc = classify_branch(n, r, s, a, b, c, d);
  long long l = bc.l, j = bc.j;
  long long cc = c, dd = d, rr = r, nn = n;
  OperatorPolynomial fd_n = op_creation(n, n);

  switch (bc.tag) {
    case CaseTag::R0:
      return OperatorPolynomial::from_scalar(ScalarPolynomial::zbar(n, n).pow(b - d));
    case CaseTag::RN:
      return ScalarPolynomial::z(n, n).pow(a - c) * fd_n;
    case CaseTag::I: {
      ScalarPolynomial zbj = ScalarPolynomial::zbar(n, n).pow(static_cast<unsigned>(j));
      OperatorPolynomial out = GaussianRational((l + nn + cc + dd - 1) * (cc + rr)) *
                               (zbj * s_poly(static_cast<int>(2 * l), j, cc + dd, n));
      out += zbj * (s_poly(static_cast<int>(2 * l - 1), j, cc + dd + 1, n) *
                    detail::tilde_combo(n, dd + nn - 1 - rr, cc + rr));
      return out;
    }
    case CaseTag::II: {
      ScalarPolynomial zbj = ScalarPolynomial::zbar(n, n).pow(static_cast<unsigned>(j - 1));
      OperatorPolynomial out =
          GaussianRational(l + j) * (zbj * (s_poly(static_cast<int>(2 * l), j - 1, cc + dd + 1, n) *
                                            detail::tilde_combo(n, dd + nn - rr, cc + rr - 1)));
      out -= GaussianRational(dd + nn - rr) * (zbj * s_poly(static_cast<int>(2 * l + 1), j - 1, cc + dd, n));
      return out;
    }
    case CaseTag::III: {
      ScalarPolynomial zj = ScalarPolynomial::z(n, n).pow(static_cast<unsigned>(j - 1));
      OperatorPolynomial out =
          GaussianRational(l + j) *
          (zj * (s_poly(static_cast<int>(2 * l), j - 1, cc + dd + 1, n) * fd_n *
                 detail::tilde_combo(n, dd + nn - 1 - rr, cc + rr)));
      out -= GaussianRational(cc + rr) * (zj * (s_poly(static_cast<int>(2 * l + 1), j - 1, cc + dd, n) * fd_n));
      return out;
    }
    case CaseTag::IV: {
      ScalarPolynomial zj = ScalarPolynomial::z(n, n).pow(static_cast<unsigned>(j));
      OperatorPolynomial out = GaussianRational((l + nn + cc + dd - 1) * (dd + nn - rr)) *
                               (zj * (s_poly(static_cast<int>(2 * l), j, cc + dd, n) * fd_n));
      out += zj * (s_poly(static_cast<int>(2 * l - 1), j, cc + dd + 1, n) * fd_n *
                   detail::tilde_combo(n, dd + nn - rr, cc + rr - 1));
      return out;
    }
  }
  detail::x_factor_error("unreachable");
}

// Degree-raising factor of the refinement of monogenics into Hermitian
// monogenics: (b+n-r) z + (a+r) zdag, defined for the interior grades only.
inline OperatorPolynomial fischer_factor(unsigned n, unsigned a, unsigned b, unsigned r) {
  if (r < 1 || r > n - 1)
    throw std::invalid_argument("fischer_factor: requires 1 <= r <= n-1");
  return GaussianRational(static_cast<long long>(b) + n - r) * op_z(n) +
         GaussianRational(static_cast<long long>(a) + r) * op_zdag(n);
}

// Reinterpret an (n-1)-variable spinor polynomial inside n variables: same
// variable indices, same Fock states, zero exponent on the new last mode.
inline SpinorPolynomial embed(const SpinorPolynomial& f, unsigned n) {
  if (f.n() > n) throw std::invalid_argument("embed: target dimension too small");
  if (f.n() == n) return f;
  SpinorPolynomial out(n);
  for (const auto& [state, poly] : f.components()) {
    ScalarPolynomial lifted(n);
    for (const auto& [m, coeff] : poly.terms()) {
      Monomial big(n);
      for (unsigned v = 0; v < f.n(); ++v) {
        big.z[v] = m.z[v];
        big.zbar[v] = m.zbar[v];
      }
      lifted.add_term(big, coeff);
    }
    out.add_component(state, lifted);
  }
  return out;
}

}  // namespace hermon
