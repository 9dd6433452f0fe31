#pragma once

// Jacobi polynomials in the hypergeometric-sum form that stays meaningful for
// negative integer parameters, and their radial counterparts obtained by the
// substitution (t-1)/2 -> -|z~|^2, (t+1)/2 -> z_n zbar_n (so t becomes the
// difference of those squared radii on the unit sphere).

#include <sstream>
#include <string>
#include <vector>

#include "hermon/report.hpp"
#include "hermon/scalar_poly.hpp"

namespace hermon {

// Dense univariate polynomial over the rationals; coefficient k multiplies t^k.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static TPoly zero() { return TPoly(); }
  static TPoly constant(BigRat v) { return TPoly({std::move(v)}); }
  static TPoly t() { return TPoly({BigRat(0), BigRat(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  BigRat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigRat(0); }
  const std::vector<BigRat>& coeffs() const { return c_; }

  TPoly& operator+=(const TPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  TPoly& operator-=(const TPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }

  friend TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return TPoly();
    std::vector<BigRat> p(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
    return TPoly(std::move(p));
  }
  friend TPoly operator*(const BigRat& s, TPoly a) {
    for (auto& v : a.c_) v *= s;
    a.trim();
    return a;
  }

  TPoly pow(unsigned k) const {
    TPoly r = constant(BigRat(1));
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  BigRat eval(const BigRat& x) const {
    BigRat v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      v *= x;
      v += *it;
    }
    return v;
  }

  friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      if (!first) os << " + ";
      os << c_[k].str();
      if (k >= 1) os << "*t";
      if (k >= 2) os << "^" << k;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigRat> c_;
};

// P_l^{alpha,beta}(t) = sum_s C(l+alpha, s) C(l+beta, l-s) ((t-1)/2)^{l-s} ((t+1)/2)^s,
// with the generalized binomial, valid for any integer parameters. l = -1 gives 0.
inline TPoly jacobi(int l, long long alpha, long long beta) {
  if (l < 0) return TPoly::zero();
  TPoly minus = TPoly({BigRat(-1, 2), BigRat(1, 2)});  // (t-1)/2
  TPoly plus = TPoly({BigRat(1, 2), BigRat(1, 2)});    // (t+1)/2
  TPoly sum;
  for (int s = 0; s <= l; ++s) {
    BigInt c = binomial_gen(l + alpha, s) * binomial_gen(l + beta, l - s);
    if (c == 0) continue;
    sum += BigRat(c) * (minus.pow(l - s) * plus.pow(s));
  }
  return sum;
}

// Radial companion on C^n: the same sum with ((t-1)/2, (t+1)/2) replaced by
// (-|z~|^2, z_n zbar_n), where |z~|^2 = sum_{j<n} z_j zbar_j. l = -1 gives 0.
inline ScalarPolynomial qpoly(int l, long long alpha, long long beta, unsigned n) {
  if (n < 1) throw std::invalid_argument("qpoly: need n >= 1");
  ScalarPolynomial zero(n);
  if (l < 0) return zero;
  ScalarPolynomial minus(n);  // -|z~|^2
  for (unsigned j = 1; j + 1 <= n; ++j)
    minus -= ScalarPolynomial::z(n, j) * ScalarPolynomial::zbar(n, j);
  ScalarPolynomial plus = ScalarPolynomial::z(n, n) * ScalarPolynomial::zbar(n, n);

  std::vector<ScalarPolynomial> mp{ScalarPolynomial::one(n)}, pp{ScalarPolynomial::one(n)};
  for (int k = 1; k <= l; ++k) {
    mp.push_back(mp.back() * minus);
    pp.push_back(pp.back() * plus);
  }

  ScalarPolynomial sum(n);
  for (int s = 0; s <= l; ++s) {
    BigInt c = binomial_gen(l + alpha, s) * binomial_gen(l + beta, l - s);
    if (c == 0) continue;
    sum += mp[l - s] * pp[s] * GaussianRational(BigRat(c));
  }
  return sum;
}

// Derivative and contiguity identities of the radial polynomials at n = 2,
// checked exactly over the whole grid 0 <= l, alpha, beta <= the given bounds.
inline CheckReport check_q_identities(int l_max, long long a_max, long long b_max) {
  CheckReport rep;
  const unsigned n = 2;
  auto z1 = ScalarPolynomial::z(n, 1), zb1 = ScalarPolynomial::zbar(n, 1);
  auto z2 = ScalarPolynomial::z(n, 2), zb2 = ScalarPolynomial::zbar(n, 2);
  auto fail = [&](int l, long long a, long long b, const char* which) {
    std::ostringstream os;
    os << "q identity " << which << " fails at l=" << l << " alpha=" << a << " beta=" << b;
    rep.failures.push_back(os.str());
  };
  for (int l = 0; l <= l_max; ++l)
    for (long long a = 0; a <= a_max; ++a)
      for (long long b = 0; b <= b_max; ++b) {
        ScalarPolynomial q = qpoly(l, a, b, n);
        ScalarPolynomial q_da = qpoly(l - 1, a + 1, b, n);   // lowered degree, raised alpha
        ScalarPolynomial q_db = qpoly(l - 1, a, b + 1, n);   // lowered degree, raised beta
        GaussianRational lb(static_cast<long long>(l) + b), la(static_cast<long long>(l) + a);

        rep.checked += 4;
        if (q.derive_z(1) != zb1 * q_da * (-lb)) fail(l, a, b, "d/dz1");
        if (q.derive_zbar(1) != z1 * q_da * (-lb)) fail(l, a, b, "d/dzbar1");
        if (q.derive_z(2) != zb2 * q_db * la) fail(l, a, b, "d/dz2");
        if (q.derive_zbar(2) != z2 * q_db * la) fail(l, a, b, "d/dzbar2");

        if (b >= 1) {
          rep.checked += 1;
          ScalarPolynomial lhs = q * GaussianRational(b) + z2 * zb2 * q_db * la;
          if (lhs != qpoly(l, a, b - 1, n) * lb) fail(l, a, b, "beta-lowering");
        } else {
          rep.skipped += 1;
        }
        if (a >= 1) {
          rep.checked += 1;
          ScalarPolynomial lhs = q * GaussianRational(a) - z1 * zb1 * q_da * lb;
          if (lhs != qpoly(l, a - 1, b, n) * la) fail(l, a, b, "alpha-lowering");
        } else {
          rep.skipped += 1;
        }
      }
  return rep;
}

// Four-term contiguity recurrences expressing P_{l-1}^{alpha,beta} (and its
// products with t, (1+t)/2, (1-t)/2) through P_l with lowered parameters.
// Grid points whose lowered superscripts would go negative are skipped, as are
// (defensively) points where a denominator l+alpha or l+beta vanishes.
inline CheckReport check_jacobi_recurrences(int l_max, long long a_max, long long b_max) {
  CheckReport rep;
  auto fail = [&](int l, long long a, long long b, const char* which) {
    std::ostringstream os;
    os << "recurrence " << which << " fails at l=" << l << " alpha=" << a << " beta=" << b;
    rep.failures.push_back(os.str());
  };
  TPoly one = TPoly::constant(BigRat(1));
  TPoly t = TPoly::t();
  TPoly half_plus = TPoly({BigRat(1, 2), BigRat(1, 2)});    // (1+t)/2
  TPoly half_minus = TPoly({BigRat(1, 2), BigRat(-1, 2)});  // (1-t)/2

  for (int l = 1; l <= l_max; ++l)
    for (long long a = 0; a <= a_max; ++a)
      for (long long b = 0; b <= b_max; ++b) {
        if (l + a == 0 || l + b == 0) {
          rep.skipped += 4;
          std::ostringstream os;
          os << "skipped l=" << l << " alpha=" << a << " beta=" << b << ": zero denominator";
          rep.notes.push_back(os.str());
          continue;
        }
        BigRat la(l + a), lb(l + b);
        TPoly prev = jacobi(l - 1, a, b);
        TPoly pa2 = jacobi(l, a - 2, b), pa1 = jacobi(l, a - 1, b);
        TPoly pb1 = jacobi(l, a, b - 1), pb2 = jacobi(l, a, b - 2);
        TPoly left_pair =
            (BigRat(-(l + a - 1)) / lb) * pa2 + (BigRat(a - 1) / lb) * pa1;  // needs alpha >= 2
        TPoly right_pair =
            (BigRat(-(b - 1)) / la) * pb1 + (BigRat(l + b - 1) / la) * pb2;  // needs beta >= 2

        if (a >= 2 && b >= 2) {
          rep.checked += 2;
          if (prev != left_pair + right_pair) fail(l, a, b, "plain");
          TPoly lhs_t = t * prev;
          TPoly rhs_t = (BigRat(l + a - 1) / lb) * pa2 - (BigRat(a - 1) / lb) * pa1 +
                        (BigRat(-(b - 1)) / la) * pb1 + (BigRat(l + b - 1) / la) * pb2;
          if (lhs_t != rhs_t) fail(l, a, b, "t-weighted");
        } else {
          rep.skipped += 2;
        }
        if (b >= 2) {
          rep.checked += 1;
          if (half_plus * prev != right_pair) fail(l, a, b, "(1+t)/2");
        } else {
          rep.skipped += 1;
        }
        if (a >= 2) {
          rep.checked += 1;
          if (half_minus * prev != left_pair) fail(l, a, b, "(1-t)/2");
        } else {
          rep.skipped += 1;
        }
      }
  return rep;
}

}  // namespace hermon
