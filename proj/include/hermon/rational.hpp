#pragma once

// Exact scalars: arbitrary-precision rationals and Gaussian rationals a + b*i.
// All arithmetic in the library bottoms out here; nothing is ever rounded.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace hermon {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned k) {
  BigInt f = 1;
  for (unsigned j = 2; j <= k; ++j) f *= j;
  return f;
}

// Generalized binomial coefficient C(x, k) = x(x-1)...(x-k+1)/k! for integer x
// (possibly negative). Integral for every integer x; zero when k < 0.
inline BigInt binomial_gen(long long x, long long k) {
  if (k < 0) return BigInt(0);
  BigInt c = 1;
  for (long long j = 1; j <= k; ++j) {
    c *= BigInt(x - j + 1);
    c /= j;  // exact: c held C(x, j)*j after the multiplication
  }
  return c;
}

inline BigInt double_factorial(long long k) {
  // (-1)!! = 0!! = 1 by convention.
  BigInt f = 1;
  for (long long j = k; j >= 2; j -= 2) f *= j;
  return f;
}

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long long v) : re_(v) {}  // NOLINT: implicit by design
  explicit GaussianRational(BigRat re) : re_(std::move(re)) {}
  GaussianRational(BigRat re, BigRat im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long long p, long long q) : re_(BigRat(p, q)) {
    if (q == 0) throw std::domain_error("GaussianRational: zero denominator");
  }

  static GaussianRational i() { return GaussianRational(BigRat(0), BigRat(1)); }

  const BigRat& re() const { return re_; }
  const BigRat& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  // |x|^2 as an exact rational.
  BigRat norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    BigRat r = re_ * o.re_ - im_ * o.im_;
    BigRat i2 = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i2);
    return *this;
  }

  GaussianRational inverse() const {
    if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
    BigRat n = norm();
    return GaussianRational(re_ / n, -im_ / n);
  }

  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

 private:
  BigRat re_{0};
  BigRat im_{0};
};

// "p/q" in lowest terms with positive denominator; "p" when q = 1.
inline std::string rat_to_string(const BigRat& r) { return r.str(); }

inline BigRat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational string is empty");
  std::size_t pos = 0;
  if (s[pos] == '-') ++pos;
  if (pos == s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    throw std::invalid_argument("malformed rational: " + s);
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos != s.size()) {
    if (s[pos] != '/') throw std::invalid_argument("malformed rational: " + s);
    ++pos;
    if (pos == s.size()) throw std::invalid_argument("malformed rational: " + s);
    std::size_t den_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw std::invalid_argument("malformed rational: " + s);
    if (s.substr(den_begin) == std::string(pos - den_begin, '0'))
      throw std::invalid_argument("zero denominator: " + s);
  }
  return BigRat(s);
}

inline std::string to_string(const GaussianRational& x) {
  std::string s = rat_to_string(x.re());
  if (x.im() != 0) {
    s += (x.im() > 0 ? "+" : "") + rat_to_string(x.im()) + "i";
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
  return os << to_string(x);
}

}  // namespace hermon
