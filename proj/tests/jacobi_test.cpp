#include <catch2/catch_amalgamated.hpp>

#include <hermon/jacobi.hpp>
#include <hermon/rational.hpp>

using namespace hermon;

namespace {

BigInt binom(long long m, long long k) { return binomial_gen(m, k); }

}  // namespace

TEST_CASE("degree-one closed form") {
  // P_1 = (1+beta)(t-1)/2 + (1+alpha)(t+1)/2
  for (long long alpha = 0; alpha <= 4; ++alpha)
    for (long long beta = 0; beta <= 4; ++beta) {
      TPoly half_minus({BigRat(-1, 2), BigRat(1, 2)});
      TPoly half_plus({BigRat(1, 2), BigRat(1, 2)});
      TPoly want = BigRat(1 + beta) * half_minus + BigRat(1 + alpha) * half_plus;
      CHECK(jacobi(1, alpha, beta) == want);
    }
  CHECK(jacobi(-1, 3, 2).is_zero());
  CHECK(jacobi(0, 3, 2) == TPoly::constant(BigRat(1)));
}

TEST_CASE("value at the right endpoint") {
  for (int l = 0; l <= 6; ++l)
    for (long long alpha = 0; alpha <= 5; ++alpha)
      for (long long beta = 0; beta <= 5; ++beta)
        CHECK(jacobi(l, alpha, beta).eval(BigRat(1)) == BigRat(binom(l + alpha, l)));
}

TEST_CASE("orthogonality against lower powers under the jacobi weight moment") {
  // moment_k = integral over [-1,1] of t^k (1-t)^a (1+t)^b dt, computed
  // exactly by expanding in u = (1+t)/2:  t = 2u - 1,
  // integral = 2^(a+b+1) * sum over expansions — equivalently use the beta
  // integral: int u^q (1-u)^p du on [0,1] = p! q! / (p+q+1)!.
  auto moment = [](unsigned k, unsigned a, unsigned b) {
    // expand t^k = (2u-1)^k
    BigRat total(0);
    for (unsigned s = 0; s <= k; ++s) {
      // coefficient of u^s in (2u-1)^k
      BigInt c = binomial_gen(k, s) * BigInt(1);
      for (unsigned t = 0; t < s; ++t) c *= 2;
      if ((k - s) % 2 == 1) c = -c;
      // u^(s+b) (1-u)^a integrates (over [0,1]) to a!(s+b)!/(a+s+b+1)!
      BigInt num = factorial(a) * factorial(s + b);
      BigInt den = factorial(a + s + b + 1);
      total += BigRat(c * num, den);
    }
    // dt = 2 du and the weight contributes 2^a (1-u)^a * 2^b u^b
    BigInt scale = 1;
    for (unsigned t = 0; t < a + b + 1; ++t) scale *= 2;
    return BigRat(scale) * total;
  };
  // <P_l, t^k> = 0 for all k < l in the weighted integral
  for (int l = 1; l <= 4; ++l)
    for (unsigned a = 0; a <= 2; ++a)
      for (unsigned b = 0; b <= 2; ++b)
        for (unsigned k = 0; k + 1 <= static_cast<unsigned>(l); ++k) {
          auto P = jacobi(l, a, b);
          BigRat acc(0);
          for (int d = 0; d <= P.degree(); ++d)
            acc += P.coeff(static_cast<std::size_t>(d)) *
                   moment(static_cast<unsigned>(d) + k, a, b);
          INFO("l=" << l << " alpha=" << a << " beta=" << b << " k=" << k);
          CHECK(acc == BigRat(0));
        }
}

TEST_CASE("radial polynomial matches its univariate source") {
  // With u = z2 zbar2 - z1 zbar1 and v = |z|^2, the two-variable radial
  // polynomial is the homogenization of the univariate one:
  //   Q_l(z) = sum_k coeff_k(P_l) * u^k * v^(l-k),
  // because (u-v)/2 = -z1 zbar1 and (u+v)/2 = z2 zbar2.
  unsigned n = 2;
  auto u = ScalarPolynomial::z(n, 2) * ScalarPolynomial::zbar(n, 2) -
           ScalarPolynomial::z(n, 1) * ScalarPolynomial::zbar(n, 1);
  auto v = ScalarPolynomial::z(n, 1) * ScalarPolynomial::zbar(n, 1) +
           ScalarPolynomial::z(n, 2) * ScalarPolynomial::zbar(n, 2);
  for (int l = 0; l <= 5; ++l)
    for (long long alpha = 0; alpha <= 3; ++alpha)
      for (long long beta = 0; beta <= 3; ++beta) {
        auto P = jacobi(l, alpha, beta);
        ScalarPolynomial rhs(n);
        for (int k = 0; k <= l; ++k)
          rhs += u.pow(static_cast<unsigned>(k)) * v.pow(static_cast<unsigned>(l - k)) *
                 GaussianRational(P.coeff(static_cast<std::size_t>(k)));
        INFO("l=" << l << " alpha=" << alpha << " beta=" << beta);
        CHECK(qpoly(l, alpha, beta, n) == rhs);
      }
}

TEST_CASE("frozen degree-one radial polynomial") {
  // Q_1 in two variables: (1+alpha) z2 zbar2 - (1+beta) z1 zbar1
  unsigned n = 2;
  for (long long alpha = 0; alpha <= 3; ++alpha)
    for (long long beta = 0; beta <= 3; ++beta) {
      auto want = ScalarPolynomial::z(n, 2) * ScalarPolynomial::zbar(n, 2) *
                      GaussianRational(1 + alpha) -
                  ScalarPolynomial::z(n, 1) * ScalarPolynomial::zbar(n, 1) *
                      GaussianRational(1 + beta);
      CHECK(qpoly(1, alpha, beta, n) == want);
    }
  CHECK(qpoly(-1, 2, 2, n).is_zero());
  CHECK(qpoly(0, 2, 2, n) == ScalarPolynomial::one(n));
}

TEST_CASE("contiguity identity grid is green") {
  auto rep = check_q_identities(6, 6, 6);
  for (const auto& f : rep.failures) FAIL_CHECK(f);
  CHECK(rep.ok());
  CHECK(rep.checked > 0);
}

TEST_CASE("recurrence grid is green") {
  auto rep = check_jacobi_recurrences(6, 6, 6);
  for (const auto& f : rep.failures) FAIL_CHECK(f);
  CHECK(rep.ok());
  CHECK(rep.checked > 0);
}
