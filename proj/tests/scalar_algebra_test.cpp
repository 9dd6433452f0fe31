#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <hermon/monomial.hpp>
#include <hermon/rational.hpp>
#include <hermon/scalar_poly.hpp>

using namespace hermon;

namespace {

GaussianRational random_coeff(std::mt19937& rng) {
  std::uniform_int_distribution<long long> num(-6, 6);
  std::uniform_int_distribution<long long> den(1, 5);
  return GaussianRational(BigRat(BigInt(num(rng)), BigInt(den(rng))),
                          BigRat(BigInt(num(rng)), BigInt(den(rng))));
}

ScalarPolynomial random_poly(std::mt19937& rng, unsigned n, unsigned terms) {
  std::uniform_int_distribution<unsigned> deg(0, 3);
  ScalarPolynomial p(n);
  for (unsigned t = 0; t < terms; ++t) {
    Monomial m{std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(n)};
    for (unsigned j = 0; j < n; ++j) {
      m.z[j] = deg(rng);
      m.zbar[j] = deg(rng);
    }
    p.add_term(m, random_coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("gaussian rational field operations") {
  GaussianRational a(3, 4);          // 3/4
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK(a + i - i == a);
  GaussianRational b = a + i;  // 3/4 + i
  CHECK(b * b.inverse() == GaussianRational(1));
  CHECK(b.conj() * b == GaussianRational(BigRat(9, 16) + BigRat(1), BigRat(0)));
  CHECK_THROWS_AS(GaussianRational().inverse(), std::domain_error);
}

TEST_CASE("rational string round trip") {
  CHECK(rat_to_string(BigRat(-7, 3)) == "-7/3");
  CHECK(rat_from_string("-7/3") == BigRat(-7, 3));
  CHECK(rat_from_string("5") == BigRat(5));
  CHECK_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
  CHECK(rat_from_string(rat_to_string(BigRat(123456789, 987654321))) ==
        BigRat(123456789, 987654321));
}

TEST_CASE("polynomial ring axioms hold on random samples") {
  std::mt19937 rng(20250817);
  for (int rep = 0; rep < 30; ++rep) {
    auto p = random_poly(rng, 2, 3);
    auto q = random_poly(rng, 2, 3);
    auto r = random_poly(rng, 2, 3);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p - p == ScalarPolynomial(2));
  }
}

TEST_CASE("differentiation is a derivation") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    auto p = random_poly(rng, 2, 3);
    auto q = random_poly(rng, 2, 3);
    for (unsigned j = 1; j <= 2; ++j) {
      CHECK((p * q).derive_z(j) == p.derive_z(j) * q + p * q.derive_z(j));
      CHECK((p * q).derive_zbar(j) == p.derive_zbar(j) * q + p * q.derive_zbar(j));
    }
  }
}

TEST_CASE("conjugation swaps holomorphic and antiholomorphic parts") {
  auto z1 = ScalarPolynomial::z(2, 1);
  auto zb1 = ScalarPolynomial::zbar(2, 1);
  CHECK(z1.conjugated() == zb1);
  auto mixed = z1 * zb1 * GaussianRational::i();
  CHECK(mixed.conjugated() == z1 * zb1 * (GaussianRational() - GaussianRational::i()));
  std::mt19937 rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    auto p = random_poly(rng, 2, 3);
    CHECK(p.conjugated().conjugated() == p);
  }
}

TEST_CASE("powers and bidegree") {
  auto z2 = ScalarPolynomial::z(2, 2);
  auto p = z2.pow(3) * ScalarPolynomial::zbar(2, 1).pow(2);
  auto bd = p.bidegree();
  REQUIRE(bd.has_value());
  CHECK(bd->first == 3);
  CHECK(bd->second == 2);
  CHECK(z2.pow(0) == ScalarPolynomial::one(2));
  // mixed bidegree has no well-defined value
  CHECK_FALSE((z2 + z2.pow(2)).bidegree().has_value());
}
