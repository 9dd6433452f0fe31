#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <hermon/branching.hpp>
#include <hermon/latex.hpp>
#include <hermon/serialize.hpp>

using namespace hermon;

namespace {

SpinorPolynomial random_spinor(std::mt19937& rng, unsigned n) {
  std::uniform_int_distribution<unsigned> deg(0, 3);
  std::uniform_int_distribution<std::uint32_t> mask(0, (1u << n) - 1);
  std::uniform_int_distribution<long long> num(-9, 9);
  std::uniform_int_distribution<long long> den(1, 7);
  std::uniform_int_distribution<int> nterms(0, 5);
  SpinorPolynomial f(n);
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial m{std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(n)};
    for (unsigned j = 0; j < n; ++j) {
      m.z[j] = deg(rng);
      m.zbar[j] = deg(rng);
    }
    ScalarPolynomial p(n);
    p.add_term(m, GaussianRational(BigRat(BigInt(num(rng)), BigInt(den(rng))),
                                   BigRat(BigInt(num(rng)), BigInt(den(rng)))));
    f += SpinorPolynomial(p, FockSubset(mask(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("round trip is the identity on random polynomials") {
  std::mt19937 rng(424242);
  for (int rep = 0; rep < 200; ++rep) {
    unsigned n = 1 + rep % 4;
    auto f = random_spinor(rng, n);
    auto back = deserialize(serialize(f));
    REQUIRE(back == f);
  }
}

TEST_CASE("serialization is canonical") {
  // the same polynomial assembled in two different orders serializes to the
  // same bytes
  unsigned n = 2;
  auto t1 = SpinorPolynomial(ScalarPolynomial::z(n, 1), FockSubset::from_indices({2}));
  auto t2 = SpinorPolynomial(ScalarPolynomial::zbar(n, 2), FockSubset::empty());
  CHECK(serialize(t1 + t2) == serialize(t2 + t1));
  auto f = t1 + t2;
  auto g = t2 + t1;
  CHECK(f == g);
  CHECK(serialize(deserialize(serialize(f))) == serialize(f));
}

TEST_CASE("pinned wire format") {
  unsigned n = 2;
  auto f = SpinorPolynomial(ScalarPolynomial::z(n, 1), FockSubset::from_indices({2}));
  CHECK(serialize(f) ==
        R"({"n":2,"terms":[{"z":[1,0],"zbar":[0,0],"fock":[2],"re":"1","im":"0"}]})");
  CHECK(serialize(SpinorPolynomial(n)) == R"({"n":2,"terms":[]})");
  auto half_i = SpinorPolynomial(
      ScalarPolynomial::one(n) * GaussianRational(BigRat(0), BigRat(1, 2)), FockSubset::empty());
  CHECK(serialize(half_i) ==
        R"({"n":2,"terms":[{"z":[0,0],"zbar":[0,0],"fock":[],"re":"0","im":"1/2"}]})");
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(deserialize("not json"), std::invalid_argument);
  CHECK_THROWS_AS(deserialize(R"({"terms":[]})"), std::invalid_argument);
  // exponent vector of the wrong arity
  CHECK_THROWS_AS(
      deserialize(
          R"({"n":2,"terms":[{"z":[1],"zbar":[0,0],"fock":[],"re":"1","im":"0"}]})"),
      std::invalid_argument);
  // fock indices must be strictly increasing and within range
  CHECK_THROWS_AS(
      deserialize(
          R"({"n":2,"terms":[{"z":[1,0],"zbar":[0,0],"fock":[2,1],"re":"1","im":"0"}]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      deserialize(
          R"({"n":2,"terms":[{"z":[1,0],"zbar":[0,0],"fock":[3],"re":"1","im":"0"}]})"),
      std::invalid_argument);
  // non-integer coefficient strings
  CHECK_THROWS_AS(
      deserialize(
          R"({"n":2,"terms":[{"z":[1,0],"zbar":[0,0],"fock":[],"re":"0.5","im":"0"}]})"),
      std::invalid_argument);
}

TEST_CASE("latex rendering") {
  unsigned n = 2;
  CHECK(emit_latex(SpinorPolynomial(n)) == "0");
  auto f1I = SpinorPolynomial(ScalarPolynomial::one(n), FockSubset::from_indices({1}));
  CHECK(emit_latex(f1I) == R"(\fd_{1} I)");
  auto z1I = SpinorPolynomial(ScalarPolynomial::z(n, 1), FockSubset::empty());
  CHECK(emit_latex(z1I) == R"(z_{1} I)");
  // operator: twice the identity prints with a thin-space separator
  auto op = OperatorPolynomial::identity(3) * GaussianRational(2);
  CHECK(emit_latex(op) == R"(2\,\mathrm{id})");
  // the (0,0) equal-grade factor at n=3, r=1 is exactly that operator
  CHECK(emit_latex(x_factor(3, 1, 1, 0, 0, 0, 0)) == R"(2\,\mathrm{id})");
  // negative rationals and conjugated variables
  auto g = SpinorPolynomial(
      ScalarPolynomial::zbar(n, 2) * GaussianRational(BigRat(-1, 2), BigRat(0)),
      FockSubset::from_indices({1, 2}));
  CHECK(emit_latex(g) == R"(-\tfrac{1}{2}\,\bar{z}_{2} \fd_{1}\fd_{2} I)");
}
