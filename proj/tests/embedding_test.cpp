#include <catch2/catch_amalgamated.hpp>

#include <hermon/branching.hpp>
#include <hermon/calculus.hpp>
#include <hermon/embedding.hpp>

using namespace hermon;

namespace {

OperatorPolynomial scal(const OperatorPolynomial& x, long long s) {
  return x * GaussianRational(s);
}

// Shorthand builders for expected factors.
OperatorPolynomial tilde_diff(unsigned n) { return op_ztilde(n) - op_ztilde_dag(n); }

void check_proportional(const OperatorPolynomial& got, const OperatorPolynomial& want) {
  auto lambda = proportional_on_states(got, want);
  REQUIRE(lambda.has_value());
  CHECK_FALSE(lambda->is_zero());
  CHECK(lambda->im() == BigRat(0));
}

// A displayed factor only participates where its child space is nonzero; skip
// instantiations whose child label is invalid.
bool child_valid(unsigned n, unsigned s, unsigned c, unsigned d) {
  return SpaceLabel{n - 1, c, d, s}.valid();
}

void check_factor(unsigned n, unsigned r, unsigned s, unsigned a, unsigned b, unsigned c,
                  unsigned d, const OperatorPolynomial& want) {
  if (!child_valid(n, s, c, d)) return;
  check_proportional(x_factor(n, r, s, a, b, c, d), want);
}

}  // namespace

TEST_CASE("frozen low-order radial factors") {
  for (unsigned n = 2; n <= 4; ++n) {
    CHECK(equal_on_states(s_poly(0, 0, 0, n), OperatorPolynomial::identity(n)));
    CHECK(s_poly(-1, 0, 0, n).terms().empty());
    // odd factor, base parameters
    auto s100 = tilde_diff(n) - scal(op_last_pair(n), static_cast<long long>(n) - 1);
    CHECK(equal_on_states(s_poly(1, 0, 0, n), s100));
    // raising the second parameter steepens the pair coefficient
    auto s101 = tilde_diff(n) - scal(op_last_pair(n), static_cast<long long>(n));
    CHECK(equal_on_states(s_poly(1, 0, 1, n), s101));
    auto s110 = scal(tilde_diff(n), 2) - scal(op_last_pair(n), static_cast<long long>(n) - 1);
    CHECK(equal_on_states(s_poly(1, 1, 0, n), s110));
    // even factor of order two
    ScalarPolynomial tilde_norm(n);
    for (unsigned j = 1; j + 1 <= n; ++j)
      tilde_norm += ScalarPolynomial::z(n, j) * ScalarPolynomial::zbar(n, j);
    auto lead = ScalarPolynomial::z(n, n) * ScalarPolynomial::zbar(n, n) *
                    GaussianRational(static_cast<long long>(n) - 1) -
                tilde_norm;
    auto s200 = OperatorPolynomial::from_scalar(lead) - op_last_pair(n) * tilde_diff(n);
    CHECK(equal_on_states(s_poly(2, 0, 0, n), s200));
  }
}

TEST_CASE("twelve displayed embedding factors, up to a rational scalar") {
  for (unsigned n = 2; n <= 4; ++n) {
    long long N = n;
    for (unsigned r = 1; r + 1 <= n; ++r) {
      long long R = r;
      // (a,b) = (0,0)
      check_factor(n, r, r, 0, 0, 0, 0, scal(OperatorPolynomial::identity(n), (N - 1) * R));
      check_factor(n, r, r - 1, 0, 0, 0, 0, scal(op_creation(n, n), (N - 1) * (N - R)));
      // (a,b) = (1,0)
      check_factor(n, r, r, 1, 0, 0, 0,
                   scal(op_creation(n, n) * op_ztilde(n), N - 1) +
                       (ScalarPolynomial::z(n, n) *
                        scal(op_annihilation(n, n) * op_creation(n, n), R * (N - 1))));
      check_factor(n, r, r - 1, 1, 0, 0, 0,
                   ScalarPolynomial::z(n, n) * scal(op_creation(n, n), (N - 1) * (N - R)));
      check_factor(n, r, r, 1, 0, 1, 0, scal(OperatorPolynomial::identity(n), N * (R + 1)));
      check_factor(n, r, r - 1, 1, 0, 1, 0, scal(op_creation(n, n), N * (N - R)));
      // (a,b) = (0,1)
      check_factor(n, r, r, 0, 1, 0, 0,
                   ScalarPolynomial::zbar(n, n) *
                       scal(OperatorPolynomial::identity(n), (N - 1) * R));
      check_factor(n, r, r - 1, 0, 1, 0, 0,
                   scal(op_ztilde_dag(n), N - 1) + scal(op_last_pair(n), (N - 1) * (N - R)));
      check_factor(n, r, r, 0, 1, 0, 1, scal(OperatorPolynomial::identity(n), N * R));
      check_factor(n, r, r - 1, 0, 1, 0, 1, scal(op_creation(n, n), N * (N - R + 1)));
    }
    // boundary grades: bare monomial factors
    CHECK(equal_on_states(x_factor(n, 0, 0, 0, 1, 0, 0),
                          ScalarPolynomial::zbar(n, n) * OperatorPolynomial::identity(n)));
    CHECK(equal_on_states(x_factor(n, n, n - 1, 1, 0, 0, 0),
                          ScalarPolynomial::z(n, n) * op_creation(n, n)));
  }
  // every displayed interior factor is exercised somewhere: the skipped
  // instantiations are exactly those whose child space is zero
  CHECK(child_valid(3, 1, 1, 0));   // (1,0) s=r-1 at n=3, r=2
  CHECK(child_valid(3, 1, 0, 1));   // (0,1) s=r at n=3, r=1
  CHECK_FALSE(child_valid(2, 0, 1, 0));
  CHECK_FALSE(child_valid(2, 1, 0, 1));
}

TEST_CASE("factors map lower monogenics into the labeled space") {
  for (unsigned n = 2; n <= 3; ++n)
    for (unsigned a = 0; a <= 2; ++a)
      for (unsigned b = 0; a + b <= 2; ++b)
        for (unsigned r = 0; r <= n; ++r) {
          if (!SpaceLabel{n, a, b, r}.valid()) continue;
          for (const auto& [bc, op] : branch_children(n, a, b, r)) {
            for (const auto& node : build_basis(n - 1, bc.c, bc.d, bc.s)) {
              auto img = apply_factor(op, embed(node.element, n));
              INFO("n=" << n << " (a,b,r)=(" << a << "," << b << "," << r << ") case "
                        << to_string(bc.tag));
              REQUIRE_FALSE(img.is_zero());
              CHECK(is_hermitian_monogenic(img));
              auto lab = label_of(img);
              REQUIRE(lab.has_value());
              CHECK(*lab == SpaceLabel{n, a, b, r});
            }
          }
        }
}

TEST_CASE("worked product decompositions for bidegree (1,0) and (0,1)") {
  // The (a,b)=(1,0) and (0,1) spaces decompose through at most four factors,
  // one per valid child; each returned factor matches its displayed shape.
  for (unsigned n = 2; n <= 3; ++n) {
    long long N = n;
    for (unsigned r = 1; r + 1 <= n; ++r) {
      long long R = r;
      {
        auto kids = branch_children(n, 1, 0, r);
        std::size_t want_count = 2;  // (0,0) children of both grades always exist
        if (child_valid(n, r, 1, 0)) ++want_count;
        if (child_valid(n, r - 1, 1, 0)) ++want_count;
        REQUIRE(kids.size() == want_count);
        auto disp_full = op_creation(n, n) * op_ztilde(n) +
                         ScalarPolynomial::z(n, n) *
                             scal(op_annihilation(n, n) * op_creation(n, n), R);
        for (const auto& [bc, op] : kids) {
          if (bc.s == r && bc.c == 1)
            check_proportional(op, OperatorPolynomial::identity(n));
          else if (bc.s == r && bc.c == 0)
            check_proportional(op, disp_full);
          else if (bc.s == r - 1 && bc.c == 1)
            check_proportional(op, op_creation(n, n));
          else
            check_proportional(op, ScalarPolynomial::z(n, n) * op_creation(n, n));
        }
      }
      {
        auto kids = branch_children(n, 0, 1, r);
        std::size_t want_count = 2;
        if (child_valid(n, r, 0, 1)) ++want_count;
        if (child_valid(n, r - 1, 0, 1)) ++want_count;
        REQUIRE(kids.size() == want_count);
        auto disp_drop = op_ztilde_dag(n) + scal(op_last_pair(n), N - R);
        for (const auto& [bc, op] : kids) {
          if (bc.s == r && bc.d == 0)
            check_proportional(op, ScalarPolynomial::zbar(n, n) *
                                       OperatorPolynomial::identity(n));
          else if (bc.s == r && bc.d == 1)
            check_proportional(op, OperatorPolynomial::identity(n));
          else if (bc.s == r - 1 && bc.d == 0)
            check_proportional(op, disp_drop);
          else
            check_proportional(op, op_creation(n, n));
        }
      }
    }
  }
}

TEST_CASE("branch case classifier rejects inconsistent data") {
  CHECK_THROWS_AS(classify_branch(2, 1, 1, 0, 0, 1, 0), std::invalid_argument);  // c > a
  CHECK_THROWS_AS(x_factor(1, 1, 0, 0, 0, 0, 0), std::invalid_argument);        // n too small
}

TEST_CASE("fischer multiplier requires an interior grade") {
  CHECK_THROWS_AS(fischer_factor(2, 1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(fischer_factor(2, 1, 1, 2), std::invalid_argument);
  // (b+n-r) z + (a+r) zdag, applied to an (a,b,r) element, lands in
  // bidegree (a+1, b) + (a, b+1) pieces of grades r+1 and r-1 … just check
  // it maps the ground state somewhere nonzero and well-defined.
  auto I = SpinorPolynomial::from_spinor(2, SpinorElement::vacuum(2));
  auto g = fischer_factor(2, 0, 0, 1);
  // grade-1 part of the vacuum is empty; embed a grade-1 state instead
  auto f1 = SpinorPolynomial(ScalarPolynomial::one(2), FockSubset::from_indices({1}));
  CHECK_FALSE(apply_factor(g, f1).is_zero());
  (void)I;
}
