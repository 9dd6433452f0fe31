#include <catch2/catch_amalgamated.hpp>

#include <hermon/kernel.hpp>

using namespace hermon;

TEST_CASE("fraction-free rank on integer matrices") {
  std::vector<std::vector<BigInt>> id3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(exact_rank(id3) == 3);
  std::vector<std::vector<BigInt>> rank2 = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(exact_rank(rank2) == 2);
  std::vector<std::vector<BigInt>> zero = {{0, 0}, {0, 0}};
  CHECK(exact_rank(zero) == 0);
  // needs a row swap to find the pivot
  std::vector<std::vector<BigInt>> swapped = {{0, 1}, {1, 0}};
  CHECK(exact_rank(swapped) == 2);
  // values that overflow machine words if handled carelessly
  std::vector<std::vector<BigInt>> big = {{BigInt("100000000000000000003"), 1},
                                          {1, BigInt("100000000000000000019")}};
  CHECK(exact_rank(big) == 2);
}

TEST_CASE("rank over the gaussian rationals") {
  GaussianRational i = GaussianRational::i();
  std::vector<std::vector<GaussianRational>> m = {
      {GaussianRational(1), i}, {i * GaussianRational(-1), GaussianRational(1)}};
  // second row = -i * first row
  CHECK(exact_rank(m) == 1);
}

TEST_CASE("euclidean kernel dimensions match the closed-form counts") {
  // dim M_k(n) = 2^n (C(k+2n-1,2n-1) - C(k+2n-2,2n-1))
  CHECK(monogenic_kernel_dim(2, 0) == 4);
  CHECK(monogenic_kernel_dim(2, 1) == 12);
  CHECK(monogenic_kernel_dim(2, 2) == 24);
  CHECK(monogenic_kernel_dim(3, 0) == 8);
  CHECK(monogenic_kernel_dim(3, 2) == 120);
}

TEST_CASE("hermitian kernel dimensions at small labels") {
  // two-variable counts: b+1 / a+1 / a+b+2
  CHECK(hmonogenic_kernel_dim(2, 0, 3, 0) == 4);
  CHECK(hmonogenic_kernel_dim(2, 3, 0, 2) == 4);
  CHECK(hmonogenic_kernel_dim(2, 2, 1, 1) == 5);
  // three variables and grade-interior labels
  CHECK(hmonogenic_kernel_dim(3, 1, 1, 1) == 15);
  CHECK(hmonogenic_kernel_dim(3, 3, 3, 1) == 90);
  // a full-grade space with antiholomorphic degree is empty
  CHECK(hmonogenic_kernel_dim(2, 1, 1, 2) == 0);
  CHECK(hmonogenic_kernel_dim(2, 1, 1, 0) == 0);
}

TEST_CASE("compositions enumerate exponent vectors completely") {
  auto v = oracle::compositions(3, 2);
  CHECK(v.size() == 4);  // (3,0) (2,1) (1,2) (0,3) in some fixed order
  for (const auto& e : v) CHECK(e[0] + e[1] == 3);
  CHECK(oracle::compositions(0, 3).size() == 1);
  auto grade = oracle::subsets_of_grade(4, 2);
  CHECK(grade.size() == 6);
}
