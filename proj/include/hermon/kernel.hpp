#pragma once

// Brute-force kernel dimensions by exact linear algebra, independent of the
// polynomial classes: the Dirac matrices are assembled straight from the
// derivative rule (exponent drops by one, coefficient = old exponent) and the
// anticommutation sign rule ((-1)^{number of occupied modes below j}). Rank is
// computed fraction-free (single-step Bareiss), so every division is exact.

#include <cstdint>
#include <vector>

#include "hermon/rational.hpp"

namespace hermon {

inline std::size_t exact_rank(std::vector<std::vector<BigInt>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

// Rank over the Gaussian rationals; the same pivoting scheme (division by a
// field element is always exact).
inline std::size_t exact_rank(std::vector<std::vector<GaussianRational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  GaussianRational prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = GaussianRational(0);
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

namespace oracle {

// All exponent vectors of length n summing to total.
inline std::vector<std::vector<std::uint32_t>> compositions(unsigned total, unsigned n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(n, 0);
  // Lexicographic enumeration by recursion on the first coordinate.
  struct Rec {
    std::vector<std::vector<std::uint32_t>>& out;
    std::vector<std::uint32_t>& cur;
    unsigned n;
    void go(unsigned pos, unsigned left) {
      if (pos + 1 == n) {
        cur[pos] = left;
        out.push_back(cur);
        return;
      }
      for (unsigned v = 0; v <= left; ++v) {
        cur[pos] = v;
        go(pos + 1, left - v);
      }
    }
  } rec{out, cur, n};
  if (n == 0) return out;
  rec.go(0, total);
  return out;
}

inline std::vector<std::uint32_t> subsets_of_grade(unsigned n, unsigned r) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask)
    if (static_cast<unsigned>(__builtin_popcount(mask)) == r) out.push_back(mask);
  return out;
}

inline int below_sign(std::uint32_t mask, unsigned j) {
  unsigned cnt = __builtin_popcount(mask & ((std::uint32_t(1) << (j - 1)) - 1));
  return (cnt % 2 == 0) ? 1 : -1;
}

}  // namespace oracle

// dim of the joint kernel of (sum_j fd_j d/dz_j, sum_j f_j d/dzbar_j) on the
// span of z^alpha zbar^beta (X) state, |alpha| = a, |beta| = b, |state| = r.
inline std::size_t hmonogenic_kernel_dim(unsigned n, unsigned a, unsigned b, unsigned r) {
  using namespace oracle;
  auto za = compositions(a, n);
  auto zb = compositions(b, n);
  auto st = subsets_of_grade(n, r);

  const std::size_t cols = za.size() * zb.size() * st.size();
  auto col_index = [&](std::size_t ia, std::size_t ib, std::size_t is) {
    return (ia * zb.size() + ib) * st.size() + is;
  };

  // Rows: images in bidegree (a-1, b) at grade r+1, then (a, b-1) at grade r-1.
  std::vector<std::vector<BigInt>> rows;
  if (a >= 1 && r + 1 <= n) {
    auto za1 = compositions(a - 1, n);
    auto st1 = subsets_of_grade(n, r + 1);
    auto row_of = [&](const std::vector<std::uint32_t>& zexp, std::size_t ib,
                      std::uint32_t mask) -> std::size_t {
      std::size_t iza = 0, ist = 0;
      while (za1[iza] != zexp) ++iza;
      while (st1[ist] != mask) ++ist;
      return (iza * zb.size() + ib) * st1.size() + ist;
    };
    std::vector<std::vector<BigInt>> block(za1.size() * zb.size() * st1.size(),
                                           std::vector<BigInt>(cols));
    for (std::size_t ia = 0; ia < za.size(); ++ia)
      for (std::size_t ib = 0; ib < zb.size(); ++ib)
        for (std::size_t is = 0; is < st.size(); ++is)
          for (unsigned j = 1; j <= n; ++j) {
            if (za[ia][j - 1] == 0) continue;
            std::uint32_t bit = std::uint32_t(1) << (j - 1);
            if (st[is] & bit) continue;  // fd_j on occupied mode gives zero
            auto zexp = za[ia];
            --zexp[j - 1];
            int sign = oracle::below_sign(st[is], j);
            block[row_of(zexp, ib, st[is] | bit)][col_index(ia, ib, is)] +=
                BigInt(sign) * za[ia][j - 1];
          }
    for (auto& row : block) rows.push_back(std::move(row));
  }
  if (b >= 1 && r >= 1) {
    auto zb1 = compositions(b - 1, n);
    auto st1 = subsets_of_grade(n, r - 1);
    auto row_of = [&](std::size_t ia, const std::vector<std::uint32_t>& bexp,
                      std::uint32_t mask) -> std::size_t {
      std::size_t izb = 0, ist = 0;
      while (zb1[izb] != bexp) ++izb;
      while (st1[ist] != mask) ++ist;
      return (ia * zb1.size() + izb) * st1.size() + ist;
    };
    std::vector<std::vector<BigInt>> block(za.size() * zb1.size() * st1.size(),
                                           std::vector<BigInt>(cols));
    for (std::size_t ia = 0; ia < za.size(); ++ia)
      for (std::size_t ib = 0; ib < zb.size(); ++ib)
        for (std::size_t is = 0; is < st.size(); ++is)
          for (unsigned j = 1; j <= n; ++j) {
            if (zb[ib][j - 1] == 0) continue;
            std::uint32_t bit = std::uint32_t(1) << (j - 1);
            if (!(st[is] & bit)) continue;  // f_j on unoccupied mode gives zero
            auto bexp = zb[ib];
            --bexp[j - 1];
            int sign = oracle::below_sign(st[is], j);
            block[row_of(ia, bexp, st[is] & ~bit)][col_index(ia, ib, is)] +=
                BigInt(sign) * zb[ib][j - 1];
          }
    for (auto& row : block) rows.push_back(std::move(row));
  }

  if (rows.empty()) return cols;
  return cols - exact_rank(std::move(rows));
}

// dim of the kernel of 2(sum_j f_j d/dzbar_j - sum_j fd_j d/dz_j) on the span
// of all degree-k monomials times all states (the constant 2 does not change
// the kernel and is omitted).
inline std::size_t monogenic_kernel_dim(unsigned n, unsigned k) {
  using namespace oracle;
  // Monomials in 2n real slots: z exponents then zbar exponents, total k.
  auto mono = compositions(k, 2 * n);
  std::vector<std::uint32_t> st;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) st.push_back(mask);

  const std::size_t cols = mono.size() * st.size();
  auto col_index = [&](std::size_t im, std::size_t is) { return im * st.size() + is; };

  std::vector<std::vector<std::uint32_t>> mono1 =
      (k >= 1) ? compositions(k - 1, 2 * n) : std::vector<std::vector<std::uint32_t>>{};
  auto mono1_index = [&](const std::vector<std::uint32_t>& e) -> std::size_t {
    std::size_t i = 0;
    while (mono1[i] != e) ++i;
    return i;
  };
  if (k == 0) return cols;

  std::vector<std::vector<BigInt>> mat(mono1.size() * st.size(), std::vector<BigInt>(cols));
  for (std::size_t im = 0; im < mono.size(); ++im)
    for (std::size_t is = 0; is < st.size(); ++is)
      for (unsigned j = 1; j <= n; ++j) {
        std::uint32_t bit = std::uint32_t(1) << (j - 1);
        // -fd_j d/dz_j part
        if (mono[im][j - 1] > 0 && !(st[is] & bit)) {
          auto e = mono[im];
          --e[j - 1];
          int sign = oracle::below_sign(st[is], j);
          mat[mono1_index(e) * st.size() + (st[is] | bit)][col_index(im, is)] -=
              BigInt(sign) * mono[im][j - 1];
        }
        // +f_j d/dzbar_j part
        if (mono[im][n + j - 1] > 0 && (st[is] & bit)) {
          auto e = mono[im];
          --e[n + j - 1];
          int sign = oracle::below_sign(st[is], j);
          mat[mono1_index(e) * st.size() + (st[is] & ~bit)][col_index(im, is)] +=
              BigInt(sign) * mono[im][n + j - 1];
        }
      }
  return cols - exact_rank(std::move(mat));
}

}  // namespace hermon
