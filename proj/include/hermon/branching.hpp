#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hermon/calculus.hpp"
#include "hermon/embedding.hpp"
#include "hermon/jacobi.hpp"
#include "hermon/kernel.hpp"
#include "hermon/report.hpp"
#include "hermon/spinor_poly.hpp"

namespace hermon {

// One constructed basis element: the space it lives in, and the chain of
// branching cases (one per dimension step, from n down to 2) that produced it.
struct BranchNode {
  SpaceLabel label;
  std::vector<BranchCase> path;  // length n - 1
  SpinorPolynomial element;
};

// One-variable spaces are at most one-dimensional; the normalized spanning
// elements are zbar^b/b! on the vacuum and z^a/a! on the occupied state.
inline std::vector<SpinorPolynomial> base_basis(unsigned a, unsigned b, unsigned r) {
  SpaceLabel lab{1, a, b, r};
  if (!lab.valid()) return {};
  if (r == 0) {
    ScalarPolynomial f = ScalarPolynomial::zbar(1, 1).pow(b) *
                         GaussianRational(BigRat(BigInt(1), factorial(b)));
    return {SpinorPolynomial(f, FockSubset::empty())};
  }
  ScalarPolynomial f =
      ScalarPolynomial::z(1, 1).pow(a) * GaussianRational(BigRat(BigInt(1), factorial(a)));
  return {SpinorPolynomial(f, FockSubset::empty().with(1))};
}

namespace detail {

// All child labels (n-1, c, d, s) with nonzero space, classified, in the
// canonical order (case tag, child grade descending, c, d). This order is
// what makes the recursive basis line up index-by-index with the closed-form
// dimension-2 lists.
inline std::vector<BranchCase> branch_cases(unsigned n, unsigned a, unsigned b, unsigned r) {
  std::vector<BranchCase> cases;
  for (int s : {static_cast<int>(r), static_cast<int>(r) - 1}) {
    if (s < 0 || s > static_cast<int>(n) - 1) continue;
    for (unsigned c = 0; c <= a; ++c)
      for (unsigned d = 0; d <= b; ++d) {
        SpaceLabel child{n - 1, c, d, static_cast<unsigned>(s)};
        if (!child.valid()) continue;
        cases.push_back(classify_branch(n, r, static_cast<unsigned>(s), a, b, c, d));
      }
  }
  std::sort(cases.begin(), cases.end(), [](const BranchCase& x, const BranchCase& y) {
    return std::make_tuple(static_cast<int>(x.tag), -static_cast<long long>(x.s), x.c, x.d) <
           std::make_tuple(static_cast<int>(y.tag), -static_cast<long long>(y.s), y.c, y.d);
  });
  return cases;
}

}  // namespace detail

inline std::vector<std::pair<BranchCase, OperatorPolynomial>> branch_children(unsigned n,
                                                                              unsigned a,
                                                                              unsigned b,
                                                                              unsigned r) {
  if (n < 2) throw std::invalid_argument("branch_children: need n >= 2");
  SpaceLabel lab{n, a, b, r};
  if (!lab.valid()) throw std::invalid_argument("branch_children: invalid parent label");
  std::vector<std::pair<BranchCase, OperatorPolynomial>> out;
  for (const BranchCase& bc : detail::branch_cases(n, a, b, r))
    out.emplace_back(bc, x_factor(n, r, bc.s, a, b, bc.c, bc.d));
  return out;
}

inline std::vector<BranchNode> build_basis(unsigned n, unsigned a, unsigned b, unsigned r) {
  SpaceLabel lab{n, a, b, r};
  std::vector<BranchNode> out;
  if (!lab.valid()) return out;
  if (n == 1) {
    for (auto& e : base_basis(a, b, r)) out.push_back(BranchNode{lab, {}, std::move(e)});
    return out;
  }
  for (auto& [bc, op] : branch_children(n, a, b, r)) {
    for (auto& kid : build_basis(n - 1, bc.c, bc.d, bc.s)) {
      SpinorPolynomial img = apply_factor(op, embed(kid.element, n));
      std::ostringstream where;
      where << "(" << n << "," << a << "," << b << "," << r << ") child (" << bc.c << "," << bc.d
            << "," << bc.s << ") case " << to_string(bc.tag);
      if (img.is_zero())
        throw std::runtime_error("build_basis: zero image at " + where.str());
      if (!is_hermitian_monogenic(img))
        throw std::runtime_error("build_basis: image not Hermitian monogenic at " + where.str());
      auto got = label_of(img);
      if (!got || !(*got == lab))
        throw std::runtime_error("build_basis: image label mismatch at " + where.str());
      std::vector<BranchCase> path;
      path.reserve(kid.path.size() + 1);
      path.push_back(bc);
      path.insert(path.end(), kid.path.begin(), kid.path.end());
      out.push_back(BranchNode{lab, std::move(path), std::move(img)});
    }
  }
  return out;
}

inline unsigned long long dimension(unsigned n, unsigned a, unsigned b, unsigned r) {
  SpaceLabel lab{n, a, b, r};
  if (!lab.valid()) return 0;
  if (n == 1) return 1;
  unsigned long long total = 0;
  for (int s : {static_cast<int>(r), static_cast<int>(r) - 1}) {
    if (s < 0 || s > static_cast<int>(n) - 1) continue;
    for (unsigned c = 0; c <= a; ++c)
      for (unsigned d = 0; d <= b; ++d) total += dimension(n - 1, c, d, static_cast<unsigned>(s));
  }
  return total;
}

// ---------------------------------------------------------------------------
// Closed-form bases in dimension 2.

enum class Dim2Kind { P, Q, PTilde, QTilde, Monomial };

inline std::string to_string(Dim2Kind k) {
  switch (k) {
    case Dim2Kind::P: return "p";
    case Dim2Kind::Q: return "q";
    case Dim2Kind::PTilde: return "p~";
    case Dim2Kind::QTilde: return "q~";
    case Dim2Kind::Monomial: return "mono";
  }
  return "?";
}

struct Dim2BasisElement {
  Dim2Kind kind = Dim2Kind::P;
  unsigned a = 0, b = 0;
  unsigned c = 0;  // lower z-degree (p / p~ families and the r=2 monomials)
  unsigned d = 0;  // lower zbar-degree (q / q~ families and the r=0 monomials)
  SpinorPolynomial element;
};

namespace detail {

inline ScalarPolynomial mono2(long long z1, long long zb1, long long z2, long long zb2) {
  if (z1 < 0 || zb1 < 0 || z2 < 0 || zb2 < 0)
    throw std::logic_error("dimension-2 basis: negative exponent");
  Monomial m{{static_cast<std::uint32_t>(z1), static_cast<std::uint32_t>(z2)},
             {static_cast<std::uint32_t>(zb1), static_cast<std::uint32_t>(zb2)}};
  ScalarPolynomial p(2);
  p.add_term(m, GaussianRational(1));
  return p;
}

inline FockSubset e1() { return FockSubset::empty().with(1); }
inline FockSubset e2() { return FockSubset::empty().with(2); }

// The four closed-form families. Each is a pair of components along the two
// grade-1 states, with the printed factorial normalization. Terms whose
// polynomial degree parameter is negative vanish identically and are skipped.
inline SpinorPolynomial dim2_p(long long a, long long b, long long c) {
  SpinorPolynomial out(2);
  if (a - c >= 0)
    out += SpinorPolynomial(mono2(c, 0, 0, b - a + c) *
                                qpoly(static_cast<int>(a - c), c, b - a + c, 2),
                            e1());
  if (a - c - 1 >= 0)
    out += SpinorPolynomial(mono2(c + 1, 0, 0, b - a + c + 1) *
                                qpoly(static_cast<int>(a - c - 1), c + 1, b - a + c + 1, 2),
                            e2());
  return out * GaussianRational(BigRat(BigInt(1), factorial(a) * factorial(b)));
}

inline SpinorPolynomial dim2_q(long long a, long long b, long long d) {
  SpinorPolynomial out(2);
  if (b - d - 1 >= 0)
    out += SpinorPolynomial(mono2(0, d + 1, a - b + d + 1, 0) *
                                qpoly(static_cast<int>(b - d - 1), d + 1, a - b + d + 1, 2),
                            e1());
  if (b - d >= 0)
    out -= SpinorPolynomial(mono2(0, d, a - b + d, 0) *
                                qpoly(static_cast<int>(b - d), d, a - b + d, 2),
                            e2());
  return out * GaussianRational(BigRat(BigInt(1), factorial(a) * factorial(b)));
}

inline SpinorPolynomial dim2_ptilde(long long a, long long b, long long c) {
  SpinorPolynomial out(2);
  out += SpinorPolynomial(mono2(c, 0, a - c - b, 0) *
                              qpoly(static_cast<int>(b), c, a - c - b, 2),
                          e1()) *
         GaussianRational(b + c + 1);
  if (a - c - 1 >= 0 && a - c - b - 1 >= 0)
    out += SpinorPolynomial(mono2(c + 1, 0, a - c - b - 1, 0) *
                                qpoly(static_cast<int>(b), c + 1, a - c - b - 1, 2),
                            e2()) *
           GaussianRational(a - c);
  return out * GaussianRational(BigRat(BigInt(1), factorial(a - c) * factorial(b + c + 1)));
}

inline SpinorPolynomial dim2_qtilde(long long a, long long b, long long d) {
  SpinorPolynomial out(2);
  out += SpinorPolynomial(mono2(0, d + 1, 0, b - d - a - 1) *
                              qpoly(static_cast<int>(a), d + 1, b - d - a - 1, 2),
                          e1()) *
         GaussianRational(b - d);
  out -= SpinorPolynomial(mono2(0, d, 0, b - d - a) *
                              qpoly(static_cast<int>(a), d, b - d - a, 2),
                          e2()) *
         GaussianRational(a + d + 1);
  return out * GaussianRational(BigRat(BigInt(1), factorial(a + d + 1) * factorial(b - d)));
}

}  // namespace detail

inline std::vector<Dim2BasisElement> basis_dim2(unsigned a, unsigned b, unsigned r) {
  SpaceLabel lab{2, a, b, r};
  std::vector<Dim2BasisElement> out;
  if (!lab.valid()) return out;
  using detail::dim2_p;
  using detail::dim2_ptilde;
  using detail::dim2_q;
  using detail::dim2_qtilde;
  if (r == 0) {
    for (unsigned d = 0; d <= b; ++d)
      out.push_back({Dim2Kind::Monomial, a, b, 0, d,
                     SpinorPolynomial(detail::mono2(0, d, 0, b - d), FockSubset::empty())});
    return out;
  }
  if (r == 2) {
    FockSubset top = FockSubset::empty().with(1).with(2);
    for (unsigned c = 0; c <= a; ++c)
      out.push_back(
          {Dim2Kind::Monomial, a, b, c, 0, SpinorPolynomial(detail::mono2(c, 0, a - c, 0), top)});
    return out;
  }
  auto push = [&](Dim2Kind k, unsigned c, unsigned d, SpinorPolynomial e) {
    out.push_back({k, a, b, c, d, std::move(e)});
  };
  if (a < b) {
    for (unsigned c = 0; c <= a; ++c) push(Dim2Kind::P, c, 0, dim2_p(a, b, c));
    for (unsigned d = 0; d + a + 1 <= b - 1 + 1; ++d)  // d = 0 .. b-a-1
      push(Dim2Kind::QTilde, 0, d, dim2_qtilde(a, b, d));
    for (unsigned d = b - a; d <= b; ++d) push(Dim2Kind::Q, 0, d, dim2_q(a, b, d));
  } else if (a > b) {
    for (unsigned c = a - b; c <= a; ++c) push(Dim2Kind::P, c, 0, dim2_p(a, b, c));
    for (unsigned c = 0; c + b + 1 <= a - 1 + 1; ++c)  // c = 0 .. a-b-1
      push(Dim2Kind::PTilde, c, 0, dim2_ptilde(a, b, c));
    for (unsigned d = 0; d <= b; ++d) push(Dim2Kind::Q, 0, d, dim2_q(a, b, d));
  } else {
    for (unsigned c = 0; c <= a; ++c) push(Dim2Kind::P, c, 0, dim2_p(a, b, c));
    for (unsigned d = 0; d <= b; ++d) push(Dim2Kind::Q, 0, d, dim2_q(a, b, d));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Degree-k monogenic space assembled from the bihomogeneous pieces and the
// twisted vector-multiplied pieces.

inline std::vector<SpinorPolynomial> fischer_basis(unsigned n, unsigned k) {
  std::vector<SpinorPolynomial> out;
  for (unsigned a = 0; a <= k; ++a) {
    unsigned b = k - a;
    for (unsigned r = 0; r <= n; ++r)
      for (auto& node : build_basis(n, a, b, r)) out.push_back(std::move(node.element));
  }
  if (k >= 1) {
    for (unsigned a = 0; a + 1 <= k; ++a) {
      unsigned b = k - 1 - a;
      for (unsigned r = 1; r + 1 <= n; ++r) {
        if (!SpaceLabel{n, a, b, r}.valid()) continue;
        OperatorPolynomial op = fischer_factor(n, a, b, r);
        for (auto& node : build_basis(n, a, b, r)) out.push_back(op.apply(node.element));
      }
    }
  }
  return out;
}

namespace detail {

// Coordinates of a list of spinor polynomials in the monomial-times-state
// basis, for exact rank computations.
inline std::vector<std::vector<GaussianRational>> coordinate_rows(
    const std::vector<SpinorPolynomial>& fs) {
  std::map<std::pair<std::uint32_t, Monomial>, std::size_t> col;
  for (const auto& f : fs)
    for (const auto& [state, poly] : f.components())
      for (const auto& [m, c] : poly.terms()) col.emplace(std::make_pair(state.mask(), m), 0);
  std::size_t next = 0;
  for (auto& [key, idx] : col) idx = next++;
  std::vector<std::vector<GaussianRational>> rows(
      fs.size(), std::vector<GaussianRational>(col.size(), GaussianRational(0)));
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (const auto& [state, poly] : fs[i].components())
      for (const auto& [m, c] : poly.terms())
        rows[i][col.at(std::make_pair(state.mask(), m))] = c;
  return rows;
}

}  // namespace detail

inline CheckReport theorem2_check(unsigned n, unsigned k) {
  CheckReport rep;
  if (n < 2) {
    rep.failures.push_back("theorem2_check: need n >= 2");
    return rep;
  }
  std::vector<SpinorPolynomial> images;
  unsigned components = 0;
  for (unsigned i = 0; i <= k; ++i) {
    std::vector<SpinorPolynomial> base;
    for (const auto& f : fischer_basis(n - 1, i)) base.push_back(embed(f, n));
    for (unsigned j = 0; i + j <= k; ++j) {
      unsigned m = k - i - j;
      OperatorPolynomial s = s_poly(static_cast<int>(m), j, i, n);
      OperatorPolynomial plain_op = ScalarPolynomial::zbar(n, n).pow(j) * s;
      OperatorPolynomial dagger_op =
          ScalarPolynomial::z(n, n).pow(j) * (s * op_creation(n, n));
      components += 2;
      for (std::size_t idx = 0; idx < base.size(); ++idx) {
        for (bool dagger : {false, true}) {
          SpinorPolynomial img = (dagger ? dagger_op : plain_op).apply(base[idx]);
          ++rep.checked;
          std::ostringstream where;
          where << "component (m=" << m << ",j=" << j << ",i=" << i << ","
                << (dagger ? "dagger" : "plain") << ") element " << idx;
          if (img.is_zero()) {
            rep.failures.push_back("theorem2_check: zero image at " + where.str());
            continue;
          }
          if (!euclidean_dirac(img).is_zero()) {
            rep.failures.push_back("theorem2_check: image not Dirac-closed at " + where.str());
            continue;
          }
          images.push_back(std::move(img));
        }
      }
    }
  }
  rep.notes.push_back("components: " + std::to_string(components));
  std::size_t oracle = monogenic_kernel_dim(n, k);
  ++rep.checked;
  if (images.size() != oracle)
    rep.failures.push_back("theorem2_check: image count " + std::to_string(images.size()) +
                           " != kernel dimension " + std::to_string(oracle));
  std::size_t rank = exact_rank(detail::coordinate_rows(images));
  ++rep.checked;
  if (rank != images.size())
    rep.failures.push_back("theorem2_check: images linearly dependent (rank " +
                           std::to_string(rank) + " of " + std::to_string(images.size()) + ")");
  return rep;
}

// ---------------------------------------------------------------------------
// Appell-property certification: every derivative of a dimension-2 basis
// element is again a basis element of the lowered label, with coefficient
// exactly +1 or -1, and the top-index derivatives vanish.

namespace detail {

struct Dim2Family {
  std::map<unsigned, SpinorPolynomial> p, pt, q, qt;
};

inline Dim2Family dim2_family(unsigned a, unsigned b) {
  Dim2Family fam;
  for (auto& e : basis_dim2(a, b, 1)) {
    switch (e.kind) {
      case Dim2Kind::P: fam.p.emplace(e.c, std::move(e.element)); break;
      case Dim2Kind::PTilde: fam.pt.emplace(e.c, std::move(e.element)); break;
      case Dim2Kind::Q: fam.q.emplace(e.d, std::move(e.element)); break;
      case Dim2Kind::QTilde: fam.qt.emplace(e.d, std::move(e.element)); break;
      case Dim2Kind::Monomial: break;
    }
  }
  return fam;
}

inline std::string brief_spinor(const SpinorPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  std::size_t shown = 0;
  for (const auto& [state, poly] : f.components())
    for (const auto& [m, c] : poly.terms()) {
      if (shown == 3) {
        os << " ...";
        return os.str();
      }
      if (shown) os << " + ";
      os << "(" << rat_to_string(c.re()) << (c.im() == 0 ? "" : "," + rat_to_string(c.im()))
         << ")*z^(";
      for (std::size_t t = 0; t < m.z.size(); ++t) os << (t ? "," : "") << m.z[t];
      os << ")zb^(";
      for (std::size_t t = 0; t < m.zbar.size(); ++t) os << (t ? "," : "") << m.zbar[t];
      os << ")|" << state.mask() << ">";
      ++shown;
    }
  return os.str();
}

}  // namespace detail

inline CheckReport appell_check(unsigned a_max, unsigned b_max) {
  CheckReport rep;
  std::map<std::pair<unsigned, unsigned>, detail::Dim2Family> cache;
  auto fam = [&](long long a, long long b) -> const detail::Dim2Family* {
    if (a < 0 || b < 0) return nullptr;
    auto key = std::make_pair(static_cast<unsigned>(a), static_cast<unsigned>(b));
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, detail::dim2_family(key.first, key.second)).first;
    return &it->second;
  };

  enum class K { P, Pt, Q, Qt };
  auto lookup = [](const detail::Dim2Family& f, K kind,
                   long long idx) -> const SpinorPolynomial& {
    const std::map<unsigned, SpinorPolynomial>* m = nullptr;
    switch (kind) {
      case K::P: m = &f.p; break;
      case K::Pt: m = &f.pt; break;
      case K::Q: m = &f.q; break;
      case K::Qt: m = &f.qt; break;
    }
    auto it = m->find(static_cast<unsigned>(idx));
    if (idx < 0 || it == m->end())
      throw std::logic_error("appell_check: referenced basis element does not exist");
    return it->second;
  };

  // One table line: derivative `got` must equal sign * family element of the
  // lowered label (or zero when that label is empty space).
  auto line = [&](const SpinorPolynomial& got, long long a2, long long b2, K kind, long long idx,
                  int sign, const std::string& what) {
    ++rep.checked;
    const detail::Dim2Family* f = fam(a2, b2);
    SpinorPolynomial want(2);
    if (f) want = lookup(*f, kind, idx) * GaussianRational(sign);
    if (!(got == want))
      rep.failures.push_back("appell_check: " + what + "; residual " +
                             detail::brief_spinor(got - want));
  };
  auto vanish = [&](const SpinorPolynomial& got, const std::string& what) {
    ++rep.checked;
    if (!got.is_zero())
      rep.failures.push_back("appell_check: " + what + " expected 0; got " +
                             detail::brief_spinor(got));
  };

  for (unsigned a = 0; a <= a_max; ++a)
    for (unsigned b = 0; b <= b_max; ++b) {
      const detail::Dim2Family& F = *fam(a, b);
      const long long A = a, B = b;
      auto tag = [&](const char* op, const char* family, unsigned idx) {
        std::ostringstream os;
        os << (a < b ? "(i)" : a > b ? "(ii)" : "(iii)") << " " << op << " " << family << "[a="
           << a << ",b=" << b << ";" << idx << "]";
        return os.str();
      };
      if (a < b) {
        for (const auto& [c, e] : F.p) {  // c = 0 .. a
          if (c + 1 <= a)
            line(e.derive_z(2), A - 1, B, K::P, c, +1, tag("d/dz2", "p", c));
          else
            vanish(e.derive_z(2), tag("d/dz2", "p", c));
          line(e.derive_zbar(2), A, B - 1, K::P, c, +1, tag("d/dzb2", "p", c));
          if (c == 0)
            line(e.derive_z(1), A - 1, B, K::Qt, 0, -1, tag("d/dz1", "p", c));
          else
            line(e.derive_z(1), A - 1, B, K::P, c - 1, +1, tag("d/dz1", "p", c));
          if (c + 1 <= a)
            line(e.derive_zbar(1), A, B - 1, K::P, c + 1, -1, tag("d/dzb1", "p", c));
          else
            vanish(e.derive_zbar(1), tag("d/dzb1", "p", c));
        }
        for (const auto& [d, e] : F.qt) {  // d = 0 .. b-a-1
          line(e.derive_z(2), A - 1, B, K::Qt, d, +1, tag("d/dz2", "q~", d));
          if (d + a + 2 <= b)  // d <= b-a-2
            line(e.derive_zbar(2), A, B - 1, K::Qt, d, +1, tag("d/dzb2", "q~", d));
          else  // d = b-a-1
            line(e.derive_zbar(2), A, B - 1, K::Q, d, +1, tag("d/dzb2", "q~", d));
          line(e.derive_z(1), A - 1, B, K::Qt, d + 1, -1, tag("d/dz1", "q~", d));
          if (d == 0)
            line(e.derive_zbar(1), A, B - 1, K::P, 0, +1, tag("d/dzb1", "q~", d));
          else
            line(e.derive_zbar(1), A, B - 1, K::Qt, d - 1, +1, tag("d/dzb1", "q~", d));
        }
        for (const auto& [d, e] : F.q) {  // d = b-a .. b
          if (d == b - a)
            line(e.derive_z(2), A - 1, B, K::Qt, d, +1, tag("d/dz2", "q", d));
          else
            line(e.derive_z(2), A - 1, B, K::Q, d, +1, tag("d/dz2", "q", d));
          if (d + 1 <= b)
            line(e.derive_zbar(2), A, B - 1, K::Q, d, +1, tag("d/dzb2", "q", d));
          else
            vanish(e.derive_zbar(2), tag("d/dzb2", "q", d));
          if (d + 1 <= b)
            line(e.derive_z(1), A - 1, B, K::Q, d + 1, -1, tag("d/dz1", "q", d));
          else
            vanish(e.derive_z(1), tag("d/dz1", "q", d));
          line(e.derive_zbar(1), A, B - 1, K::Q, d - 1, +1, tag("d/dzb1", "q", d));
        }
      } else if (a > b) {
        for (const auto& [c, e] : F.pt) {  // c = 0 .. a-b-1
          if (c + b + 2 <= a)  // c <= a-b-2
            line(e.derive_z(2), A - 1, B, K::Pt, c, +1, tag("d/dz2", "p~", c));
          else  // c = a-b-1
            line(e.derive_z(2), A - 1, B, K::P, c, +1, tag("d/dz2", "p~", c));
          line(e.derive_zbar(2), A, B - 1, K::Pt, c, +1, tag("d/dzb2", "p~", c));
          if (c == 0)
            line(e.derive_z(1), A - 1, B, K::Q, 0, -1, tag("d/dz1", "p~", c));
          else
            line(e.derive_z(1), A - 1, B, K::Pt, c - 1, +1, tag("d/dz1", "p~", c));
          line(e.derive_zbar(1), A, B - 1, K::Pt, c + 1, -1, tag("d/dzb1", "p~", c));
        }
        for (const auto& [c, e] : F.p) {  // c = a-b .. a
          if (c + 1 <= a)
            line(e.derive_z(2), A - 1, B, K::P, c, +1, tag("d/dz2", "p", c));
          else
            vanish(e.derive_z(2), tag("d/dz2", "p", c));
          if (c == a - b)
            line(e.derive_zbar(2), A, B - 1, K::Pt, c, +1, tag("d/dzb2", "p", c));
          else
            line(e.derive_zbar(2), A, B - 1, K::P, c, +1, tag("d/dzb2", "p", c));
          line(e.derive_z(1), A - 1, B, K::P, c - 1, +1, tag("d/dz1", "p", c));
          // Forced to -1 by the Q-polynomial contiguity relations (certified
          // exactly over the whole grid), matching the sibling regimes.
          if (c + 1 <= a)
            line(e.derive_zbar(1), A, B - 1, K::P, c + 1, -1, tag("d/dzb1", "p", c));
          else
            vanish(e.derive_zbar(1), tag("d/dzb1", "p", c));
        }
        for (const auto& [d, e] : F.q) {  // d = 0 .. b
          line(e.derive_z(2), A - 1, B, K::Q, d, +1, tag("d/dz2", "q", d));
          if (d + 1 <= b)
            line(e.derive_zbar(2), A, B - 1, K::Q, d, +1, tag("d/dzb2", "q", d));
          else
            vanish(e.derive_zbar(2), tag("d/dzb2", "q", d));
          // Forced to -1 by the Q-polynomial contiguity relations (certified
          // exactly over the whole grid), matching the sibling regimes.
          if (d + 1 <= b)
            line(e.derive_z(1), A - 1, B, K::Q, d + 1, -1, tag("d/dz1", "q", d));
          else
            vanish(e.derive_z(1), tag("d/dz1", "q", d));
          if (d == 0)
            line(e.derive_zbar(1), A, B - 1, K::Pt, 0, +1, tag("d/dzb1", "q", d));
          else
            line(e.derive_zbar(1), A, B - 1, K::Q, d - 1, +1, tag("d/dzb1", "q", d));
        }
      } else {  // a == b
        for (const auto& [c, e] : F.p) {  // c = 0 .. a
          if (c + 1 <= a)
            line(e.derive_z(2), A - 1, B, K::P, c, +1, tag("d/dz2", "p", c));
          else
            vanish(e.derive_z(2), tag("d/dz2", "p", c));
          if (c == 0)
            line(e.derive_zbar(2), A, B - 1, K::Pt, 0, +1, tag("d/dzb2", "p", c));
          else
            line(e.derive_zbar(2), A, B - 1, K::P, c, +1, tag("d/dzb2", "p", c));
          // The printed table omits the sign here; it is forced to be -1 by
          // the Q-polynomial contiguity relations, and certified so.
          if (c == 0)
            line(e.derive_z(1), A - 1, B, K::Qt, 0, -1, tag("d/dz1", "p", c));
          else
            line(e.derive_z(1), A - 1, B, K::P, c - 1, +1, tag("d/dz1", "p", c));
          if (c + 1 <= a)
            line(e.derive_zbar(1), A, B - 1, K::P, c + 1, -1, tag("d/dzb1", "p", c));
          else
            vanish(e.derive_zbar(1), tag("d/dzb1", "p", c));
        }
        for (const auto& [d, e] : F.q) {  // d = 0 .. a
          if (d == 0 && a >= 1)
            line(e.derive_z(2), A - 1, B, K::Qt, 0, +1, tag("d/dz2", "q", d));
          else if (d >= 1)
            line(e.derive_z(2), A - 1, B, K::Q, d, +1, tag("d/dz2", "q", d));
          else  // a == 0: the lowered label is the zero space
            vanish(e.derive_z(2), tag("d/dz2", "q", d));
          if (d + 1 <= a)
            line(e.derive_zbar(2), A, B - 1, K::Q, d, +1, tag("d/dzb2", "q", d));
          else
            vanish(e.derive_zbar(2), tag("d/dzb2", "q", d));
          if (d + 1 <= a)
            line(e.derive_z(1), A - 1, B, K::Q, d + 1, -1, tag("d/dz1", "q", d));
          else
            vanish(e.derive_z(1), tag("d/dz1", "q", d));
          if (d == 0)
            line(e.derive_zbar(1), A, B - 1, K::Pt, 0, +1, tag("d/dzb1", "q", d));
          else
            line(e.derive_zbar(1), A, B - 1, K::Q, d - 1, +1, tag("d/dzb1", "q", d));
        }
      }
    }
  return rep;
}

}  // namespace hermon
