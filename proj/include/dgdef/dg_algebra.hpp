#ifndef DGDEF_DG_ALGEBRA_HPP
#define DGDEF_DG_ALGEBRA_HPP

#include <array>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dgdef/graded.hpp"
#include "dgdef/matrix.hpp"

namespace dgdef {

// A DG algebra presented by structure constants on a finite degree window.
//
// Conventions, fixed once for the whole library:
//   d has degree +1, d(1) = 0, d(ab) = d(a) b + (-1)^|a| a d(b)
//   opposite multiplication  a *op b = (-1)^{|a||b|} b a
//   tensor product           (a (x) r)(a' (x) r') = (-1)^{|r||a'|} a a' (x) r r'
//
// mult[(i,j)] maps (dim_i * dim_j) Kronecker coordinates to degree i+j; a
// missing table for a known pair means the zero product. Pairs whose product
// cannot be recorded (it would leave a truncated window) are flagged in
// unknown_pairs; differentials that would leave the window are flagged in
// unknown_diff.
template <class K>
struct DGAlgebra {
  GradedSpace sp;
  Vec<K> unit;  // coordinates in degree 0
  std::map<std::pair<int, int>, Matrix<K>> mult;
  std::map<int, Matrix<K>> diff;  // diff[i] : degree i -> i+1
  std::set<std::pair<int, int>> unknown_pairs;
  std::set<int> unknown_diff;

  bool operator==(const DGAlgebra&) const = default;

  int dim(int d) const { return sp.dim(d); }

  bool pair_known(int i, int j) const {
    if (!sp.in_window(i) || !sp.in_window(j)) return false;
    if (unknown_pairs.count({i, j})) return false;
    return sp.degree_known(i + j);
  }

  bool diff_known(int i) const {
    if (!sp.in_window(i)) return false;
    if (unknown_diff.count(i)) return false;
    return sp.degree_known(i + 1);
  }

  // Product of coordinate vectors in degrees i and j.
  Vec<K> mul(int i, const Vec<K>& x, int j, const Vec<K>& y) const {
    internal_check(pair_known(i, j), "product not recorded for degree pair (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
    internal_check((int)x.size() == dim(i) && (int)y.size() == dim(j),
                   "mul: coordinate length mismatch");
    int td = dim(i + j);
    auto it = mult.find({i, j});
    if (it == mult.end() || td == 0) return Vec<K>(td, K(0));
    return it->second * vec_kron(x, y);
  }

  // Product of basis elements (i, a) and (j, b).
  Vec<K> basis_product(int i, int a, int j, int b) const {
    internal_check(pair_known(i, j), "basis_product: pair not recorded");
    int td = dim(i + j);
    auto it = mult.find({i, j});
    if (it == mult.end() || td == 0) return Vec<K>(td, K(0));
    return it->second.col(kron(a, dim(j), b));
  }

  Vec<K> d(int i, const Vec<K>& x) const {
    internal_check(diff_known(i), "differential not recorded at degree " + std::to_string(i));
    internal_check((int)x.size() == dim(i), "d: coordinate length mismatch");
    int td = dim(i + 1);
    auto it = diff.find(i);
    if (it == diff.end() || td == 0) return Vec<K>(td, K(0));
    return it->second * x;
  }

  Matrix<K> diff_matrix(int i) const {
    internal_check(diff_known(i), "differential not recorded at degree " + std::to_string(i));
    auto it = diff.find(i);
    if (it == diff.end()) return Matrix<K>::zero(dim(i + 1), dim(i));
    return it->second;
  }

  std::pair<int, int> find_label(const std::string& l) const {
    for (const auto& [deg, ls] : sp.labels)
      for (size_t i = 0; i < ls.size(); ++i)
        if (ls[i] == l) return {deg, (int)i};
    throw SchemaError("unknown basis label '" + l + "'");
  }
};

template <class K>
using AlgebraPtr = std::shared_ptr<const DGAlgebra<K>>;

// Canonical form: zero tables are never stored, so structural equality of two
// deterministic constructions is meaningful.
template <class K>
void prune_zero_tables(DGAlgebra<K>& a) {
  std::erase_if(a.mult, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(a.diff, [](const auto& kv) { return kv.second.is_zero(); });
}

template <class K>
bool same_algebra(const AlgebraPtr<K>& a, const AlgebraPtr<K>& b) {
  return a == b || (a && b && *a == *b);
}

// The ground field as a DG algebra: one generator "1" in degree 0.
template <class K>
AlgebraPtr<K> unit_algebra() {
  DGAlgebra<K> a;
  a.sp = make_graded_space({0, 0}, {{0, {"1"}}});
  a.unit = {K(1)};
  a.mult[{0, 0}] = Matrix<K>::identity(1);
  return std::make_shared<DGAlgebra<K>>(std::move(a));
}

// ---------------------------------------------------------------------------
// validation

template <class K>
ValidationReport validate_dg_algebra(const DGAlgebra<K>& B) {
  ValidationReport rep = B.sp.validate();
  auto lbl = [&](int deg, int i) {
    return B.sp.dim(deg) > (int)i ? B.sp.label(deg, i) : std::string("?");
  };

  if ((int)B.unit.size() != B.dim(0) || vec_is_zero(B.unit)) {
    rep.add("unit", "unit vector missing or zero in degree 0");
    return rep;
  }
  if (B.diff_known(0) && !vec_is_zero(B.d(0, B.unit))) rep.add("unit", "d(1) != 0");

  for (int i = B.sp.win.lo; i <= B.sp.win.hi; ++i) {
    // unit laws
    if (B.dim(i) == 0) continue;
    if (B.pair_known(0, i) && B.pair_known(i, 0)) {
      for (int a = 0; a < B.dim(i); ++a) {
        Vec<K> e = unit_vec<K>(B.dim(i), a);
        if (B.mul(0, B.unit, i, e) != e) rep.add("unit", "1*" + lbl(i, a) + " != " + lbl(i, a));
        if (B.mul(i, e, 0, B.unit) != e) rep.add("unit", lbl(i, a) + "*1 != " + lbl(i, a));
      }
    }
    // d squared
    if (B.diff_known(i) && B.diff_known(i + 1)) {
      Matrix<K> dd = B.diff_matrix(i + 1) * B.diff_matrix(i);
      if (!dd.is_zero())
        for (int a = 0; a < B.dim(i); ++a)
          if (!vec_is_zero(dd.col(a))) rep.add("d_squared", "d(d(" + lbl(i, a) + ")) != 0");
    }
  }

  // Leibniz on every basis pair whose participating degrees are all known
  for (int i = B.sp.win.lo; i <= B.sp.win.hi; ++i) {
    for (int j = B.sp.win.lo; j <= B.sp.win.hi; ++j) {
      if (B.dim(i) == 0 || B.dim(j) == 0) continue;
      if (!B.pair_known(i, j) || !B.diff_known(i) || !B.diff_known(j)) continue;
      if (!B.diff_known(i + j) && B.dim(i + j) > 0) continue;
      if (!B.pair_known(i + 1, j) || !B.pair_known(i, j + 1)) continue;
      for (int a = 0; a < B.dim(i); ++a)
        for (int b = 0; b < B.dim(j); ++b) {
          Vec<K> ea = unit_vec<K>(B.dim(i), a), eb = unit_vec<K>(B.dim(j), b);
          Vec<K> lhs = B.dim(i + j) ? B.d(i + j, B.mul(i, ea, j, eb)) : Vec<K>(B.dim(i + j + 1), K(0));
          Vec<K> rhs = B.mul(i + 1, B.d(i, ea), j, eb);
          vec_axpy(rhs, sign_pow<K>(i), B.mul(i, ea, j + 1, B.d(j, eb)));
          if (lhs != rhs)
            rep.add("leibniz", "(" + lbl(i, a) + "," + lbl(j, b) + ")");
        }
    }
  }

  // associativity on every basis triple whose products are all known
  for (int i = B.sp.win.lo; i <= B.sp.win.hi; ++i)
    for (int j = B.sp.win.lo; j <= B.sp.win.hi; ++j)
      for (int l = B.sp.win.lo; l <= B.sp.win.hi; ++l) {
        if (B.dim(i) == 0 || B.dim(j) == 0 || B.dim(l) == 0) continue;
        if (!B.pair_known(i, j) || !B.pair_known(j, l)) continue;
        if (!B.pair_known(i + j, l) || !B.pair_known(i, j + l)) continue;
        for (int a = 0; a < B.dim(i); ++a)
          for (int b = 0; b < B.dim(j); ++b)
            for (int c = 0; c < B.dim(l); ++c) {
              Vec<K> ea = unit_vec<K>(B.dim(i), a), eb = unit_vec<K>(B.dim(j), b),
                     ec = unit_vec<K>(B.dim(l), c);
              Vec<K> lhs = B.mul(i + j, B.mul(i, ea, j, eb), l, ec);
              Vec<K> rhs = B.mul(i, ea, j + l, B.mul(j, eb, l, ec));
              if (lhs != rhs)
                rep.add("associativity",
                        "(" + lbl(i, a) + "," + lbl(j, b) + "," + lbl(l, c) + ")");
            }
      }
  return rep;
}

// ---------------------------------------------------------------------------
// opposite algebra: same space and differential, product twisted by the
// Koszul sign.

template <class K>
AlgebraPtr<K> opposite(const DGAlgebra<K>& B) {
  DGAlgebra<K> op;
  op.sp = B.sp;
  op.unit = B.unit;
  op.diff = B.diff;
  op.unknown_diff = B.unknown_diff;
  for (const auto& [ij, m] : B.mult) {
    auto [j, i] = ij;  // source table for opposite pair (i, j)
    Matrix<K> t(m.rows(), B.dim(i) * B.dim(j));
    for (int a = 0; a < B.dim(i); ++a)
      for (int b = 0; b < B.dim(j); ++b) {
        Vec<K> prod = vec_scale(koszul_sign<K>(i, j), m.col(kron(b, B.dim(i), a)));
        t.set_col(kron(a, B.dim(j), b), prod);
      }
    op.mult[{i, j}] = std::move(t);
  }
  for (const auto& [i, j] : B.unknown_pairs) op.unknown_pairs.insert({j, i});
  prune_zero_tables(op);
  return std::make_shared<DGAlgebra<K>>(std::move(op));
}

// ---------------------------------------------------------------------------
// tensor product of DG algebras, with the pair indexing kept around: most
// constructions over B (x) R need to take tensors apart again.

template <class K>
struct TensorDG {
  AlgebraPtr<K> alg;
  AlgebraPtr<K> left, right;
  // basis of degree n: entries (ldeg, lidx, rdeg, ridx) in construction order
  std::map<int, std::vector<std::array<int, 4>>> factor;
  std::map<std::array<int, 4>, int> index;

  int idx(int ld, int li, int rd, int ri) const { return index.at({ld, li, rd, ri}); }

  // lv (x) rv as a coordinate vector in degree ld + rd.
  Vec<K> embed(int ld, const Vec<K>& lv, int rd, const Vec<K>& rv) const {
    Vec<K> out(alg->dim(ld + rd), K(0));
    for (int a = 0; a < (int)lv.size(); ++a) {
      if (lv[a] == K(0)) continue;
      for (int b = 0; b < (int)rv.size(); ++b) {
        if (rv[b] == K(0)) continue;
        out[idx(ld, a, rd, b)] += lv[a] * rv[b];
      }
    }
    return out;
  }
};

template <class K>
TensorDG<K> tensor_dg(const AlgebraPtr<K>& B, const AlgebraPtr<K>& R) {
  TensorDG<K> t;
  t.left = B;
  t.right = R;
  DGAlgebra<K> P;
  P.sp.win = B->sp.win.sum(R->sp.win);
  P.sp.truncated_below = B->sp.truncated_below || R->sp.truncated_below;
  P.sp.truncated_above = B->sp.truncated_above || R->sp.truncated_above;
  internal_check(!P.sp.win.empty(), "tensor_dg: empty window");

  for (int n = P.sp.win.lo; n <= P.sp.win.hi; ++n) {
    std::vector<std::string> ls;
    for (int i = B->sp.win.lo; i <= B->sp.win.hi; ++i) {
      int j = n - i;
      if (!R->sp.in_window(j)) continue;
      for (int a = 0; a < B->dim(i); ++a)
        for (int b = 0; b < R->dim(j); ++b) {
          t.factor[n].push_back({i, a, j, b});
          t.index[{i, a, j, b}] = (int)ls.size();
          ls.push_back(B->sp.label(i, a) + "⊗" + R->sp.label(j, b));
        }
    }
    P.sp.dims[n] = (int)ls.size();
    P.sp.labels[n] = std::move(ls);
  }

  // unit
  P.unit.assign(P.sp.dim(0), K(0));
  if (B->sp.in_window(0) && R->sp.in_window(0))
    for (int a = 0; a < B->dim(0); ++a)
      for (int b = 0; b < R->dim(0); ++b) {
        if (B->unit[a] == K(0) || R->unit[b] == K(0)) continue;
        P.unit[t.index.at({0, a, 0, b})] += B->unit[a] * R->unit[b];
      }

  auto tdim = [&](int n) { return P.sp.dim(n); };

  // multiplication tables; a pair is unknown as soon as one contributing
  // factor product is unknown
  for (int m = P.sp.win.lo; m <= P.sp.win.hi; ++m) {
    for (int n = P.sp.win.lo; n <= P.sp.win.hi; ++n) {
      if (!P.sp.degree_known(m + n)) continue;
      if (tdim(m) == 0 || tdim(n) == 0) continue;
      bool known = true;
      for (const auto& [i1, a1, j1, b1] : t.factor[m]) {
        for (const auto& [i2, a2, j2, b2] : t.factor[n]) {
          if (!B->pair_known(i1, i2) || !R->pair_known(j1, j2)) known = false;
        }
      }
      if (!known) {
        P.unknown_pairs.insert({m, n});
        continue;
      }
      if (tdim(m + n) == 0) continue;
      Matrix<K> tab(tdim(m + n), tdim(m) * tdim(n));
      for (int u = 0; u < tdim(m); ++u) {
        auto [i1, a1, j1, b1] = t.factor[m][u];
        for (int v = 0; v < tdim(n); ++v) {
          auto [i2, a2, j2, b2] = t.factor[n][v];
          Vec<K> bp = B->basis_product(i1, a1, i2, a2);
          Vec<K> rp = R->basis_product(j1, b1, j2, b2);
          K sgn = koszul_sign<K>(j1, i2);
          Vec<K> out(tdim(m + n), K(0));
          for (int x = 0; x < (int)bp.size(); ++x) {
            if (bp[x] == K(0)) continue;
            for (int y = 0; y < (int)rp.size(); ++y) {
              if (rp[y] == K(0)) continue;
              out[t.index.at({i1 + i2, x, j1 + j2, y})] += sgn * bp[x] * rp[y];
            }
          }
          tab.set_col(kron(u, tdim(n), v), out);
        }
      }
      P.mult[{m, n}] = std::move(tab);
    }
  }

  // differential d (x) 1 + 1 (x) d
  for (int n = P.sp.win.lo; n <= P.sp.win.hi; ++n) {
    if (!P.sp.degree_known(n + 1)) continue;
    bool known = true;
    for (const auto& [i, a, j, b] : t.factor[n])
      if (!B->diff_known(i) || !R->diff_known(j)) known = false;
    if (!known) {
      P.unknown_diff.insert(n);
      continue;
    }
    if (tdim(n) == 0 || P.sp.dim(n + 1) == 0) continue;
    Matrix<K> dm(P.sp.dim(n + 1), tdim(n));
    for (int u = 0; u < tdim(n); ++u) {
      auto [i, a, j, b] = t.factor[n][u];
      Vec<K> out(P.sp.dim(n + 1), K(0));
      Vec<K> da = B->d(i, unit_vec<K>(B->dim(i), a));
      for (int x = 0; x < (int)da.size(); ++x)
        if (!(da[x] == K(0))) out[t.index.at({i + 1, x, j, b})] += da[x];
      Vec<K> db = R->d(j, unit_vec<K>(R->dim(j), b));
      for (int y = 0; y < (int)db.size(); ++y)
        if (!(db[y] == K(0))) out[t.index.at({i, a, j + 1, y})] += sign_pow<K>(i) * db[y];
      dm.set_col(u, out);
    }
    P.diff[n] = std::move(dm);
  }

  prune_zero_tables(P);
  t.alg = std::make_shared<DGAlgebra<K>>(std::move(P));
  return t;
}

// ---------------------------------------------------------------------------
// algebra maps

template <class K>
struct AlgebraMap {
  AlgebraPtr<K> from, to;
  std::map<int, Matrix<K>> comp;  // per degree

  Matrix<K> matrix(int d) const {
    auto it = comp.find(d);
    if (it != comp.end()) return it->second;
    return Matrix<K>::zero(to->dim(d), from->dim(d));
  }
  Vec<K> apply(int d, const Vec<K>& v) const { return matrix(d) * v; }

  static AlgebraMap identity(const AlgebraPtr<K>& a) {
    AlgebraMap m{a, a, {}};
    for (const auto& [d, n] : a->sp.dims)
      if (n > 0) m.comp[d] = Matrix<K>::identity(n);
    return m;
  }
};

template <class K>
AlgebraMap<K> compose(const AlgebraMap<K>& g, const AlgebraMap<K>& f) {
  internal_check(same_algebra(g.from, f.to), "compose: middle algebras differ");
  AlgebraMap<K> r{f.from, g.to, {}};
  for (const auto& [d, n] : f.from->sp.dims)
    if (n > 0) r.comp[d] = g.matrix(d) * f.matrix(d);
  return r;
}

template <class K>
ValidationReport validate_algebra_map(const AlgebraMap<K>& f) {
  ValidationReport rep;
  const auto& A = *f.from;
  const auto& B = *f.to;
  if (B.sp.in_window(0) && f.apply(0, A.unit) != B.unit) rep.add("unit", "f(1) != 1");
  for (int i = A.sp.win.lo; i <= A.sp.win.hi; ++i) {
    if (A.dim(i) == 0) continue;
    if (!B.sp.in_window(i)) {
      rep.add("window", "source degree " + std::to_string(i) + " missing in target");
      continue;
    }
    if (A.diff_known(i) && B.diff_known(i) && B.sp.in_window(i + 1)) {
      Matrix<K> lhs = f.matrix(i + 1) * A.diff_matrix(i);
      Matrix<K> rhs = B.diff_matrix(i) * f.matrix(i);
      if (!(lhs == rhs)) rep.add("chain", "f d != d f at degree " + std::to_string(i));
    }
    for (int j = A.sp.win.lo; j <= A.sp.win.hi; ++j) {
      if (A.dim(j) == 0) continue;
      if (!A.pair_known(i, j) || !B.pair_known(i, j)) continue;
      for (int a = 0; a < A.dim(i); ++a)
        for (int b = 0; b < A.dim(j); ++b) {
          Vec<K> lhs = f.apply(i + j, A.basis_product(i, a, j, b));
          Vec<K> rhs = B.mul(i, f.apply(i, unit_vec<K>(A.dim(i), a)), j,
                             f.apply(j, unit_vec<K>(A.dim(j), b)));
          if (lhs != rhs)
            rep.add("multiplicative", "(" + A.sp.label(i, a) + "," + A.sp.label(j, b) + ")");
        }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// sub- and quotient algebras

// Coordinates of v over the rref rows of s (pivot entries), checking that v
// lies in the span.
template <class K>
Vec<K> coords_in(const RowSpace<K>& s, const Vec<K>& v) {
  Vec<K> c(s.dim());
  Vec<K> r = v;
  for (int k = 0; k < s.dim(); ++k) {
    c[k] = r[s.pivots()[k]];
    if (!(c[k] == K(0))) vec_axpy(r, -c[k], s.rows()[k]);
  }
  internal_check(vec_is_zero(r), "coords_in: vector outside span");
  return c;
}

template <class K>
struct SubAlgebra {
  AlgebraPtr<K> alg;
  AlgebraMap<K> inclusion;
  std::map<int, RowSpace<K>> span;
};

// Subalgebra spanned (degreewise) by the given vectors. Must contain the
// unit and be closed under product and differential wherever these are known.
template <class K>
SubAlgebra<K> subalgebra(const AlgebraPtr<K>& B,
                         const std::map<int, std::vector<Vec<K>>>& spans) {
  SubAlgebra<K> out;
  for (int d = B->sp.win.lo; d <= B->sp.win.hi; ++d) out.span.emplace(d, RowSpace<K>(B->dim(d)));
  for (const auto& [d, vs] : spans) {
    internal_check(B->sp.in_window(d), "subalgebra: span degree outside window");
    out.span.at(d).insert_all(vs);
  }
  if (!out.span.at(0).contains(B->unit))
    throw PreconditionError("subalgebra: unit not contained");
  for (int i = B->sp.win.lo; i <= B->sp.win.hi; ++i) {
    if (B->diff_known(i) && B->sp.in_window(i + 1))
      for (const auto& r : out.span.at(i).rows())
        if (!out.span.at(i + 1).contains(B->d(i, r)))
          throw PreconditionError("subalgebra: not closed under d at degree " +
                                  std::to_string(i));
    for (int j = B->sp.win.lo; j <= B->sp.win.hi; ++j) {
      if (!B->pair_known(i, j) || !B->sp.in_window(i + j)) continue;
      for (const auto& x : out.span.at(i).rows())
        for (const auto& y : out.span.at(j).rows())
          if (!out.span.at(i + j).contains(B->mul(i, x, j, y)))
            throw PreconditionError("subalgebra: not closed under product at degrees (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  DGAlgebra<K> C;
  C.sp.win = B->sp.win;
  C.sp.truncated_below = B->sp.truncated_below;
  C.sp.truncated_above = B->sp.truncated_above;
  std::map<int, Matrix<K>> incl;
  for (int d = B->sp.win.lo; d <= B->sp.win.hi; ++d) {
    const auto& rs = out.span.at(d);
    C.sp.dims[d] = rs.dim();
    std::vector<std::string> ls;
    for (int k = 0; k < rs.dim(); ++k) {
      const Vec<K>& row = rs.rows()[k];
      // reuse the ambient label when the basis vector is a standard one
      bool std_basis = true;
      int where = -1;
      for (int c = 0; c < (int)row.size(); ++c) {
        if (row[c] == K(0)) continue;
        if (where >= 0 || !(row[c] == K(1))) {
          std_basis = false;
          break;
        }
        where = c;
      }
      if (std_basis && where >= 0)
        ls.push_back(B->sp.label(d, where));
      else
        ls.push_back("s" + std::to_string(d) + "_" + std::to_string(k));
    }
    C.sp.labels[d] = std::move(ls);
    incl[d] = Matrix<K>::from_cols(rs.rows(), B->dim(d));
  }
  C.unit = coords_in(out.span.at(0), B->unit);
  C.unknown_pairs = B->unknown_pairs;
  C.unknown_diff = B->unknown_diff;
  for (int i = B->sp.win.lo; i <= B->sp.win.hi; ++i) {
    if (B->diff_known(i) && out.span.at(i).dim() > 0 && B->sp.in_window(i + 1) &&
        out.span.at(i + 1).dim() > 0) {
      Matrix<K> dm(out.span.at(i + 1).dim(), out.span.at(i).dim());
      for (int k = 0; k < out.span.at(i).dim(); ++k)
        dm.set_col(k, coords_in(out.span.at(i + 1), B->d(i, out.span.at(i).rows()[k])));
      C.diff[i] = std::move(dm);
    }
    for (int j = B->sp.win.lo; j <= B->sp.win.hi; ++j) {
      if (!B->pair_known(i, j)) continue;
      int di = out.span.at(i).dim(), dj = out.span.at(j).dim();
      if (di == 0 || dj == 0 || !B->sp.in_window(i + j) || out.span.at(i + j).dim() == 0)
        continue;
      Matrix<K> tab(out.span.at(i + j).dim(), di * dj);
      for (int a = 0; a < di; ++a)
        for (int b = 0; b < dj; ++b)
          tab.set_col(kron(a, dj, b),
                      coords_in(out.span.at(i + j),
                                B->mul(i, out.span.at(i).rows()[a], j, out.span.at(j).rows()[b])));
      C.mult[{i, j}] = std::move(tab);
    }
  }
  prune_zero_tables(C);
  out.alg = std::make_shared<DGAlgebra<K>>(std::move(C));
  out.inclusion = AlgebraMap<K>{out.alg, B, std::move(incl)};
  return out;
}

template <class K>
struct QuotientAlgebra {
  AlgebraPtr<K> alg;
  AlgebraMap<K> projection;
  // canonical section: quotient basis k -> ambient standard basis vector
  std::map<int, Matrix<K>> section;
  std::map<int, RowSpace<K>> ideal;
};

// Quotient by a two-sided DG ideal, for completely presented algebras. The
// quotient basis is the canonical complement (non-pivot coordinates), so
// labels survive and iterated quotients agree on the nose.
template <class K>
QuotientAlgebra<K> quotient_algebra(const AlgebraPtr<K>& B,
                                    const std::map<int, std::vector<Vec<K>>>& ideal_gens) {
  if (B->sp.truncated_below || B->sp.truncated_above)
    throw PreconditionError("quotient_algebra: algebra must be completely presented");
  QuotientAlgebra<K> out;
  for (int d = B->sp.win.lo; d <= B->sp.win.hi; ++d) out.ideal.emplace(d, RowSpace<K>(B->dim(d)));
  for (const auto& [d, vs] : ideal_gens) out.ideal.at(d).insert_all(vs);

  auto known_zero = [&](int d) { return !B->sp.in_window(d); };
  for (int i = B->sp.win.lo; i <= B->sp.win.hi; ++i) {
    for (const auto& v : out.ideal.at(i).rows()) {
      if (!known_zero(i + 1) && !out.ideal.at(i + 1).contains(B->d(i, v)))
        throw PreconditionError("quotient_algebra: ideal not closed under d");
      for (int j = B->sp.win.lo; j <= B->sp.win.hi; ++j) {
        if (B->dim(j) == 0 || known_zero(i + j)) continue;
        for (int b = 0; b < B->dim(j); ++b) {
          Vec<K> e = unit_vec<K>(B->dim(j), b);
          if (!out.ideal.at(i + j).contains(B->mul(i, v, j, e)) ||
              !out.ideal.at(i + j).contains(B->mul(j, e, i, v)))
            throw PreconditionError("quotient_algebra: not a two-sided ideal");
        }
      }
    }
  }
  if (out.ideal.at(0).contains(B->unit))
    throw PreconditionError("quotient_algebra: ideal contains the unit");

  DGAlgebra<K> Q;
  Q.sp.win = B->sp.win;
  std::map<int, Matrix<K>> proj, sect;
  std::map<int, std::vector<int>> comp;
  for (int d = B->sp.win.lo; d <= B->sp.win.hi; ++d) {
    comp[d] = out.ideal.at(d).complement_indices();
    int q = (int)comp[d].size();
    Q.sp.dims[d] = q;
    std::vector<std::string> ls;
    for (int c : comp[d]) ls.push_back(B->sp.label(d, c));
    Q.sp.labels[d] = std::move(ls);
    Matrix<K> p(q, B->dim(d));
    for (int k = 0; k < B->dim(d); ++k) {
      Vec<K> r = out.ideal.at(d).reduce(unit_vec<K>(B->dim(d), k));
      for (int c = 0; c < q; ++c) p(c, k) = r[comp[d][c]];
    }
    proj[d] = std::move(p);
    Matrix<K> s(B->dim(d), q);
    for (int c = 0; c < q; ++c) s(comp[d][c], c) = K(1);
    sect[d] = std::move(s);
  }
  Q.unit = proj[0] * B->unit;
  for (int i = B->sp.win.lo; i <= B->sp.win.hi; ++i) {
    if (Q.sp.dim(i) == 0) continue;
    if (B->sp.in_window(i + 1) && Q.sp.dim(i + 1) > 0)
      Q.diff[i] = proj[i + 1] * B->diff_matrix(i) * sect[i];
    for (int j = B->sp.win.lo; j <= B->sp.win.hi; ++j) {
      if (Q.sp.dim(j) == 0 || !B->sp.in_window(i + j) || Q.sp.dim(i + j) == 0) continue;
      Matrix<K> tab(Q.sp.dim(i + j), Q.sp.dim(i) * Q.sp.dim(j));
      for (int a = 0; a < Q.sp.dim(i); ++a)
        for (int b = 0; b < Q.sp.dim(j); ++b)
          tab.set_col(kron(a, Q.sp.dim(j), b),
                      proj[i + j] * B->basis_product(i, comp[i][a], j, comp[j][b]));
      Q.mult[{i, j}] = std::move(tab);
    }
  }
  prune_zero_tables(Q);
  out.alg = std::make_shared<DGAlgebra<K>>(std::move(Q));
  out.projection = AlgebraMap<K>{B, out.alg, std::move(proj)};
  out.section = std::move(sect);
  return out;
}

}  // namespace dgdef

#endif
