#ifndef DGDEF_DG_MODULE_HPP
#define DGDEF_DG_MODULE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dgdef/dg_algebra.hpp"

namespace dgdef {

enum class Side { Right, Left };

inline std::string side_name(Side s) { return s == Side::Right ? "right" : "left"; }

// A DG module over a DG algebra, presented on a finite degree window.
//
// act[(i, j)] stores the action of algebra degree j on module degree i, with
// Kronecker columns (module index, algebra index). For side Right the table
// means m . b, for side Left it means b . m; the Leibniz and associativity
// conventions follow the side:
//   right:  d(m b) = d(m) b + (-1)^|m| m d(b),   (m a) b = m (a b)
//   left:   d(b m) = d(b) m + (-1)^|b| b d(m),   a (b m) = (a b) m
template <class K>
struct DGModule {
  AlgebraPtr<K> alg;
  Side side = Side::Right;
  GradedSpace sp;
  std::map<std::pair<int, int>, Matrix<K>> act;
  std::map<int, Matrix<K>> diff;
  std::set<std::pair<int, int>> unknown_pairs;  // (module deg, algebra deg)
  std::set<int> unknown_diff;

  bool operator==(const DGModule&) const = default;

  int dim(int d) const { return sp.dim(d); }

  bool pair_known(int i, int j) const {
    if (!sp.in_window(i) || !alg->sp.in_window(j)) return false;
    if (unknown_pairs.count({i, j})) return false;
    return sp.degree_known(i + j);
  }
  bool diff_known(int i) const {
    if (!sp.in_window(i)) return false;
    if (unknown_diff.count(i)) return false;
    return sp.degree_known(i + 1);
  }

  // module vector in degree i acted on by algebra vector in degree j
  Vec<K> act_on(int i, const Vec<K>& m, int j, const Vec<K>& b) const {
    internal_check(pair_known(i, j), "module action not recorded for degrees (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
    internal_check((int)m.size() == dim(i) && (int)b.size() == alg->dim(j),
                   "act_on: coordinate length mismatch");
    int td = dim(i + j);
    auto it = act.find({i, j});
    if (it == act.end() || td == 0) return Vec<K>(td, K(0));
    return it->second * vec_kron(m, b);
  }

  Vec<K> basis_act(int i, int mi, int j, int bi) const {
    internal_check(pair_known(i, j), "basis_act: pair not recorded");
    int td = dim(i + j);
    auto it = act.find({i, j});
    if (it == act.end() || td == 0) return Vec<K>(td, K(0));
    return it->second.col(kron(mi, alg->dim(j), bi));
  }

  Vec<K> d(int i, const Vec<K>& m) const {
    internal_check(diff_known(i), "module differential not recorded at degree " +
                                      std::to_string(i));
    int td = dim(i + 1);
    auto it = diff.find(i);
    if (it == diff.end() || td == 0) return Vec<K>(td, K(0));
    return it->second * m;
  }

  Matrix<K> diff_matrix(int i) const {
    internal_check(diff_known(i), "module differential not recorded at degree " +
                                      std::to_string(i));
    auto it = diff.find(i);
    if (it == diff.end()) return Matrix<K>::zero(dim(i + 1), dim(i));
    return it->second;
  }
};

template <class K>
using ModulePtr = std::shared_ptr<const DGModule<K>>;

template <class K>
void prune_zero_tables(DGModule<K>& m) {
  std::erase_if(m.act, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(m.diff, [](const auto& kv) { return kv.second.is_zero(); });
}

template <class K>
ValidationReport validate_dg_module(const DGModule<K>& M) {
  ValidationReport rep = M.sp.validate();
  const DGAlgebra<K>& B = *M.alg;
  auto mlbl = [&](int deg, int i) { return M.sp.label(deg, i); };
  auto albl = [&](int deg, int i) { return B.sp.label(deg, i); };

  for (int i = M.sp.win.lo; i <= M.sp.win.hi; ++i) {
    if (M.dim(i) == 0) continue;
    if (M.diff_known(i) && M.diff_known(i + 1)) {
      Matrix<K> dd = M.diff_matrix(i + 1) * M.diff_matrix(i);
      for (int a = 0; a < M.dim(i); ++a)
        if (!vec_is_zero(dd.col(a))) rep.add("d_squared", "d(d(" + mlbl(i, a) + ")) != 0");
    }
    if (B.sp.in_window(0) && M.pair_known(i, 0)) {
      for (int a = 0; a < M.dim(i); ++a) {
        Vec<K> e = unit_vec<K>(M.dim(i), a);
        if (M.act_on(i, e, 0, B.unit) != e) rep.add("unit", mlbl(i, a) + " * 1 != itself");
      }
    }
  }

  // module Leibniz rule
  for (int i = M.sp.win.lo; i <= M.sp.win.hi; ++i)
    for (int j = B.sp.win.lo; j <= B.sp.win.hi; ++j) {
      if (M.dim(i) == 0 || B.dim(j) == 0) continue;
      if (!M.pair_known(i, j) || !M.diff_known(i) || !B.diff_known(j)) continue;
      if (!M.diff_known(i + j) && M.dim(i + j) > 0) continue;
      if (!M.pair_known(i + 1, j) || !M.pair_known(i, j + 1)) continue;
      for (int a = 0; a < M.dim(i); ++a)
        for (int b = 0; b < B.dim(j); ++b) {
          Vec<K> em = unit_vec<K>(M.dim(i), a), eb = unit_vec<K>(B.dim(j), b);
          Vec<K> lhs = M.dim(i + j) ? M.d(i + j, M.act_on(i, em, j, eb))
                                    : Vec<K>(M.dim(i + j + 1), K(0));
          Vec<K> rhs(M.dim(i + j + 1), K(0));
          if (M.side == Side::Right) {
            rhs = M.act_on(i + 1, M.d(i, em), j, eb);
            vec_axpy(rhs, sign_pow<K>(i), M.act_on(i, em, j + 1, B.d(j, eb)));
          } else {
            rhs = M.act_on(i, em, j + 1, B.d(j, eb));  // d(b) . m
            vec_axpy(rhs, sign_pow<K>(j), M.act_on(i + 1, M.d(i, em), j, eb));
          }
          if (lhs != rhs) rep.add("leibniz", "(" + mlbl(i, a) + "," + albl(j, b) + ")");
        }
    }

  // associativity of the action
  for (int i = M.sp.win.lo; i <= M.sp.win.hi; ++i)
    for (int j = B.sp.win.lo; j <= B.sp.win.hi; ++j)
      for (int l = B.sp.win.lo; l <= B.sp.win.hi; ++l) {
        if (M.dim(i) == 0 || B.dim(j) == 0 || B.dim(l) == 0) continue;
        if (M.side == Side::Right) {
          // (m a_j) a_l = m (a_j a_l)
          if (!M.pair_known(i, j) || !M.pair_known(i + j, l)) continue;
          if (!B.pair_known(j, l) || !M.pair_known(i, j + l)) continue;
          for (int a = 0; a < M.dim(i); ++a)
            for (int b = 0; b < B.dim(j); ++b)
              for (int c = 0; c < B.dim(l); ++c) {
                Vec<K> lhs = M.act_on(i + j, M.basis_act(i, a, j, b), l,
                                      unit_vec<K>(B.dim(l), c));
                Vec<K> rhs = M.act_on(i, unit_vec<K>(M.dim(i), a), j + l,
                                      B.basis_product(j, b, l, c));
                if (lhs != rhs)
                  rep.add("associativity",
                          "(" + mlbl(i, a) + "," + albl(j, b) + "," + albl(l, c) + ")");
              }
        } else {
          // a_j (a_l m) = (a_j a_l) m
          if (!M.pair_known(i, l) || !M.pair_known(i + l, j)) continue;
          if (!B.pair_known(j, l) || !M.pair_known(i, j + l)) continue;
          for (int a = 0; a < M.dim(i); ++a)
            for (int b = 0; b < B.dim(j); ++b)
              for (int c = 0; c < B.dim(l); ++c) {
                Vec<K> lhs = M.act_on(i + l, M.basis_act(i, a, l, c), j,
                                      unit_vec<K>(B.dim(j), b));
                Vec<K> rhs = M.act_on(i, unit_vec<K>(M.dim(i), a), j + l,
                                      B.basis_product(j, b, l, c));
                if (lhs != rhs)
                  rep.add("associativity",
                          "(" + albl(j, b) + "," + albl(l, c) + "," + mlbl(i, a) + ")");
              }
        }
      }
  return rep;
}

// ---------------------------------------------------------------------------
// shift: degrees drop by s, differential picks up (-1)^s; for right modules
// the action is untouched.

template <class K>
ModulePtr<K> shift(const DGModule<K>& M, int s) {
  internal_check(M.side == Side::Right, "shift implemented for right modules");
  DGModule<K> R;
  R.alg = M.alg;
  R.side = M.side;
  R.sp.win = M.sp.win.shift(-s);
  R.sp.truncated_below = M.sp.truncated_below;
  R.sp.truncated_above = M.sp.truncated_above;
  for (const auto& [d, n] : M.sp.dims) R.sp.dims[d - s] = n;
  for (const auto& [d, ls] : M.sp.labels) {
    std::vector<std::string> nls;
    for (const auto& l : ls)
      nls.push_back(s == 0 ? l : l + "[" + std::to_string(s) + "]");
    R.sp.labels[d - s] = std::move(nls);
  }
  for (const auto& [ij, m] : M.act) R.act[{ij.first - s, ij.second}] = m;
  for (const auto& [i, m] : M.diff) R.diff[i - s] = sign_pow<K>(s) * m;
  for (const auto& [i, j] : M.unknown_pairs) R.unknown_pairs.insert({i - s, j});
  for (int i : M.unknown_diff) R.unknown_diff.insert(i - s);
  prune_zero_tables(R);
  return std::make_shared<DGModule<K>>(std::move(R));
}

// The algebra as a free right module over itself.
template <class K>
ModulePtr<K> algebra_as_right_module(const AlgebraPtr<K>& B) {
  DGModule<K> M;
  M.alg = B;
  M.side = Side::Right;
  M.sp = B->sp;
  M.diff = B->diff;
  M.unknown_diff = B->unknown_diff;
  M.act = B->mult;
  M.unknown_pairs = B->unknown_pairs;
  return std::make_shared<DGModule<K>>(std::move(M));
}

// ---------------------------------------------------------------------------
// module maps

// A homogeneous map of right modules of the given degree. Linearity carries
// no sign: f(m b) = f(m) b. Closed of degree n means d f = (-1)^n f d.
template <class K>
struct ModuleMap {
  ModulePtr<K> from, to;
  int degree = 0;
  std::map<int, Matrix<K>> comp;  // comp[i] : from deg i -> to deg i+degree

  Matrix<K> matrix(int i) const {
    auto it = comp.find(i);
    if (it != comp.end()) return it->second;
    return Matrix<K>::zero(to->dim(i + degree), from->dim(i));
  }
  Vec<K> apply(int i, const Vec<K>& v) const { return matrix(i) * v; }

  static ModuleMap identity(const ModulePtr<K>& m) {
    ModuleMap f{m, m, 0, {}};
    for (const auto& [d, n] : m->sp.dims)
      if (n > 0) f.comp[d] = Matrix<K>::identity(n);
    return f;
  }
  static ModuleMap zero(const ModulePtr<K>& from, const ModulePtr<K>& to, int degree = 0) {
    return ModuleMap{from, to, degree, {}};
  }
};

template <class K>
ModuleMap<K> compose(const ModuleMap<K>& g, const ModuleMap<K>& f) {
  internal_check(same_algebra(g.from->alg, f.to->alg) && g.from->sp == f.to->sp,
                 "compose: middle modules differ");
  ModuleMap<K> r{f.from, g.to, f.degree + g.degree, {}};
  for (const auto& [d, n] : f.from->sp.dims)
    if (n > 0 && r.to->dim(d + r.degree) > 0) r.comp[d] = g.matrix(d + f.degree) * f.matrix(d);
  return r;
}

// d_N f - (-1)^deg f d_M, nonzero iff f is not closed.
template <class K>
ModuleMap<K> map_differential(const ModuleMap<K>& f) {
  ModuleMap<K> r{f.from, f.to, f.degree + 1, {}};
  for (int i = f.from->sp.win.lo; i <= f.from->sp.win.hi; ++i) {
    if (f.from->dim(i) == 0) continue;
    int tr = f.to->dim(i + f.degree + 1);
    Matrix<K> m = Matrix<K>::zero(tr, f.from->dim(i));
    if (f.to->sp.in_window(i + f.degree) && f.to->diff_known(i + f.degree))
      m = m + f.to->diff_matrix(i + f.degree) * f.matrix(i);
    if (f.from->diff_known(i) && f.from->sp.in_window(i + 1))
      m = m - sign_pow<K>(f.degree) * (f.matrix(i + 1) * f.from->diff_matrix(i));
    if (!m.is_zero()) r.comp[i] = std::move(m);
  }
  return r;
}

template <class K>
bool is_closed(const ModuleMap<K>& f) {
  auto df = map_differential(f);
  for (const auto& [i, m] : df.comp)
    if (!m.is_zero()) return false;
  return true;
}

template <class K>
bool is_module_linear(const ModuleMap<K>& f) {
  const auto& M = *f.from;
  const auto& N = *f.to;
  int n = f.degree;
  for (int i = M.sp.win.lo; i <= M.sp.win.hi; ++i)
    for (int j = M.alg->sp.win.lo; j <= M.alg->sp.win.hi; ++j) {
      if (M.dim(i) == 0 || M.alg->dim(j) == 0) continue;
      if (!M.pair_known(i, j)) continue;
      if (!N.sp.in_window(i + n) && M.dim(i) > 0) {
        // source component forced zero; nothing to check from here
      }
      if (!N.pair_known(i + n, j)) continue;
      for (int a = 0; a < M.dim(i); ++a)
        for (int b = 0; b < M.alg->dim(j); ++b) {
          Vec<K> lhs = f.apply(i + j, M.basis_act(i, a, j, b));
          Vec<K> rhs = N.act_on(i + n, f.apply(i, unit_vec<K>(M.dim(i), a)), j,
                                unit_vec<K>(M.alg->dim(j), b));
          if (lhs != rhs) return false;
        }
    }
  return true;
}

template <class K>
bool is_iso(const ModuleMap<K>& f) {
  if (f.degree != 0) return false;
  for (int i = f.from->sp.win.lo; i <= f.from->sp.win.hi; ++i) {
    if (f.from->dim(i) != f.to->dim(i)) return false;
    if (f.from->dim(i) == 0) continue;
    if (rank(f.matrix(i)) != f.from->dim(i)) return false;
  }
  return true;
}

template <class K>
ModuleMap<K> inverse(const ModuleMap<K>& f) {
  internal_check(is_iso(f), "inverse: map is not an isomorphism");
  ModuleMap<K> g{f.to, f.from, 0, {}};
  for (int i = f.from->sp.win.lo; i <= f.from->sp.win.hi; ++i) {
    int n = f.from->dim(i);
    if (n == 0) continue;
    Matrix<K> m = f.matrix(i);
    Matrix<K> inv(n, n);
    for (int c = 0; c < n; ++c) {
      auto sol = solve_linear(m, unit_vec<K>(n, c));
      internal_check(sol.solvable, "inverse: solve failed");
      inv.set_col(c, sol.particular);
    }
    g.comp[i] = std::move(inv);
  }
  return g;
}

// ---------------------------------------------------------------------------
// sub- and quotient modules (same pattern as for algebras)

template <class K>
struct SubModule {
  ModulePtr<K> mod;
  ModuleMap<K> inclusion;
  std::map<int, RowSpace<K>> span;
};

template <class K>
SubModule<K> submodule(const ModulePtr<K>& M, const std::map<int, std::vector<Vec<K>>>& spans) {
  SubModule<K> out;
  for (int d = M->sp.win.lo; d <= M->sp.win.hi; ++d) out.span.emplace(d, RowSpace<K>(M->dim(d)));
  for (const auto& [d, vs] : spans) {
    internal_check(M->sp.in_window(d), "submodule: span degree outside window");
    out.span.at(d).insert_all(vs);
  }
  for (int i = M->sp.win.lo; i <= M->sp.win.hi; ++i) {
    if (M->diff_known(i) && M->sp.in_window(i + 1))
      for (const auto& r : out.span.at(i).rows())
        if (!out.span.at(i + 1).contains(M->d(i, r)))
          throw PreconditionError("submodule: not closed under d at degree " + std::to_string(i));
    for (int j = M->alg->sp.win.lo; j <= M->alg->sp.win.hi; ++j) {
      if (!M->pair_known(i, j) || !M->sp.in_window(i + j)) continue;
      for (const auto& r : out.span.at(i).rows())
        for (int b = 0; b < M->alg->dim(j); ++b)
          if (!out.span.at(i + j).contains(
                  M->act_on(i, r, j, unit_vec<K>(M->alg->dim(j), b))))
            throw PreconditionError("submodule: not stable under the action");
    }
  }
  DGModule<K> S;
  S.alg = M->alg;
  S.side = M->side;
  S.sp.win = M->sp.win;
  S.sp.truncated_below = M->sp.truncated_below;
  S.sp.truncated_above = M->sp.truncated_above;
  std::map<int, Matrix<K>> incl;
  for (int d = M->sp.win.lo; d <= M->sp.win.hi; ++d) {
    const auto& rs = out.span.at(d);
    S.sp.dims[d] = rs.dim();
    std::vector<std::string> ls;
    for (int k = 0; k < rs.dim(); ++k) ls.push_back("u" + std::to_string(d) + "_" + std::to_string(k));
    S.sp.labels[d] = std::move(ls);
    incl[d] = Matrix<K>::from_cols(rs.rows(), M->dim(d));
  }
  S.unknown_pairs = M->unknown_pairs;
  S.unknown_diff = M->unknown_diff;
  for (int i = M->sp.win.lo; i <= M->sp.win.hi; ++i) {
    const auto& rs = out.span.at(i);
    if (rs.dim() == 0) continue;
    if (M->diff_known(i) && M->sp.in_window(i + 1) && out.span.at(i + 1).dim() > 0) {
      Matrix<K> dm(out.span.at(i + 1).dim(), rs.dim());
      for (int k = 0; k < rs.dim(); ++k)
        dm.set_col(k, coords_in(out.span.at(i + 1), M->d(i, rs.rows()[k])));
      S.diff[i] = std::move(dm);
    }
    for (int j = M->alg->sp.win.lo; j <= M->alg->sp.win.hi; ++j) {
      if (!M->pair_known(i, j) || !M->sp.in_window(i + j)) continue;
      int dj = M->alg->dim(j);
      if (dj == 0 || out.span.at(i + j).dim() == 0) continue;
      Matrix<K> tab(out.span.at(i + j).dim(), rs.dim() * dj);
      for (int a = 0; a < rs.dim(); ++a)
        for (int b = 0; b < dj; ++b)
          tab.set_col(kron(a, dj, b),
                      coords_in(out.span.at(i + j),
                                M->act_on(i, rs.rows()[a], j, unit_vec<K>(dj, b))));
      S.act[{i, j}] = std::move(tab);
    }
  }
  prune_zero_tables(S);
  out.mod = std::make_shared<DGModule<K>>(std::move(S));
  out.inclusion = ModuleMap<K>{out.mod, M, 0, std::move(incl)};
  return out;
}

template <class K>
struct QuotientModule {
  ModulePtr<K> mod;
  ModuleMap<K> projection;
  std::map<int, Matrix<K>> section;  // canonical complement lifts
};

template <class K>
QuotientModule<K> quotient_module(const ModulePtr<K>& M,
                                  const std::map<int, std::vector<Vec<K>>>& spans) {
  std::map<int, RowSpace<K>> sub;
  for (int d = M->sp.win.lo; d <= M->sp.win.hi; ++d) sub.emplace(d, RowSpace<K>(M->dim(d)));
  for (const auto& [d, vs] : spans) sub.at(d).insert_all(vs);
  // stability checks as for submodules
  for (int i = M->sp.win.lo; i <= M->sp.win.hi; ++i) {
    if (M->diff_known(i) && M->sp.in_window(i + 1))
      for (const auto& r : sub.at(i).rows())
        if (!sub.at(i + 1).contains(M->d(i, r)))
          throw PreconditionError("quotient_module: subspace not closed under d");
    for (int j = M->alg->sp.win.lo; j <= M->alg->sp.win.hi; ++j) {
      if (!M->pair_known(i, j) || !M->sp.in_window(i + j)) continue;
      for (const auto& r : sub.at(i).rows())
        for (int b = 0; b < M->alg->dim(j); ++b)
          if (!sub.at(i + j).contains(M->act_on(i, r, j, unit_vec<K>(M->alg->dim(j), b))))
            throw PreconditionError("quotient_module: subspace not stable under the action");
    }
  }
  QuotientModule<K> out;
  DGModule<K> Q;
  Q.alg = M->alg;
  Q.side = M->side;
  Q.sp.win = M->sp.win;
  Q.sp.truncated_below = M->sp.truncated_below;
  Q.sp.truncated_above = M->sp.truncated_above;
  std::map<int, Matrix<K>> proj, sect;
  std::map<int, std::vector<int>> comp;
  for (int d = M->sp.win.lo; d <= M->sp.win.hi; ++d) {
    comp[d] = sub.at(d).complement_indices();
    int q = (int)comp[d].size();
    Q.sp.dims[d] = q;
    std::vector<std::string> ls;
    for (int c : comp[d]) ls.push_back(M->sp.label(d, c));
    Q.sp.labels[d] = std::move(ls);
    Matrix<K> p(q, M->dim(d));
    for (int k = 0; k < M->dim(d); ++k) {
      Vec<K> r = sub.at(d).reduce(unit_vec<K>(M->dim(d), k));
      for (int c = 0; c < q; ++c) p(c, k) = r[comp[d][c]];
    }
    proj[d] = std::move(p);
    Matrix<K> s(M->dim(d), q);
    for (int c = 0; c < q; ++c) s(comp[d][c], c) = K(1);
    sect[d] = std::move(s);
  }
  Q.unknown_pairs = M->unknown_pairs;
  Q.unknown_diff = M->unknown_diff;
  for (int i = M->sp.win.lo; i <= M->sp.win.hi; ++i) {
    if (Q.sp.dim(i) == 0) continue;
    if (M->diff_known(i) && M->sp.in_window(i + 1) && Q.sp.dim(i + 1) > 0)
      Q.diff[i] = proj[i + 1] * M->diff_matrix(i) * sect[i];
    for (int j = M->alg->sp.win.lo; j <= M->alg->sp.win.hi; ++j) {
      if (!M->pair_known(i, j) || !M->sp.in_window(i + j)) continue;
      int dj = M->alg->dim(j);
      if (dj == 0 || Q.sp.dim(i + j) == 0) continue;
      Matrix<K> tab(Q.sp.dim(i + j), Q.sp.dim(i) * dj);
      for (int a = 0; a < Q.sp.dim(i); ++a)
        for (int b = 0; b < dj; ++b)
          tab.set_col(kron(a, dj, b), proj[i + j] * M->basis_act(i, comp[i][a], j, b));
      Q.act[{i, j}] = std::move(tab);
    }
  }
  prune_zero_tables(Q);
  out.mod = std::make_shared<DGModule<K>>(std::move(Q));
  out.projection = ModuleMap<K>{M, out.mod, 0, std::move(proj)};
  out.section = std::move(sect);
  return out;
}

// Direct sum, first summand's basis first.
template <class K>
struct DirectSum {
  ModulePtr<K> mod;
  ModuleMap<K> incl_first, incl_second, proj_first, proj_second;
};

template <class K>
DirectSum<K> direct_sum(const ModulePtr<K>& A, const ModulePtr<K>& B) {
  internal_check(same_algebra(A->alg, B->alg) && A->side == B->side,
                 "direct_sum: incompatible modules");
  DGModule<K> S;
  S.alg = A->alg;
  S.side = A->side;
  S.sp.win = {std::min(A->sp.win.lo, B->sp.win.lo), std::max(A->sp.win.hi, B->sp.win.hi)};
  S.sp.truncated_below = A->sp.truncated_below || B->sp.truncated_below;
  S.sp.truncated_above = A->sp.truncated_above || B->sp.truncated_above;
  for (int j : A->unknown_diff) S.unknown_diff.insert(j);
  for (int j : B->unknown_diff) S.unknown_diff.insert(j);
  for (const auto& p : A->unknown_pairs) S.unknown_pairs.insert(p);
  for (const auto& p : B->unknown_pairs) S.unknown_pairs.insert(p);
  std::map<int, Matrix<K>> ia, ib, pa, pb;
  for (int d = S.sp.win.lo; d <= S.sp.win.hi; ++d) {
    int na = A->sp.in_window(d) ? A->dim(d) : 0;
    int nb = B->sp.in_window(d) ? B->dim(d) : 0;
    S.sp.dims[d] = na + nb;
    std::vector<std::string> ls;
    for (int i = 0; i < na; ++i) ls.push_back(A->sp.label(d, i) + "#0");
    for (int i = 0; i < nb; ++i) ls.push_back(B->sp.label(d, i) + "#1");
    S.sp.labels[d] = std::move(ls);
    Matrix<K> mia(na + nb, na), mib(na + nb, nb), mpa(na, na + nb), mpb(nb, na + nb);
    for (int i = 0; i < na; ++i) {
      mia(i, i) = K(1);
      mpa(i, i) = K(1);
    }
    for (int i = 0; i < nb; ++i) {
      mib(na + i, i) = K(1);
      mpb(i, na + i) = K(1);
    }
    ia[d] = std::move(mia);
    ib[d] = std::move(mib);
    pa[d] = std::move(mpa);
    pb[d] = std::move(mpb);
  }
  for (int i = S.sp.win.lo; i <= S.sp.win.hi; ++i) {
    int na = A->sp.in_window(i) ? A->dim(i) : 0;
    int nb = B->sp.in_window(i) ? B->dim(i) : 0;
    if (na + nb == 0) continue;
    if (S.sp.degree_known(i + 1) && !S.unknown_diff.count(i)) {
      int ta = A->sp.in_window(i + 1) ? A->dim(i + 1) : 0;
      int tb = B->sp.in_window(i + 1) ? B->dim(i + 1) : 0;
      Matrix<K> dm(ta + tb, na + nb);
      if (na && A->diff_known(i)) {
        Matrix<K> da = A->diff_matrix(i);
        for (int r = 0; r < ta; ++r)
          for (int c = 0; c < na; ++c) dm(r, c) = da(r, c);
      }
      if (nb && B->diff_known(i)) {
        Matrix<K> db = B->diff_matrix(i);
        for (int r = 0; r < tb; ++r)
          for (int c = 0; c < nb; ++c) dm(ta + r, na + c) = db(r, c);
      }
      if (!dm.is_zero()) S.diff[i] = std::move(dm);
    }
    for (int j = S.alg->sp.win.lo; j <= S.alg->sp.win.hi; ++j) {
      int dj = S.alg->dim(j);
      if (dj == 0 || !S.sp.degree_known(i + j) || S.unknown_pairs.count({i, j})) continue;
      int ta = A->sp.in_window(i + j) ? A->dim(i + j) : 0;
      int tb = B->sp.in_window(i + j) ? B->dim(i + j) : 0;
      if (ta + tb == 0) continue;
      Matrix<K> tab(ta + tb, (na + nb) * dj);
      for (int b = 0; b < dj; ++b) {
        for (int a = 0; a < na; ++a) {
          Vec<K> v = A->basis_act(i, a, j, b);
          Vec<K> out(ta + tb, K(0));
          for (int r = 0; r < ta; ++r) out[r] = v[r];
          tab.set_col(kron(a, dj, b), out);
        }
        for (int a = 0; a < nb; ++a) {
          Vec<K> v = B->basis_act(i, a, j, b);
          Vec<K> out(ta + tb, K(0));
          for (int r = 0; r < tb; ++r) out[ta + r] = v[r];
          tab.set_col(kron(na + a, dj, b), out);
        }
      }
      S.act[{i, j}] = std::move(tab);
    }
  }
  DirectSum<K> out;
  prune_zero_tables(S);
  out.mod = std::make_shared<DGModule<K>>(std::move(S));
  out.incl_first = ModuleMap<K>{A, out.mod, 0, std::move(ia)};
  out.incl_second = ModuleMap<K>{B, out.mod, 0, std::move(ib)};
  out.proj_first = ModuleMap<K>{out.mod, A, 0, std::move(pa)};
  out.proj_second = ModuleMap<K>{out.mod, B, 0, std::move(pb)};
  return out;
}

// Restrict a module along an algebra map: same space, action through phi.
template <class K>
ModulePtr<K> restrict_along(const ModulePtr<K>& M, const AlgebraMap<K>& phi) {
  internal_check(same_algebra(phi.to, M->alg), "restrict_along: target algebra mismatch");
  DGModule<K> R;
  R.alg = phi.from;
  R.side = M->side;
  R.sp = M->sp;
  R.diff = M->diff;
  R.unknown_diff = M->unknown_diff;
  const auto& A = *phi.from;
  for (int i = M->sp.win.lo; i <= M->sp.win.hi; ++i)
    for (int j = A.sp.win.lo; j <= A.sp.win.hi; ++j) {
      if (M->dim(i) == 0 || A.dim(j) == 0) continue;
      if (!M->sp.degree_known(i + j)) continue;
      if (!M->alg->sp.in_window(j) || !M->pair_known(i, j)) {
        R.unknown_pairs.insert({i, j});
        continue;
      }
      if (M->dim(i + j) == 0) continue;
      Matrix<K> tab(M->dim(i + j), M->dim(i) * A.dim(j));
      for (int a = 0; a < M->dim(i); ++a)
        for (int b = 0; b < A.dim(j); ++b)
          tab.set_col(kron(a, A.dim(j), b),
                      M->act_on(i, unit_vec<K>(M->dim(i), a), j,
                                phi.apply(j, unit_vec<K>(A.dim(j), b))));
      R.act[{i, j}] = std::move(tab);
    }
  prune_zero_tables(R);
  return std::make_shared<DGModule<K>>(std::move(R));
}

}  // namespace dgdef

#endif
