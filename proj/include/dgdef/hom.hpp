#ifndef DGDEF_HOM_HPP
#define DGDEF_HOM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgdef/cohomology.hpp"
#include "dgdef/dg_module.hpp"

namespace dgdef {

// The complex of graded module maps M -> N between right modules over the
// same algebra. Degree-n elements have components f_i : M^i -> N^{i+n},
// subject to f(m b) = f(m) b; the differential is f -> d f - (-1)^|f| f d.
//
// Components whose target degree is not representable in N are identically
// zero in this model. exact_window records the degrees n for which every
// module degree of M has a representable target, i.e. where the model cannot
// have dropped anything.
template <class K>
struct HomComplex {
  ModulePtr<K> source, target;
  ModulePtr<K> complex_;  // over the unit algebra
  // per degree: per basis element: the map components
  std::map<int, std::vector<std::map<int, Matrix<K>>>> elements;
  Window exact_window = Window::empty_window();

  const GradedSpace& space() const { return complex_->sp; }
  int dim(int n) const { return complex_->dim(n); }

  ModuleMap<K> realize(int n, const Vec<K>& coords) const {
    internal_check((int)coords.size() == dim(n), "realize: bad coordinate length");
    ModuleMap<K> f{source, target, n, {}};
    auto it = elements.find(n);
    if (it == elements.end()) return f;
    for (int i = source->sp.win.lo; i <= source->sp.win.hi; ++i) {
      if (source->dim(i) == 0 || !target->sp.in_window(i + n)) continue;
      Matrix<K> m(target->dim(i + n), source->dim(i));
      for (size_t k = 0; k < it->second.size(); ++k) {
        if (coords[k] == K(0)) continue;
        auto jt = it->second[k].find(i);
        if (jt == it->second[k].end()) continue;
        m = m + coords[k] * jt->second;
      }
      if (!m.is_zero()) f.comp[i] = std::move(m);
    }
    return f;
  }

  // Coordinates of a map over the degree-n basis; nullopt if it is not in the
  // computed span.
  std::optional<Vec<K>> coords_of(const ModuleMap<K>& f) const {
    int n = f.degree;
    auto it = elements.find(n);
    int bdim = it == elements.end() ? 0 : (int)it->second.size();
    // flatten over all present components
    std::vector<int> comps;
    for (int i = source->sp.win.lo; i <= source->sp.win.hi; ++i)
      if (source->dim(i) > 0 && target->sp.in_window(i + n) && target->dim(i + n) > 0)
        comps.push_back(i);
    int total = 0;
    std::map<int, int> base;
    for (int i : comps) {
      base[i] = total;
      total += source->dim(i) * target->dim(i + n);
    }
    auto flatten = [&](const std::map<int, Matrix<K>>& mats) {
      Vec<K> out(total, K(0));
      for (const auto& [i, m] : mats) {
        auto bt = base.find(i);
        if (bt == base.end()) {
          internal_check(m.is_zero(), "coords_of: component outside representable range");
          continue;
        }
        for (int r = 0; r < m.rows(); ++r)
          for (int c = 0; c < m.cols(); ++c) out[bt->second + r * m.cols() + c] = m(r, c);
      }
      return out;
    };
    std::vector<Vec<K>> cols;
    for (int k = 0; k < bdim; ++k) cols.push_back(flatten(it->second[k]));
    Vec<K> rhs = flatten(f.comp);
    if (total == 0) return Vec<K>(bdim, K(0));
    auto sol = solve_linear(Matrix<K>::from_cols(cols, total), rhs);
    if (!sol.solvable) return std::nullopt;
    return sol.particular;
  }
};

template <class K>
HomComplex<K> hom_complex(const ModulePtr<K>& M, const ModulePtr<K>& N) {
  if (!same_algebra(M->alg, N->alg))
    throw PreconditionError("hom_complex: modules over different algebras");
  if (M->side != Side::Right || N->side != Side::Right)
    throw PreconditionError("hom_complex: right modules expected");

  HomComplex<K> H;
  H.source = M;
  H.target = N;

  Window hw{N->sp.win.lo - M->sp.win.hi, N->sp.win.hi - M->sp.win.lo};
  internal_check(!hw.empty(), "hom_complex: empty degree range");

  DGModule<K> C;
  C.alg = unit_algebra<K>();
  C.side = Side::Right;
  C.sp.win = hw;
  C.sp.truncated_below = M->sp.truncated_above || N->sp.truncated_below;
  C.sp.truncated_above = M->sp.truncated_below || N->sp.truncated_above;

  const auto& B = *M->alg;

  // solve the linearity constraints degree by degree
  for (int n = hw.lo; n <= hw.hi; ++n) {
    std::vector<int> comps;
    for (int i = M->sp.win.lo; i <= M->sp.win.hi; ++i)
      if (M->dim(i) > 0 && N->sp.in_window(i + n) && N->dim(i + n) > 0) comps.push_back(i);
    std::map<int, int> base;
    int total = 0;
    for (int i : comps) {
      base[i] = total;
      total += M->dim(i) * N->dim(i + n);
    }
    std::vector<Vec<K>> eqs;
    auto add_entry = [&](Vec<K>& row, int i, int r, int c, const K& v) {
      auto bt = base.find(i);
      if (bt == base.end()) return;  // forced-zero component
      row[bt->second + r * M->dim(i) + c] += v;
    };
    for (int i = M->sp.win.lo; i <= M->sp.win.hi; ++i) {
      if (M->dim(i) == 0) continue;
      for (int j = B.sp.win.lo; j <= B.sp.win.hi; ++j) {
        if (B.dim(j) == 0 || !M->pair_known(i, j) || !M->sp.in_window(i + j)) continue;
        bool lhs_present = base.count(i + j) > 0;
        bool rhs_present = base.count(i) > 0;
        if (rhs_present && !N->pair_known(i + n, j)) continue;  // unknowable equation
        if (!lhs_present && !rhs_present) continue;
        int tdim = N->sp.in_window(i + j + n) ? N->dim(i + j + n) : 0;
        if (tdim == 0) continue;  // equation lands in a zero space
        for (int a = 0; a < M->dim(i); ++a)
          for (int b = 0; b < B.dim(j); ++b) {
            Vec<K> mb = M->basis_act(i, a, j, b);
            // one equation per coordinate of N^{i+j+n}
            std::vector<Vec<K>> rows(std::max(tdim, 0), Vec<K>(total, K(0)));
            if (tdim > 0 && lhs_present)
              for (int x = 0; x < M->dim(i + j); ++x) {
                if (mb[x] == K(0)) continue;
                for (int r = 0; r < tdim; ++r) add_entry(rows[r], i + j, r, x, mb[x]);
              }
            if (rhs_present) {
              // f_i(m) b : column a of f_i enters through the action of b
              for (int y = 0; y < N->dim(i + n); ++y) {
                Vec<K> yb = N->basis_act(i + n, y, j, b);
                for (int r = 0; r < (int)yb.size(); ++r) {
                  if (yb[r] == K(0)) continue;
                  if (tdim > 0) add_entry(rows[r], i, y, a, -yb[r]);
                }
              }
            }
            for (auto& row : rows)
              if (!vec_is_zero(row)) eqs.push_back(std::move(row));
          }
      }
    }
    std::vector<Vec<K>> basis =
        total == 0 ? std::vector<Vec<K>>{}
                   : kernel_basis(Matrix<K>::from_rows(eqs, total));
    C.sp.dims[n] = (int)basis.size();
    std::vector<std::string> ls;
    for (size_t k = 0; k < basis.size(); ++k)
      ls.push_back("h" + std::to_string(n) + "_" + std::to_string(k));
    C.sp.labels[n] = std::move(ls);
    auto& elems = H.elements[n];
    for (const auto& v : basis) {
      std::map<int, Matrix<K>> mats;
      for (int i : comps) {
        Matrix<K> m(N->dim(i + n), M->dim(i));
        bool nz = false;
        for (int r = 0; r < m.rows(); ++r)
          for (int c = 0; c < m.cols(); ++c) {
            m(r, c) = v[base[i] + r * M->dim(i) + c];
            nz = nz || !(m(r, c) == K(0));
          }
        if (nz) mats[i] = std::move(m);
      }
      elems.push_back(std::move(mats));
    }
  }

  // exact window
  {
    int lo = hw.lo, hi = hw.hi;
    auto all_known = [&](int n) {
      for (int i = M->sp.win.lo; i <= M->sp.win.hi; ++i)
        if (M->dim(i) > 0 && !N->sp.degree_known(i + n)) return false;
      return true;
    };
    while (lo <= hi && !all_known(lo)) ++lo;
    int top = lo - 1;
    for (int n = lo; n <= hi; ++n)
      if (all_known(n))
        top = n;
      else
        break;
    H.exact_window = {lo, top};
  }

  // unit action of the ground field
  for (int n = hw.lo; n <= hw.hi; ++n)
    if (C.sp.dims[n] > 0) C.act[{n, 0}] = Matrix<K>::identity(C.sp.dims[n]);

  H.complex_ = std::make_shared<DGModule<K>>(std::move(C));

  // differential: computed on realized maps and re-expressed in the bases
  // Differentials that left the window enter as zero: the Hom complex is the
  // Hom of the truncated model, and exact_window records where that model is
  // guaranteed to agree with the untruncated objects.
  DGModule<K> C2 = *H.complex_;
  for (int n = hw.lo; n < hw.hi; ++n) {
    if (C2.sp.dims.at(n) == 0 || C2.sp.dims.at(n + 1) == 0) continue;
    Matrix<K> dm(C2.sp.dims.at(n + 1), C2.sp.dims.at(n));
    for (int k = 0; k < C2.sp.dims.at(n); ++k) {
      ModuleMap<K> f = H.realize(n, unit_vec<K>(C2.sp.dims.at(n), k));
      ModuleMap<K> df = map_differential(f);
      auto coords = H.coords_of(df);
      internal_check(coords.has_value(), "hom_complex: differential left the computed span");
      dm.set_col(k, *coords);
    }
    if (!dm.is_zero()) C2.diff[n] = std::move(dm);
  }
  prune_zero_tables(C2);
  H.complex_ = std::make_shared<DGModule<K>>(std::move(C2));
  return H;
}

// The endomorphism DG algebra of a right module, with composition as product
// and the identity as unit. Keeps the underlying Hom data so elements can be
// turned back into operators.
template <class K>
struct EndAlgebra {
  AlgebraPtr<K> alg;
  HomComplex<K> hom;
  ModulePtr<K> module;

  ModuleMap<K> realize(int n, const Vec<K>& coords) const { return hom.realize(n, coords); }
  Vec<K> coords_of_identity() const {
    auto c = hom.coords_of(ModuleMap<K>::identity(module));
    internal_check(c.has_value(), "end_algebra: identity not representable");
    return *c;
  }
};

template <class K>
EndAlgebra<K> end_algebra(const ModulePtr<K>& E) {
  EndAlgebra<K> out;
  out.module = E;
  out.hom = hom_complex(E, E);
  const auto& H = out.hom;
  const auto& sp = H.space();

  DGAlgebra<K> A;
  A.sp = sp;
  A.diff = H.complex_->diff;
  A.unknown_diff = H.complex_->unknown_diff;
  auto idc = H.coords_of(ModuleMap<K>::identity(E));
  internal_check(idc.has_value() && !vec_is_zero(*idc),
                 "end_algebra: identity map not in the computed degree-0 basis");
  A.unit = *idc;

  for (int m = sp.win.lo; m <= sp.win.hi; ++m) {
    for (int n = sp.win.lo; n <= sp.win.hi; ++n) {
      if (sp.dim(m) == 0 || sp.dim(n) == 0) continue;
      if (!sp.degree_known(m + n)) continue;
      if (sp.dim(m + n) == 0) continue;
      Matrix<K> tab(sp.dim(m + n), sp.dim(m) * sp.dim(n));
      bool known = true;
      for (int a = 0; a < sp.dim(m) && known; ++a) {
        ModuleMap<K> f = H.realize(m, unit_vec<K>(sp.dim(m), a));
        for (int b = 0; b < sp.dim(n) && known; ++b) {
          ModuleMap<K> g = H.realize(n, unit_vec<K>(sp.dim(n), b));
          ModuleMap<K> fg = compose(f, g);
          auto coords = H.coords_of(fg);
          if (!coords.has_value()) {
            known = false;
            break;
          }
          tab.set_col(kron(a, sp.dim(n), b), *coords);
        }
      }
      if (!known) {
        A.unknown_pairs.insert({m, n});
        continue;
      }
      A.mult[{m, n}] = std::move(tab);
    }
  }
  prune_zero_tables(A);
  out.alg = std::make_shared<DGAlgebra<K>>(std::move(A));
  return out;
}

}  // namespace dgdef

#endif
