#ifndef DGDEF_TRUNCATE_HPP
#define DGDEF_TRUNCATE_HPP

#include "dgdef/cohomology.hpp"
#include "dgdef/dg_module.hpp"

namespace dgdef {

// Truncation of a right module over an algebra concentrated in degrees <= 0:
// tau_{<0} M = (+)_{i<0} M^i (+) d(M^{-1}) is a DG submodule, and
// tau_{<0} M -> M -> tau_{>=0} M is a short exact sequence with
// H^i(tau_{<0} M) = 0 for i >= 0 and H^i(tau_{>=0} M) = 0 for i < 0.
template <class K>
struct Truncation {
  ModulePtr<K> below;   // tau_{<0}
  ModulePtr<K> above;   // tau_{>=0}
  ModuleMap<K> inclusion;
  ModuleMap<K> projection;
};

template <class K>
Truncation<K> truncate(const ModulePtr<K>& M, int cut = 0) {
  const auto& B = *M->alg;
  for (int j = B.sp.win.lo; j <= B.sp.win.hi; ++j)
    if (j > 0 && B.dim(j) > 0)
      throw PreconditionError("truncate: base algebra has a positive-degree part");
  std::map<int, std::vector<Vec<K>>> spans;
  for (int i = M->sp.win.lo; i <= M->sp.win.hi; ++i) {
    if (M->dim(i) == 0) continue;
    if (i < cut)
      for (int a = 0; a < M->dim(i); ++a) spans[i].push_back(unit_vec<K>(M->dim(i), a));
  }
  if (M->sp.in_window(cut - 1) && M->diff_known(cut - 1) && M->sp.in_window(cut) &&
      M->dim(cut) > 0) {
    Matrix<K> d = M->diff_matrix(cut - 1);
    for (int c = 0; c < d.cols(); ++c) {
      Vec<K> v = d.col(c);
      if (!vec_is_zero(v)) spans[cut].push_back(std::move(v));
    }
  }
  SubModule<K> sub = submodule(M, spans);
  QuotientModule<K> quo = quotient_module(M, spans);
  return Truncation<K>{sub.mod, quo.mod, sub.inclusion, quo.projection};
}

}  // namespace dgdef

#endif
