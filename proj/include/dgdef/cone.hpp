#ifndef DGDEF_CONE_HPP
#define DGDEF_CONE_HPP

#include "dgdef/cohomology.hpp"
#include "dgdef/dg_module.hpp"

namespace dgdef {

// Mapping cone of a closed degree-0 map f : M -> N. Underlying graded module
// M[1] (+) N, differential (m, n) -> (-d m, f(m) + d n).
template <class K>
struct Cone {
  ModulePtr<K> mod;
  ModuleMap<K> incl_target;   // N -> cone, closed
  ModuleMap<K> proj_shifted;  // cone -> M[1], closed
  ModulePtr<K> shifted_source;
};

template <class K>
Cone<K> cone(const ModuleMap<K>& f) {
  if (f.degree != 0) throw PreconditionError("cone: map must have degree 0");
  if (!is_closed(f)) throw PreconditionError("cone: map must be closed");
  if (!is_module_linear(f)) throw PreconditionError("cone: map must be module linear");
  ModulePtr<K> m1 = shift(*f.from, 1);
  DirectSum<K> s = direct_sum(m1, f.to);
  DGModule<K> C = *s.mod;
  // add the connecting component f[1] : (M[1])^i = M^{i+1} -> N^{i+1}
  for (int i = C.sp.win.lo; i <= C.sp.win.hi; ++i) {
    int nm = m1->sp.in_window(i) ? m1->dim(i) : 0;
    if (nm == 0) continue;
    if (!C.sp.degree_known(i + 1)) continue;
    int tn = f.to->sp.in_window(i + 1) ? f.to->dim(i + 1) : 0;
    if (tn == 0) continue;
    Matrix<K> fm = f.matrix(i + 1);  // M^{i+1} -> N^{i+1}
    if (fm.is_zero()) continue;
    auto it = C.diff.find(i);
    if (it == C.diff.end()) {
      int tot = C.sp.dim(i + 1);
      C.diff[i] = Matrix<K>::zero(tot, C.sp.dim(i));
      it = C.diff.find(i);
    }
    int ta = m1->sp.in_window(i + 1) ? m1->dim(i + 1) : 0;
    for (int r = 0; r < tn; ++r)
      for (int c = 0; c < nm; ++c) it->second(ta + r, c) += fm(r, c);
  }
  prune_zero_tables(C);
  Cone<K> out;
  out.mod = std::make_shared<DGModule<K>>(std::move(C));
  out.shifted_source = m1;
  out.incl_target = ModuleMap<K>{f.to, out.mod, 0, s.incl_second.comp};
  out.proj_shifted = ModuleMap<K>{out.mod, m1, 0, s.proj_first.comp};
  ValidationReport rep = validate_dg_module(*out.mod);
  internal_check(rep.ok(), "cone: result failed validation: " + rep.summary());
  return out;
}

// Cone acyclicity as a homotopy-equivalence certificate for f.
template <class K>
AcyclicityCertificate<K> quasi_iso_certificate(const ModuleMap<K>& f) {
  return acyclicity_certificate(*cone(f).mod);
}

}  // namespace dgdef

#endif
