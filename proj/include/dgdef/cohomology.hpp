#ifndef DGDEF_COHOMOLOGY_HPP
#define DGDEF_COHOMOLOGY_HPP

#include <map>

#include "dgdef/dg_module.hpp"
#include "dgdef/subquotient.hpp"

namespace dgdef {

// Per-degree cohomology with deterministic representatives, on the inner
// window of the module (degrees whose incoming and outgoing differentials are
// both determined).
template <class K>
struct CohomologyReport {
  ComplexWindow window;
  std::map<int, Subquotient<K>> groups;

  int dim(int d) const {
    auto it = groups.find(d);
    return it == groups.end() ? 0 : it->second.dim();
  }
  std::map<int, int> dims() const {
    std::map<int, int> r;
    for (const auto& [d, g] : groups)
      if (g.dim() > 0) r[d] = g.dim();
    return r;
  }
  bool is_zero() const {
    for (const auto& [d, g] : groups)
      if (g.dim() > 0) return false;
    return true;
  }
};

template <class K>
CohomologyReport<K> cohomology(const DGModule<K>& M) {
  CohomologyReport<K> rep;
  Window w = M.sp.inner_window();
  for (int i : M.unknown_diff) {
    // an unrecorded differential invalidates degrees i and i+1
    if (w.contains(i + 1)) w.hi = std::min(w.hi, i - 1);
    if (w.contains(i)) w.hi = std::min(w.hi, i - 1);
  }
  rep.window = w;
  for (int d = w.lo; d <= w.hi; ++d) {
    Matrix<K> d_in = (M.sp.in_window(d - 1) && M.diff_known(d - 1))
                         ? M.diff_matrix(d - 1)
                         : Matrix<K>::zero(M.dim(d), 0);
    Matrix<K> d_out = M.diff_known(d) ? M.diff_matrix(d) : Matrix<K>::zero(0, M.dim(d));
    rep.groups.emplace(d, cohomology_at(d_in, d_out));
  }
  return rep;
}

template <class K>
CohomologyReport<K> cohomology(const ModulePtr<K>& M) {
  return cohomology(*M);
}

// Degrees of a checked window where cohomology vanishes, reported as the
// maximal suffix (depth-limited constructions fail at the bottom first) plus
// the explicit list of failing degrees.
template <class K>
struct AcyclicityCertificate {
  ComplexWindow checked;
  ComplexWindow verified;       // suffix of `checked` with H = 0
  std::vector<int> failing;     // degrees in `checked` with H != 0

  bool fully_acyclic() const { return failing.empty(); }
};

template <class K>
AcyclicityCertificate<K> acyclicity_certificate(const DGModule<K>& M) {
  CohomologyReport<K> rep = cohomology(M);
  AcyclicityCertificate<K> cert;
  cert.checked = rep.window;
  int last_fail = rep.window.lo - 1;
  for (const auto& [d, g] : rep.groups)
    if (g.dim() > 0) {
      cert.failing.push_back(d);
      last_fail = d;
    }
  cert.verified = {last_fail + 1, rep.window.hi};
  return cert;
}

}  // namespace dgdef

#endif
