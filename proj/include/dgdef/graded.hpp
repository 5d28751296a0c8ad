#ifndef DGDEF_GRADED_HPP
#define DGDEF_GRADED_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dgdef/errors.hpp"

namespace dgdef {

// Inclusive degree interval; empty when lo > hi.
struct Window {
  int lo = 0;
  int hi = -1;
  bool empty() const { return lo > hi; }
  bool contains(int d) const { return d >= lo && d <= hi; }
  int length() const { return empty() ? 0 : hi - lo + 1; }
  bool operator==(const Window&) const = default;

  static Window empty_window() { return {0, -1}; }
  Window intersect(const Window& o) const {
    return {lo > o.lo ? lo : o.lo, hi < o.hi ? hi : o.hi};
  }
  // Minkowski sum, for tensor gradings.
  Window sum(const Window& o) const {
    if (empty() || o.empty()) return empty_window();
    return {lo + o.lo, hi + o.hi};
  }
  Window shift(int s) const { return empty() ? *this : Window{lo + s, hi + s}; }
  std::string str() const {
    return empty() ? "(empty)" : "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  }
};

// The degree interval on which a cohomological assertion has actually been
// verified. Claims outside it are neither made nor tested.
using ComplexWindow = Window;

// A finite-window presentation of a graded vector space. Degrees inside the
// window carry explicit dimensions and basis labels. Outside the window a
// degree is either known to vanish or unknowable (truncated side of a
// presentation of an infinite object like k[x]).
struct GradedSpace {
  Window win;
  std::map<int, int> dims;                            // per window degree
  std::map<int, std::vector<std::string>> labels;     // per window degree, unique
  bool truncated_below = false;
  bool truncated_above = false;

  int dim(int d) const {
    auto it = dims.find(d);
    return it == dims.end() ? 0 : it->second;
  }
  bool in_window(int d) const { return win.contains(d); }
  // True when the component in degree d is fully determined by this
  // presentation (possibly as the zero space).
  bool degree_known(int d) const {
    if (win.contains(d)) return true;
    if (d < win.lo) return !truncated_below;
    return !truncated_above;
  }
  int total_dim() const {
    int t = 0;
    for (const auto& [d, n] : dims) t += n;
    return t;
  }
  const std::string& label(int d, int i) const { return labels.at(d)[i]; }

  // Inner window: degrees whose incoming and outgoing differentials are both
  // determined, i.e. where cohomology claims are sound.
  Window inner_window() const {
    Window w = win;
    if (truncated_below) ++w.lo;
    if (truncated_above) --w.hi;
    return w;
  }

  bool operator==(const GradedSpace&) const = default;

  ValidationReport validate() const {
    ValidationReport rep;
    for (const auto& [d, n] : dims) {
      if (!win.contains(d) && n != 0)
        rep.add("window", "nonzero dimension outside window at degree " + std::to_string(d));
      if (n < 0) rep.add("dimension", "negative dimension at degree " + std::to_string(d));
      auto it = labels.find(d);
      int nl = it == labels.end() ? 0 : (int)it->second.size();
      if (nl != n)
        rep.add("labels", "label count != dimension at degree " + std::to_string(d));
      if (it != labels.end()) {
        std::set<std::string> seen;
        for (const auto& l : it->second)
          if (!seen.insert(l).second)
            rep.add("labels", "duplicate label '" + l + "' at degree " + std::to_string(d));
      }
    }
    return rep;
  }
};

// Convenience constructor from per-degree label lists.
inline GradedSpace make_graded_space(Window win,
                                     std::map<int, std::vector<std::string>> labels,
                                     bool truncated_below = false,
                                     bool truncated_above = false) {
  GradedSpace sp;
  sp.win = win;
  sp.truncated_below = truncated_below;
  sp.truncated_above = truncated_above;
  for (int d = win.lo; d <= win.hi; ++d) {
    auto it = labels.find(d);
    sp.dims[d] = it == labels.end() ? 0 : (int)it->second.size();
    sp.labels[d] = it == labels.end() ? std::vector<std::string>{} : it->second;
  }
  ValidationReport rep = sp.validate();
  if (!rep.ok()) throw SchemaError("bad graded space: " + rep.summary());
  return sp;
}

inline int koszul_sign_exp(int a, int b) { return (a & 1) && (b & 1) ? 1 : 0; }

template <class K>
K koszul_sign(int a, int b) {
  return koszul_sign_exp(a, b) ? K(-1) : K(1);
}

template <class K>
K sign_pow(int n) {
  return (n & 1) ? K(-1) : K(1);
}

}  // namespace dgdef

#endif
