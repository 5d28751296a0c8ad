#ifndef DGDEF_BUILD_HPP
#define DGDEF_BUILD_HPP

#include <map>
#include <string>
#include <vector>

#include "dgdef/dg_module.hpp"

namespace dgdef {

// Label-level construction of algebras and modules. Products and
// differentials not mentioned are zero; labels must be globally unique so
// entries can name elements without degrees.
template <class K>
class AlgebraBuilder {
  GradedSpace sp_;
  std::map<std::string, std::pair<int, int>> where_;
  std::map<std::pair<int, int>, Matrix<K>> mult_;
  std::map<int, Matrix<K>> diff_;
  std::string unit_label_;

 public:
  AlgebraBuilder(Window win, std::map<int, std::vector<std::string>> labels,
                 bool truncated_below = false, bool truncated_above = false) {
    sp_ = make_graded_space(win, std::move(labels), truncated_below, truncated_above);
    for (const auto& [d, ls] : sp_.labels)
      for (size_t i = 0; i < ls.size(); ++i) {
        if (where_.count(ls[i]))
          throw SchemaError("label '" + ls[i] + "' is not globally unique");
        where_[ls[i]] = {d, (int)i};
      }
  }

  std::pair<int, int> at(const std::string& l) const {
    auto it = where_.find(l);
    if (it == where_.end()) throw SchemaError("unknown label '" + l + "'");
    return it->second;
  }

  AlgebraBuilder& unit(const std::string& l) {
    unit_label_ = l;
    return *this;
  }

  AlgebraBuilder& product(const std::string& a, const std::string& b,
                          const std::vector<std::pair<std::string, K>>& value) {
    auto [i, ai] = at(a);
    auto [j, bi] = at(b);
    if (!sp_.degree_known(i + j))
      throw SchemaError("product " + a + "*" + b + " lands outside the window");
    auto& tab = mult_[{i, j}];
    if (tab.rows() == 0) tab = Matrix<K>(sp_.dim(i + j), sp_.dim(i) * sp_.dim(j));
    for (const auto& [l, c] : value) {
      auto [td, ti] = at(l);
      if (td != i + j) throw SchemaError("product entry " + l + " has wrong degree");
      tab(ti, kron(ai, sp_.dim(j), bi)) = c;
    }
    return *this;
  }

  AlgebraBuilder& d(const std::string& a, const std::vector<std::pair<std::string, K>>& value) {
    auto [i, ai] = at(a);
    if (!sp_.degree_known(i + 1)) throw SchemaError("d(" + a + ") lands outside the window");
    auto& m = diff_[i];
    if (m.rows() == 0) m = Matrix<K>(sp_.dim(i + 1), sp_.dim(i));
    for (const auto& [l, c] : value) {
      auto [td, ti] = at(l);
      if (td != i + 1) throw SchemaError("differential entry " + l + " has wrong degree");
      m(ti, ai) = c;
    }
    return *this;
  }

  AlgebraPtr<K> build() const {
    DGAlgebra<K> a;
    a.sp = sp_;
    if (unit_label_.empty()) throw SchemaError("unit label not set");
    auto [ud, ui] = at(unit_label_);
    if (ud != 0) throw SchemaError("unit must have degree 0");
    a.unit = unit_vec<K>(sp_.dim(0), ui);
    a.mult = mult_;
    a.diff = diff_;
    // fill in the unit products that were not spelled out
    for (int d = sp_.win.lo; d <= sp_.win.hi; ++d) {
      if (sp_.dim(d) == 0) continue;
      auto& left = a.mult[{0, d}];
      if (left.rows() == 0) left = Matrix<K>(sp_.dim(d), sp_.dim(0) * sp_.dim(d));
      auto& right = a.mult[{d, 0}];
      if (right.rows() == 0) right = Matrix<K>(sp_.dim(d), sp_.dim(d) * sp_.dim(0));
      for (int b = 0; b < sp_.dim(d); ++b) {
        if (vec_is_zero(left.col(kron(ui, sp_.dim(d), b))))
          left.set_col(kron(ui, sp_.dim(d), b), unit_vec<K>(sp_.dim(d), b));
        if (vec_is_zero(right.col(kron(b, sp_.dim(0), ui))))
          right.set_col(kron(b, sp_.dim(0), ui), unit_vec<K>(sp_.dim(d), b));
      }
    }
    prune_zero_tables(a);
    return std::make_shared<DGAlgebra<K>>(std::move(a));
  }
};

template <class K>
class ModuleBuilder {
  AlgebraPtr<K> alg_;
  Side side_;
  GradedSpace sp_;
  std::map<std::string, std::pair<int, int>> where_;
  std::map<std::pair<int, int>, Matrix<K>> act_;
  std::map<int, Matrix<K>> diff_;

 public:
  ModuleBuilder(AlgebraPtr<K> alg, Side side, Window win,
                std::map<int, std::vector<std::string>> labels,
                bool truncated_below = false, bool truncated_above = false)
      : alg_(std::move(alg)), side_(side) {
    sp_ = make_graded_space(win, std::move(labels), truncated_below, truncated_above);
    for (const auto& [d, ls] : sp_.labels)
      for (size_t i = 0; i < ls.size(); ++i) {
        if (where_.count(ls[i]))
          throw SchemaError("label '" + ls[i] + "' is not globally unique");
        where_[ls[i]] = {d, (int)i};
      }
  }

  std::pair<int, int> at(const std::string& l) const {
    auto it = where_.find(l);
    if (it == where_.end()) throw SchemaError("unknown module label '" + l + "'");
    return it->second;
  }

  // action of algebra element b on module element m
  ModuleBuilder& action(const std::string& m, const std::string& b,
                        const std::vector<std::pair<std::string, K>>& value) {
    auto [i, mi] = at(m);
    auto [j, bi] = alg_->find_label(b);
    if (!sp_.degree_known(i + j))
      throw SchemaError("action " + m + "." + b + " lands outside the window");
    auto& tab = act_[{i, j}];
    if (tab.rows() == 0) tab = Matrix<K>(sp_.dim(i + j), sp_.dim(i) * alg_->dim(j));
    for (const auto& [l, c] : value) {
      auto [td, ti] = at(l);
      if (td != i + j) throw SchemaError("action entry " + l + " has wrong degree");
      tab(ti, kron(mi, alg_->dim(j), bi)) = c;
    }
    return *this;
  }

  ModuleBuilder& d(const std::string& m, const std::vector<std::pair<std::string, K>>& value) {
    auto [i, mi] = at(m);
    if (!sp_.degree_known(i + 1)) throw SchemaError("d(" + m + ") lands outside the window");
    auto& mat = diff_[i];
    if (mat.rows() == 0) mat = Matrix<K>(sp_.dim(i + 1), sp_.dim(i));
    for (const auto& [l, c] : value) {
      auto [td, ti] = at(l);
      if (td != i + 1) throw SchemaError("differential entry " + l + " has wrong degree");
      mat(ti, mi) = c;
    }
    return *this;
  }

  ModulePtr<K> build() const {
    DGModule<K> m;
    m.alg = alg_;
    m.side = side_;
    m.sp = sp_;
    m.act = act_;
    m.diff = diff_;
    // fill in unit actions that were not spelled out (only when the unit is a
    // plain basis vector)
    int ui = -1;
    for (int k = 0; k < alg_->dim(0); ++k)
      if (!(alg_->unit[k] == K(0))) {
        ui = (ui == -1 && alg_->unit[k] == K(1)) ? k : -2;
      }
    if (ui >= 0) {
      for (int d = sp_.win.lo; d <= sp_.win.hi; ++d) {
        if (sp_.dim(d) == 0) continue;
        auto& tab = m.act[{d, 0}];
        if (tab.rows() == 0) tab = Matrix<K>(sp_.dim(d), sp_.dim(d) * alg_->dim(0));
        for (int a = 0; a < sp_.dim(d); ++a)
          if (vec_is_zero(tab.col(kron(a, alg_->dim(0), ui))))
            tab.set_col(kron(a, alg_->dim(0), ui), unit_vec<K>(sp_.dim(d), a));
      }
    }
    prune_zero_tables(m);
    return std::make_shared<DGModule<K>>(std::move(m));
  }
};

}  // namespace dgdef

#endif
