#ifndef DGDEF_BUILDERS_HPP
#define DGDEF_BUILDERS_HPP

#include "dgdef/build.hpp"

namespace dgdef {

// k[x] with deg(x) = 1 and zero differential, presented on [0, hi]. The
// presentation is truncated above: products leaving the window are unknown.
template <class K>
AlgebraPtr<K> poly_algebra(int hi, const std::string& gen = "x") {
  internal_check(hi >= 1, "poly_algebra: need hi >= 1");
  std::map<int, std::vector<std::string>> labels;
  labels[0] = {"1"};
  labels[1] = {gen};
  for (int d = 2; d <= hi; ++d) labels[d] = {gen + "^" + std::to_string(d)};
  AlgebraBuilder<K> b({0, hi}, labels, /*truncated_below=*/false, /*truncated_above=*/true);
  b.unit("1");
  auto name = [&](int d) {
    return d == 0 ? std::string("1") : d == 1 ? gen : gen + "^" + std::to_string(d);
  };
  for (int i = 1; i <= hi; ++i)
    for (int j = 1; i + j <= hi; ++j) b.product(name(i), name(j), {{name(i + j), K(1)}});
  return b.build();
}

// k[e]/(e^order) in degree 0, completely presented.
template <class K>
AlgebraPtr<K> dual_numbers(int order, const std::string& gen = "eps") {
  internal_check(order >= 2, "dual_numbers: need order >= 2");
  std::vector<std::string> ls = {"1"};
  auto name = [&](int d) { return d == 1 ? gen : gen + "^" + std::to_string(d); };
  for (int d = 1; d < order; ++d) ls.push_back(name(d));
  AlgebraBuilder<K> b({0, 0}, {{0, ls}});
  b.unit("1");
  for (int i = 1; i < order; ++i)
    for (int j = 1; j < order; ++j)
      if (i + j < order) b.product(name(i), name(j), {{name(i + j), K(1)}});
  return b.build();
}

// k[theta]/(theta^2) with deg(theta) = 1 and zero differential.
template <class K>
AlgebraPtr<K> exterior_theta() {
  AlgebraBuilder<K> b({0, 1}, {{0, {"1"}}, {1, {"theta"}}});
  b.unit("1");
  // theta^2 lands in the known-zero degree 2
  return b.build();
}

// k<a,b>/(a^2, b^2, ab, ba): all generator products vanish. (Commutative
// after the quotient, despite the free presentation.)
template <class K>
AlgebraPtr<K> square_zero_pair() {
  AlgebraBuilder<K> b({0, 0}, {{0, {"1", "a", "b"}}});
  b.unit("1");
  return b.build();
}

// k<a,b>/(a^2, b^2, ba): genuinely noncommutative, ab survives, ba = 0.
template <class K>
AlgebraPtr<K> nc_path_algebra() {
  AlgebraBuilder<K> b({0, 0}, {{0, {"1", "a", "b", "ab"}}});
  b.unit("1");
  b.product("a", "b", {{"ab", K(1)}});
  return b.build();
}

// Augmented artinian coefficients with a nonzero differential:
// generators u (degree 0), v (degree 1), relations u^2 = uv = vu = 0, d(u) = v.
template <class K>
AlgebraPtr<K> artinian_with_diff() {
  AlgebraBuilder<K> b({0, 1}, {{0, {"1", "u"}}, {1, {"v"}}});
  b.unit("1");
  b.d("u", {{"v", K(1)}});
  return b.build();
}

// Coefficient-of-1 augmentation for algebras whose unit is the basis vector
// labelled "1".
template <class K>
Vec<K> unit_coefficient_augmentation(const DGAlgebra<K>& R) {
  auto [d, i] = R.find_label("1");
  internal_check(d == 0, "augmentation helper: '1' must sit in degree 0");
  return unit_vec<K>(R.dim(0), i);
}

// The contractible complex k -> k in degrees 0, 1, over the ground field.
template <class K>
ModulePtr<K> contractible_complex() {
  ModuleBuilder<K> b(unit_algebra<K>(), Side::Right, {0, 1}, {{0, {"c0"}}, {1, {"c1"}}});
  b.d("c0", {{"c1", K(1)}});
  return b.build();
}

// The same two-step contractible complex as a right module over A, with every
// positive-degree algebra element acting by zero (A augmented by "1").
template <class K>
ModulePtr<K> contractible_module(const AlgebraPtr<K>& A) {
  ModuleBuilder<K> b(A, Side::Right, {0, 1}, {{0, {"c0"}}, {1, {"c1"}}});
  b.d("c0", {{"c1", K(1)}});
  return b.build();
}

}  // namespace dgdef

#endif
