#include <gtest/gtest.h>

#include "dgdef/builders.hpp"
#include "dgdef/cohomology.hpp"

using namespace dgdef;

namespace {

TEST(GradedSpace, KnownDegrees) {
  GradedSpace sp = make_graded_space({0, 4}, {{0, {"1"}}, {1, {"x"}}}, false, true);
  EXPECT_TRUE(sp.degree_known(-3));   // complete below
  EXPECT_TRUE(sp.degree_known(2));    // in window
  EXPECT_FALSE(sp.degree_known(5));   // truncated above
  EXPECT_EQ(sp.inner_window(), (Window{0, 3}));
}

TEST(ValidateAlgebra, PolynomialAlgebraValid) {
  auto A = poly_algebra<Rational>(4);
  EXPECT_TRUE(validate_dg_algebra(*A).ok()) << validate_dg_algebra(*A).summary();
  EXPECT_EQ(A->dim(3), 1);
  // window truncation: x^2 * x^3 is not recorded
  EXPECT_FALSE(A->pair_known(2, 3));
  EXPECT_TRUE(A->pair_known(2, 2));
}

// Planted defects: the validator names the offending pairs.
TEST(ValidateAlgebra, BrokenLeibnizReported) {
  // d(x) = x^2 with d = 0 elsewhere: the derivation rule fails on (x, x^2)
  AlgebraBuilder<F3> b({0, 4},
                       {{0, {"1"}}, {1, {"x"}}, {2, {"x^2"}}, {3, {"x^3"}}, {4, {"x^4"}}},
                       false, true);
  b.unit("1");
  b.product("x", "x", {{"x^2", F3(1)}});
  b.product("x", "x^2", {{"x^3", F3(1)}});
  b.product("x^2", "x", {{"x^3", F3(1)}});
  b.product("x", "x^3", {{"x^4", F3(1)}});
  b.product("x^3", "x", {{"x^4", F3(1)}});
  b.product("x^2", "x^2", {{"x^4", F3(1)}});
  b.d("x", {{"x^2", F3(1)}});
  auto rep = validate_dg_algebra(*b.build());
  EXPECT_FALSE(rep.ok());
  bool saw_leibniz_pair = false;
  for (const auto& v : rep.violations)
    if (v.identity == "leibniz" && v.detail.find("x^2") != std::string::npos)
      saw_leibniz_pair = true;
  EXPECT_TRUE(saw_leibniz_pair) << rep.summary();
}

TEST(ValidateAlgebra, BrokenDSquaredReported) {
  AlgebraBuilder<F3> b({0, 4},
                       {{0, {"1"}}, {1, {"x"}}, {2, {"x^2"}}, {3, {"x^3"}}, {4, {"x^4"}}},
                       false, true);
  b.unit("1");
  b.product("x", "x", {{"x^2", F3(1)}});
  b.product("x", "x^2", {{"x^3", F3(1)}});
  b.product("x^2", "x", {{"x^3", F3(1)}});
  b.product("x", "x^3", {{"x^4", F3(1)}});
  b.product("x^3", "x", {{"x^4", F3(1)}});
  b.product("x^2", "x^2", {{"x^4", F3(1)}});
  b.d("x", {{"x^2", F3(1)}});
  b.d("x^2", {{"x^3", F3(1)}});
  auto rep = validate_dg_algebra(*b.build());
  bool saw_dsq = false;
  for (const auto& v : rep.violations)
    if (v.identity == "d_squared" && v.detail.find("d(d(x))") != std::string::npos) saw_dsq = true;
  EXPECT_TRUE(saw_dsq) << rep.summary();
}

TEST(Opposite, InvolutionAndSigns) {
  auto A = poly_algebra<Rational>(4);
  auto Aop = opposite(*A);
  EXPECT_TRUE(validate_dg_algebra(*Aop).ok());
  // x has odd degree: x *op x = -x^2 in characteristic 0
  auto [dx, ix] = Aop->find_label("x");
  Vec<Rational> ex = unit_vec<Rational>(1, 0);
  EXPECT_EQ(Aop->mul(1, ex, 1, ex), (Vec<Rational>{-1}));
  // double opposite restores the algebra on the nose
  EXPECT_EQ(*opposite(*Aop), *A);
}

TEST(Opposite, CharacteristicTwoIsPlainSwap) {
  auto A = nc_path_algebra<F2>();
  auto Aop = opposite(*A);
  // ab != 0 in A means b *op a != 0 in A^op
  auto [d0, ia] = A->find_label("a");
  auto [d1, ib] = A->find_label("b");
  Vec<F2> ea = unit_vec<F2>(4, ia), eb = unit_vec<F2>(4, ib);
  EXPECT_EQ(Aop->mul(0, eb, 0, ea), A->mul(0, ea, 0, eb));
  EXPECT_TRUE(vec_is_zero(Aop->mul(0, ea, 0, eb)));
}

TEST(Opposite, CommutativeDegreeZeroFixed) {
  auto R = dual_numbers<Rational>(3);
  EXPECT_EQ(*opposite(*R), *R);
}

TEST(TensorDG, UnitAlgebraIsIdentity) {
  auto A = poly_algebra<Rational>(3);
  auto t = tensor_dg(A, unit_algebra<Rational>());
  EXPECT_TRUE(validate_dg_algebra(*t.alg).ok());
  for (int d = 0; d <= 3; ++d) EXPECT_EQ(t.alg->dim(d), A->dim(d));
  // structure constants agree under the pairing (a, 1) <-> a
  for (int i = 1; i + 1 <= 3; ++i) {
    Vec<Rational> e = unit_vec<Rational>(1, 0);
    EXPECT_EQ(t.alg->mul(i, e, 1, e), A->mul(i, e, 1, e));
  }
}

TEST(TensorDG, KoszulSignOnOddFactors) {
  // (x (x) 1)(1 (x) theta) = x (x) theta, (1 (x) theta)(x (x) 1) = -x (x) theta
  auto A = poly_algebra<Rational>(3);
  auto T = exterior_theta<Rational>();
  auto t = tensor_dg(A, T);
  EXPECT_TRUE(validate_dg_algebra(*t.alg).ok());
  Vec<Rational> x_one(t.alg->dim(1), Rational(0));
  x_one[t.idx(1, 0, 0, 0)] = 1;
  Vec<Rational> one_theta(t.alg->dim(1), Rational(0));
  one_theta[t.idx(0, 0, 1, 0)] = 1;
  Vec<Rational> xt = t.alg->mul(1, x_one, 1, one_theta);
  Vec<Rational> tx = t.alg->mul(1, one_theta, 1, x_one);
  Vec<Rational> expected(t.alg->dim(2), Rational(0));
  expected[t.idx(1, 0, 1, 0)] = 1;
  EXPECT_EQ(xt, expected);
  EXPECT_EQ(tx, vec_scale(Rational(-1), expected));
}

TEST(TensorDG, SquareZeroCoefficients) {
  // (x (x) eps)^2 = x^2 (x) eps^2 = 0 in k[x] (x) k[eps]/eps^2
  auto A = poly_algebra<Rational>(4);
  auto R = dual_numbers<Rational>(2);
  auto t = tensor_dg(A, R);
  Vec<Rational> xe(t.alg->dim(1), Rational(0));
  xe[t.idx(1, 0, 0, 1)] = 1;
  EXPECT_TRUE(vec_is_zero(t.alg->mul(1, xe, 1, xe)));
}

TEST(TensorDG, AssociativityAndDifferential) {
  auto A = poly_algebra<F2>(3);
  auto R = artinian_with_diff<F2>();
  auto t = tensor_dg(A, R);
  auto rep = validate_dg_algebra(*t.alg);
  EXPECT_TRUE(rep.ok()) << rep.summary();
}

TEST(Module, AlgebraOverItselfValidates) {
  auto A = poly_algebra<Rational>(5);
  auto M = algebra_as_right_module(A);
  EXPECT_TRUE(validate_dg_module(*M).ok());
}

TEST(Module, ContractibleHasZeroCohomology) {
  auto M = contractible_complex<Rational>();
  EXPECT_TRUE(validate_dg_module(*M).ok());
  auto H = cohomology(*M);
  EXPECT_TRUE(H.is_zero());
  EXPECT_EQ(H.window, (Window{0, 1}));
}

TEST(Module, PolynomialModuleCohomology) {
  auto A = poly_algebra<F2>(5);
  auto M = algebra_as_right_module(A);
  auto H = cohomology(*M);
  // zero differential: H^i = B^i on the inner window [0, 4]
  EXPECT_EQ(H.window, (Window{0, 4}));
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(H.dim(d), 1);
}

TEST(Module, ShiftNegatesDifferential) {
  auto M = contractible_complex<Rational>();
  auto S = shift(*M, 1);
  EXPECT_TRUE(validate_dg_module(*S).ok());
  EXPECT_EQ(S->dim(-1), 1);
  EXPECT_EQ(S->diff_matrix(-1)(0, 0), Rational(-1));
}

TEST(Module, SubmoduleQuotientRoundTrip) {
  // tau-style split of the contractible complex: sub = degree-1 part
  auto M = contractible_complex<Rational>();
  std::map<int, std::vector<Vec<Rational>>> spans;
  spans[1] = {unit_vec<Rational>(1, 0)};
  auto sub = submodule(M, spans);
  EXPECT_TRUE(validate_dg_module(*sub.mod).ok());
  EXPECT_EQ(sub.mod->dim(1), 1);
  EXPECT_EQ(sub.mod->dim(0), 0);
  auto q = quotient_module(M, spans);
  EXPECT_TRUE(validate_dg_module(*q.mod).ok());
  EXPECT_EQ(q.mod->dim(0), 1);
  EXPECT_EQ(q.mod->dim(1), 0);
  EXPECT_TRUE(is_module_linear(sub.inclusion));
  EXPECT_TRUE(is_closed(sub.inclusion));
}

TEST(Module, NonStableSubspaceRejected) {
  auto M = contractible_complex<Rational>();
  std::map<int, std::vector<Vec<Rational>>> spans;
  spans[0] = {unit_vec<Rational>(1, 0)};  // d(c0) = c1 leaves the span
  EXPECT_THROW(submodule(M, spans), PreconditionError);
}

TEST(QuotientAlgebra, DualNumbersTower) {
  auto R = dual_numbers<Rational>(3);
  auto [d1, i1] = R->find_label("eps^2");
  std::map<int, std::vector<Vec<Rational>>> ideal;
  ideal[0] = {unit_vec<Rational>(3, i1)};
  auto q = quotient_algebra(R, ideal);
  EXPECT_TRUE(validate_dg_algebra(*q.alg).ok());
  EXPECT_EQ(q.alg->dim(0), 2);
  EXPECT_EQ(*q.alg, *dual_numbers<Rational>(2));  // labels and tables agree on the nose
  EXPECT_TRUE(validate_algebra_map(q.projection).ok());
}

TEST(SubAlgebra, ClosureEnforced) {
  auto A = poly_algebra<Rational>(4);
  std::map<int, std::vector<Vec<Rational>>> spans;
  spans[0] = {A->unit};
  spans[1] = {unit_vec<Rational>(1, 0)};
  // x^2 = x * x missing from the span
  EXPECT_THROW(subalgebra(A, spans), PreconditionError);
  spans[2] = {unit_vec<Rational>(1, 0)};
  spans[3] = {unit_vec<Rational>(1, 0)};
  spans[4] = {unit_vec<Rational>(1, 0)};
  auto s = subalgebra(A, spans);
  EXPECT_EQ(*s.alg, *A);  // full span reproduces the algebra, labels included
}

}  // namespace
