#include <gtest/gtest.h>

#include <map>
#include <set>

#include "dgdef/matrix.hpp"
#include "dgdef/subquotient.hpp"

using namespace dgdef;

namespace {

// Walk all vectors of F^n in lexicographic coordinate order.
template <class K, class F>
void for_all_vectors(int n, F&& f) {
  Vec<K> v(n, K(0));
  std::vector<unsigned> idx(n, 0);
  while (true) {
    f(v);
    int i = n - 1;
    while (i >= 0 && idx[i] + 1 == FieldTraits<K>::size) {
      idx[i] = 0;
      v[i] = K(0);
      --i;
    }
    if (i < 0) break;
    ++idx[i];
    v[i] = FieldTraits<K>::element(idx[i]);
  }
}

// Deterministic congruential stream for reproducible pseudo-random entries.
struct Lcg {
  uint64_t s;
  explicit Lcg(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return s >> 33;
  }
};

TEST(SolveLinear, IdentityCase) {
  auto a = Matrix<Rational>::identity(2);
  auto sol = solve_linear(a, Vec<Rational>{1, 0});
  ASSERT_TRUE(sol.solvable);
  EXPECT_EQ(sol.particular, (Vec<Rational>{1, 0}));
  EXPECT_TRUE(sol.kernel.empty());
}

TEST(SolveLinear, ZeroMatrixNoSolution) {
  Matrix<Rational> a(1, 1);
  auto sol = solve_linear(a, Vec<Rational>{1});
  EXPECT_FALSE(sol.solvable);
}

TEST(SolveLinear, DimensionMismatchThrows) {
  auto a = Matrix<Rational>::identity(2);
  EXPECT_THROW(solve_linear(a, Vec<Rational>{1, 0, 0}), PreconditionError);
}

// Random 4x6 systems over F3, checked against exhaustive enumeration of all
// 3^6 candidate vectors.
TEST(SolveLinear, BruteForceOracleF3) {
  Lcg rng(20260810);
  for (int trial = 0; trial < 12; ++trial) {
    Matrix<F3> a(4, 6);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 6; ++j) a(i, j) = F3((long long)(rng.next() % 3));
    Vec<F3> b(4);
    for (int i = 0; i < 4; ++i) b[i] = F3((long long)(rng.next() % 3));

    std::set<std::vector<unsigned>> expected;
    for_all_vectors<F3>(6, [&](const Vec<F3>& v) {
      if (a * v == b) {
        std::vector<unsigned> key;
        for (auto x : v) key.push_back(x.value());
        expected.insert(key);
      }
    });

    auto sol = solve_linear(a, b);
    if (!sol.solvable) {
      EXPECT_TRUE(expected.empty()) << "solver missed solutions, trial " << trial;
      continue;
    }
    ASSERT_FALSE(expected.empty()) << "solver invented a solution, trial " << trial;
    EXPECT_EQ(a * sol.particular, b);
    // particular + kernel span enumerates the full solution set
    std::set<std::vector<unsigned>> got;
    for_all_vectors<F3>((int)sol.kernel.size(), [&](const Vec<F3>& c) {
      Vec<F3> x = sol.particular;
      for (size_t k = 0; k < sol.kernel.size(); ++k) vec_axpy(x, c[k], sol.kernel[k]);
      std::vector<unsigned> key;
      for (auto e : x) key.push_back(e.value());
      got.insert(key);
    });
    EXPECT_EQ(got, expected) << "trial " << trial;
  }
}

TEST(Rref, DeterministicAndCanonical) {
  Matrix<Rational> a(3, 4, {0, 2, 4, 2,
                            1, 1, 1, 1,
                            1, 3, 5, 3});
  auto r1 = rref(a);
  auto r2 = rref(a);
  EXPECT_EQ(r1.mat, r2.mat);
  EXPECT_EQ(r1.rank, 2);
  EXPECT_EQ(r1.pivot_cols, (std::vector<int>{0, 1}));
  // rows start with leading ones
  EXPECT_EQ(r1.mat(0, 0), Rational(1));
  EXPECT_EQ(r1.mat(1, 1), Rational(1));
  EXPECT_EQ(r1.mat(0, 1), Rational(0));
}

TEST(Kernel, EchelonCanonicalForm) {
  // x + y + z = 0 over Q: kernel vectors carry a unit at their free column
  Matrix<Rational> a(1, 3, {1, 1, 1});
  auto k = kernel_basis(a);
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[0], (Vec<Rational>{-1, 1, 0}));
  EXPECT_EQ(k[1], (Vec<Rational>{-1, 0, 1}));
}

TEST(CohomologyAt, ZeroDifferentials) {
  auto h = cohomology_at<Rational>(Matrix<Rational>(2, 0), Matrix<Rational>(0, 2));
  EXPECT_EQ(h.dim(), 2);
}

TEST(CohomologyAt, Contractible) {
  auto h = cohomology_at<Rational>(Matrix<Rational>(2, 0), Matrix<Rational>::identity(2));
  EXPECT_EQ(h.dim(), 0);
}

TEST(CohomologyAt, CompositeNonzeroRejected) {
  auto id = Matrix<Rational>::identity(2);
  EXPECT_THROW(cohomology_at(id, id), PreconditionError);
}

// Two-step complex over F2 with rank-1 maps through a 3-dimensional middle:
// dim H = 1, cross-checked by enumerating every cocycle and every boundary.
TEST(CohomologyAt, BruteForceOracleF2) {
  Matrix<F2> d_in(3, 2, {1, 0, 0, 0, 0, 0});       // image = span(e0)
  Matrix<F2> d_out(2, 3, {0, 0, 1, 0, 0, 0});      // kernel = span(e0, e1)
  auto h = cohomology_at(d_in, d_out);
  EXPECT_EQ(h.dim(), 1);

  std::set<std::vector<unsigned>> classes;
  int cocycles = 0;
  for_all_vectors<F2>(3, [&](const Vec<F2>& v) {
    if (!vec_is_zero(Vec<F2>(d_out * v))) return;
    ++cocycles;
    auto c = h.classify(v);
    ASSERT_TRUE(c.has_value());
    std::vector<unsigned> key;
    for (auto x : *c) key.push_back(x.value());
    classes.insert(key);
  });
  EXPECT_EQ(cocycles, 4);
  EXPECT_EQ(classes.size(), 2u);  // |H| = 2 over F2
  // classifying map vanishes exactly on the boundaries
  EXPECT_TRUE(h.is_zero_class(d_in.col(0)));
  EXPECT_FALSE(h.is_zero_class(unit_vec<F2>(3, 1)));
  // vectors outside the cocycle space are rejected
  EXPECT_FALSE(h.classify(unit_vec<F2>(3, 2)).has_value());
}

// Classifying-map fibers all have cardinality |im(d_in)|, checked exhaustively
// over F2 and F3 in ambient dimension <= 12 overall.
TEST(CohomologyAt, FiberCardinalityProperty) {
  auto run = [](auto field_tag, int ambient, const std::vector<int>& img_cols,
                const std::vector<int>& ker_kill) {
    using K = decltype(field_tag);
    Matrix<K> d_in(ambient, (int)img_cols.size());
    for (size_t j = 0; j < img_cols.size(); ++j) d_in(img_cols[j], (int)j) = K(1);
    Matrix<K> d_out((int)ker_kill.size(), ambient);
    for (size_t i = 0; i < ker_kill.size(); ++i) d_out((int)i, ker_kill[i]) = K(1);
    auto h = cohomology_at(d_in, d_out);
    std::map<std::vector<unsigned>, int> fiber;
    int cocycles = 0;
    for_all_vectors<K>(ambient, [&](const Vec<K>& v) {
      if (!vec_is_zero(Vec<K>(d_out * v))) return;
      ++cocycles;
      auto c = h.classify(v);
      ASSERT_TRUE(c.has_value());
      std::vector<unsigned> key;
      for (auto x : *c) key.push_back(x.value());
      ++fiber[key];
    });
    long long q = FieldTraits<K>::size;
    long long img_size = 1;
    for (int i = 0; i < rank(d_in); ++i) img_size *= q;
    for (const auto& [key, count] : fiber) EXPECT_EQ(count, img_size);
    EXPECT_EQ((long long)fiber.size() * img_size, cocycles);
  };
  run(F2(), 5, {0, 1}, {4});
  run(F3(), 4, {0}, {3});
  run(F2(), 6, {0, 2, 4}, {5});
}

TEST(RowSpace, InsertReduceComplement) {
  RowSpace<Rational> s(4);
  EXPECT_TRUE(s.insert(Vec<Rational>{0, 2, 0, 2}));
  EXPECT_TRUE(s.insert(Vec<Rational>{1, 1, 0, 0}));
  EXPECT_FALSE(s.insert(Vec<Rational>{1, 3, 0, 2}));  // dependent
  EXPECT_EQ(s.dim(), 2);
  EXPECT_TRUE(s.contains(Vec<Rational>{2, 6, 0, 4}));
  EXPECT_FALSE(s.contains(Vec<Rational>{0, 0, 1, 0}));
  EXPECT_EQ(s.complement_indices(), (std::vector<int>{2, 3}));
}

TEST(Subquotient, SubstitutionReproducesExactly) {
  // every solvable system: substituting the particular solution gives b exactly
  Lcg rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    Matrix<Rational> a(3, 5);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 5; ++j)
        a(i, j) = Rational((long long)(rng.next() % 7) - 3, 1 + (long long)(rng.next() % 3));
    Vec<Rational> x(5);
    for (int j = 0; j < 5; ++j) x[j] = Rational((long long)(rng.next() % 9) - 4);
    Vec<Rational> b = a * x;
    auto sol = solve_linear(a, b);
    ASSERT_TRUE(sol.solvable);
    EXPECT_EQ(a * sol.particular, b);
  }
}

}  // namespace
