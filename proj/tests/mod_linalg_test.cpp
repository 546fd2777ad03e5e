#include "hypercyclic/mod_linalg.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "hypercyclic/errors.hpp"
#include "oracles.hpp"

namespace hypercyclic {
namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

Rows random_rows(std::mt19937_64& rng, std::size_t r, std::size_t c, std::int64_t m) {
  Rows a(r, std::vector<std::int64_t>(c));
  for (auto& row : a)
    for (auto& v : row) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m));
  return a;
}

// Determinant over Z by cofactor expansion, then reduced mod m.
std::int64_t det_mod(const ModMatrix& a, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
  const Residue m = a.modulus();
  if (rows.size() == 1) return a(rows[0], cols[0]);
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<std::size_t> sub_cols = cols;
    sub_cols.erase(sub_cols.begin() + static_cast<std::ptrdiff_t>(j));
    const std::int64_t minor = det_mod(a, {rows.begin() + 1, rows.end()}, sub_cols);
    const std::int64_t term = (a(rows[0], cols[j]) * minor) % m;
    acc = (acc + (j % 2 ? m - term : term)) % m;
  }
  return acc;
}

std::int64_t det_mod(const ModMatrix& a) {
  std::vector<std::size_t> idx(a.rows());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return det_mod(a, idx, idx);
}

TEST(ModVector, ReducesEntries) {
  const ModVector v(5, {-1, 7, 5});
  EXPECT_EQ(v.values(), (std::vector<Residue>{4, 2, 0}));
  EXPECT_THROW(ModVector(1, std::vector<std::int64_t>{0}), ModulusError);
}

TEST(MatVecMod, Examples) {
  EXPECT_EQ(mat_vec_mod(ModMatrix(2, {{1, 1}, {0, 1}}), ModVector(2, {1, 1})), ModVector(2, {0, 1}));
  EXPECT_EQ(mat_vec_mod(ModMatrix(4, {{2, 3}}), ModVector(4, {1, 2})), ModVector(4, {0}));
  const ModVector b(7, {3, 6, 1, 0});
  EXPECT_EQ(mat_vec_mod(ModMatrix::identity(7, 4), b), b);
}

TEST(MatVecMod, Errors) {
  EXPECT_THROW(mat_vec_mod(ModMatrix(4, {{1, 2}}), ModVector(5, {1, 2})), ModulusError);
  EXPECT_THROW(mat_vec_mod(ModMatrix(4, {{1, 2}}), ModVector(4, {1, 2, 3})), DimensionError);
}

TEST(SolveLinearMod, Examples) {
  const ModMatrix two(4, {{2}});
  auto x = solve_linear_mod(two, ModVector(4, {2}));
  ASSERT_TRUE(x);
  EXPECT_EQ(mat_vec_mod(two, *x), ModVector(4, {2}));
  EXPECT_FALSE(solve_linear_mod(two, ModVector(4, {1})));

  // C_3 incidence over Z_2 with all-ones: unsolvable (exhaustive check below confirms).
  const Rows c3 = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  ASSERT_FALSE(testing::solvable_by_enumeration(c3, {1, 1, 1}, 2));
  EXPECT_FALSE(solve_linear_mod(ModMatrix(2, c3), ModVector(2, {1, 1, 1})));

  const ModMatrix c4(2, {{1, 1, 0, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}});
  x = solve_linear_mod(c4, ModVector(2, {1, 1, 1, 1}));
  ASSERT_TRUE(x);
  EXPECT_EQ(mat_vec_mod(c4, *x), ModVector(2, {1, 1, 1, 1}));
}

TEST(SolveLinearMod, ZeroSystemsGiveZeroWitness) {
  auto x = solve_linear_mod(ModMatrix::zeros(6, 3, 4), ModVector::zeros(6, 3));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, ModVector::zeros(6, 4));
  x = solve_linear_mod(ModMatrix(6, {{2, 3, 1}, {4, 0, 5}}), ModVector::zeros(6, 2));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, ModVector::zeros(6, 3));
  EXPECT_FALSE(solve_linear_mod(ModMatrix::zeros(6, 2, 2), ModVector(6, {0, 1})));
}

TEST(SolveLinearMod, Errors) {
  EXPECT_THROW(solve_linear_mod(ModMatrix(4, {{1}}), ModVector(3, {1})), ModulusError);
  EXPECT_THROW(solve_linear_mod(ModMatrix(4, {{1}}), ModVector(4, {1, 1})), DimensionError);
}

// Verdict must match exhaustive enumeration; witnesses must satisfy substitution.
TEST(SolveLinearMod, CompleteAgainstEnumeration) {
  std::mt19937_64 rng(20240611);
  int solvable = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 7);
    const std::size_t r = 1 + rng() % 4;
    const std::size_t c = 1 + rng() % 5;
    Rows a = random_rows(rng, r, c, m);
    // Bias toward solvable systems half the time.
    std::vector<std::int64_t> b(r);
    if (trial % 2 == 0) {
      const Rows x0 = random_rows(rng, 1, c, m);
      for (std::size_t i = 0; i < r; ++i)
        b[i] = std::inner_product(a[i].begin(), a[i].end(), x0[0].begin(), std::int64_t{0}) % m;
    } else {
      for (auto& v : b) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m));
    }
    const bool expected = testing::solvable_by_enumeration(a, b, m);
    solvable += expected;
    const ModMatrix am(m, a);
    const ModVector bm(m, b);
    const auto x = solve_linear_mod(am, bm);
    ASSERT_EQ(x.has_value(), expected) << "trial " << trial << " m=" << m;
    if (x) EXPECT_EQ(mat_vec_mod(am, *x), bm);
  }
  EXPECT_GT(solvable, 1000);
  EXPECT_LT(solvable, 2900);
}

TEST(SolveLinearMod, DifferenceOfSolutionsIsInKernel) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 11);
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const ModMatrix a(m, random_rows(rng, r, c, m));
    const ModVector x0(m, random_rows(rng, 1, c, m)[0]);
    const ModVector b = mat_vec_mod(a, x0);
    const auto x = solve_linear_mod(a, b);
    ASSERT_TRUE(x);
    std::vector<std::int64_t> diff(c);
    for (std::size_t i = 0; i < c; ++i) diff[i] = (*x)[i] - x0[i];
    EXPECT_EQ(mat_vec_mod(a, ModVector(m, diff)), ModVector::zeros(m, r));
  }
}

TEST(ModSolver, TransformsDiagonalizeAndAreInvertible) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 15);
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const ModMatrix a(m, random_rows(rng, r, c, m));
    const ModSolver solver(a);
    const ModMatrix d = mat_mul_mod(mat_mul_mod(solver.row_transform(), a), solver.column_transform());
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        const Residue expected = (i == j && i < solver.rank()) ? solver.diagonal()[i] : 0;
        ASSERT_EQ(d(i, j), expected) << "trial " << trial;
      }
    }
    for (const ModMatrix* t : {&solver.row_transform(), &solver.column_transform()}) {
      const std::int64_t det = det_mod(*t);
      EXPECT_TRUE(det == 1 || det == m - 1) << "determinant " << det << " mod " << m;
    }
  }
}

TEST(ModSolver, LargeModulusStaysExact) {
  std::mt19937_64 rng(1);
  const std::int64_t m = (std::int64_t{1} << 40) + 12;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    const ModMatrix a(m, random_rows(rng, r, c, m));
    const ModVector x0(m, random_rows(rng, 1, c, m)[0]);
    const ModVector b = mat_vec_mod(a, x0);
    const auto x = solve_linear_mod(a, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(mat_vec_mod(a, *x), b);
  }
}

}  // namespace
}  // namespace hypercyclic
