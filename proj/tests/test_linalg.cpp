#include <random>

#include <gtest/gtest.h>

#include "filiform/cochain.hpp"
#include "filiform/cohomology.hpp"
#include "filiform/linalg.hpp"
#include "support/oracle.hpp"
#include "support/util.hpp"

using namespace filiform;

namespace {

const Field Q = Field::rationals();

SparseVector vec(std::initializer_list<std::pair<std::size_t, long>> entries) {
  SparseVector v;
  for (auto [i, x] : entries) v.push_back({i, Q.from_int(x)});
  return v;
}

SparseMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, const Field& f) {
  SparseMatrix m(f, rows, cols);
  std::uniform_int_distribution<int> val(-3, 3);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (int x = val(rng); x && rng() % 3 == 0) m.add(r, c, f.from_int(x));
  return m;
}

oracle::Dense<mpq_class> dense(const SparseMatrix& m) {
  oracle::Dense<mpq_class> d(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r)) d[r][e.index] = e.value.rational();
  return d;
}

}  // namespace

TEST(Rank, Trivial) {
  EXPECT_EQ(rank(SparseMatrix(Q, 4, 5)), 0u);
  EXPECT_EQ(rank(SparseMatrix::identity(Q, 3)), 3u);
  EXPECT_EQ(rank(SparseMatrix(Q, 0, 0)), 0u);
}

TEST(Rank, DifferentialOfM0AtWeightThree) {
  auto d = differential_matrix(m0(), 1, 3, Q);
  ASSERT_EQ(d.rows(), 1u);
  ASSERT_EQ(d.cols(), 1u);
  EXPECT_EQ(d.at(0, 0), Q.one());
  EXPECT_EQ(rank(d), 1u);
}

TEST(Kernel, Trivial) {
  EXPECT_TRUE(kernel_basis(SparseMatrix::identity(Q, 4)).vectors.empty());
  auto k = kernel_basis(SparseMatrix(Q, 2, 3));
  ASSERT_EQ(k.vectors.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    ASSERT_EQ(k.vectors[i].size(), 1u);
    EXPECT_EQ(k.vectors[i][0].index, i);
    EXPECT_TRUE(k.vectors[i][0].value.is_one());
  }
}

TEST(Kernel, M0DegreeTwoWeightSeven) {
  auto d = differential_matrix(m0(), 2, 7, Q);
  auto k = kernel_basis(d);
  // one class plus d(e7)
  ASSERT_EQ(k.vectors.size(), 2u);
  for (const auto& v : k.vectors) EXPECT_TRUE(differential(m0(), from_vector(Q, v, d.col_labels)).is_zero());
  auto c = Cochain::monomial(Q, {3, 4}) - Cochain::monomial(Q, {2, 5});
  auto exact = differential(m0(), Cochain::monomial(Q, {7}));
  EXPECT_FALSE(exact.is_zero());
  // e3^e4 - e2^e5 and d(e7) are independent closed forms in this cell
  EXPECT_FALSE(is_exact(m0(), c).exact);
}

TEST(Kernel, RandomMatricesAgainstDenseRank) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto m = random_matrix(rng, 1 + rng() % 7, 1 + rng() % 7, Q);
    auto r = rank(m);
    EXPECT_EQ(r, oracle::rank(dense(m)));
    auto k = kernel_basis(m);
    EXPECT_EQ(k.vectors.size() + r, m.cols());
    for (const auto& v : k.vectors) EXPECT_TRUE(m.apply(v).empty());
  }
}

TEST(Kernel, RankOverPrimeField) {
  // [[1,1],[1,-1]] is singular only in characteristic 2
  for (auto [p, expected] : {std::pair{2ull, 1u}, std::pair{3ull, 2u}}) {
    auto f = Field::prime(p);
    SparseMatrix m(f, 2, 2);
    m.add(0, 0, f.one());
    m.add(0, 1, f.one());
    m.add(1, 0, f.one());
    m.add(1, 1, f.from_int(-1));
    EXPECT_EQ(rank(m), expected);
  }
}

TEST(Solve, ZeroMatrix) {
  SparseMatrix z(Q, 3, 2);
  auto u = solve_in_image(z, {});
  ASSERT_TRUE(u);
  EXPECT_TRUE(u->empty());
  EXPECT_FALSE(solve_in_image(z, vec({{1, 1}})));
}

TEST(Solve, M0CoboundaryAtWeightFive) {
  auto d = differential_matrix(m0(), 1, 5, Q);
  auto target = Cochain::monomial(Q, {1, 4});
  auto u = solve_in_image(d, to_vector(target, d.row_labels));
  ASSERT_TRUE(u);
  EXPECT_EQ(from_vector(Q, *u, d.col_labels), Cochain::monomial(Q, {5}));
}

TEST(Solve, RejectsVectorLongerThanRows) {
  SparseMatrix m(Q, 2, 2);
  EXPECT_EQ(code_of([&] { solve_in_image(m, vec({{5, 1}})); }), ErrorCode::DimensionMismatch);
}

TEST(Solve, RandomSystems) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = random_matrix(rng, 5, 4, Q);
    SparseVector x = vec({{0, 1}, {2, -2}, {3, 5}});
    auto b = m.apply(x);
    auto u = solve_in_image(m, b);
    ASSERT_TRUE(u);
    EXPECT_EQ(m.apply(*u).size(), b.size());
    auto diff = m.apply(*u);
    axpy(diff, Q.from_int(-1), b);
    EXPECT_TRUE(diff.empty());
  }
  auto many = solve_many(SparseMatrix::identity(Q, 2), {vec({{0, 3}}), vec({{1, -1}})});
  ASSERT_EQ(many.size(), 2u);
  EXPECT_TRUE(many[0] && many[1]);
}

TEST(Matrix, ProductTransposeAndSum) {
  std::mt19937 rng(3);
  auto a = random_matrix(rng, 3, 4, Q), b = random_matrix(rng, 4, 2, Q);
  EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
  EXPECT_EQ(a + SparseMatrix(Q, 3, 4), a);
  EXPECT_EQ(SparseMatrix::identity(Q, 3) * a, a);
}

TEST(Matrix, AddCancelsToZero) {
  SparseMatrix m(Q, 1, 1);
  m.add(0, 0, Q.from_int(2));
  m.add(0, 0, Q.from_int(-2));
  EXPECT_TRUE(m.is_zero());
}

TEST(TailEchelon, DetectsSpan) {
  TailEchelon t(Q);
  EXPECT_TRUE(t.insert(vec({{0, 1}, {2, 1}})));
  EXPECT_TRUE(t.insert(vec({{1, 1}, {2, 2}})));
  EXPECT_FALSE(t.insert(vec({{0, 2}, {1, 3}, {2, 8}})));
  EXPECT_EQ(t.size(), 2u);
  EXPECT_TRUE(t.reduce(vec({{0, 1}, {2, 1}})).empty());
}

TEST(RowReduce, PivotsAreUnitColumns) {
  std::mt19937 rng(5);
  auto m = random_matrix(rng, 6, 6, Q);
  auto e = row_reduce(m.row_data(), Q);
  ASSERT_EQ(e.rows.size(), e.pivots.size());
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    EXPECT_EQ(e.rows[i].front().index, e.pivots[i]);
    EXPECT_TRUE(e.rows[i].front().value.is_one());
    for (std::size_t j = 0; j < e.rows.size(); ++j)
      if (j != i) EXPECT_TRUE(entry(e.rows[j], e.pivots[i], Q).is_zero());
  }
}
