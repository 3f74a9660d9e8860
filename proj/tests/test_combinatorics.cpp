#include <algorithm>

#include <gtest/gtest.h>

#include "filiform/combinatorics.hpp"
#include "support/oracle.hpp"
#include "support/util.hpp"

using namespace filiform;

namespace {

// distinct parts, all at most bound, by enumeration
Count brute_distinct(int q, int N, int bound, int low = 1) {
  if (q == 0) return N == 0 ? 1 : 0;
  Count total = 0;
  for (int part = low; part <= std::min(N, bound); ++part) total += brute_distinct(q - 1, N - part, bound, part + 1);
  return total;
}

}  // namespace

TEST(Partitions, Examples) {
  for (int k = 1; k <= 30; ++k) EXPECT_EQ(partitions_P(1, k), 1);
  EXPECT_EQ(partitions_P(3, 9), 7);
  for (int q = 2; q <= 6; ++q)
    for (int k = 1; k < q; ++k) EXPECT_EQ(partitions_P(q, k), 0);
  EXPECT_EQ(partitions_P(0, 0), 1);
  EXPECT_EQ(partitions_P(0, 3), 0);
  EXPECT_EQ(partitions_P(2, -4), 0);
}

TEST(Partitions, AgainstEnumeration) {
  for (int q = 0; q <= 6; ++q)
    for (int k = 0; k <= 40; ++k) EXPECT_EQ(partitions_P(q, k), oracle::partitions(q, k)) << q << "," << k;
}

TEST(Partitions, TotalCountIsEulerPartitionNumber) {
  // p(100) = 190569292
  Count total = 0;
  for (int q = 1; q <= 100; ++q) total += partitions_P(q, 100);
  EXPECT_EQ(total, 190569292);
}

TEST(Distinct, Examples) {
  EXPECT_EQ(distinct_V(2, 5), 2);
  for (int q = 1; q <= 8; ++q) EXPECT_EQ(distinct_V(q, q * (q + 1) / 2), 1);
  EXPECT_EQ(distinct_V(0, 0), 1);
  EXPECT_EQ(distinct_V(3, 5), 0);
}

TEST(Distinct, StaircaseShift) {
  for (int q = 0; q <= 6; ++q)
    for (int k = 0; k <= 60; ++k) {
      EXPECT_EQ(distinct_V(q, k), partitions_P(q, k - q * (q - 1) / 2)) << q << "," << k;
      EXPECT_EQ(distinct_V(q, k), brute_distinct(q, k, k)) << q << "," << k;
    }
}

TEST(BoundedDistinct, Examples) {
  EXPECT_EQ(bounded_distinct_V(2, 4, 5), 2);
  EXPECT_EQ(bounded_distinct_V(1, 4, 2), 1);
  EXPECT_EQ(bounded_distinct_V(1, 4, 5), 0);
  for (int q = 0; q <= 4; ++q)
    for (int N = 0; N <= 20; ++N) {
      EXPECT_EQ(bounded_distinct_V(q, N + 3, N), distinct_V(q, N));
      for (int b = 0; b <= 8; ++b) EXPECT_EQ(bounded_distinct_V(q, b, N), brute_distinct(q, N, b));
    }
}

TEST(Pentagonal, Numbers) {
  EXPECT_EQ(pentagonal(0), (std::pair{0, 0}));
  EXPECT_EQ(pentagonal(1), (std::pair{1, 2}));
  EXPECT_EQ(pentagonal(2), (std::pair{5, 7}));
  EXPECT_EQ(pentagonal(3), (std::pair{12, 15}));
}

TEST(Series, EulerEqualsPentagonal) {
  auto a = euler_product(50), b = pentagonal_series(50);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.coefficient(0), 1);
  EXPECT_EQ(b.coefficient(0), 1);
  EXPECT_EQ(a.coefficient(5), 1);
  EXPECT_EQ(a.coefficient(3), 0);
  EXPECT_EQ(a.coefficient(2), -1);
  EXPECT_EQ(a.coefficient(12), -1);
  EXPECT_EQ(a.coefficient(51), 0);
}

TEST(Series, Arithmetic) {
  TruncatedSeries one = TruncatedSeries::constant(1, 10);
  auto t = TruncatedSeries::term(1, 1, 0, 10);
  EXPECT_EQ((one - t) * (one + t), one - t * t);
  EXPECT_EQ(TruncatedSeries::term(1, 11, 0, 10), TruncatedSeries(10));
  // 1/(1-t) truncated, times (1-t), is 1 up to the truncation
  TruncatedSeries geometric(10);
  for (int a = 0; a <= 10; ++a) geometric += TruncatedSeries::term(1, a, 0, 10);
  EXPECT_EQ(geometric * (one - t), one);
  EXPECT_EQ(code_of([&] { (void)(one + TruncatedSeries(5)); }), ErrorCode::DimensionMismatch);
}

TEST(Series, Text) {
  EXPECT_EQ(euler_product(7).to_text(), "1 - t - t^2 + t^5 + t^7 + O(t^8)");
  EXPECT_EQ(TruncatedSeries(4).to_text(), "0");
}

TEST(Series, ExteriorProductCountsDistinctParts) {
  auto s = exterior_product(1, 1, 30, 6);
  for (int k = 0; k <= 30; ++k)
    for (int q = 0; q <= 6; ++q) EXPECT_EQ(s.coefficient(k, q), distinct_V(q, k));
  auto shifted = exterior_product(2, 1, 30, 5);
  for (int k = 0; k <= 30; ++k)
    for (int q = 0; q <= 5; ++q) EXPECT_EQ(shifted.coefficient(k, q), distinct_V(q, k - q));
}

TEST(Gf, Coefficients) {
  auto g0 = betti_gf(GfAlgebra::M0, 30, 4);
  EXPECT_EQ(g0.coefficient(5, 2), 1);
  EXPECT_EQ(g0.coefficient(1, 1), 1);
  EXPECT_EQ(g0.coefficient(2, 1), 1);
  EXPECT_EQ(g0.coefficient(0, 0), 1);
  EXPECT_EQ(g0.coefficient(6, 2), 0);
  auto g2 = betti_gf(GfAlgebra::M2, 30, 4);
  EXPECT_EQ(g2.coefficient(5, 2), 1);
  EXPECT_EQ(g2.coefficient(7, 2), 1);
  EXPECT_EQ(g2.coefficient(6, 2), 0);
  // nonnegative everywhere, as a Poincare series must be
  for (const auto& [key, c] : g2.coefficients()) EXPECT_GE(c, 0);
}

TEST(Gf, M0MatchesDimensionFormula) {
  auto g = betti_gf(GfAlgebra::M0, 40, 4);
  for (int q = 2; q <= 4; ++q)
    for (int k = 0; k + q * (q + 1) / 2 <= 40; ++k)
      EXPECT_EQ(g.coefficient(k + q * (q + 1) / 2, q), m0_dimension_formula(q, k)) << q << "," << k;
}

TEST(Gf, M2MatchesDimensionFormula) {
  auto g = betti_gf(GfAlgebra::M2, 40, 4);
  for (int q = 3; q <= 4; ++q)
    for (int w = 0; w <= 40; ++w)
      EXPECT_EQ(g.coefficient(w, q), m2_dimension_formula(q, w - m2_weight_shift(q))) << q << "," << w;
}

TEST(DimensionFormula, M2ShiftIsNotTheM0Shift) {
  // with the m0 shift q(q+1)/2 the difference formula would put a class at (3, 9)
  EXPECT_EQ(m2_dimension_formula(3, 9 - 6), 1);
  EXPECT_EQ(betti_gf(GfAlgebra::M2, 12, 3).coefficient(9, 3), 0);
  EXPECT_EQ(m2_weight_shift(3), 9);
  EXPECT_EQ(m2_weight_shift(4), 14);
}

TEST(Bordemann, Values) {
  EXPECT_EQ(bordemann_dim(5, 2), 3);
  for (int n = 3; n <= 10; ++n) EXPECT_EQ(bordemann_dim(n, 0), 1);
  EXPECT_EQ(small_closed_forms(7, 3), bordemann_dim(7, 3));
  for (int n = 3; n <= 12; ++n) {
    EXPECT_EQ(small_closed_forms(n, 2), (n + 1) / 2);
    for (int q = 2; q <= std::min(4, n); ++q) EXPECT_EQ(small_closed_forms(n, q), bordemann_dim(n, q)) << n << "," << q;
  }
  EXPECT_EQ(code_of([] { small_closed_forms(6, 5); }), ErrorCode::InvalidParameter);
}

TEST(Bordemann, PoincareDuality) {
  // m0(n) is nilpotent of dimension n: b^q = b^{n-q}
  for (int n = 3; n <= 10; ++n)
    for (int q = 0; q <= n; ++q) EXPECT_EQ(bordemann_dim(n, q), bordemann_dim(n, n - q)) << n << "," << q;
}
