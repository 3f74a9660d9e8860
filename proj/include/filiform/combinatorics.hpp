#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "json.hpp"

namespace filiform {

using Count = std::int64_t;

/// Partitions of k into exactly q parts. P_0(0) = 1, P_q(k) = 0 for k < 0.
Count partitions_P(int q, int k);
/// Partitions of k into q distinct parts.
Count distinct_V(int q, int k);
/// Partitions of N into q distinct parts, each at most bound.
Count bounded_distinct_V(int q, int bound, int N);
/// ((3q^2 - q)/2, (3q^2 + q)/2).
std::pair<int, int> pentagonal(int q);

/// Integer power series in t (and optionally x), truncated at t^t_order and
/// x^x_order inclusive.
class TruncatedSeries {
 public:
  TruncatedSeries(int t_order, int x_order = 0);
  static TruncatedSeries constant(Count c, int t_order, int x_order = 0);
  /// c * t^a * x^b (dropped when beyond the truncation).
  static TruncatedSeries term(Count c, int a, int b, int t_order, int x_order = 0);

  int variables() const { return x_order_ > 0 ? 2 : 1; }
  int t_order() const { return t_order_; }
  int x_order() const { return x_order_; }
  Count coefficient(int a, int b = 0) const;
  const std::map<std::pair<int, int>, Count>& coefficients() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  /// "1 - t - t^2 + t^5 + ..." with terms ordered by (t, x) exponent.
  std::string to_text() const;
  nlohmann::json to_json() const;

 private:
  void add(int a, int b, Count c);
  void require_same_shape(const TruncatedSeries& o) const;

  int t_order_, x_order_;
  std::map<std::pair<int, int>, Count> coeffs_;
};

/// prod_{j>=1} (1 - t^j) mod t^{terms+1}.
TruncatedSeries euler_product(int terms);
/// 1 + sum_{k>=1} (-1)^k (t^{(3k^2-k)/2} + t^{(3k^2+k)/2}) mod t^{terms+1}.
TruncatedSeries pentagonal_series(int terms);
/// prod_{j>=from} (1 + s * x t^j) mod (t^{t_terms+1}, x^{x_terms+1}), s = +-1.
/// With x_terms = 0 the series is in t alone (x = 1).
TruncatedSeries exterior_product(int from, int sign, int t_terms, int x_terms);

enum class GfAlgebra { M0, M2 };
/// Poincare series sum b^q_k x^q t^k:
///   m0: t(1+x) + (1-t) prod_{j>=2} (1 + x t^j)
///   m2: (1+x)(t+t^2-t^3+x t^5) + (1-t-t^2+t^3) prod_{j>=3} (1 + x t^j)
TruncatedSeries betti_gf(GfAlgebra alg, int t_terms, int x_terms);

/// P_q(k) - P_q(k-1): dim H^q at weight k + q(q+1)/2 of m0.
Count m0_dimension_formula(int q, int k);
/// P_q(k) - P_q(k-1) - P_q(k-2) + P_q(k-3): dim H^q of m2 at weight
/// k + m2_weight_shift(q), q >= 3.
Count m2_dimension_formula(int q, int k);
/// q(q+3)/2. The lowest degree-q class is w(3,4,...,q), of weight q(q+3)/2 + q.
int m2_weight_shift(int q);

/// V_{q,n-1}([qn/2]) + V_{q-1,n-1}([(q-1)n/2]).
Count bordemann_dim(int n, int q);
/// [(n+1)/2], [C((n+1)/2, 2) + 1/8], [4/3 C((n+1)/2, 3) + (4n+13)/36] for q = 2, 3, 4.
Count small_closed_forms(int n, int q);

}  // namespace filiform
