#include "filiform/combinatorics.hpp"

#include <mutex>
#include <sstream>
#include <vector>

#include <gmpxx.h>

#include "filiform/error.hpp"

namespace filiform {

Count partitions_P(int q, int k) {
  if (q < 0 || k < 0) return 0;
  if (q == 0) return k == 0 ? 1 : 0;
  // table[q][k], grown on demand; guarded so concurrent callers are safe
  static std::mutex mutex;
  static std::vector<std::vector<Count>> table;
  std::lock_guard lock(mutex);
  int rows = std::max<int>(q + 1, table.size());
  int cols = std::max<int>(k + 1, table.empty() ? 0 : table[0].size());
  if (rows > static_cast<int>(table.size()) || cols > static_cast<int>(table[0].size())) {
    table.assign(rows, std::vector<Count>(cols, 0));
    table[0][0] = 1;
    for (int a = 1; a < rows; ++a)
      for (int b = a; b < cols; ++b) table[a][b] = table[a - 1][b - 1] + table[a][b - a];
  }
  return table[q][k];
}

Count distinct_V(int q, int k) {
  if (q < 0) return 0;
  // subtract 0,1,...,q-1 from the sorted distinct parts
  return partitions_P(q, k - q * (q - 1) / 2);
}

Count bounded_distinct_V(int q, int bound, int N) {
  if (q < 0 || N < 0) return 0;
  // ways[c][s]: c distinct parts from {1..p}, sum s
  std::vector<std::vector<Count>> ways(q + 1, std::vector<Count>(N + 1, 0));
  ways[0][0] = 1;
  for (int p = 1; p <= std::min(bound, N); ++p)
    for (int c = q; c >= 1; --c)
      for (int s = N; s >= p; --s) ways[c][s] += ways[c - 1][s - p];
  return ways[q][N];
}

std::pair<int, int> pentagonal(int q) { return {(3 * q * q - q) / 2, (3 * q * q + q) / 2}; }

TruncatedSeries::TruncatedSeries(int t_order, int x_order) : t_order_(t_order), x_order_(x_order) {
  if (t_order < 0 || x_order < 0) throw Error(ErrorCode::InvalidParameter, "truncation orders must be >= 0");
}

TruncatedSeries TruncatedSeries::constant(Count c, int t_order, int x_order) {
  return term(c, 0, 0, t_order, x_order);
}

TruncatedSeries TruncatedSeries::term(Count c, int a, int b, int t_order, int x_order) {
  TruncatedSeries s(t_order, x_order);
  s.add(a, b, c);
  return s;
}

void TruncatedSeries::add(int a, int b, Count c) {
  if (c == 0 || a > t_order_ || b > x_order_) return;
  auto [it, inserted] = coeffs_.try_emplace({a, b}, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

Count TruncatedSeries::coefficient(int a, int b) const {
  auto it = coeffs_.find({a, b});
  return it == coeffs_.end() ? 0 : it->second;
}

void TruncatedSeries::require_same_shape(const TruncatedSeries& o) const {
  if (t_order_ != o.t_order_ || x_order_ != o.x_order_)
    throw Error(ErrorCode::DimensionMismatch, "series with different truncations");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_shape(o);
  for (const auto& [e, c] : o.coeffs_) add(e.first, e.second, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_shape(o);
  for (const auto& [e, c] : o.coeffs_) add(e.first, e.second, -c);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_same_shape(b);
  TruncatedSeries out(a.t_order_, a.x_order_);
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) out.add(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.t_order_ == b.t_order_ && a.x_order_ == b.x_order_ && a.coeffs_ == b.coeffs_;
}

std::string TruncatedSeries::to_text() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Count mag = c < 0 ? -c : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    std::string vars;
    auto power = [](const char* v, int n) { return n == 0 ? std::string() : n == 1 ? v : std::string(v) + "^" + std::to_string(n); };
    vars = power("t", e.first);
    std::string xs = power("x", e.second);
    if (!xs.empty()) vars += (vars.empty() ? "" : "*") + xs;
    if (vars.empty())
      os << mag;
    else if (mag == 1)
      os << vars;
    else
      os << mag << '*' << vars;
    first = false;
  }
  os << " + O(t^" << t_order_ + 1 << ")";
  return os.str();
}

nlohmann::json TruncatedSeries::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : coeffs_) {
    if (variables() == 1)
      terms.push_back({{"t", e.first}, {"coeff", c}});
    else
      terms.push_back({{"t", e.first}, {"x", e.second}, {"coeff", c}});
  }
  nlohmann::json out = {{"t_order", t_order_}, {"terms", terms}};
  if (variables() == 2) out["x_order"] = x_order_;
  return out;
}

TruncatedSeries euler_product(int terms) {
  if (terms < 1) throw Error(ErrorCode::InvalidParameter, "euler_product needs terms >= 1");
  auto out = TruncatedSeries::constant(1, terms);
  for (int j = 1; j <= terms; ++j)
    out = out * (TruncatedSeries::constant(1, terms) - TruncatedSeries::term(1, j, 0, terms));
  return out;
}

TruncatedSeries pentagonal_series(int terms) {
  if (terms < 1) throw Error(ErrorCode::InvalidParameter, "pentagonal_series needs terms >= 1");
  auto out = TruncatedSeries::constant(1, terms);
  for (int k = 1; pentagonal(k).first <= terms; ++k) {
    auto [lo, hi] = pentagonal(k);
    Count sign = k % 2 == 0 ? 1 : -1;
    out += TruncatedSeries::term(sign, lo, 0, terms) + TruncatedSeries::term(sign, hi, 0, terms);
  }
  return out;
}

TruncatedSeries exterior_product(int from, int sign, int t_terms, int x_terms) {
  auto out = TruncatedSeries::constant(1, t_terms, x_terms);
  int xpow = x_terms > 0 ? 1 : 0;
  for (int j = std::max(from, 1); j <= t_terms; ++j)
    out = out * (TruncatedSeries::constant(1, t_terms, x_terms) + TruncatedSeries::term(sign, j, xpow, t_terms, x_terms));
  return out;
}

TruncatedSeries betti_gf(GfAlgebra alg, int t_terms, int x_terms) {
  if (t_terms < 1 || x_terms < 1) throw Error(ErrorCode::InvalidParameter, "betti_gf needs truncations >= 1");
  auto poly = [&](std::initializer_list<std::tuple<Count, int, int>> terms) {
    TruncatedSeries s(t_terms, x_terms);
    for (auto [c, a, b] : terms) s += TruncatedSeries::term(c, a, b, t_terms, x_terms);
    return s;
  };
  if (alg == GfAlgebra::M0)
    return poly({{1, 1, 0}, {1, 1, 1}}) + poly({{1, 0, 0}, {-1, 1, 0}}) * exterior_product(2, 1, t_terms, x_terms);
  auto head = poly({{1, 0, 0}, {1, 0, 1}}) * poly({{1, 1, 0}, {1, 2, 0}, {-1, 3, 0}, {1, 5, 1}});
  return head + poly({{1, 0, 0}, {-1, 1, 0}, {-1, 2, 0}, {1, 3, 0}}) * exterior_product(3, 1, t_terms, x_terms);
}

Count m0_dimension_formula(int q, int k) { return partitions_P(q, k) - partitions_P(q, k - 1); }

Count m2_dimension_formula(int q, int k) {
  return partitions_P(q, k) - partitions_P(q, k - 1) - partitions_P(q, k - 2) + partitions_P(q, k - 3);
}

int m2_weight_shift(int q) { return q * (q + 3) / 2; }

Count bordemann_dim(int n, int q) {
  if (n < 2 || q < 0 || q > n) throw Error(ErrorCode::InvalidParameter, "bordemann_dim needs n >= 2 and 0 <= q <= n");
  return bounded_distinct_V(q, n - 1, q * n / 2) + bounded_distinct_V(q - 1, n - 1, (q - 1) * n / 2);
}

namespace {

// C(x, r) for rational x
mpq_class binomial(const mpq_class& x, int r) {
  mpq_class out(1);
  for (int i = 0; i < r; ++i) out = out * (x - i) / (i + 1);
  return out;
}

Count floor_of(const mpq_class& v) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return f.get_si();
}

}  // namespace

Count small_closed_forms(int n, int q) {
  if (n < 2) throw Error(ErrorCode::InvalidParameter, "small_closed_forms needs n >= 2");
  mpq_class half(n + 1, 2);
  half.canonicalize();
  switch (q) {
    case 2:
      return floor_of(half);
    case 3:
      return floor_of(binomial(half, 2) + mpq_class(1, 8));
    case 4: {
      mpq_class shift(4 * n + 13, 36);
      shift.canonicalize();
      return floor_of(mpq_class(4, 3) * binomial(half, 3) + shift);
    }
    default:
      throw Error(ErrorCode::InvalidParameter, "closed forms exist for q = 2, 3, 4 only");
  }
}

}  // namespace filiform
