#pragma once

// Dense reference implementation of Lie algebra cohomology for the tests.
// Brackets are written out from their defining formulas, forms are evaluated
// on generators through (dphi)(x_0..x_q) = sum_{i<j} (-1)^{i+j} phi([x_i,x_j], ...),
// and ranks come from plain Gaussian elimination. Nothing from the library is used.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// [e_i, e_j] as (coefficient, index) pairs.
using Bracket = std::function<std::vector<std::pair<long, int>>(int, int)>;

struct Algebra {
  int lo = 1;
  std::optional<int> hi;  // last generator index, if finite
  std::vector<int> skip;  // missing indices
  Bracket bracket;

  bool has(int i) const {
    if (i < lo || (hi && i > *hi)) return false;
    for (int s : skip)
      if (s == i) return false;
    return true;
  }
};

inline Algebra m0(std::optional<int> n = std::nullopt) {
  return {1, n, {}, [](int i, int j) -> std::vector<std::pair<long, int>> {
            if (i == 1 && j >= 2) return {{1, j + 1}};
            if (j == 1 && i >= 2) return {{-1, i + 1}};
            return {};
          }};
}

inline Algebra m2(std::optional<int> n = std::nullopt) {
  return {1, n, {}, [](int i, int j) -> std::vector<std::pair<long, int>> {
            if (i == j) return {};
            long s = 1;
            if (i > j) {
              std::swap(i, j);
              s = -1;
            }
            if (i == 1 && j >= 2) return {{s, j + 1}};
            if (i == 2 && j >= 3) return {{s, j + 2}};
            return {};
          }};
}

// Positive part of the Witt algebra, [e_i, e_j] = (j - i) e_{i+j}, i, j >= k.
inline Algebra witt(int k, std::optional<int> n = std::nullopt) {
  return {k, n, {}, [](int i, int j) -> std::vector<std::pair<long, int>> {
            if (i == j) return {};
            return {{j - i, i + j}};
          }};
}

inline Algebra abelian_from(int lo) {
  return {lo, std::nullopt, {}, [](int, int) { return std::vector<std::pair<long, int>>{}; }};
}

// Increasing q-tuples of generators with index sum k.
inline std::vector<std::vector<int>> monomials(const Algebra& a, int q, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int start, int left) {
    int need = q - static_cast<int>(cur.size());
    if (need == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int i = start; i * need + need * (need - 1) / 2 <= left; ++i) {
      if (a.hi && i > *a.hi) break;
      if (!a.has(i)) continue;
      cur.push_back(i);
      rec(i + 1, left - i);
      cur.pop_back();
    }
  };
  if (q == 0) {
    if (k == 0) out.push_back({});
    return out;
  }
  rec(a.lo, k);
  return out;
}

// e^{m}(y_1..y_q): determinant of the pairing, so +-1 or 0.
inline int evaluate(const std::vector<int>& m, std::vector<int> args) {
  if (m.size() != args.size()) return 0;
  int sign = 1;
  for (std::size_t i = 0; i < args.size(); ++i)
    for (std::size_t j = i + 1; j < args.size(); ++j) {
      if (args[i] == args[j]) return 0;
      if (args[i] > args[j]) {
        std::swap(args[i], args[j]);
        sign = -sign;
      }
    }
  return args == m ? sign : 0;
}

template <class T>
using Dense = std::vector<std::vector<T>>;

// Rows: target (q+1)-monomials; columns: source q-monomials.
inline Dense<mpq_class> d_matrix(const Algebra& a, int q, int k) {
  auto src = monomials(a, q, k), tgt = monomials(a, q + 1, k);
  Dense<mpq_class> m(tgt.size(), std::vector<mpq_class>(src.size()));
  for (std::size_t r = 0; r < tgt.size(); ++r) {
    const auto& x = tgt[r];
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j) {
        long sign = ((i + j) % 2 == 0) ? 1 : -1;
        std::vector<int> rest;
        for (std::size_t t = 0; t < x.size(); ++t)
          if (t != i && t != j) rest.push_back(x[t]);
        for (auto [c, l] : a.bracket(x[i], x[j])) {
          if (!a.has(l)) continue;
          std::vector<int> args{l};
          args.insert(args.end(), rest.begin(), rest.end());
          for (std::size_t s = 0; s < src.size(); ++s) {
            int v = evaluate(src[s], args);
            if (v) m[r][s] += mpq_class(sign * c * v);
          }
        }
      }
  }
  return m;
}

inline std::size_t rank(Dense<mpq_class> m) {
  std::size_t r = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank_mod(const Dense<mpq_class>& q, std::int64_t p) {
  auto red = [p](const mpq_class& x) {
    mpz_class n = x.get_num() % p, d = x.get_den() % p;
    std::int64_t a = (n.get_si() + p) % p, b = (d.get_si() + p) % p;
    std::int64_t inv = 1, base = b, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return a * inv % p;
  };
  Dense<std::int64_t> m;
  for (const auto& row : q) {
    std::vector<std::int64_t> r;
    for (const auto& x : row) r.push_back(red(x));
    m.push_back(r);
  }
  std::size_t r = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    std::int64_t inv = 1, base = m[r][c], e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      std::int64_t f = m[i][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

// b^q_k; p = 0 means the rationals.
inline std::size_t betti(const Algebra& a, int q, int k, std::int64_t p = 0) {
  auto rk = [&](int deg) -> std::size_t {
    if (deg < 0) return 0;
    auto m = d_matrix(a, deg, k);
    return p ? rank_mod(m, p) : rank(m);
  };
  return monomials(a, q, k).size() - rk(q) - rk(q - 1);
}

// Sum over all weights, finite algebras only.
inline std::size_t total_betti(const Algebra& a, int q) {
  int n = *a.hi;
  int kmax = 0;
  for (int i = 0; i < q; ++i) kmax += n - i;
  std::size_t total = 0;
  for (int k = 0; k <= kmax; ++k) total += betti(a, q, k);
  return total;
}

// Partitions of k into exactly q parts by brute force.
inline long partitions(int q, int k, int max_part = -1) {
  if (max_part < 0) max_part = k;
  if (q == 0) return k == 0 ? 1 : 0;
  long total = 0;
  for (int part = 1; part <= std::min(k, max_part); ++part) total += partitions(q - 1, k - part, part);
  return total;
}

}  // namespace oracle
