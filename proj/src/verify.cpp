#include "filiform/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "filiform/algebra.hpp"
#include "filiform/cohomology.hpp"
#include "filiform/combinatorics.hpp"
#include "filiform/dixmier.hpp"
#include "filiform/explicit_cocycles.hpp"
#include "filiform/laplacian.hpp"
#include "filiform/sl2.hpp"

namespace filiform {

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json out = {{"suite", suite}, {"pass", pass()}, {"checks", checks}};
  if (failure) {
    nlohmann::json f = {{"check", failure->check}, {"expected", failure->expected}, {"actual", failure->actual}};
    if (failure->q) f["q"] = *failure->q;
    if (failure->k) f["k"] = *failure->k;
    out["first_failure"] = f;
  }
  return out;
}

std::string SuiteResult::to_text() const {
  std::ostringstream os;
  os << suite << ": " << (pass() ? "pass" : "FAIL") << " (" << checks << " checks)";
  if (failure) {
    os << "\n  first failure: " << failure->check;
    if (failure->q) os << " q=" << *failure->q;
    if (failure->k) os << " k=" << *failure->k;
    os << " expected " << failure->expected << ", got " << failure->actual;
  }
  return os.str();
}

namespace {

using Cell = std::optional<int>;

class Checker {
 public:
  explicit Checker(std::string suite) { result.suite = std::move(suite); }

  template <class A, class B>
  bool equal(const std::string& check, Cell q, Cell k, const A& expected, const B& actual) {
    ++result.checks;
    if (static_cast<long long>(expected) == static_cast<long long>(actual)) return true;
    fail(check, q, k, std::to_string(static_cast<long long>(expected)), std::to_string(static_cast<long long>(actual)));
    return false;
  }

  bool text(const std::string& check, Cell q, Cell k, const std::string& expected, const std::string& actual) {
    ++result.checks;
    if (expected == actual) return true;
    fail(check, q, k, expected, actual);
    return false;
  }

  bool truth(const std::string& check, Cell q, Cell k, bool ok) { return text(check, q, k, "true", ok ? "true" : "false"); }

  /// Runs f and turns a library error into a failed check.
  void guarded(const std::string& check, Cell q, Cell k, const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      ++result.checks;
      fail(check, q, k, "no error", e.what());
    }
  }

  SuiteResult result;

 private:
  void fail(const std::string& check, Cell q, Cell k, std::string expected, std::string actual) {
    if (!result.failure) result.failure = Mismatch{check, q, k, std::move(expected), std::move(actual)};
  }
};

int pick(const std::optional<int>& v, int fallback) { return v ? *v : fallback; }

std::string field_tag(const Field& f) { return " over " + f.to_string(); }

// b^q_{k + q(q+1)/2}(m0) = P_q(k) - P_q(k-1); the class of e^1 sits outside
// the omega family at (q, weight) = (1, 1).
void check_m0_dimensions(Checker& c, const Field& field, int qmax, int wmax) {
  auto table = betti_table(m0(), qmax, wmax, field);
  for (int q = 1; q <= qmax; ++q) {
    for (int w = 0; w <= wmax; ++w) {
      int k = w - q * (q + 1) / 2;
      Count expected = m0_dimension_formula(q, k) + (q == 1 && w == 1 ? 1 : 0);
      c.equal("m0 Betti number vs partition difference" + field_tag(field), q, w, expected, table.at(q, w));
    }
  }
}

void check_m2_dimensions(Checker& c, const Field& field, int qmax, int wmax) {
  auto table = betti_table(m2(), qmax, wmax, field);
  for (int w = 0; w <= wmax; ++w) {
    if (qmax >= 2) c.equal("m2 b^2 is 1 exactly at weights 5, 7" + field_tag(field), 2, w, (w == 5 || w == 7) ? 1 : 0, table.at(2, w));
    if (qmax >= 3)
      c.equal("m2 b^3 is 1 exactly at weights 12, 15, 18, ..." + field_tag(field), 3, w, (w >= 12 && w % 3 == 0) ? 1 : 0,
              table.at(3, w));
  }
  for (int q = 3; q <= qmax; ++q) {
    for (int w = 0; w <= wmax; ++w) {
      int k = w - m2_weight_shift(q);
      Count expected = m2_dimension_formula(q, k);
      c.equal("m2 Betti number vs partition difference" + field_tag(field), q, w, expected, table.at(q, w));
    }
  }
}

SuiteResult suite_goncharova(const SuiteOptions& o) {
  Checker c("goncharova");
  int qmax = pick(o.qmax, 3), kmax = pick(o.kmax, 40);
  Field field = o.field.value_or(Field::rationals());
  auto table = betti_table(witt_positive(1), qmax, kmax, field);
  for (int q = 0; q <= qmax; ++q) {
    auto [lo, hi] = pentagonal(q);
    for (int k = 0; k <= kmax; ++k)
      c.equal("L1 Betti number is 1 exactly at pentagonal weights", q, k, (k == lo || k == hi) ? 1 : 0, table.at(q, k));
  }
  return c.result;
}

SuiteResult suite_m0(const SuiteOptions& o) {
  Checker c("m0");
  int qmax = pick(o.qmax, 4);
  check_m0_dimensions(c, o.field.value_or(Field::rationals()), qmax, pick(o.kmax, 20 + qmax * (qmax + 1) / 2));
  return c.result;
}

SuiteResult suite_m2(const SuiteOptions& o) {
  Checker c("m2");
  int qmax = pick(o.qmax, 4);
  check_m2_dimensions(c, o.field.value_or(Field::rationals()), qmax, pick(o.kmax, 30 + m2_weight_shift(qmax)));
  return c.result;
}

SuiteResult suite_euler(const SuiteOptions& o) {
  Checker c("euler");
  int kmax = pick(o.kmax, 30);
  Field field = o.field.value_or(Field::rationals());
  int terms = std::max(50, kmax);
  auto product = euler_product(terms);
  auto sum = pentagonal_series(terms);
  for (int k = 0; k <= terms; ++k)
    c.equal("Euler product vs pentagonal series", std::nullopt, k, sum.coefficient(k), product.coefficient(k));
  for (const auto& alg : {m0(), m2(), witt_positive(1)}) {
    for (int k = 0; k <= kmax; ++k) {
      auto chi = euler_characteristic(alg, k, field);
      c.equal(alg.name() + " Euler characteristic: cochains vs Betti numbers", std::nullopt, k, chi.from_cochains,
              chi.from_betti);
      c.equal(alg.name() + " Euler characteristic vs Euler product", std::nullopt, k, product.coefficient(k),
              chi.from_betti);
    }
  }
  auto one = [&](int from, std::initializer_list<std::pair<int, Count>> head) {
    TruncatedSeries s(40);
    for (auto [a, v] : head) s += TruncatedSeries::term(v, a, 0, 40);
    return s * exterior_product(from, -1, 40, 0);
  };
  auto target = euler_product(40);
  auto m0_side = one(2, {{0, 1}, {1, -1}});
  auto m2_side = one(3, {{0, 1}, {1, -1}, {2, -1}, {3, 1}});
  for (int k = 0; k <= 40; ++k) {
    c.equal("(1-t) prod_{j>=2}(1-t^j) vs Euler product", std::nullopt, k, target.coefficient(k), m0_side.coefficient(k));
    c.equal("(1-t-t^2+t^3) prod_{j>=3}(1-t^j) vs Euler product", std::nullopt, k, target.coefficient(k),
            m2_side.coefficient(k));
  }
  return c.result;
}

SuiteResult suite_gf(const SuiteOptions& o) {
  Checker c("gf");
  int qmax = pick(o.qmax, 4), kmax = pick(o.kmax, 30);
  Field field = o.field.value_or(Field::rationals());
  for (auto [kind, alg] : {std::pair{GfAlgebra::M0, m0()}, std::pair{GfAlgebra::M2, m2()}}) {
    auto gf = betti_gf(kind, kmax, qmax);
    auto table = betti_table(alg, qmax, kmax, field);
    for (int q = 0; q <= qmax; ++q)
      for (int k = 0; k <= kmax; ++k)
        c.equal(alg.name() + " generating function vs Betti table", q, k, gf.coefficient(k, q), table.at(q, k));
  }
  return c.result;
}

SuiteResult suite_dixmier(const SuiteOptions& o) {
  Checker c("dixmier");
  int qmax = pick(o.qmax, 3), kmax = pick(o.kmax, 25);
  Field field = o.field.value_or(Field::rationals());

  auto s0 = m0_split();
  auto r0 = verify_exactness(s0, qmax, kmax, field);
  for (const auto& n : r0.nodes) {
    c.truth("m0/e1 composites vanish", n.q, n.k, n.composites_zero);
    c.equal("m0/e1 exactness at H(g): dim ker r vs rank(e1^)", n.q, n.k, n.rank_w_in, n.dim_g - n.rank_r);
    c.equal("m0/e1 exactness at H(b): dim ker adX* vs rank r", n.q, n.k, n.rank_r, n.dim_b - n.rank_a);
    c.equal("m0/e1 exactness at H(b)[-1]: dim ker e1^ vs rank adX*", n.q, n.k, n.rank_a, n.dim_b_shift - n.rank_w_out);
    if (n.q >= 2) c.equal("m0/e1: H^q(m0) -> Ker adX* is onto its image isomorphically", n.q, n.k, n.dim_g, n.rank_r);
    if (n.q >= 1 && n.k + 1 <= kmax)
      c.equal("m0/e1: D1 surjective on H(b)", n.q, n.k, n.dim_b, r0.node(n.q, n.k + 1).rank_a);
  }
  if (qmax >= 1 && kmax >= 2) {
    // 0 -> H^0(b) --e1^--> H^1(m0) --r--> <e^2> -> 0
    c.equal("m0/e1 degree 1: e1^ image", 1, 1, 1, r0.node(1, 1).rank_w_in);
    c.equal("m0/e1 degree 1: restriction image", 1, 2, 1, r0.node(1, 2).rank_r);
  }

  auto s2 = m2_split();
  auto r2 = verify_exactness(s2, qmax, kmax, field);
  for (const auto& n : r2.nodes) {
    c.truth("m2/e2 composites vanish", n.q, n.k, n.composites_zero);
    c.equal("m2/e2 exactness at H(g): dim ker r vs rank(e2^)", n.q, n.k, n.rank_w_in, n.dim_g - n.rank_r);
    c.equal("m2/e2 exactness at H(b): dim ker adX* vs rank r", n.q, n.k, n.rank_r, n.dim_b - n.rank_a);
    c.equal("m2/e2 exactness at H(b)[-2]: dim ker e2^ vs rank adX*", n.q, n.k, n.rank_a, n.dim_b_shift - n.rank_w_out);
    if (n.q >= 3) c.equal("m2/e2: H^q(m2) -> Ker adX* isomorphism", n.q, n.k, n.dim_g, n.rank_r);
    if (n.q == 2) {
      // 0 -> <e^3> --e2^--> H^2(m2) --r--> <omega_b(e^3^e^4)> -> 0
      c.equal("m2/e2 degree 2: e2^ image", 2, n.k, n.k == 5 ? 1 : 0, n.rank_w_in);
      c.equal("m2/e2 degree 2: restriction image", 2, n.k, n.k == 7 ? 1 : 0, n.rank_r);
    }
    if (n.q >= 1 && n.k + 2 <= kmax) {
      // Im D2 + <e^3> = H(b)
      std::size_t extra = n.q == 1 && n.k == 3 ? 1 : 0;
      c.equal("m2/e2: Im D2 + <e^3> = H(b)", n.q, n.k, n.dim_b - extra, r2.node(n.q, n.k + 2).rank_a);
    }
  }
  if (qmax >= 2 && kmax >= 7) {
    auto e34 = Cochain::monomial(field, {3, 4});
    CohomologyCell cell(s2.ideal, 2, 7, field);
    c.equal("m2/e2 degree 2: omega_b(e^3^e^4) spans the restriction image", 2, 7, 1, cell.dim());
    c.guarded("m2/e2 degree 2: omega_b(e^3^e^4) is closed in b", 2, 7, [&] {
      auto coords = cell.coordinates({omega_b(OmegaSpec{{3}}, field)});
      c.truth("m2/e2 degree 2: omega_b(e^3^e^4) is a nonzero class", 2, 7, !coords[0][0].is_zero());
    });
  }
  return c.result;
}

std::vector<GradedAlgebra> laplacian_presets() {
  return {m0(), m2(), witt_positive(1), witt_positive(2), m0_quotient(8), m2_quotient(8), l1_quotient(8)};
}

SuiteResult suite_laplacian(const SuiteOptions& o) {
  Checker c("laplacian");
  int qmax = pick(o.qmax, 3), kmax = pick(o.kmax, 25);
  Field field = o.field.value_or(Field::rationals());
  if (!field.is_rationals()) {
    c.text("Hodge Laplacian field", std::nullopt, std::nullopt, "Q", field.to_string());
    return c.result;
  }
  for (const auto& alg : laplacian_presets()) {
    auto table = betti_table(alg, qmax, kmax, field);
    for (int q = 0; q <= qmax; ++q) {
      for (int k = 0; k <= kmax; ++k) {
        auto harmonic = harmonic_basis(alg, q, k, field);
        c.equal(alg.name() + " harmonic forms vs Betti number", q, k, table.at(q, k), harmonic.size());
      }
    }
  }
  // Delta(eta) = D1^* D1 eta and Delta(e^1 ^ xi) = e^1 ^ D1 D1^* xi on monomials and sums
  auto alg = m0();
  auto e1 = Cochain::monomial(field, {1});
  for (int q = 0; q <= 3; ++q) {
    for (int k = 2; k <= 14; ++k) {
      auto forms = basis(IndexSet::from(2), q, k);
      Cochain sum(field);
      for (std::size_t t = 0; t < forms.size(); ++t) {
        auto eta = Cochain::monomial(field, forms[t]);
        sum += field.from_int(static_cast<long>(t) + 1) * eta;
        c.truth("m0 Laplacian on e^1-free form " + to_text(eta), q, k, m0_structure_check(eta));
        c.truth("m0 Laplacian on e^1 ^ " + to_text(eta), q + 1, k + 1, m0_structure_check(wedge(e1, eta)));
      }
      if (!sum.is_zero()) {
        c.truth("m0 Laplacian on e^1-free sum", q, k, m0_structure_check(sum));
        c.truth("m0 Laplacian on e^1 ^ sum", q + 1, k + 1, m0_structure_check(wedge(e1, sum)));
      }
    }
  }
  c.truth("Laplacian of e^1 vanishes", 1, 1, laplacian(alg, e1).is_zero());
  return c.result;
}

SuiteResult suite_bordemann(const SuiteOptions& o) {
  Checker c("bordemann");
  Field field = o.field.value_or(Field::rationals());
  for (int n = 3; n <= 8; ++n) {
    auto alg = m0_quotient(n);
    for (int q = 0; q <= n; ++q) {
      auto total = total_betti(alg, q, field);
      c.equal("dim H^q(m0(" + std::to_string(n) + ")) vs V_{q,n-1}([qn/2]) + V_{q-1,n-1}([(q-1)n/2])", q, std::nullopt,
              bordemann_dim(n, q), total);
      if (q >= 2 && q <= 4)
        c.equal("dim H^q(m0(" + std::to_string(n) + ")) vs closed form", q, std::nullopt, small_closed_forms(n, q), total);
      c.equal("dim H^q(m0(" + std::to_string(n) + ")) vs sl2 kernel counts", q, std::nullopt,
              finite_kernel_count(n, q) + finite_kernel_count(n, q - 1), total);
    }
  }
  return c.result;
}

SuiteResult suite_fibonacci(const SuiteOptions& o) {
  Checker c("fibonacci");
  Field field = o.field.value_or(Field::rationals());
  const std::map<int, std::size_t> fib = {{2, 3}, {3, 5}, {4, 8}};
  int qmax = pick(o.qmax, 4);
  for (int n = 12; n <= 16; ++n) {
    auto alg = l1_quotient(n);
    for (int q = 2; q <= std::min(qmax, 4); ++q)
      c.equal("dim H^q(L1/L" + std::to_string(n + 1) + ") vs F_{q+2}", q, std::nullopt, fib.at(q),
              total_betti(alg, q, field));
  }
  return c.result;
}

SuiteResult suite_charp(const SuiteOptions& o) {
  Checker c("charp");
  int qmax = pick(o.qmax, 3), kmax = pick(o.kmax, 25);
  std::vector<Field> fields;
  if (o.field && !o.field->is_rationals())
    fields.push_back(*o.field);
  else
    fields = {Field::prime(2), Field::prime(3), Field::prime(5)};
  for (const auto& f : fields) {
    check_m0_dimensions(c, f, qmax, kmax);
    if (f.characteristic() == 2) {
      auto rejects = [&](const std::string& what, const std::function<void()>& g) {
        std::string got = "no error";
        try {
          g();
        } catch (const Error& e) {
          got = std::string(to_string(e.code()));
        }
        c.text(what + " over F_2", std::nullopt, std::nullopt, std::string(to_string(ErrorCode::CharacteristicTwo)), got);
      };
      rejects("w_cocycle", [&] { w_cocycle(OmegaSpec{{5}}, f); });
      rejects("d_minus2_class", [&] { d_minus2_class(OmegaSpec{{4, 5}}, f); });
    } else {
      check_m2_dimensions(c, f, qmax, kmax);
      c.guarded("w_cocycle closed", 3, 12, [&] { w_cocycle(OmegaSpec{{5}}, f); });
    }
  }
  return c.result;
}

// Increasing index tuples starting at floor, at most max_len long, whose
// cocycle weight sum + mult * last + extra is at most wmax.
std::vector<OmegaSpec> index_tuples(int wmax, int max_len, int floor, int mult, int extra) {
  std::vector<OmegaSpec> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int start, int sum) {
    if (!cur.empty()) out.push_back(OmegaSpec{cur});
    if (static_cast<int>(cur.size()) >= max_len) return;
    for (int i = start; sum + (mult + 1) * i + extra <= wmax; ++i) {
      cur.push_back(i);
      rec(i + 1, sum + i);
      cur.pop_back();
    }
  };
  rec(floor, 0);
  return out;
}

SuiteResult suite_cocycles(const SuiteOptions& o) {
  Checker c("cocycles");
  int wmax = pick(o.kmax, 40);
  int count_q = pick(o.qmax, 4), count_k = 30;
  Field field = o.field.value_or(Field::rationals());
  auto a0 = m0();
  auto a2 = m2();

  // m0: omega(i_1..i_q) has degree q+1 and weight sum + i_q + 1
  std::map<std::pair<int, int>, std::vector<Cochain>> m0_classes;
  for (const auto& spec : index_tuples(wmax, 99, 2, 1, 1)) {
    auto w = omega(spec, field);
    auto [q, k] = *w.bidegree();
    c.truth("omega" + spec.to_string() + " is closed in m0", q, k, differential(a0, w).is_zero());
    if (q <= count_q && k <= count_k) m0_classes[{q, k}].push_back(w);
  }
  m0_classes[{1, 1}].push_back(Cochain::monomial(field, {1}));
  m0_classes[{1, 2}].push_back(Cochain::monomial(field, {2}));
  auto t0 = betti_table(a0, count_q, count_k, field);
  for (int q = 1; q <= count_q; ++q) {
    for (int k = 0; k <= count_k; ++k) {
      auto& list = m0_classes[{q, k}];
      c.equal("m0 omega cocycles per bidegree vs Betti number", q, k, t0.at(q, k), list.size());
      c.equal("m0 omega cocycles are independent classes", q, k, list.size(), class_rank(a0, list, q, k, field));
    }
  }

  if (field.is_rationals() || field.characteristic() != 2) {
    // m2: w(i_1..i_q) has degree q+2 and weight sum + 2 i_q + 3
    std::map<std::pair<int, int>, std::vector<Cochain>> m2_classes;
    for (const auto& spec : index_tuples(wmax, 99, 3, 2, 3)) {
      int q = static_cast<int>(spec.indices.size()) + 2;
      int k = 3 + 2 * spec.last();
      for (int i : spec.indices) k += i;
      c.guarded("w" + spec.to_string() + " is closed in m2", q, k, [&] {
        auto w = w_cocycle(spec, field);
        ++c.result.checks;
        if (q <= count_q && k <= count_k) m2_classes[{q, k}].push_back(w.form);
      });
    }
    m2_classes[{1, 1}].push_back(Cochain::monomial(field, {1}));
    m2_classes[{1, 2}].push_back(Cochain::monomial(field, {2}));
    m2_classes[{2, 5}].push_back(Cochain::monomial(field, {2, 3}));
    m2_classes[{2, 7}].push_back(omega(OmegaSpec{{3}}, field));
    auto t2 = betti_table(a2, count_q, count_k, field);
    for (int q = 1; q <= count_q; ++q) {
      for (int k = 0; k <= count_k; ++k) {
        auto& list = m2_classes[{q, k}];
        c.equal("m2 cocycles per bidegree vs Betti number", q, k, t2.at(q, k), list.size());
        c.equal("m2 cocycles are independent classes", q, k, list.size(), class_rank(a2, list, q, k, field));
      }
    }
  }
  return c.result;
}

SuiteResult suite_cup(const SuiteOptions& o) {
  Checker c("cup");
  int wmax = pick(o.kmax, 22);
  Field field = o.field.value_or(Field::rationals());
  auto alg = m0();
  // pairs of omega cocycles of degree <= 3 with combined weight <= wmax
  auto specs = index_tuples(wmax, 2, 2, 1, 1);
  for (const auto& a : specs) {
    for (const auto& b : specs) {
      if (a.last() > b.last()) continue;
      auto wa = omega(a, field), wb = omega(b, field);
      auto [qa, ka] = *wa.bidegree();
      auto [qb, kb] = *wb.bidegree();
      if (ka + kb > wmax) continue;
      c.guarded("cup formula " + a.to_string() + " " + b.to_string(), qa + qb, ka + kb, [&] {
        auto formula = cup_formula(a, b, field);
        auto product = wedge(wa, wb);
        c.truth("cup formula " + a.to_string() + " x " + b.to_string() + " is closed", qa + qb, ka + kb,
                differential(alg, formula).is_zero());
        c.truth("cup formula " + a.to_string() + " x " + b.to_string() + " minus wedge is exact", qa + qb, ka + kb,
                is_exact(alg, formula - product).exact);
      });
    }
  }
  return c.result;
}

SuiteResult suite_sl2(const SuiteOptions& o) {
  Checker c("sl2");
  int qmax = pick(o.qmax, 4), kmax = pick(o.kmax, 20);
  Field field = Field::rationals();
  std::vector<Sl2Module> modules = {Sl2Module(mpq_class(-3, 7)), Sl2Module(mpq_class(-11, 5))};
  Derivation d1_op = d1();
  auto ideal = IndexSet::from(2);
  for (int q = 2; q <= qmax; ++q) {
    for (int k = 0; k <= kmax; ++k) {
      Count expected = primitive_dimension_formula(q, k);
      std::vector<std::vector<Cochain>> bases;
      for (const auto& mod : modules) {
        std::string tag = " at lambda=" + mod.lambda().get_str();
        auto prim = primitive_basis(mod, q, k);
        c.equal("primitive vectors vs P-difference" + tag, q, k, expected, prim.size());
        c.equal("primitive vectors (classical basis) vs P-difference" + tag, q, k, expected,
                primitive_dimension_classical(mod, q, k));
        bases.push_back(prim);
      }
      c.truth("primitive bases agree across lambda", q, k, bases[0] == bases[1]);
      // f~_i = e^{i+2}: primitive vectors are the D1-kernel basis of Lambda^q_{k+2q}(e^2, e^3, ...)
      auto source = basis(ideal, q, k + 2 * q);
      auto target = basis(ideal, q, k + 2 * q - 1);
      std::vector<SparseVector> columns;
      for (const auto& m : source) columns.push_back(to_vector(d1_op(Cochain::monomial(field, m)), target));
      auto kernel = kernel_basis(SparseMatrix::from_columns(field, target.size(), columns));
      std::vector<Cochain> relabeled;
      for (const auto& p : bases[0]) {
        Cochain r(field);
        for (const auto& [m, coeff] : p.terms()) {
          Monomial shifted = m;
          for (int& i : shifted) i += 2;
          r.add_term(shifted, coeff);
        }
        relabeled.push_back(r);
      }
      std::vector<Cochain> kernel_cochains;
      for (const auto& v : kernel.vectors) kernel_cochains.push_back(from_vector(field, v, source));
      c.truth("relabeled primitive basis equals the D1 kernel basis", q, k, relabeled == kernel_cochains);
    }
  }
  return c.result;
}

const std::map<std::string, std::function<SuiteResult(const SuiteOptions&)>>& registry() {
  static const std::map<std::string, std::function<SuiteResult(const SuiteOptions&)>> suites = {
      {"bordemann", suite_bordemann}, {"charp", suite_charp},     {"cocycles", suite_cocycles},
      {"cup", suite_cup},             {"dixmier", suite_dixmier}, {"euler", suite_euler},
      {"fibonacci", suite_fibonacci}, {"gf", suite_gf},           {"goncharova", suite_goncharova},
      {"laplacian", suite_laplacian}, {"m0", suite_m0},           {"m2", suite_m2},
      {"sl2", suite_sl2},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, f] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  auto it = registry().find(std::string(name));
  if (it == registry().end()) throw Error(ErrorCode::InvalidParameter, "unknown suite \"" + std::string(name) + "\"");
  return it->second(options);
}

}  // namespace filiform
