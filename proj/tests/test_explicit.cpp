#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "filiform/cohomology.hpp"
#include "filiform/dixmier.hpp"
#include "filiform/explicit_cocycles.hpp"
#include "support/util.hpp"

using namespace filiform;

namespace {

const Field Q = Field::rationals();

Cochain e(std::vector<int> word) { return Cochain::monomial(Q, std::move(word)); }
Scalar n(long v) { return Q.from_int(v); }

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// the m2 ideal {1,3,4,...}
GradedAlgebra ideal() { return m2_split().ideal; }

}  // namespace

TEST(D1, Apply) {
  EXPECT_TRUE(d1_apply(e({2})).is_zero());
  EXPECT_EQ(d1_apply(e({3, 4})), e({2, 4}));
  EXPECT_EQ(d1_apply(e({5})), e({4}));
  EXPECT_TRUE(d1_apply(e({3}), D1Mode::M2Ideal).is_zero());
  EXPECT_EQ(d1_apply(e({4}), D1Mode::M2Ideal), e({3}));
}

TEST(D1, RightInverse) {
  EXPECT_EQ(d_minus1(e({5})), e({6}));
  EXPECT_EQ(d_minus1(e({3, 7})), e({3, 8}) - e({2, 9}));
  // D1 D_{-1} = Id on forms over e^2, e^3, ...
  for (const auto& m : basis(IndexSet::from(2), 3, 18)) {
    auto c = e(m);
    EXPECT_EQ(d1_apply(d_minus1(c)), c) << to_text(c);
  }
}

TEST(D1, AdjointIsShiftUp) {
  EXPECT_EQ(d1_adjoint(e({2, 5})), e({3, 5}) + e({2, 6}));
  EXPECT_TRUE(d1_adjoint(e({1})).is_zero());
}

TEST(Omega, Small) {
  EXPECT_EQ(omega(OmegaSpec{{3}}), e({3, 4}) - e({2, 5}));
  EXPECT_EQ(omega(OmegaSpec{{2}}), e({2, 3}));
}

TEST(Omega, FiveSixMatchesGolden) {
  auto w = omega(OmegaSpec::parse("5,6"));
  EXPECT_EQ(to_text(w) + "\n", golden("omega_5_6.txt"));
  EXPECT_EQ(w.coefficient({2, 3, 13}), n(5));
  EXPECT_EQ(w.size(), 10u);
}

TEST(Omega, FiveSixByHand) {
  // grouped as printed: (e3^e6 + e4^e5)^e9 - (e2^e6 + 2 e3^e5)^e10 + (3 e2^e5 + 2 e3^e4)^e11
  auto expected = e({5, 6, 7}) - e({4, 6, 8}) + wedge(e({3, 6}) + e({4, 5}), e({9})) -
                  wedge(e({2, 6}) + n(2) * e({3, 5}), e({10})) + wedge(n(3) * e({2, 5}) + n(2) * e({3, 4}), e({11})) -
                  n(5) * e({2, 4, 12}) + n(5) * e({2, 3, 13});
  EXPECT_EQ(omega(OmegaSpec{{5, 6}}), expected);
}

TEST(Omega, ClosedWithLeadingTerm) {
  for (const auto& idx : std::vector<std::vector<int>>{{2}, {4}, {2, 3}, {3, 7}, {2, 5, 6}, {4, 5, 6, 8}}) {
    auto w = omega(OmegaSpec{idx});
    EXPECT_TRUE(differential(m0(), w).is_zero());
    Monomial lead = idx;
    lead.push_back(idx.back() + 1);
    EXPECT_EQ(leading_term(w), lead);
    EXPECT_TRUE(w.coefficient(lead).is_one());
  }
}

TEST(Omega, InvalidIndices) {
  EXPECT_EQ(code_of([] { omega(OmegaSpec{{1, 3}}); }), ErrorCode::InvalidIndices);
  EXPECT_EQ(code_of([] { omega(OmegaSpec{{4, 4}}); }), ErrorCode::InvalidIndices);
  EXPECT_EQ(code_of([] { omega(OmegaSpec{{}}); }), ErrorCode::InvalidIndices);
  EXPECT_EQ(code_of([] { omega_b(OmegaSpec{{2, 5}}); }), ErrorCode::InvalidIndices);
  EXPECT_EQ(code_of([] { OmegaSpec::parse("5,x"); }), ErrorCode::ParseError);
}

TEST(Omega, SpecText) {
  EXPECT_EQ(OmegaSpec::parse("5,6").indices, (std::vector<int>{5, 6}));
  EXPECT_EQ(OmegaSpec::parse("5,6").to_string(), "(5,6)");
}

TEST(Omega, BClosedInIdeal) {
  for (const auto& idx : std::vector<std::vector<int>>{{3}, {4}, {3, 5}, {4, 6, 7}}) {
    auto w = omega_b(OmegaSpec{idx});
    EXPECT_TRUE(differential(ideal(), w).is_zero()) << to_text(w);
  }
}

TEST(Omega, LinearExtension) {
  auto c = n(2) * e({3, 5, 6}) - e({2, 4, 5});
  EXPECT_EQ(omega_linear(c), n(2) * omega(OmegaSpec{{3, 5}}) - omega(OmegaSpec{{2, 4}}));
  EXPECT_EQ(code_of([] { omega_linear(Cochain::monomial(Q, {2, 5})); }), ErrorCode::InvalidIndices);
}

TEST(Cup, E1KillsOmegaClasses) {
  // [e^1] ^ omega(xi, i) is exact
  for (const auto& idx : std::vector<std::vector<int>>{{2}, {3}, {2, 4}, {3, 5}}) {
    auto prod = wedge(e({1}), omega(OmegaSpec{idx}));
    EXPECT_TRUE(is_exact(m0(), prod).exact);
  }
}

TEST(Cup, TwoTimesJ) {
  // omega(2) ^ omega(j) ~ omega(2, 3, j)
  EXPECT_TRUE(wedge(omega(OmegaSpec{{2}}), omega(OmegaSpec{{3}})).is_zero());
  for (int j = 4; j <= 7; ++j) {
    auto prod = wedge(omega(OmegaSpec{{2}}), omega(OmegaSpec{{j}}));
    auto formula = cup_formula(OmegaSpec{{2}}, OmegaSpec{{j}});
    EXPECT_TRUE(cohomologous(m0(), prod, formula)) << j;
    EXPECT_TRUE(cohomologous(m0(), prod, omega(OmegaSpec{{2, 3, j}}))) << j;
  }
}

TEST(Cup, FormulaMinusWedgeIsExact) {
  for (const auto& a : std::vector<std::vector<int>>{{2}, {3}, {2, 3}, {4}})
    for (const auto& b : std::vector<std::vector<int>>{{4}, {5}, {3, 5}, {6}}) {
      if (a.back() > b.back()) continue;
      auto formula = cup_formula(OmegaSpec{a}, OmegaSpec{b});
      EXPECT_TRUE(differential(m0(), formula).is_zero());
      EXPECT_TRUE(cohomologous(m0(), formula, wedge(omega(OmegaSpec{a}), omega(OmegaSpec{b}))));
    }
  EXPECT_EQ(code_of([] { cup_formula(OmegaSpec{{5}}, OmegaSpec{{3}}); }), ErrorCode::InvalidIndices);
}

TEST(D2, Operators) {
  EXPECT_EQ(d2_apply(e({3})), e({1}));
  EXPECT_TRUE(d2_apply(e({4})).is_zero());
  EXPECT_TRUE(d2_apply(e({1})).is_zero());
  EXPECT_EQ(d2_apply(e({7})), e({5}));
  EXPECT_EQ(d2_plus_d1sq(e({5})), n(2) * e({3}));
  EXPECT_TRUE(d2_plus_d1sq(e({4})).is_zero());
}

TEST(W, FiveMatchesGolden) {
  auto w = w_cocycle(OmegaSpec{{5}});
  EXPECT_EQ(to_text(w.form) + "\n", golden("w_5_6_7.txt"));
  EXPECT_EQ(w.form, omega(OmegaSpec{{5, 6}}) + omega(OmegaSpec{{3, 7}}));
  EXPECT_TRUE(differential(m2(), w.form).is_zero());
}

TEST(W, FourHasNoTail) {
  auto w = w_cocycle(OmegaSpec{{4}});
  EXPECT_EQ(w.form, omega(OmegaSpec{{4, 5}}));
  EXPECT_TRUE(differential(m2(), w.form).is_zero());
}

TEST(W, ClosedAndNotExact) {
  for (const auto& idx : std::vector<std::vector<int>>{{3}, {6}, {7}, {3, 4}, {3, 6}, {4, 5, 6}}) {
    auto w = w_cocycle(OmegaSpec{idx}).form;
    EXPECT_TRUE(differential(m2(), w).is_zero());
    EXPECT_FALSE(is_exact(m2(), w).exact);
  }
}

TEST(W, Errors) {
  EXPECT_EQ(code_of([] { w_cocycle(OmegaSpec{{2}}); }), ErrorCode::InvalidIndices);
  EXPECT_EQ(code_of([] { w_cocycle(OmegaSpec{{5}}, Field::prime(2)); }), ErrorCode::CharacteristicTwo);
  EXPECT_NO_THROW(w_cocycle(OmegaSpec{{5}}, Field::prime(3)));
}

TEST(DMinus2, RightInverseUpToSign) {
  // D2 D_{-2} [omega_b(xi ^ e^i ^ e^{i+1})] = -[omega_b(xi ^ e^i ^ e^{i+1})] in H(b)
  auto b = ideal();
  for (const auto& idx : std::vector<std::vector<int>>{{4, 5}, {3, 6}, {4, 7}, {3, 4, 6}}) {
    OmegaSpec spec{idx};
    auto x = omega_b(spec);
    auto y = d_minus2_class(spec);
    EXPECT_TRUE(differential(b, y).is_zero());
    EXPECT_TRUE(cohomologous(b, d2_apply(y), -x)) << spec.to_string();
  }
  EXPECT_EQ(code_of([] { d_minus2_class(OmegaSpec{{4, 5}}, Field::prime(2)); }), ErrorCode::CharacteristicTwo);
}

TEST(DMinus2, D2OnOmegaB) {
  auto b = ideal();
  EXPECT_TRUE(is_exact(b, d2_apply(omega_b(OmegaSpec{{3}}))).exact);
  // D2 omega_b(e^5 ^ e^6) = -2 omega_b(e^4 ^ e^5)
  EXPECT_TRUE(cohomologous(b, d2_apply(omega_b(OmegaSpec{{5}})), n(-2) * omega_b(OmegaSpec{{4}})));
}

TEST(Leading, TermAndShift) {
  EXPECT_EQ(leading_term(omega(OmegaSpec{{5, 6}})), (Monomial{5, 6, 7}));
  EXPECT_EQ(shift_last_index({2, 4, 7}), (Monomial{2, 4, 8}));
  EXPECT_EQ(code_of([] { leading_term(Cochain::monomial(Q, {2, 5})); }), ErrorCode::NoLeadingTerm);
}

TEST(Derivation, PowerAndLeibniz) {
  auto D = d1();
  EXPECT_EQ(D.power(e({6}), 3), e({3}));
  EXPECT_TRUE(D.power(e({6}), 5).is_zero());
  auto a = e({3, 5}), b = e({4});
  EXPECT_EQ(D(wedge(a, b)), wedge(D(a), b) + wedge(a, D(b)));
}

TEST(PrimeField, OmegaReducesCoefficients) {
  auto f = Field::prime(5);
  auto w = omega(OmegaSpec{{5, 6}}, f);
  EXPECT_TRUE(w.coefficient({2, 3, 13}).is_zero());
  EXPECT_TRUE(differential(m0(), w).is_zero());
}
