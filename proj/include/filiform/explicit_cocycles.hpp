#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "filiform/cochain.hpp"

namespace filiform {

/// A degree-0 derivation of the exterior algebra given on generators:
/// e^i -> sum of coeff * e^j.
class Derivation {
 public:
  using Rule = std::function<std::vector<std::pair<int, mpq_class>>(int)>;
  explicit Derivation(Rule rule) : rule_(std::move(rule)) {}

  Cochain operator()(const Cochain& c) const;
  Cochain power(const Cochain& c, int times) const;

 private:
  Rule rule_;
};

/// D1 = ad e_1^* on the abelian ideal: e^i -> e^{i-1} above the floor, 0 at
/// or below it. Floor 2 is the m0 convention, floor 3 the convention on the
/// m2 ideal {1,3,4,...} where D1(e^3) = 0.
enum class D1Mode { M0, M2Ideal };
Derivation d1(D1Mode mode = D1Mode::M0);
Cochain d1_apply(const Cochain& c, D1Mode mode = D1Mode::M0);
/// D1^* (ad e_1 as a derivation): e^j -> e^{j+1} for j >= 2, e^1 -> 0.
Cochain d1_adjoint(const Cochain& c);

/// Right inverse of D1: D_{-1}(xi ^ e^i) = sum_l (-1)^l D1^l(xi) ^ e^{i+1+l}.
Cochain d_minus1(const Cochain& c);

/// Strictly increasing generator indices i_1 < ... < i_q.
struct OmegaSpec {
  std::vector<int> indices;

  int last() const { return indices.back(); }
  /// "5,6" -> {5, 6}.
  static OmegaSpec parse(std::string_view text);
  std::string to_string() const;
};

/// omega(i_1..i_q) = sum_l (-1)^l D1^l(e^{i_1}^...^e^{i_q}) ^ e^{i_q+1+l}.
/// floor 2 gives the m0 cocycles, floor 3 the omega_b cocycles of the m2
/// ideal. Throws InvalidIndices unless floor <= i_1 < ... < i_q.
Cochain omega(const OmegaSpec& spec, const Field& field = Field::rationals(), int floor = 2);
inline Cochain omega_b(const OmegaSpec& spec, const Field& field = Field::rationals()) {
  return omega(spec, field, 3);
}

/// Extends omega linearly to cochains whose monomials all end in an adjacent
/// pair e^a ^ e^{a+1}: omega(xi ^ e^a ^ e^{a+1}) = omega(xi, a).
Cochain omega_linear(const Cochain& c, int floor = 2);

/// Closed form for a cocycle cohomologous to omega(a) ^ omega(b), for
/// a = (xi, i), b = (eta, j) with i <= j.
Cochain cup_formula(const OmegaSpec& a, const OmegaSpec& b, const Field& field = Field::rationals());

/// D2 = ad e_2^* on the m2 ideal: e^1, e^4 -> 0, e^3 -> e^1, e^i -> e^{i-2} (i >= 5).
Derivation d2();
Cochain d2_apply(const Cochain& c);
/// (D2 + D1^2) with D1 in the m2-ideal convention.
Cochain d2_plus_d1sq(const Cochain& c);

struct WCocycle {
  Cochain form;
  std::size_t dropped = 0;  // e^1-bearing terms discarded before applying omega
};

/// w(i_1..i_q) = sum_{l>=0} 2^{-l} omega(T^l(e^{i_1}^...^e^{i_q}) ^ e^{i_q+1+l} ^ e^{i_q+2+l})
/// with T = D2 + D1^2, a closed (q+2)-form in the m2 complex. Terms of T^l
/// containing e^1 are dropped; closedness is checked before returning.
/// Throws CharacteristicTwo, InvalidIndices (i_1 < 3), ClosednessFailed.
WCocycle w_cocycle(const OmegaSpec& spec, const Field& field = Field::rationals());

/// Representative of D_{-2}[omega_b(xi ^ e^i ^ e^{i+1})] for spec = (xi, i):
/// sum_{l>=0} 2^{-l-1} omega_b(T^l(xi) ^ e^{i+1+l} ^ e^{i+2+l}).
/// Satisfies D2 D_{-2} = -Id on the cohomology of the m2 ideal.
Cochain d_minus2_class(const OmegaSpec& spec, const Field& field = Field::rationals());

/// The unique monomial whose last two indices are adjacent. Throws NoLeadingTerm.
Monomial leading_term(const Cochain& c);
Monomial shift_last_index(Monomial m);

}  // namespace filiform
