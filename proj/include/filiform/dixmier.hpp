#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "filiform/algebra.hpp"
#include "filiform/cochain.hpp"

namespace filiform {

/// A codimension-1 ideal b = span{e_i : i != x} of the parent algebra and
/// the complementary element X = e_x.
struct IdealSplit {
  GradedAlgebra parent;
  GradedAlgebra ideal;
  int x;
};

/// Checks that dropping e_x leaves an ideal (within index sums <= bound).
/// Throws NotClosed otherwise.
IdealSplit make_split(const GradedAlgebra& parent, int x, int bound = 60);
IdealSplit m0_split();  // X = e_1, b = {2,3,...}
IdealSplit m2_split();  // X = e_2, b = {1,3,4,...}

/// f = e^x ^ f' + f'' with f'' free of e^x.
std::pair<Cochain, Cochain> split_form(const IdealSplit& split, const Cochain& f);
/// Restriction to the ideal: f''.
Cochain restrict_to_ideal(const IdealSplit& split, const Cochain& f);

/// Dual of ad X on b, as a derivation: e^k -> sum_j c^k_{xj} e^j.
Cochain adx_star(const IdealSplit& split, const Cochain& c);

/// (df)_X == adX^*(f) + d(f_X) for f over the ideal generators.
bool contraction_identity_check(const IdealSplit& split, const Cochain& f);

/// One weight-k slice of the long exact sequence at degree q:
///   H^{q-1}_{k-x}(b) -w-> H^q_k(g) -r-> H^q_k(b) -a-> H^q_{k-x}(b) -w-> H^{q+1}_k(g)
/// with w = e^x ^ ., r the restriction and a = adX^*.
struct ExactnessNode {
  int q = 0, k = 0;
  std::size_t dim_g = 0;        // H^q_k(g)
  std::size_t dim_b = 0;        // H^q_k(b)
  std::size_t dim_b_shift = 0;  // H^q_{k-x}(b)
  std::size_t rank_w_in = 0;    // H^{q-1}_{k-x}(b) -> H^q_k(g)
  std::size_t rank_r = 0;
  std::size_t rank_a = 0;
  std::size_t rank_w_out = 0;   // H^q_{k-x}(b) -> H^{q+1}_k(g)
  bool composites_zero = true;
  bool exact_at_g() const { return dim_g - rank_r == rank_w_in; }
  bool exact_at_b() const { return dim_b - rank_a == rank_r; }
  bool exact_at_b_shift() const { return dim_b_shift - rank_w_out == rank_a; }
  bool pass() const { return composites_zero && exact_at_g() && exact_at_b() && exact_at_b_shift(); }
};

struct ExactnessReport {
  std::string parent, ideal;
  int x = 0;
  int qmax = 0, kmax = 0;
  std::vector<ExactnessNode> nodes;

  bool pass() const { return !first_failure(); }
  std::optional<ExactnessNode> first_failure() const;
  /// Node lookup; throws InvalidParameter outside the window.
  const ExactnessNode& node(int q, int k) const;
  nlohmann::json to_json() const;
};

ExactnessReport verify_exactness(const IdealSplit& split, int qmax, int kmax, const Field& field = Field::rationals());

}  // namespace filiform
