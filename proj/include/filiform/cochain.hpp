#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "filiform/algebra.hpp"
#include "filiform/linalg.hpp"
#include "filiform/monomial.hpp"
#include "filiform/scalar.hpp"

namespace filiform {

/// A finite combination of exterior monomials with coefficients in one field.
class Cochain {
 public:
  using Terms = std::map<Monomial, Scalar>;

  explicit Cochain(Field field) : field_(field) {}
  /// coeff * e^{i_1}^...^e^{i_q}; the word may be unsorted (sign applied).
  static Cochain monomial(Field field, std::vector<int> word, const Scalar& coeff);
  static Cochain monomial(Field field, std::vector<int> word) { return monomial(field, std::move(word), field.one()); }
  static Cochain unit(Field field) { return monomial(field, {}); }

  const Field& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;

  /// Accumulates coeff on a sorted monomial.
  void add_term(const Monomial& m, const Scalar& coeff);

  /// (degree, weight) when every term shares it; nullopt for zero or mixed.
  std::optional<std::pair<int, int>> bidegree() const;
  bool is_homogeneous() const { return bidegree().has_value(); }

  Cochain& operator+=(const Cochain& other);
  Cochain& operator-=(const Cochain& other);
  Cochain& operator*=(const Scalar& s);
  Cochain operator-() const;

  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Scalar& s, Cochain a) { return a *= s; }
  friend bool operator==(const Cochain& a, const Cochain& b);

 private:
  void require_same_field(const Cochain& other) const;

  Field field_;
  Terms terms_;
};

/// Graded-commutative exterior product.
Cochain wedge(const Cochain& a, const Cochain& b);

/// Monomials of degree q and weight k over the algebra's generators, in
/// lexicographic order.
std::vector<Monomial> basis(const GradedAlgebra& alg, int q, int k);
std::vector<Monomial> basis(const IndexSet& generators, int q, int k);

/// Chevalley-Eilenberg differential: d e^k = sum_{i<j} c^k_{ij} e^i^e^j,
/// extended by d(a^b) = da^b + (-1)^{deg a} a^db.
Cochain differential(const GradedAlgebra& alg, const Cochain& c);

/// Matrix of d: Lambda^q_k -> Lambda^{q+1}_k in the lexicographic bases.
SparseMatrix differential_matrix(const GradedAlgebra& alg, int q, int k, const Field& field);

SparseVector to_vector(const Cochain& c, const std::vector<Monomial>& basis);
Cochain from_vector(const Field& field, const SparseVector& v, const std::vector<Monomial>& basis);

/// "e5^e6^e7 - e4^e6^e8 + 5 e2^e3^e13": terms in descending lexicographic
/// order so the leading monomial comes first. Zero prints as "0".
std::string to_text(const Cochain& c);
/// Inverse of to_text. Accepts coefficients like "3", "-1/2" before a monomial.
Cochain parse_cochain(std::string_view text, const Field& field);

nlohmann::json to_json(const Cochain& c);
Cochain cochain_from_json(const nlohmann::json& j, const Field& field);

}  // namespace filiform
