#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "filiform/algebra.hpp"
#include "filiform/cochain.hpp"
#include "filiform/linalg.hpp"

namespace filiform {

/// dim H^q_k for every 0 <= q <= qmax, 0 <= k <= kmax.
struct BettiTable {
  std::string algebra;
  Field field = Field::rationals();
  int qmax = 0, kmax = 0;
  std::map<std::pair<int, int>, std::size_t> entries;

  /// Throws InvalidParameter outside the window.
  std::size_t at(int q, int k) const;
  /// Sum over k of column q.
  std::size_t degree_total(int q) const;

  nlohmann::json to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
};

std::size_t betti(const GradedAlgebra& alg, int q, int k, const Field& field = Field::rationals());
BettiTable betti_table(const GradedAlgebra& alg, int qmax, int kmax, const Field& field = Field::rationals());

/// dim H^q(g) summed over all weights. Finite algebras only.
std::size_t total_betti(const GradedAlgebra& alg, int q, const Field& field = Field::rationals());

/// Cocycles whose classes form a basis of H^q_k. Each comes from the reduced
/// kernel basis, reduced modulo the coboundaries, and scaled so its last
/// monomial (lexicographically) has coefficient 1.
std::vector<Cochain> representatives(const GradedAlgebra& alg, int q, int k, const Field& field = Field::rationals());

struct ExactResult {
  bool exact = false;
  std::optional<Cochain> witness;  // du = c when exact
};

/// Throws NotClosed when dc != 0 and InvalidParameter when c is inhomogeneous.
ExactResult is_exact(const GradedAlgebra& alg, const Cochain& c);
bool cohomologous(const GradedAlgebra& alg, const Cochain& a, const Cochain& b);

struct EulerCharacteristic {
  long long from_cochains = 0;
  long long from_betti = 0;
  bool consistent() const { return from_cochains == from_betti; }
};

/// Both sums over 0 <= q <= qbound at weight k.
EulerCharacteristic euler_characteristic(const GradedAlgebra& alg, int k, int qbound,
                                         const Field& field = Field::rationals());
/// qbound = k, or the dimension for finite algebras.
EulerCharacteristic euler_characteristic(const GradedAlgebra& alg, int k, const Field& field = Field::rationals());

/// Cohomology at one bidegree with coordinates of classes in the basis of
/// representatives().
class CohomologyCell {
 public:
  CohomologyCell(const GradedAlgebra& alg, int q, int k, const Field& field);

  int q() const { return q_; }
  int k() const { return k_; }
  std::size_t dim() const { return reps_.size(); }
  const std::vector<Cochain>& representatives() const { return reps_; }
  const std::vector<Monomial>& basis() const { return basis_; }

  /// Class coordinates of closed cochains of bidegree (q, k). Throws NotClosed
  /// for anything outside ker d.
  std::vector<std::vector<Scalar>> coordinates(const std::vector<Cochain>& closed) const;

 private:
  int q_, k_;
  Field field_;
  std::vector<Monomial> basis_;
  std::vector<Cochain> reps_;
  SparseMatrix system_;  // columns: representatives, then coboundaries
};

/// Rank of a set of closed cochains of one bidegree in cohomology.
std::size_t class_rank(const GradedAlgebra& alg, const std::vector<Cochain>& closed, int q, int k,
                       const Field& field = Field::rationals());

}  // namespace filiform
