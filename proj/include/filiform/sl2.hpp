#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "filiform/cochain.hpp"
#include "filiform/combinatorics.hpp"

namespace filiform {

/// Highest-weight module V(lambda) in the rescaled basis f~_i, i >= 0:
///   X f~_i = f~_{i-1},  H f~_i = (lambda - 2i) f~_i,  Y f~_i = (i+1)(lambda-i) f~_{i+1}.
/// Elements of Lambda^q V are Cochains over the indices i (index 0 allowed).
class Sl2Module {
 public:
  /// Infinite module; throws InvalidLambda for lambda in {0, 1, 2, ...}.
  explicit Sl2Module(mpq_class lambda);
  /// The finite module V(n-2) of dimension n-1, lambda = n-2.
  static Sl2Module finite(int n);

  const mpq_class& lambda() const { return lambda_; }
  /// Largest basis index for finite modules.
  std::optional<int> top() const { return top_; }

 private:
  Sl2Module(mpq_class lambda, std::optional<int> top) : lambda_(std::move(lambda)), top_(top) {}

  mpq_class lambda_;
  std::optional<int> top_;
};

enum class Sl2Generator { X, Y, H };

/// Action on Lambda^q V extended as a derivation.
Cochain act(const Sl2Module& mod, Sl2Generator g, const Cochain& c);

/// Monomials f~_{i_1}^...^f~_{i_q} with i_1 < ... < i_q and sum k.
std::vector<Monomial> weight_basis(const Sl2Module& mod, int q, int k);

/// Kernel basis of X on the weight-(q lambda - 2k) subspace of Lambda^q V.
std::vector<Cochain> primitive_basis(const Sl2Module& mod, int q, int k);

/// Same dimension computed in the classical basis X f_i = (lambda - i + 1) f_{i-1},
/// which is where lambda actually enters.
std::size_t primitive_dimension_classical(const Sl2Module& mod, int q, int k);

/// P_q(k - (q-3)q/2) - P_q(k - (q-3)q/2 - 1).
Count primitive_dimension_formula(int q, int k);

/// sum_l (-1)^l X^l(f~_{i_1}^...^f~_{i_q}) ^ f~_{i_q+1+l}.
Cochain omega_primitive(const std::vector<int>& indices, const Field& field = Field::rationals());

/// dim ker X on Lambda^q V(n-2) over all weights.
std::size_t finite_kernel_count(int n, int q);

/// "-2 f0^f3 + f0^f1"
std::string primitive_text(const Cochain& c);

}  // namespace filiform
