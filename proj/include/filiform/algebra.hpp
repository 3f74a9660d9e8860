#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace filiform {

/// Generator indices of a graded algebra: {min, min+1, ...} minus a finite
/// excluded set, optionally capped at a maximum (truncation).
class IndexSet {
 public:
  static IndexSet from(int min) { return IndexSet(min, std::nullopt, {}); }
  static IndexSet range(int min, int max) { return IndexSet(min, max, {}); }

  IndexSet without(int index) const;
  IndexSet truncated(int max) const;

  bool contains(int i) const;
  int min() const { return min_; }
  std::optional<int> max() const { return max_; }
  bool finite() const { return max_.has_value(); }
  const std::vector<int>& excluded() const { return excluded_; }
  /// Elements <= bound, ascending.
  std::vector<int> elements_upto(int bound) const;
  std::size_t size() const;  // finite sets only
  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  IndexSet(int min, std::optional<int> max, std::vector<int> excluded)
      : min_(min), max_(max), excluded_(std::move(excluded)) {}

  int min_;
  std::optional<int> max_;
  std::vector<int> excluded_;
};

struct BracketTerm {
  mpq_class coeff;
  int index;
};
using Bracket = std::vector<BracketTerm>;
using BracketRule = std::function<Bracket(int, int)>;

/// An N-graded Lie algebra with one-dimensional components, weight(e_i) = i.
///
/// Infinite algebras are lazy: the bracket is a rule evaluated on demand, and
/// only indices up to the working weight are ever touched. Immutable after
/// construction.
class GradedAlgebra {
 public:
  GradedAlgebra(std::string name, IndexSet generators, BracketRule rule)
      : name_(std::move(name)), generators_(std::move(generators)), rule_(std::move(rule)) {}

  const std::string& name() const { return name_; }
  const IndexSet& generators() const { return generators_; }
  std::optional<int> truncation() const { return generators_.max(); }
  std::optional<std::size_t> dimension() const;

  /// Rule output for an ordered pair, unfiltered. Validation inspects this.
  Bracket raw_bracket(int i, int j) const { return rule_(i, j); }
  /// [e_i, e_j] with zero terms and indices outside the generator set dropped.
  Bracket bracket(int i, int j) const;
  /// Coefficient of e_k in [e_i, e_j].
  mpq_class structure_constant(int i, int j, int k) const;

  GradedAlgebra renamed(std::string name) const { return {std::move(name), generators_, rule_}; }
  GradedAlgebra with_generators(IndexSet generators) const { return {name_, std::move(generators), rule_}; }

 private:
  std::string name_;
  IndexSet generators_;
  BracketRule rule_;
};

enum class PresetKind { M0, M2, L1, Lk, M0n, M2n, L1Quot };

struct PresetSpec {
  PresetKind kind;
  int param = 0;

  /// "m0", "m2", "l1", "lk:<k>", "m0n:<n>", "m2n:<n>", "l1quot:<n>".
  static PresetSpec parse(std::string_view text);
};

GradedAlgebra preset(const PresetSpec& spec);
GradedAlgebra m0();
GradedAlgebra m2();
GradedAlgebra witt_positive(int k);  // L_k
GradedAlgebra m0_quotient(int n);
GradedAlgebra m2_quotient(int n);
GradedAlgebra l1_quotient(int n);

struct Violation {
  std::string kind;  // "antisymmetry", "grading", "closure", "jacobi"
  int i = 0, j = 0, l = 0;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool pass() const { return violations.empty(); }
};

/// Checks antisymmetry, grading and Jacobi among generators with index sum <= bound.
ValidationReport validate(const GradedAlgebra& alg, int bound);

/// Restriction to a bracket-closed index set; closure is checked for pairs
/// with index sum <= bound (or exhaustively when finite). Throws NotClosed.
GradedAlgebra subalgebra(const GradedAlgebra& alg, const IndexSet& indices, int bound = 60);

/// True when every bracket among generators with i + j <= bound agrees.
bool same_brackets(const GradedAlgebra& a, const GradedAlgebra& b, int bound);

/// Length of the descending central series of a finite algebra.
int nilindex(const GradedAlgebra& alg);

/// Algebra-definition documents:
/// { "name", "truncation", "brackets": [ {"i","j","terms":[{"num","den","k"}]} ] }
GradedAlgebra load_custom(const nlohmann::json& document);
GradedAlgebra load_custom_text(std::string_view text);
GradedAlgebra load_custom_file(const std::string& path);
nlohmann::json to_json(const GradedAlgebra& alg);

}  // namespace filiform
