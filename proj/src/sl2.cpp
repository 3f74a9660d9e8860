#include "filiform/sl2.hpp"

#include <algorithm>
#include <functional>

#include "filiform/explicit_cocycles.hpp"

namespace filiform {

namespace {

bool nonnegative_integer(const mpq_class& v) { return v.get_den() == 1 && sgn(v) >= 0; }

// Strictly increasing q-tuples from {0..top} with sum k.
std::vector<Monomial> tuples(int q, int k, int top) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(int, int, int)> rec = [&](int start, int left, int remaining) {
    if (left == 0) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int i = start; i <= top; ++i) {
      // the remaining left-1 parts are at least i+1, i+2, ...
      if (left * i + (left - 1) * left / 2 > remaining) break;
      cur.push_back(i);
      rec(i + 1, left - 1, remaining - i);
      cur.pop_back();
    }
  };
  if (q >= 0 && k >= 0) rec(0, q, k);
  return out;
}

SparseMatrix operator_matrix(const std::vector<Monomial>& source, const std::vector<Monomial>& target,
                             const Field& field, const std::function<Cochain(const Cochain&)>& op) {
  std::vector<SparseVector> columns;
  for (const auto& m : source) columns.push_back(to_vector(op(Cochain::monomial(field, m)), target));
  return SparseMatrix::from_columns(field, target.size(), columns);
}

}  // namespace

Sl2Module::Sl2Module(mpq_class lambda) : lambda_(std::move(lambda)) {
  if (nonnegative_integer(lambda_))
    throw Error(ErrorCode::InvalidLambda, "lambda = " + lambda_.get_str() + " makes the rescaled basis degenerate");
}

Sl2Module Sl2Module::finite(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidParameter, "V(n-2) needs n >= 2");
  return Sl2Module(mpq_class(n - 2), n - 2);
}

Cochain act(const Sl2Module& mod, Sl2Generator g, const Cochain& c) {
  const mpq_class lambda = mod.lambda();
  auto top = mod.top();
  return Derivation([&](int i) {
    std::vector<std::pair<int, mpq_class>> images;
    switch (g) {
      case Sl2Generator::X:
        if (i > 0) images.emplace_back(i - 1, 1);
        break;
      case Sl2Generator::H:
        images.emplace_back(i, lambda - 2 * i);
        break;
      case Sl2Generator::Y:
        if (!top || i < *top) images.emplace_back(i + 1, (i + 1) * (lambda - i));
        break;
    }
    return images;
  })(c);
}

std::vector<Monomial> weight_basis(const Sl2Module& mod, int q, int k) {
  return tuples(q, k, mod.top() ? *mod.top() : k);
}

std::vector<Cochain> primitive_basis(const Sl2Module& mod, int q, int k) {
  Field field = Field::rationals();
  auto source = weight_basis(mod, q, k);
  auto target = weight_basis(mod, q, k - 1);
  auto x = operator_matrix(source, target, field, [&](const Cochain& c) { return act(mod, Sl2Generator::X, c); });
  std::vector<Cochain> out;
  for (const auto& v : kernel_basis(x).vectors) out.push_back(from_vector(field, v, source));
  return out;
}

std::size_t primitive_dimension_classical(const Sl2Module& mod, int q, int k) {
  Field field = Field::rationals();
  auto source = weight_basis(mod, q, k);
  auto target = weight_basis(mod, q, k - 1);
  const mpq_class lambda = mod.lambda();
  Derivation classical_x([&](int i) {
    std::vector<std::pair<int, mpq_class>> images;
    mpq_class c = lambda - i + 1;
    if (i > 0 && sgn(c) != 0) images.emplace_back(i - 1, c);
    return images;
  });
  auto x = operator_matrix(source, target, field, [&](const Cochain& c) { return classical_x(c); });
  return source.size() - rank(x);
}

Count primitive_dimension_formula(int q, int k) {
  int shift = k - (q - 3) * q / 2;
  return partitions_P(q, shift) - partitions_P(q, shift - 1);
}

Cochain omega_primitive(const std::vector<int>& indices, const Field& field) {
  if (indices.empty()) throw Error(ErrorCode::InvalidIndices, "empty index tuple");
  for (std::size_t t = 0; t < indices.size(); ++t)
    if (indices[t] < 0 || (t > 0 && indices[t] <= indices[t - 1]))
      throw Error(ErrorCode::InvalidIndices, "indices must be increasing and >= 0");
  Derivation x([](int i) {
    std::vector<std::pair<int, mpq_class>> images;
    if (i > 0) images.emplace_back(i - 1, 1);
    return images;
  });
  Cochain out(field);
  Cochain cur = Cochain::monomial(field, indices);
  for (int l = 0; !cur.is_zero(); ++l) {
    Cochain term = wedge(cur, Cochain::monomial(field, {indices.back() + 1 + l}));
    if (l % 2 == 0)
      out += term;
    else
      out -= term;
    cur = x(cur);
  }
  return out;
}

std::size_t finite_kernel_count(int n, int q) {
  auto mod = Sl2Module::finite(n);
  int top = n - 2;
  if (q < 0 || q > top + 1) return 0;
  std::size_t total = 0;
  int max_sum = 0;
  for (int t = 0; t < q; ++t) max_sum += top - t;
  for (int k = 0; k <= max_sum; ++k) {
    auto source = weight_basis(mod, q, k);
    if (source.empty()) continue;
    auto target = weight_basis(mod, q, k - 1);
    auto x = operator_matrix(source, target, Field::rationals(),
                             [&](const Cochain& c) { return act(mod, Sl2Generator::X, c); });
    total += source.size() - rank(x);
  }
  return total;
}

std::string primitive_text(const Cochain& c) {
  std::string text = to_text(c);
  std::replace(text.begin(), text.end(), 'e', 'f');
  return text;
}

}  // namespace filiform
