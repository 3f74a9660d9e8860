#include "filiform/laplacian.hpp"

#include "filiform/explicit_cocycles.hpp"

namespace filiform {

namespace {

void require_rationals(const Field& field) {
  if (!field.is_rationals())
    throw Error(ErrorCode::FieldNotOrdered, "the Hodge inner product needs characteristic 0, got " + field.to_string());
}

}  // namespace

SparseMatrix laplacian_matrix(const GradedAlgebra& alg, int q, int k, const Field& field) {
  require_rationals(field);
  auto up = differential_matrix(alg, q, k, field);
  SparseMatrix result = up.transpose() * up;
  if (q > 0) {
    auto down = differential_matrix(alg, q - 1, k, field);
    result = result + down * down.transpose();
  }
  result.row_labels = up.col_labels;
  result.col_labels = up.col_labels;
  return result;
}

Cochain laplacian(const GradedAlgebra& alg, const Cochain& c) {
  if (c.is_zero()) return c;
  auto bd = c.bidegree();
  if (!bd) throw Error(ErrorCode::ShapeMismatch, "Laplacian needs a homogeneous cochain");
  auto m = laplacian_matrix(alg, bd->first, bd->second, c.field());
  return from_vector(c.field(), m.apply(to_vector(c, m.col_labels)), m.row_labels);
}

std::vector<Cochain> harmonic_basis(const GradedAlgebra& alg, int q, int k, const Field& field) {
  auto m = laplacian_matrix(alg, q, k, field);
  std::vector<Cochain> out;
  for (const auto& v : kernel_basis(m).vectors) out.push_back(from_vector(field, v, m.col_labels));
  return out;
}

bool m0_structure_check(const Cochain& form) {
  if (form.is_zero()) return true;
  if (!form.is_homogeneous()) throw Error(ErrorCode::ShapeMismatch, "form is not homogeneous");
  std::size_t with_e1 = 0;
  for (const auto& [m, c] : form.terms())
    if (!m.empty() && m.front() == 1) ++with_e1;
  auto alg = m0();
  auto lhs = laplacian(alg, form);
  if (with_e1 == 0) return lhs == d1_adjoint(d1_apply(form));
  if (with_e1 != form.size()) throw Error(ErrorCode::ShapeMismatch, "form mixes e^1 ^ xi and e^1-free terms");
  Cochain xi(form.field());
  for (const auto& [m, c] : form.terms()) xi.add_term(Monomial(m.begin() + 1, m.end()), c);
  auto e1 = Cochain::monomial(form.field(), {1});
  return lhs == wedge(e1, d1_apply(d1_adjoint(xi)));
}

}  // namespace filiform
