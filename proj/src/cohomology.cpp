#include "filiform/cohomology.hpp"

#include <sstream>

namespace filiform {

std::size_t BettiTable::at(int q, int k) const {
  auto it = entries.find({q, k});
  if (it == entries.end())
    throw Error(ErrorCode::InvalidParameter,
                "cell (" + std::to_string(q) + "," + std::to_string(k) + ") is outside the table window");
  return it->second;
}

std::size_t BettiTable::degree_total(int q) const {
  std::size_t total = 0;
  for (const auto& [qk, dim] : entries)
    if (qk.first == q) total += dim;
  return total;
}

nlohmann::json BettiTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [qk, dim] : entries) rows.push_back({{"q", qk.first}, {"k", qk.second}, {"dim", dim}});
  return {{"algebra", algebra}, {"field", field.to_string()}, {"qmax", qmax}, {"kmax", kmax}, {"entries", rows}};
}

std::string BettiTable::to_csv() const {
  std::ostringstream os;
  os << "q,k,dim\n";
  for (const auto& [qk, dim] : entries) os << qk.first << ',' << qk.second << ',' << dim << '\n';
  return os.str();
}

std::string BettiTable::to_text() const {
  std::ostringstream os;
  os << algebra << " over " << field.to_string() << "\n";
  os << "k\\q";
  for (int q = 0; q <= qmax; ++q) os << '\t' << q;
  os << '\n';
  for (int k = 0; k <= kmax; ++k) {
    os << k;
    for (int q = 0; q <= qmax; ++q) os << '\t' << entries.at({q, k});
    os << '\n';
  }
  return os.str();
}

namespace {

std::size_t differential_rank(const GradedAlgebra& alg, int q, int k, const Field& field) {
  if (q < 0) return 0;
  return rank(differential_matrix(alg, q, k, field));
}

}  // namespace

std::size_t betti(const GradedAlgebra& alg, int q, int k, const Field& field) {
  if (q < 0 || k < 0) return 0;
  auto dim = basis(alg, q, k).size();
  if (dim == 0) return 0;
  return dim - differential_rank(alg, q, k, field) - differential_rank(alg, q - 1, k, field);
}

BettiTable betti_table(const GradedAlgebra& alg, int qmax, int kmax, const Field& field) {
  if (qmax < 0 || kmax < 0) throw Error(ErrorCode::InvalidParameter, "table bounds must be >= 0");
  BettiTable table;
  table.algebra = alg.name();
  table.field = field;
  table.qmax = qmax;
  table.kmax = kmax;
  for (int k = 0; k <= kmax; ++k) {
    std::size_t previous_rank = 0;
    for (int q = 0; q <= qmax; ++q) {
      auto dim = basis(alg, q, k).size();
      std::size_t r = dim == 0 ? 0 : differential_rank(alg, q, k, field);
      table.entries[{q, k}] = dim - r - previous_rank;
      previous_rank = r;
    }
  }
  return table;
}

std::size_t total_betti(const GradedAlgebra& alg, int q, const Field& field) {
  auto n = alg.truncation();
  if (!n) throw Error(ErrorCode::InvalidParameter, "total Betti numbers need a finite algebra");
  auto gens = alg.generators().elements_upto(*n);
  // Weights of q-forms lie between the q smallest and the q largest generators.
  if (q < 0 || q > static_cast<int>(gens.size())) return 0;
  int lo = 0, hi = 0;
  for (int t = 0; t < q; ++t) {
    lo += gens[t];
    hi += gens[gens.size() - 1 - t];
  }
  std::size_t total = 0;
  for (int k = lo; k <= hi; ++k) total += betti(alg, q, k, field);
  return total;
}

std::vector<Cochain> representatives(const GradedAlgebra& alg, int q, int k, const Field& field) {
  std::vector<Cochain> out;
  auto source = basis(alg, q, k);
  if (source.empty()) return out;
  auto kernel = kernel_basis(differential_matrix(alg, q, k, field));
  if (kernel.vectors.empty()) return out;

  TailEchelon span(field);
  if (q > 0) {
    auto image = differential_matrix(alg, q - 1, k, field).transpose();
    for (const auto& column : image.row_data()) span.insert(column);
  }
  for (const auto& v : kernel.vectors) {
    auto reduced = span.reduce(v);
    if (reduced.empty()) continue;
    scale(reduced, reduced.back().value.inverse());
    span.insert(reduced);
    out.push_back(from_vector(field, reduced, source));
  }
  return out;
}

ExactResult is_exact(const GradedAlgebra& alg, const Cochain& c) {
  if (c.is_zero()) return {true, Cochain(c.field())};
  auto bd = c.bidegree();
  if (!bd) throw Error(ErrorCode::InvalidParameter, "is_exact needs a homogeneous cochain");
  if (!differential(alg, c).is_zero()) throw Error(ErrorCode::NotClosed, "cochain is not closed: " + to_text(c));
  auto [q, k] = *bd;
  if (q == 0) return {false, std::nullopt};
  auto d = differential_matrix(alg, q - 1, k, c.field());
  auto u = solve_in_image(d, to_vector(c, d.row_labels));
  if (!u) return {false, std::nullopt};
  return {true, from_vector(c.field(), *u, d.col_labels)};
}

bool cohomologous(const GradedAlgebra& alg, const Cochain& a, const Cochain& b) { return is_exact(alg, a - b).exact; }

EulerCharacteristic euler_characteristic(const GradedAlgebra& alg, int k, int qbound, const Field& field) {
  EulerCharacteristic chi;
  std::size_t previous_rank = 0;
  for (int q = 0; q <= qbound; ++q) {
    auto dim = basis(alg, q, k).size();
    std::size_t r = dim == 0 ? 0 : differential_rank(alg, q, k, field);
    long long sign = q % 2 == 0 ? 1 : -1;
    chi.from_cochains += sign * static_cast<long long>(dim);
    chi.from_betti += sign * static_cast<long long>(dim - r - previous_rank);
    previous_rank = r;
  }
  return chi;
}

EulerCharacteristic euler_characteristic(const GradedAlgebra& alg, int k, const Field& field) {
  auto dim = alg.dimension();
  return euler_characteristic(alg, k, dim ? static_cast<int>(*dim) : k, field);
}

CohomologyCell::CohomologyCell(const GradedAlgebra& alg, int q, int k, const Field& field)
    : q_(q), k_(k), field_(field), basis_(filiform::basis(alg, q, k)),
      reps_(filiform::representatives(alg, q, k, field)), system_(field, basis_.size(), 0) {
  std::vector<SparseVector> columns;
  for (const auto& r : reps_) columns.push_back(to_vector(r, basis_));
  if (q > 0 && !basis_.empty()) {
    auto image = differential_matrix(alg, q - 1, k, field).transpose();
    for (const auto& column : image.row_data())
      if (!column.empty()) columns.push_back(column);
  }
  system_ = SparseMatrix::from_columns(field, basis_.size(), columns);
}

std::vector<std::vector<Scalar>> CohomologyCell::coordinates(const std::vector<Cochain>& closed) const {
  std::vector<SparseVector> rhs;
  rhs.reserve(closed.size());
  for (const auto& c : closed) rhs.push_back(to_vector(c, basis_));
  auto solutions = solve_many(system_, rhs);
  std::vector<std::vector<Scalar>> out;
  for (std::size_t j = 0; j < solutions.size(); ++j) {
    if (!solutions[j]) throw Error(ErrorCode::NotClosed, "not a cocycle: " + to_text(closed[j]));
    std::vector<Scalar> coords(reps_.size(), field_.zero());
    for (const auto& e : *solutions[j])
      if (e.index < reps_.size()) coords[e.index] = e.value;
    out.push_back(std::move(coords));
  }
  return out;
}

std::size_t class_rank(const GradedAlgebra& alg, const std::vector<Cochain>& closed, int q, int k, const Field& field) {
  auto source = basis(alg, q, k);
  TailEchelon span(field);
  if (q > 0 && !source.empty()) {
    auto image = differential_matrix(alg, q - 1, k, field).transpose();
    for (const auto& column : image.row_data()) span.insert(column);
  }
  std::size_t r = 0;
  for (const auto& c : closed) {
    if (!differential(alg, c).is_zero()) throw Error(ErrorCode::NotClosed, "not a cocycle: " + to_text(c));
    if (span.insert(to_vector(c, source))) ++r;
  }
  return r;
}

}  // namespace filiform
