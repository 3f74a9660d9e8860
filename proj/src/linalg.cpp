#include "filiform/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace filiform {

int canonicalize(std::vector<int>& word) {
  int sign = 1;
  for (std::size_t a = 1; a < word.size(); ++a) {
    for (std::size_t b = a; b > 0 && word[b - 1] >= word[b]; --b) {
      if (word[b - 1] == word[b]) return 0;
      std::swap(word[b - 1], word[b]);
      sign = -sign;
    }
  }
  return sign;
}

std::string monomial_text(const Monomial& m, char letter) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t n = 0; n < m.size(); ++n) {
    if (n) out += '^';
    out += letter;
    out += std::to_string(m[n]);
  }
  return out;
}

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x) {
  if (a.is_zero() || x.empty()) return;
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto yi = y.begin();
  auto xi = x.begin();
  while (yi != y.end() || xi != x.end()) {
    if (xi == x.end() || (yi != y.end() && yi->index < xi->index)) {
      out.push_back(std::move(*yi++));
    } else if (yi == y.end() || xi->index < yi->index) {
      out.push_back({xi->index, a * xi->value});
      ++xi;
    } else {
      Scalar v = yi->value + a * xi->value;
      if (!v.is_zero()) out.push_back({yi->index, std::move(v)});
      ++yi;
      ++xi;
    }
  }
  y = std::move(out);
}

void scale(SparseVector& v, const Scalar& a) {
  if (a.is_zero()) {
    v.clear();
    return;
  }
  for (auto& e : v) e.value *= a;
}

Scalar entry(const SparseVector& v, std::size_t index, const Field& field) {
  auto it = std::lower_bound(v.begin(), v.end(), index, [](const SparseEntry& e, std::size_t i) { return e.index < i; });
  if (it != v.end() && it->index == index) return it->value;
  return field.zero();
}

SparseMatrix SparseMatrix::identity(Field field, std::size_t n) {
  SparseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, field.one()});
  return m;
}

SparseMatrix SparseMatrix::from_columns(Field field, std::size_t rows, const std::vector<SparseVector>& columns) {
  SparseMatrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& e : columns[c]) m.data_[e.index].push_back({c, e.value});
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Scalar& value) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorCode::DimensionMismatch, "entry outside matrix");
  axpy(data_[r], field_.one(), SparseVector{{c, value}});
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& e : data_[r]) t.data_[e.index].push_back({r, e.value});
  t.row_labels = col_labels;
  t.col_labels = row_labels;
  return t;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  SparseVector out;
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc = field_.zero();
    auto xi = x.begin();
    for (const auto& e : data_[r]) {
      while (xi != x.end() && xi->index < e.index) ++xi;
      if (xi != x.end() && xi->index == e.index) acc += e.value * xi->value;
    }
    if (!acc.is_zero()) out.push_back({r, std::move(acc)});
  }
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "product of incompatible matrices");
  SparseMatrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (const auto& e : a.data_[r]) axpy(out.data_[r], e.value, b.data_[e.index]);
  out.row_labels = a.row_labels;
  out.col_labels = b.col_labels;
  return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "sum of incompatible matrices");
  SparseMatrix out = a;
  for (std::size_t r = 0; r < a.rows_; ++r) axpy(out.data_[r], a.field_.one(), b.data_[r]);
  return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    if (a.data_[r].size() != b.data_[r].size()) return false;
    for (std::size_t n = 0; n < a.data_[r].size(); ++n)
      if (a.data_[r][n].index != b.data_[r][n].index || !(a.data_[r][n].value == b.data_[r][n].value)) return false;
  }
  return true;
}

RowEchelon row_reduce(std::vector<SparseVector> rows, const Field& field, bool reduced) {
  // pivot column -> position in `basis`
  std::map<std::size_t, std::size_t> pivot_of;
  std::vector<SparseVector> basis;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivot_of.find(row.front().index);
      if (it == pivot_of.end()) break;
      Scalar c = row.front().value;
      axpy(row, -c, basis[it->second]);
    }
    if (row.empty()) continue;
    scale(row, row.front().value.inverse());
    pivot_of.emplace(row.front().index, basis.size());
    basis.push_back(std::move(row));
  }

  RowEchelon out;
  out.rows.reserve(basis.size());
  for (const auto& [col, pos] : pivot_of) {
    out.pivots.push_back(col);
    out.rows.push_back(std::move(basis[pos]));
  }
  if (reduced) {
    // Back-substitution, last pivot first: rows below are already clean.
    for (std::size_t i = out.rows.size(); i-- > 0;) {
      for (std::size_t j = 0; j < i; ++j) {
        Scalar c = entry(out.rows[j], out.pivots[i], field);
        if (!c.is_zero()) axpy(out.rows[j], -c, out.rows[i]);
      }
    }
  }
  return out;
}

std::size_t rank(const SparseMatrix& m) { return row_reduce(m.row_data(), m.field(), false).rows.size(); }

KernelBasis kernel_basis(const SparseMatrix& m) {
  auto ech = row_reduce(m.row_data(), m.field(), true);
  KernelBasis out;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVector v;
    for (std::size_t r = 0; r < ech.rows.size(); ++r) {
      Scalar c = entry(ech.rows[r], f, m.field());
      if (!c.is_zero()) v.push_back({ech.pivots[r], -c});
    }
    v.push_back({f, m.field().one()});
    std::sort(v.begin(), v.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    out.vectors.push_back(std::move(v));
    out.free_columns.push_back(f);
  }
  return out;
}

std::optional<SparseVector> solve_in_image(const SparseMatrix& m, const SparseVector& v) {
  return solve_many(m, {v}).front();
}

std::vector<std::optional<SparseVector>> solve_many(const SparseMatrix& m, const std::vector<SparseVector>& rhs) {
  // Row-reduce [M | v_0 v_1 ...]; v_j sits in column m.cols() + j.
  std::vector<SparseVector> rows = m.row_data();
  for (std::size_t j = 0; j < rhs.size(); ++j) {
    for (const auto& e : rhs[j]) {
      if (e.index >= m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side longer than the matrix has rows");
      rows[e.index].push_back({m.cols() + j, e.value});
    }
  }
  auto ech = row_reduce(std::move(rows), m.field(), true);
  std::vector<std::optional<SparseVector>> out(rhs.size(), SparseVector{});
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    bool inconsistent = ech.pivots[r] >= m.cols();
    for (const auto& e : ech.rows[r]) {
      if (e.index < m.cols()) continue;
      auto& u = out[e.index - m.cols()];
      if (!u) continue;
      if (inconsistent)
        u.reset();
      else
        u->push_back({ech.pivots[r], e.value});
    }
  }
  // pivots ascend with r, so each u is already sorted
  return out;
}

SparseVector TailEchelon::reduce(SparseVector v) const {
  for (auto it = basis_.rbegin(); it != basis_.rend() && !v.empty(); ++it) {
    if (v.back().index < it->first) continue;
    Scalar c = entry(v, it->first, field_);
    if (!c.is_zero()) axpy(v, -c, it->second);
  }
  return v;
}

bool TailEchelon::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  std::size_t tail = v.back().index;
  scale(v, v.back().value.inverse());
  auto pos = std::lower_bound(basis_.begin(), basis_.end(), tail, [](const auto& p, std::size_t t) { return p.first < t; });
  basis_.insert(pos, {tail, std::move(v)});
  return true;
}

}  // namespace filiform
