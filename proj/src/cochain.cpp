#include "filiform/cochain.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_map>

namespace filiform {

Cochain Cochain::monomial(Field field, std::vector<int> word, const Scalar& coeff) {
  Cochain c(field);
  int sign = canonicalize(word);
  if (sign != 0) c.add_term(word, sign > 0 ? coeff : -coeff);
  return c;
}

Scalar Cochain::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void Cochain::add_term(const Monomial& m, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

std::optional<std::pair<int, int>> Cochain::bidegree() const {
  if (terms_.empty()) return std::nullopt;
  std::pair<int, int> bd{degree(terms_.begin()->first), weight(terms_.begin()->first)};
  for (const auto& [m, c] : terms_)
    if (degree(m) != bd.first || weight(m) != bd.second) return std::nullopt;
  return bd;
}

void Cochain::require_same_field(const Cochain& other) const {
  if (field_ != other.field_)
    throw Error(ErrorCode::FieldMismatch, "cochains over " + field_.to_string() + " and " + other.field_.to_string());
}

Cochain& Cochain::operator+=(const Cochain& other) {
  require_same_field(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
  require_same_field(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Cochain& Cochain::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Cochain Cochain::operator-() const {
  Cochain out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const Cochain& a, const Cochain& b) { return a.field_ == b.field_ && a.terms_ == b.terms_; }

Cochain wedge(const Cochain& a, const Cochain& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "wedge of cochains over different fields");
  Cochain out(a.field());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<int> word = ma;
      word.insert(word.end(), mb.begin(), mb.end());
      int sign = canonicalize(word);
      if (sign == 0) continue;
      Scalar c = ca * cb;
      out.add_term(word, sign > 0 ? c : -c);
    }
  }
  return out;
}

std::vector<Monomial> basis(const IndexSet& generators, int q, int k) {
  std::vector<Monomial> out;
  if (q < 0 || k < 0) return out;
  auto gens = generators.elements_upto(k);
  Monomial current;
  // Smallest possible sum of `left` strictly increasing generators starting at position `pos`.
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t pos, int left, int remaining) {
    if (left == 0) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    for (std::size_t n = pos; n + left <= gens.size(); ++n) {
      int lowest = 0;
      for (int t = 0; t < left; ++t) lowest += gens[n + t];
      if (lowest > remaining) break;
      current.push_back(gens[n]);
      rec(n + 1, left - 1, remaining - gens[n]);
      current.pop_back();
    }
  };
  rec(0, q, k);
  return out;
}

std::vector<Monomial> basis(const GradedAlgebra& alg, int q, int k) { return basis(alg.generators(), q, k); }

namespace {

struct Quadratic {
  int a, b;  // a < b
  Scalar coeff;
};

// d e^k for every generator k <= bound, as lists of (a, b, c^k_ab).
std::vector<std::vector<Quadratic>> generator_differentials(const GradedAlgebra& alg, int bound, const Field& field) {
  std::vector<std::vector<Quadratic>> table(std::max(bound, 0) + 1);
  const auto& gens = alg.generators();
  for (int k : gens.elements_upto(bound)) {
    for (int a : gens.elements_upto(k)) {
      int b = k - a;
      if (a >= b) break;
      if (!gens.contains(b)) continue;
      mpq_class c = alg.structure_constant(a, b, k);
      if (sgn(c) != 0) table[k].push_back({a, b, field.from_rational(c)});
    }
  }
  return table;
}

void differentiate_into(Cochain& out, const Monomial& m, const Scalar& coeff,
                        const std::vector<std::vector<Quadratic>>& table) {
  for (std::size_t s = 0; s < m.size(); ++s) {
    int k = m[s];
    if (k >= static_cast<int>(table.size())) continue;
    for (const auto& quad : table[k]) {
      // (-1)^s e^{i_1}^...^(e^a^e^b)^...; the degree-2 block moves freely.
      std::vector<int> word;
      word.reserve(m.size() + 1);
      word.push_back(quad.a);
      word.push_back(quad.b);
      for (std::size_t t = 0; t < m.size(); ++t)
        if (t != s) word.push_back(m[t]);
      int sign = canonicalize(word);
      if (sign == 0) continue;
      if (s % 2 == 1) sign = -sign;
      Scalar c = coeff * quad.coeff;
      out.add_term(word, sign > 0 ? c : -c);
    }
  }
}

}  // namespace

Cochain differential(const GradedAlgebra& alg, const Cochain& c) {
  int bound = 0;
  for (const auto& [m, coeff] : c.terms())
    if (!m.empty()) bound = std::max(bound, m.back());
  auto table = generator_differentials(alg, bound, c.field());
  Cochain out(c.field());
  for (const auto& [m, coeff] : c.terms()) differentiate_into(out, m, coeff, table);
  return out;
}

SparseMatrix differential_matrix(const GradedAlgebra& alg, int q, int k, const Field& field) {
  auto source = basis(alg, q, k);
  auto target = basis(alg, q + 1, k);
  auto table = generator_differentials(alg, k, field);
  std::vector<SparseVector> columns;
  columns.reserve(source.size());
  for (const auto& m : source) {
    Cochain image(field);
    differentiate_into(image, m, field.one(), table);
    columns.push_back(to_vector(image, target));
  }
  auto mat = SparseMatrix::from_columns(field, target.size(), columns);
  mat.row_labels = std::move(target);
  mat.col_labels = std::move(source);
  return mat;
}

SparseVector to_vector(const Cochain& c, const std::vector<Monomial>& basis) {
  SparseVector v;
  v.reserve(c.size());
  for (const auto& [m, coeff] : c.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || *it != m)
      throw Error(ErrorCode::DimensionMismatch, "monomial " + monomial_text(m) + " is not in the basis");
    v.push_back({static_cast<std::size_t>(it - basis.begin()), coeff});
  }
  // map order equals lexicographic basis order
  return v;
}

Cochain from_vector(const Field& field, const SparseVector& v, const std::vector<Monomial>& basis) {
  Cochain c(field);
  for (const auto& e : v) c.add_term(basis.at(e.index), e.value);
  return c;
}

std::string to_text(const Cochain& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    Scalar coeff = it->second;
    bool negative = coeff.is_rational() && sgn(coeff.rational()) < 0;
    if (negative) coeff = -coeff;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    bool unit = coeff.is_one();
    if (!unit || it->first.empty()) out += coeff.to_string();
    if (!it->first.empty()) {
      if (!unit) out += ' ';
      out += monomial_text(it->first);
    }
    first = false;
  }
  return out;
}

Cochain parse_cochain(std::string_view text, const Field& field) {
  Cochain out(field);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
  };
  skip();
  if (text.substr(pos) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip();
    } else if (!first) {
      throw fail("expected + or -");
    }
    Scalar coeff = field.one();
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
    if (pos > start) coeff = field.parse_scalar(text.substr(start, pos - start));
    skip();
    std::vector<int> word;
    while (pos < text.size() && text[pos] == 'e') {
      ++pos;
      std::size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (digits == pos) throw fail("expected generator index");
      word.push_back(std::stoi(std::string(text.substr(digits, pos - digits))));
      if (pos < text.size() && text[pos] == '^') ++pos;
    }
    if (word.empty() && pos == start) throw fail("expected a term");
    out += Cochain::monomial(field, word, negative ? -coeff : coeff);
    first = false;
  }
  return out;
}

nlohmann::json to_json(const Cochain& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, coeff] : c.terms()) arr.push_back({{"coeff", coeff.serialize()}, {"monomial", m}});
  return arr;
}

Cochain cochain_from_json(const nlohmann::json& j, const Field& field) {
  Cochain out(field);
  try {
    for (const auto& term : j)
      out += Cochain::monomial(field, term.at("monomial").get<std::vector<int>>(),
                               field.parse_scalar(term.at("coeff").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return out;
}

}  // namespace filiform
