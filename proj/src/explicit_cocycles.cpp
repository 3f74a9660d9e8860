#include "filiform/explicit_cocycles.hpp"

#include <algorithm>
#include <sstream>

#include "filiform/algebra.hpp"

namespace filiform {

Cochain Derivation::operator()(const Cochain& c) const {
  Cochain out(c.field());
  for (const auto& [m, coeff] : c.terms()) {
    for (std::size_t s = 0; s < m.size(); ++s) {
      for (const auto& [target, factor] : rule_(m[s])) {
        std::vector<int> word = m;
        word[s] = target;
        int sign = canonicalize(word);
        if (sign == 0) continue;
        Scalar c2 = coeff * c.field().from_rational(factor);
        out.add_term(word, sign > 0 ? c2 : -c2);
      }
    }
  }
  return out;
}

Cochain Derivation::power(const Cochain& c, int times) const {
  Cochain out = c;
  for (int t = 0; t < times && !out.is_zero(); ++t) out = (*this)(out);
  return out;
}

namespace {

using Images = std::vector<std::pair<int, mpq_class>>;

Derivation d1_floor(int floor) {
  return Derivation([floor](int i) -> Images {
    if (i > floor) return {{i - 1, 1}};
    return {};
  });
}

int floor_of(D1Mode mode) { return mode == D1Mode::M0 ? 2 : 3; }

// sum_l (-1)^l D1^l(x) ^ e^{a+l}
Cochain alternating_tail(const Cochain& x, int a, int floor) {
  auto op = d1_floor(floor);
  Cochain out(x.field());
  Cochain current = x;
  for (int l = 0; !current.is_zero(); ++l) {
    Cochain term = wedge(current, Cochain::monomial(x.field(), {a + l}));
    if (l % 2 == 0)
      out += term;
    else
      out -= term;
    current = op(current);
  }
  return out;
}

void check_spec(const OmegaSpec& spec, int floor) {
  const auto& idx = spec.indices;
  if (idx.empty()) throw Error(ErrorCode::InvalidIndices, "empty index tuple");
  if (idx.front() < floor)
    throw Error(ErrorCode::InvalidIndices,
                "indices " + spec.to_string() + " start below " + std::to_string(floor));
  for (std::size_t t = 1; t < idx.size(); ++t)
    if (idx[t] <= idx[t - 1]) throw Error(ErrorCode::InvalidIndices, "indices " + spec.to_string() + " are not increasing");
}

void require_odd_characteristic(const Field& field) {
  if (!field.is_rationals() && field.characteristic() == 2)
    throw Error(ErrorCode::CharacteristicTwo, "m2 constructions divide by 2");
}

Cochain drop_e1(const Cochain& c, std::size_t& dropped) {
  Cochain out(c.field());
  for (const auto& [m, coeff] : c.terms()) {
    if (!m.empty() && m.front() == 1)
      ++dropped;
    else
      out.add_term(m, coeff);
  }
  return out;
}

Scalar inverse_power_of_two(const Field& field, int l) {
  mpq_class v(1);
  v /= mpz_class(1) << l;
  return field.from_rational(v);
}

}  // namespace

Derivation d1(D1Mode mode) { return d1_floor(floor_of(mode)); }

Cochain d1_apply(const Cochain& c, D1Mode mode) { return d1(mode)(c); }

Cochain d1_adjoint(const Cochain& c) {
  return Derivation([](int i) -> Images {
    if (i >= 2) return {{i + 1, 1}};
    return {};
  })(c);
}

Cochain d_minus1(const Cochain& c) {
  Cochain out(c.field());
  for (const auto& [m, coeff] : c.terms()) {
    if (m.empty()) throw Error(ErrorCode::InvalidIndices, "D_{-1} is undefined on constants");
    Monomial xi(m.begin(), m.end() - 1);
    out += coeff * alternating_tail(Cochain::monomial(c.field(), xi), m.back() + 1, 2);
  }
  return out;
}

OmegaSpec OmegaSpec::parse(std::string_view text) {
  OmegaSpec spec;
  std::string token;
  std::istringstream is{std::string(text)};
  while (std::getline(is, token, ',')) {
    try {
      std::size_t used = 0;
      spec.indices.push_back(std::stoi(token, &used));
      if (used != token.size() && token.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad index list \"" + std::string(text) + "\"");
    }
  }
  if (spec.indices.empty()) throw Error(ErrorCode::ParseError, "empty index list");
  return spec;
}

std::string OmegaSpec::to_string() const {
  std::string out = "(";
  for (std::size_t t = 0; t < indices.size(); ++t) out += (t ? "," : "") + std::to_string(indices[t]);
  return out + ")";
}

Cochain omega(const OmegaSpec& spec, const Field& field, int floor) {
  check_spec(spec, floor);
  return alternating_tail(Cochain::monomial(field, spec.indices), spec.last() + 1, floor);
}

Cochain omega_linear(const Cochain& c, int floor) {
  Cochain out(c.field());
  for (const auto& [m, coeff] : c.terms()) {
    if (m.size() < 2 || m[m.size() - 1] != m[m.size() - 2] + 1)
      throw Error(ErrorCode::InvalidIndices, "omega needs a monomial ending in an adjacent pair, got " + monomial_text(m));
    out += coeff * omega(OmegaSpec{Monomial(m.begin(), m.end() - 1)}, c.field(), floor);
  }
  return out;
}

Cochain cup_formula(const OmegaSpec& a, const OmegaSpec& b, const Field& field) {
  check_spec(a, 2);
  check_spec(b, 2);
  int i = a.last(), j = b.last();
  if (i > j) throw Error(ErrorCode::InvalidIndices, "cup_formula needs last(a) <= last(b)");
  auto op = d1();
  auto e = [&](std::vector<int> word) { return Cochain::monomial(field, std::move(word)); };
  Cochain xa = e(a.indices), xb = e(b.indices);
  Cochain eta = e(Monomial(b.indices.begin(), b.indices.end() - 1));
  int deg_eta = static_cast<int>(b.indices.size()) - 1;

  Cochain out(field);
  Cochain tail = wedge(eta, e({j, j + 1}));
  Cochain da = xa;
  for (int l = 0; l <= j - i + 1 && !da.is_zero(); ++l) {
    Cochain term = omega_linear(wedge(wedge(da, e({i + 1 + l})), tail));
    if (l % 2 == 0)
      out += term;
    else
      out -= term;
    da = op(da);
  }

  int sign1 = (j - i + deg_eta) % 2 == 0 ? 1 : -1;
  Cochain db = op(xb);
  for (int s = 1; !db.is_zero(); ++s, db = op(db)) {
    Cochain first = omega_linear(wedge(wedge(op.power(xa, j - i - 1 + s), db), e({j + s, j + s + 1})));
    Cochain second = omega_linear(wedge(wedge(op.power(xa, j - i + 1 + s), db), e({j + s + 1, j + s + 2})));
    if (sign1 > 0) {
      out += first;
      out -= second;
    } else {
      out -= first;
      out += second;
    }
  }
  return out;
}

Derivation d2() {
  return Derivation([](int i) -> Images {
    if (i == 3) return {{1, 1}};
    if (i >= 5) return {{i - 2, 1}};
    return {};
  });
}

Cochain d2_apply(const Cochain& c) { return d2()(c); }

Cochain d2_plus_d1sq(const Cochain& c) { return d2_apply(c) + d1(D1Mode::M2Ideal).power(c, 2); }

WCocycle w_cocycle(const OmegaSpec& spec, const Field& field) {
  require_odd_characteristic(field);
  check_spec(spec, 3);
  WCocycle w{Cochain(field), 0};
  Cochain xi = Cochain::monomial(field, spec.indices);
  for (int l = 0; !xi.is_zero(); ++l) {
    int a = spec.last() + 1 + l;
    Cochain kept = drop_e1(xi, w.dropped);
    // omega(kept ^ e^a ^ e^{a+1})
    w.form += inverse_power_of_two(field, l) * alternating_tail(wedge(kept, Cochain::monomial(field, {a})), a + 1, 2);
    // e^1 is killed by T, so dropped terms never come back
    xi = d2_plus_d1sq(kept);
  }
  if (!differential(m2(), w.form).is_zero())
    throw Error(ErrorCode::ClosednessFailed, "w" + spec.to_string() + " is not closed in m2");
  return w;
}

Cochain d_minus2_class(const OmegaSpec& spec, const Field& field) {
  require_odd_characteristic(field);
  check_spec(spec, 3);
  std::size_t dropped = 0;
  int i = spec.last();
  Cochain out(field);
  Cochain xi = Cochain::monomial(field, Monomial(spec.indices.begin(), spec.indices.end() - 1));
  for (int l = 0; !xi.is_zero(); ++l) {
    Cochain kept = drop_e1(xi, dropped);
    Cochain top = wedge(kept, Cochain::monomial(field, {i + 1 + l}));
    out += inverse_power_of_two(field, l + 1) * alternating_tail(top, i + 2 + l, 3);
    xi = d2_plus_d1sq(kept);
  }
  return out;
}

Monomial leading_term(const Cochain& c) {
  const Monomial* found = nullptr;
  for (const auto& [m, coeff] : c.terms()) {
    if (m.size() < 2 || m[m.size() - 1] != m[m.size() - 2] + 1) continue;
    if (found) throw Error(ErrorCode::NoLeadingTerm, "several monomials end in an adjacent pair");
    found = &m;
  }
  if (!found) throw Error(ErrorCode::NoLeadingTerm, "no monomial ends in an adjacent pair: " + to_text(c));
  return *found;
}

Monomial shift_last_index(Monomial m) {
  if (m.empty()) throw Error(ErrorCode::InvalidIndices, "empty monomial");
  ++m.back();
  return m;
}

}  // namespace filiform
