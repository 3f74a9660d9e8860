#include "filiform/scalar.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

namespace filiform {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorCode::ClosednessFailed: return "ClosednessFailed";
    case ErrorCode::InvalidIndices: return "InvalidIndices";
    case ErrorCode::NoLeadingTerm: return "NoLeadingTerm";
    case ErrorCode::InvalidLambda: return "InvalidLambda";
    case ErrorCode::FieldNotOrdered: return "FieldNotOrdered";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
  }
  return "Unknown";
}

namespace {

constexpr std::uint64_t kMaxPrime = 1ULL << 31;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t reduce_mod(const mpz_class& n, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

void check_same(const Scalar::Residue& a, const Scalar::Residue& b) {
  if (a.modulus != b.modulus)
    throw Error(ErrorCode::FieldMismatch, "residues modulo different primes");
}

[[noreturn]] void mismatch() {
  throw Error(ErrorCode::FieldMismatch, "rational combined with prime-field element");
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxPrime || !is_prime(p))
    throw Error(ErrorCode::InvalidField, "characteristic " + std::to_string(p) + " is not a supported prime");
  return Field(Kind::PrimeField, p);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  constexpr std::string_view prefix = "fp:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return prime(p);
  }
  throw Error(ErrorCode::InvalidField, "expected \"q\" or \"fp:<prime>\", got \"" + std::string(text) + "\"");
}

std::string Field::to_string() const {
  return is_rationals() ? std::string("q") : "fp:" + std::to_string(p_);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long n) const {
  if (is_rationals()) return Scalar(mpq_class(n));
  long r = n % static_cast<long>(p_);
  if (r < 0) r += static_cast<long>(p_);
  return Scalar(Scalar::Residue{static_cast<std::uint64_t>(r), p_});
}

Scalar Field::from_mpz(const mpz_class& n) const {
  if (is_rationals()) return Scalar(mpq_class(n));
  return Scalar(Scalar::Residue{reduce_mod(n, p_), p_});
}

Scalar Field::make(const mpz_class& n, const mpz_class& d) const {
  if (is_rationals()) {
    if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    return Scalar(mpq_class(n, d));
  }
  auto den = from_mpz(d);
  if (den.is_zero())
    throw Error(ErrorCode::DivisionByZero, "denominator vanishes modulo " + std::to_string(p_));
  return from_mpz(n) * den.inverse();
}

Scalar Field::from_rational(const mpq_class& value) const {
  return make(value.get_num(), value.get_den());
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string s(text);
  try {
    if (auto pos = s.find(" mod "); pos != std::string::npos) {
      auto p = std::stoull(s.substr(pos + 5));
      if (is_rationals() || p != p_) throw Error(ErrorCode::FieldMismatch, "scalar \"" + s + "\" is not in " + to_string());
      return from_mpz(mpz_class(s.substr(0, pos)));
    }
    if (auto pos = s.find('/'); pos != std::string::npos)
      return make(mpz_class(s.substr(0, pos)), mpz_class(s.substr(pos + 1)));
    return from_mpz(mpz_class(s));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "malformed scalar \"" + s + "\"");
  }
}

Field Scalar::field() const {
  if (is_rational()) return Field::rationals();
  return Field(Field::Kind::PrimeField, std::get<Residue>(value_).modulus);
}

bool Scalar::is_zero() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<Residue>(value_).value == 0;
}

bool Scalar::is_one() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<Residue>(value_).value == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (auto q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(1) / *q);
  const auto& r = std::get<Residue>(value_);
  return Scalar(Residue{pow_mod(r.value, r.modulus - 2, r.modulus), r.modulus});
}

Scalar Scalar::operator-() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(-*q));
  const auto& r = std::get<Residue>(value_);
  return Scalar(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (auto q = std::get_if<mpq_class>(&value_)) {
    if (!other.is_rational()) mismatch();
    *q += other.rational();
    return *this;
  }
  if (other.is_rational()) mismatch();
  auto& r = std::get<Residue>(value_);
  const auto& o = std::get<Residue>(other.value_);
  check_same(r, o);
  r.value = (r.value + o.value) % r.modulus;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  if (auto q = std::get_if<mpq_class>(&value_)) {
    if (!other.is_rational()) mismatch();
    *q *= other.rational();
    return *this;
  }
  if (other.is_rational()) mismatch();
  auto& r = std::get<Residue>(value_);
  const auto& o = std::get<Residue>(other.value_);
  check_same(r, o);
  r.value = r.value * o.value % r.modulus;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() != b.is_rational()) return false;
  if (a.is_rational()) return a.rational() == b.rational();
  return std::get<Scalar::Residue>(a.value_) == std::get<Scalar::Residue>(b.value_);
}

std::string Scalar::serialize() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return q->get_num().get_str() + "/" + q->get_den().get_str();
  const auto& r = std::get<Residue>(value_);
  return std::to_string(r.value) + " mod " + std::to_string(r.modulus);
}

std::string Scalar::to_string() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<Residue>(value_).value);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar arith(const Field& field, ArithOp op, const Scalar& a, const Scalar* b) {
  if (a.field() != field || (b && b->field() != field))
    throw Error(ErrorCode::FieldMismatch, "operand outside " + field.to_string());
  switch (op) {
    case ArithOp::Add:
    case ArithOp::Mul:
      if (!b) throw Error(ErrorCode::InvalidParameter, "binary operation needs two operands");
      return op == ArithOp::Add ? a + *b : a * *b;
    case ArithOp::Neg: return -a;
    case ArithOp::Inv: return a.inverse();
  }
  return a;
}

}  // namespace filiform
