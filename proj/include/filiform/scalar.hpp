#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "filiform/error.hpp"

namespace filiform {

class Scalar;

/// The coefficient field: the rationals or a prime field F_p.
///
/// Fields are cheap value types. Parsed from "q" or "fp:<prime>".
class Field {
 public:
  enum class Kind { Rationals, PrimeField };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  /// Throws InvalidField unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  static Field parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long n) const;
  Scalar from_mpz(const mpz_class& n) const;
  /// n/d reduced into the field; DivisionByZero if d vanishes in the field.
  Scalar make(const mpz_class& n, const mpz_class& d) const;
  Scalar from_rational(const mpq_class& value) const;
  /// Inverse of Scalar::serialize.
  Scalar parse_scalar(std::string_view text) const;

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

/// Exact field element. Rationals are kept reduced with positive denominator;
/// residues lie in [0, p).
class Scalar {
 public:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }
  explicit Scalar(Residue r) : value_(r) {}

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<Residue>(value_).value; }

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "n/d" over Q, "r mod p" over F_p.
  std::string serialize() const;
  /// Short human form: "-3/2", "5" (residues print as the representative).
  std::string to_string() const;

 private:
  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

enum class ArithOp { Add, Mul, Neg, Inv };

/// Uniform entry point mirroring the four primitive field operations.
Scalar arith(const Field& field, ArithOp op, const Scalar& a, const Scalar* b = nullptr);

}  // namespace filiform
