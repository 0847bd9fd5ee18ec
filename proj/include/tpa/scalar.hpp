#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tpa {

using BigRational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rational, Prime };

// Scalar field descriptor: the rationals, or GF(p) for an odd prime p < 2^31.
struct Field {
  FieldKind kind = FieldKind::Rational;
  std::int64_t p = 0;  // modulus, 0 in rational mode

  static Field rationals() { return Field{FieldKind::Rational, 0}; }
  static Field gf(std::int64_t p);

  bool is_rational() const { return kind == FieldKind::Rational; }
  bool operator==(const Field&) const = default;
  std::string describe() const;  // "Q" or "GF(p)"
};

bool is_odd_prime(std::int64_t p);

// Exact field element tagged with its field. Rational values are kept
// gcd-reduced with positive denominator (cpp_rational maintains this);
// prime-field values are residues in [0, p).
class Scalar {
 public:
  Scalar() : fld_(Field::rationals()), q_(0), r_(0) {}

  static Scalar zero(const Field& f) { return from_int(0, f); }
  static Scalar one(const Field& f) { return from_int(1, f); }
  static Scalar from_int(std::int64_t n, const Field& f);
  static Scalar from_rational(const BigRational& q);  // rational field
  static Scalar from_residue(std::int64_t r, const Field& f);

  // Accepts "-?digits(/digits)?" over Q and "-?digits" over GF(p).
  // GF(p) input is reduced mod p silently.
  static Scalar parse(const std::string& text, const Field& f);

  const Field& field() const { return fld_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;  // throws on zero
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical exact text: "3", "-1/2" over Q; the residue digits over GF(p).
  std::string str() const;

  const BigRational& rational() const;
  std::int64_t residue() const;

 private:
  Field fld_;
  BigRational q_;
  std::int64_t r_;

  void require_same_field(const Scalar& o) const;
};

}  // namespace tpa
