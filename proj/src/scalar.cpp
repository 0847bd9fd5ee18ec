#include "tpa/scalar.hpp"

namespace tpa {

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

Field Field::gf(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31))
    throw std::invalid_argument("GF modulus too large: " + std::to_string(p));
  if (!is_odd_prime(p))
    throw std::invalid_argument("GF modulus must be an odd prime, got " +
                                std::to_string(p));
  return Field{FieldKind::Prime, p};
}

std::string Field::describe() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p) + ")";
}

namespace {

std::int64_t mod_reduce(std::int64_t n, std::int64_t p) {
  std::int64_t r = n % p;
  return r < 0 ? r + p : r;
}

// Inverse of a mod p by extended Euclid; a must be nonzero mod p.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("residue not invertible");
  return mod_reduce(t, p);
}

}  // namespace

Scalar Scalar::from_int(std::int64_t n, const Field& f) {
  Scalar s;
  s.fld_ = f;
  if (f.is_rational())
    s.q_ = n;
  else
    s.r_ = mod_reduce(n, f.p);
  return s;
}

Scalar Scalar::from_rational(const BigRational& q) {
  Scalar s;
  s.fld_ = Field::rationals();
  s.q_ = q;
  return s;
}

Scalar Scalar::from_residue(std::int64_t r, const Field& f) {
  if (f.is_rational())
    throw std::logic_error("from_residue requires a prime field");
  Scalar s;
  s.fld_ = f;
  s.r_ = mod_reduce(r, f.p);
  return s;
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
  auto fail = [&] {
    throw std::invalid_argument("bad scalar literal: '" + text + "'");
  };
  if (text.empty()) fail();
  std::size_t pos = text[0] == '-' ? 1 : 0;
  std::size_t slash = std::string::npos;
  if (pos == text.size()) fail();
  for (std::size_t i = pos; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/' && f.is_rational() && slash == std::string::npos &&
        i > pos && i + 1 < text.size()) {
      slash = i;
    } else if (c < '0' || c > '9') {
      fail();
    }
  }
  if (f.is_rational()) {
    boost::multiprecision::cpp_int num(text.substr(0, slash));
    boost::multiprecision::cpp_int den = 1;
    if (slash != std::string::npos) {
      den = boost::multiprecision::cpp_int(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    }
    return from_rational(BigRational(num, den));
  }
  // Residues can exceed int64 as text; reduce digit by digit.
  std::int64_t r = 0;
  for (std::size_t i = pos; i < text.size(); ++i)
    r = (r * 10 + (text[i] - '0')) % f.p;
  if (text[0] == '-') r = mod_reduce(-r, f.p);
  return from_residue(r, f);
}

bool Scalar::is_zero() const {
  return fld_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return fld_.is_rational() ? q_ == 1 : r_ == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (fld_ != o.fld_)
    throw std::logic_error("scalar field mismatch: " + fld_.describe() +
                           " vs " + o.fld_.describe());
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  Scalar s;
  s.fld_ = fld_;
  if (fld_.is_rational())
    s.q_ = q_ + o.q_;
  else
    s.r_ = (r_ + o.r_) % fld_.p;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  Scalar s;
  s.fld_ = fld_;
  if (fld_.is_rational())
    s.q_ = q_ - o.q_;
  else
    s.r_ = mod_reduce(r_ - o.r_, fld_.p);
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  Scalar s;
  s.fld_ = fld_;
  if (fld_.is_rational())
    s.q_ = q_ * o.q_;
  else
    s.r_ = (r_ * o.r_) % fld_.p;  // p < 2^31 keeps the product in range
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.fld_ = fld_;
  if (fld_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = mod_reduce(-r_, fld_.p);
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar s;
  s.fld_ = fld_;
  if (fld_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = mod_inverse(r_, fld_.p);
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (fld_ != o.fld_) return false;
  return fld_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (!fld_.is_rational()) return std::to_string(r_);
  std::string s = boost::multiprecision::numerator(q_).str();
  auto den = boost::multiprecision::denominator(q_);
  if (den != 1) s += "/" + den.str();
  return s;
}

const BigRational& Scalar::rational() const {
  if (!fld_.is_rational()) throw std::logic_error("not a rational scalar");
  return q_;
}

std::int64_t Scalar::residue() const {
  if (fld_.is_rational()) throw std::logic_error("not a prime-field scalar");
  return r_;
}

}  // namespace tpa
