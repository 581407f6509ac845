#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hqp {

using BigInt = mpz_class;

std::string to_string(const BigInt& value);

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  /// Accepts "p" or "p/q" with an optional leading sign.
  static Rational parse(std::string_view text);

 private:
  mpq_class value_;
};

/// The finite field GF(p^k) = GF(p)[a]/(m(a)).
///
/// Elements are indices in [0, p^k): the index of c_0 + c_1 a + ... + c_{k-1} a^{k-1}
/// is c_0 + c_1 p + ... + c_{k-1} p^{k-1}, so 0 and 1 are the field's zero and one
/// and the prime subfield occupies [0, p). Multiplication uses log/antilog tables
/// over a primitive element and addition of nonzero elements uses Zech logarithms.
class GaloisField {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint64_t kMaxOrder = 1u << 20;

  /// `modulus` holds coefficients from the constant term upwards and must be monic.
  static std::shared_ptr<const GaloisField> create(std::uint32_t p,
                                                   std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  Elem from_integer(std::int64_t n) const;
  Elem generator() const { return k_ == 1 ? 0 : p_; }
  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& digits) const;

  /// Polynomial in the generator symbol, e.g. "a^2+2*a+1", "0".
  std::string to_string(Elem a, std::string_view symbol = "a") const;
  std::string modulus_string(std::string_view symbol = "a") const;

  bool same_as(const GaloisField& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

 private:
  GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  Elem mul_slow(Elem a, Elem b) const;
  Elem add_slow(Elem a, Elem b) const;

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;             // exp_[i] = g^i, length 2(q-1)
  std::vector<std::uint32_t> log_;    // log_[exp_[i]] = i
  std::vector<std::int64_t> zech_;    // log(1 + g^n), -1 when 1 + g^n = 0
  std::uint32_t log_minus_one_ = 0;
};

/// True when `modulus` (monic, coefficients low to high) has no factor of degree
/// between 1 and deg/2 over GF(p). Trial division; meant for small degrees.
bool is_irreducible_mod_p(std::uint32_t p, const std::vector<std::uint32_t>& modulus);

bool is_prime(std::uint64_t n);

class FieldElement;

/// Runtime handle to a coefficient field: the rationals or a finite field.
/// Copies share the same immutable descriptor.
class Field {
 public:
  static Field rationals();
  static Field prime(std::uint32_t p);
  static Field extension(std::uint32_t p, std::vector<std::uint32_t> modulus);
  /// GF(p^k) with the built-in default modulus (k = 1 gives the prime field).
  static Field galois(std::uint32_t p, std::uint32_t k);

  /// Default moduli for orders 4, 8, 9, 16, 25, 27, 49, 64, 81, 729.
  static const std::vector<std::uint32_t>* default_modulus(std::uint32_t p, std::uint32_t k);

  bool is_rational() const { return !gf_; }
  bool is_finite() const { return static_cast<bool>(gf_); }
  std::uint64_t order() const { return gf_ ? gf_->order() : 0; }
  std::uint32_t characteristic() const { return gf_ ? gf_->characteristic() : 0; }
  std::uint32_t degree() const { return gf_ ? gf_->degree() : 1; }
  const GaloisField& galois() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_integer(const BigInt& n) const;
  /// Throws CoefficientNotInField when the denominator vanishes mod p.
  FieldElement from_rational(const Rational& r) const;
  /// The extension generator `a`. Throws CoefficientNotInField for Q and prime fields.
  FieldElement generator() const;
  /// Element with the given index of a finite field.
  FieldElement element(GaloisField::Elem index) const;

  /// "Q", "GF(7)" or "GF(4; a^2+a+1)".
  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const GaloisField> gf) : gf_(std::move(gf)) {}
  std::shared_ptr<const GaloisField> gf_;
};

/// An element together with the field it lives in. Binary operations on elements
/// from different fields throw FieldMismatch.
class FieldElement {
 public:
  FieldElement() : FieldElement(Field::rationals(), Rational()) {}
  FieldElement(Field field, Rational value) : field_(std::move(field)), value_(std::move(value)) {}
  FieldElement(Field field, GaloisField::Elem value) : field_(std::move(field)), value_(value) {}

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  const Rational& rational() const { return std::get<Rational>(value_); }
  GaloisField::Elem index() const { return std::get<GaloisField::Elem>(value_); }

  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;

 private:
  Field field_;
  std::variant<Rational, GaloisField::Elem> value_;
};

}  // namespace hqp
