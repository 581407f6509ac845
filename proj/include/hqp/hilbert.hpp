#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hqp/fields.hpp"
#include "hqp/groebner.hpp"
#include "hqp/poly.hpp"

namespace hqp {

/// Univariate polynomial over Q, coefficients from the constant term upwards,
/// with no trailing zeros (the zero polynomial is empty).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant(const Rational& value) const;
  const Rational& leading_coefficient() const;

  Rational evaluate(const Rational& x) const;
  /// p(x - shift)
  UniPoly shifted(std::int64_t shift) const;
  /// p(x / a)
  UniPoly stretched(std::int64_t a) const;
  UniPoly scaled(const BigInt& factor) const;

  UniPoly& operator+=(const UniPoly& rhs);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  std::vector<std::string> coefficient_strings() const;
  /// "1/6*x + 1", "0", ...
  std::string to_string(std::string_view variable = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// h(t) with HP(t) = h(t) / prod(1 - t^{w_i}).
class HilbertNumerator {
 public:
  HilbertNumerator(std::vector<BigInt> coefficients, WeightVector weights);

  const std::vector<BigInt>& coefficients() const { return h_; }
  const WeightVector& weights() const { return w_; }
  /// -1 for h = 0.
  std::int64_t degree() const { return static_cast<std::int64_t>(h_.size()) - 1; }
  BigInt operator[](std::size_t i) const { return i < h_.size() ? h_[i] : BigInt(0); }
  /// "1 - t^6".
  std::string to_string() const;

 private:
  std::vector<BigInt> h_;
  WeightVector w_;
};

/// Period-d family of pieces; f(k) = P_{k mod d}(k) for k >= regularity_index.
class QuasiPolynomial {
 public:
  QuasiPolynomial(std::vector<UniPoly> pieces, std::int64_t regularity_index);

  std::int64_t period() const { return static_cast<std::int64_t>(pieces_.size()); }
  const std::vector<UniPoly>& pieces() const { return pieces_; }
  const UniPoly& piece(std::int64_t residue) const { return pieces_[static_cast<std::size_t>(residue)]; }
  std::int64_t regularity_index() const { return ri_; }

  Rational evaluate(std::int64_t k) const;

  struct DistinctPiece {
    UniPoly polynomial;
    std::vector<std::int64_t> residues;
  };
  /// Distinct pieces in order of first occurrence.
  std::vector<DistinctPiece> distinct_pieces() const;

 private:
  std::vector<UniPoly> pieces_;
  std::int64_t ri_;
};

/// Numerator of R/M by the colon recursion h(M + (m)) = h(M) - t^{w(m)} h(M : m).
/// Throws UnitIdeal when M = (1).
HilbertNumerator hilbert_numerator(const MonomialIdeal& ideal, const WeightVector& w);

/// max{0, deg h - sum(w) + 1}.
std::int64_t regularity_index(const HilbertNumerator& h);

/// H_R(0..kmax) by the recurrence H(k) = (1/k) sum_{r=1..k} A_r H(k-r) with
/// A_r = sum of the weights dividing r.
std::vector<BigInt> hr_values(const WeightVector& w, std::int64_t kmax);

/// H_{R/M}(k) = sum_i h_i H_R(k - i) for k = 0..kmax.
std::vector<BigInt> quotient_h_values(const HilbertNumerator& h, std::span<const BigInt> hr, std::int64_t kmax);

/// Quasi-polynomial of the polynomial ring itself. Requires gcd(W) = 1.
QuasiPolynomial quasi_poly_R(const WeightVector& w);

/// Quasi-polynomial for a * W from the one for W.
QuasiPolynomial rescale(const QuasiPolynomial& p, std::int64_t a);

/// Quasi-polynomial of R/M from its numerator and the quasi-polynomial of R
/// for the same weights.
QuasiPolynomial quasi_poly_quotient(const HilbertNumerator& h, const QuasiPolynomial& ring_qp);

/// Whole pipeline: numerator, gcd normalization, interpolation, rescale, quotient.
QuasiPolynomial hilbert_quasi_polynomial(const MonomialIdeal& ideal, const WeightVector& w);

}  // namespace hqp
