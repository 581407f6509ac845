#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hqp/fields.hpp"

namespace hqp {

using Exponent = std::uint32_t;

/// Exponent vector x_1^e_1 ... x_n^e_n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  bool is_one() const;
  std::uint64_t total_degree() const;
  /// Indices of variables with nonzero exponent.
  std::vector<std::size_t> support() const;

  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Positive integer variable weights.
class WeightVector {
 public:
  WeightVector() = default;
  /// Throws NonPositiveWeight for any entry < 1.
  explicit WeightVector(std::vector<std::int64_t> weights);

  std::size_t size() const { return w_.size(); }
  std::int64_t operator[](std::size_t i) const { return w_[i]; }
  const std::vector<std::int64_t>& entries() const { return w_; }

  std::int64_t lcm() const;
  std::int64_t gcd() const;
  std::int64_t sum() const;
  /// W / gcd(W).
  WeightVector normalized() const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) = default;

 private:
  std::vector<std::int64_t> w_;
};

/// w(m) = sum of exponent times weight. Overflow-checked.
std::int64_t weight(const Monomial& m, const WeightVector& w);

enum class TieBreak { Lex, DegRevLex };

/// The weighted degree order: compare weights first, then the tie-break order.
/// `precedence` lists variable indices from most to least significant; lex
/// makes the first of them the largest variable.
class WeightedOrder {
 public:
  WeightedOrder() = default;
  WeightedOrder(WeightVector weights, TieBreak tiebreak, std::vector<std::size_t> precedence);
  /// Lex tie-break with x_1 > x_2 > ... > x_n.
  explicit WeightedOrder(WeightVector weights);

  const WeightVector& weights() const { return weights_; }
  TieBreak tiebreak() const { return tiebreak_; }
  const std::vector<std::size_t>& precedence() const { return precedence_; }
  std::size_t nvars() const { return weights_.size(); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const WeightedOrder& a, const WeightedOrder& b) = default;

 private:
  std::strong_ordering tiebreak_compare(const Monomial& a, const Monomial& b) const;

  WeightVector weights_;
  TieBreak tiebreak_ = TieBreak::Lex;
  std::vector<std::size_t> precedence_;
};

std::strong_ordering compare(const Monomial& a, const Monomial& b, const WeightedOrder& order);

/// Coefficient field, variable names and monomial order of a polynomial ring.
class Ring {
 public:
  Ring(Field field, std::vector<std::string> variables, WeightedOrder order);

  static std::shared_ptr<const Ring> make(Field field, std::vector<std::string> variables,
                                          WeightedOrder order) {
    return std::make_shared<const Ring>(std::move(field), std::move(variables), std::move(order));
  }

  const Field& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const WeightedOrder& order() const { return order_; }
  const WeightVector& weights() const { return order_.weights(); }
  std::optional<std::size_t> variable_index(std::string_view name) const;

  /// "x^2*y", or "1" for the unit monomial.
  std::string monomial_to_string(const Monomial& m) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  Field field_;
  std::vector<std::string> vars_;
  WeightedOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Term {
  Monomial monomial;
  FieldElement coefficient;
};

/// Sparse polynomial with terms sorted descending under the ring's order.
/// No zero coefficients and no repeated monomials are ever stored.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const FieldElement& c);
  static Polynomial term(RingPtr ring, Monomial m, const FieldElement& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  /// Combines duplicate monomials, drops zeros and sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Throws ZeroPolynomial on 0.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const FieldElement& leading_coefficient() const { return leading_term().coefficient; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const FieldElement& c) const;
  Polynomial mul_term(const Monomial& m, const FieldElement& c) const;
  /// Divides by the leading coefficient. Zero stays zero.
  Polynomial monic() const;
  Polynomial pow(std::uint64_t e) const;

  FieldElement evaluate(std::span<const FieldElement> point) const;
  /// Same terms, re-sorted under another ring with the same field and variable count.
  Polynomial with_ring(RingPtr other) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& other) const;
  Polynomial combine(const Polynomial& rhs, bool subtract) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Support monomials of maximal weight under `w`, in descending order of the ring.
std::vector<Monomial> top_weight_monomials(const Polynomial& f, const WeightVector& w);

bool is_w_homogeneous(const Polynomial& f, const WeightVector& w);

}  // namespace hqp
