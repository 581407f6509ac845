#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hqp/poly.hpp"

namespace hqp {

/// Ideal generated by monomials, kept as its minimal generating set
/// (an antichain under divisibility) in a canonical order.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  /// True when some generator divides m.
  bool contains(const Monomial& m) const;

  /// (M : m), generated by lcm(g, m) / m.
  MonomialIdeal colon(const Monomial& m) const;
  /// Variables appearing in no generator.
  std::vector<std::size_t> absent_variables() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) = default;

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

/// Reduced Groebner basis: monic elements sorted ascending by leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> basis)
      : ring_(std::move(ring)), basis_(std::move(basis)) {}

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  const std::vector<Polynomial>& polynomials() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  std::vector<Monomial> leading_monomials() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> basis_;
};

struct GroebnerOptions {
  std::uint64_t pair_budget = 100000;
};

/// Full reduction of f by `divisors`: the leading reducible term is always
/// reduced next, and divisors are tried in the given order.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis of the ideal generated by `generators` under the
/// ring's weighted order. Throws ResourceExhausted after `pair_budget` S-pairs.
GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> generators,
                         const GroebnerOptions& options = {});

/// Every S-polynomial of `polys` reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> polys);

MonomialIdeal initial_ideal(const GroebnerBasis& basis);

/// Every variable has a pure power in the ideal.
bool staircase_is_finite(const MonomialIdeal& ideal);

/// Monomials outside the ideal, ascending under `order`. Throws
/// InfiniteStaircase when the staircase is infinite and ResourceExhausted
/// beyond `limit` monomials.
std::vector<Monomial> enumerate_staircase(const MonomialIdeal& ideal, const WeightedOrder& order,
                                          std::uint64_t limit = 10'000'000);

/// Up to `max_count` staircase monomials of weight exactly k, found by bounded
/// exponent search.
std::vector<Monomial> staircase_of_weight(const MonomialIdeal& ideal, const WeightVector& w,
                                          std::int64_t k, std::size_t max_count);

}  // namespace hqp
