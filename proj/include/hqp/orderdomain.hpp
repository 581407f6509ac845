#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hqp/groebner.hpp"
#include "hqp/hilbert.hpp"
#include "hqp/problem.hpp"

namespace hqp {

struct C1Violation {
  Polynomial generator;
  std::vector<Monomial> top_weight_monomials;
};

/// Every basis element has exactly two support monomials of top weight.
struct C1Result {
  bool holds = true;
  std::vector<C1Violation> violations;
};

enum class C2Failure { None, Prefix, Piece };

struct C2Witness {
  std::int64_t weight = 0;
  BigInt hilbert_value;
  /// Two distinct staircase monomials of the same weight (may be empty if
  /// the bounded search gave up, which should not happen).
  std::vector<Monomial> monomials;
  /// Residue of the offending piece for piece failures.
  std::optional<std::int64_t> piece_index;
};

/// No two staircase monomials share a weight, decided through the Hilbert
/// function prefix and the quasi-polynomial pieces.
struct C2Result {
  bool holds = true;
  C2Failure failure = C2Failure::None;
  std::optional<C2Witness> witness;
  std::optional<std::size_t> missing_variable;
  bool prefix_scanned = false;
  bool pieces_zero_or_one = true;
  std::int64_t period = 1;
  std::int64_t regularity_index = 0;
  std::int64_t k1 = 0;
  HilbertNumerator numerator{{}, WeightVector{}};
  QuasiPolynomial quasi_polynomial{{UniPoly()}, 0};
};

struct OrderDomainReport {
  bool is_order_domain = false;
  C1Result c1;
  C2Result c2;
  GroebnerBasis basis{nullptr, {}};
  MonomialIdeal initial{0};
};

C1Result check_c1(const GroebnerBasis& basis, const WeightVector& w);

/// A variable absent from every generator of `ideal`, if any. When one exists
/// the finite Hilbert-function prefix scan is unnecessary.
std::optional<std::size_t> missing_variable_shortcut(const MonomialIdeal& ideal, std::size_t nvars);

C2Result check_c2(const MonomialIdeal& initial, const WeightVector& w);

/// Groebner basis, (C1), initial ideal, (C2). Both conditions are always
/// evaluated so the report carries diagnostics for each.
OrderDomainReport check_order_domain(const ProblemSpec& spec, const GroebnerOptions& options = {});

}  // namespace hqp
