#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hqp/groebner.hpp"
#include "hqp/orderdomain.hpp"
#include "hqp/problem.hpp"

namespace hqp {

using Point = std::vector<GaloisField::Elem>;

/// Rational points of V(I_q), in lexicographic order of coordinate indices.
struct VarietyPoints {
  Field field;
  std::size_t nvars = 0;
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }
};

/// Rows of a generator matrix over a finite field.
struct LinearCode {
  Field field;
  std::size_t length = 0;
  std::vector<std::vector<GaloisField::Elem>> rows;

  std::size_t dimension() const { return rows.size(); }
  /// One row per line, entries separated by spaces.
  std::string to_text() const;
};

/// C(I, L): evaluations of the monomials spanning L at the variety points.
struct EvaluationCode {
  std::vector<Monomial> monomials;
  LinearCode code;
};

/// I + (x_1^q - x_1, ..., x_n^q - x_n).
std::vector<Polynomial> extend_to_Iq(const RingPtr& ring, std::span<const Polynomial> generators, std::uint64_t q);

/// Exhaustive scan of GF(q)^n. Throws ResourceExhausted when q^n > budget.
VarietyPoints enumerate_points(const RingPtr& ring, std::span<const Polynomial> generators,
                               std::uint64_t budget = 10'000'000);

/// Throws RankDeficient when the evaluation vectors are dependent.
EvaluationCode build_code(const VarietyPoints& points, const std::vector<Monomial>& monomials);

std::size_t rank(const LinearCode& code);
/// Generator matrix of the orthogonal complement under the standard inner product.
LinearCode dual_code(const LinearCode& code);

/// Minimum Hamming weight over all nonzero codewords; std::nullopt for the zero
/// code. Throws ResourceExhausted when q^k > budget.
std::optional<std::size_t> exact_min_distance(const LinearCode& code, std::uint64_t budget = 1'000'000);

/// Largest weight in the support of the normal form of f, std::nullopt for -infinity.
std::optional<std::int64_t> rho_evaluate(const Polynomial& f, const GroebnerBasis& basis, const WeightVector& w);

/// Value semigroup Gamma = w(staircase of I) up to a bound, plus the finite
/// weight set w(staircase of I_q). Membership uses H_{R/in(I)}(lambda) = 1,
/// which is only meaningful for order domains.
class SemigroupView {
 public:
  SemigroupView(const MonomialIdeal& initial, const WeightVector& w, std::int64_t bound,
                std::vector<std::int64_t> finite_weights);

  std::int64_t bound() const { return bound_; }
  const std::vector<std::int64_t>& finite_weights() const { return finite_; }
  /// Throws BoundExceeded above the bound.
  bool contains(std::int64_t lambda) const;

 private:
  std::int64_t bound_;
  std::vector<bool> member_;
  std::vector<std::int64_t> finite_;
};

/// |{alpha in Gamma : lambda - alpha in Gamma}|.
std::size_t mu(std::int64_t lambda, const SemigroupView& gamma);
/// |{lambda in finite weights : lambda - alpha in Gamma}|.
std::size_t sigma(std::int64_t alpha, const SemigroupView& gamma);

struct DistanceBounds {
  std::size_t primal = 0;
  /// Absent when no admissible lambda exists below the largest finite weight.
  std::optional<std::size_t> dual;
};

DistanceBounds distance_bounds(const EvaluationCode& code, const WeightVector& w, const SemigroupView& gamma);

/// Everything needed to build order-domain codes for one problem.
struct OrderDomainCodeSetup {
  VarietyPoints points;
  GroebnerBasis iq_basis{nullptr, {}};
  MonomialIdeal iq_initial{0};
  /// Staircase of in(I_q), ascending.
  std::vector<Monomial> staircase;
  SemigroupView gamma;
};

/// Refuses (NotOrderDomain) unless `report` certifies an order domain.
OrderDomainCodeSetup prepare_order_domain_code(const ProblemSpec& spec, const OrderDomainReport& report,
                                               const GroebnerOptions& options = {},
                                               std::uint64_t point_budget = 10'000'000);

/// Code spanned by the k smallest staircase monomials of in(I_q).
EvaluationCode order_domain_code(const OrderDomainCodeSetup& setup, std::size_t k);

}  // namespace hqp
