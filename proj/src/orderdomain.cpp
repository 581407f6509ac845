#include "hqp/orderdomain.hpp"

#include <algorithm>

#include "hqp/error.hpp"

namespace hqp {

C1Result check_c1(const GroebnerBasis& basis, const WeightVector& w) {
  C1Result result;
  for (const auto& g : basis.polynomials()) {
    auto top = top_weight_monomials(g, w);
    // Exactly two: a third tying monomial is rejected as well.
    if (top.size() != 2) {
      result.holds = false;
      result.violations.push_back({g, std::move(top)});
    }
  }
  return result;
}

std::optional<std::size_t> missing_variable_shortcut(const MonomialIdeal& ideal, std::size_t nvars) {
  if (ideal.nvars() != nvars) throw Error(ErrorKind::DimensionMismatch, "ideal has wrong variable count");
  const auto absent = ideal.absent_variables();
  if (absent.empty()) return std::nullopt;
  return absent.front();
}

namespace {

C2Witness witness_at(const MonomialIdeal& ideal, const WeightVector& w, std::int64_t k, const BigInt& value) {
  C2Witness witness;
  witness.weight = k;
  witness.hilbert_value = value;
  witness.monomials = staircase_of_weight(ideal, w, k, 2);
  return witness;
}

constexpr std::int64_t kWitnessSearchSteps = 1'000'000;

}  // namespace

C2Result check_c2(const MonomialIdeal& initial, const WeightVector& w) {
  if (w.size() != initial.nvars()) throw Error(ErrorKind::DimensionMismatch, "weight count differs from variable count");
  C2Result result;
  const auto n = static_cast<std::int64_t>(w.size());
  const auto d = w.lcm();
  result.period = d;

  if (initial.is_unit()) {
    // R/I = 0: the staircase is empty.
    result.numerator = HilbertNumerator({}, w);
    result.quasi_polynomial = QuasiPolynomial(std::vector<UniPoly>(static_cast<std::size_t>(d)), 0);
    return result;
  }

  result.numerator = hilbert_numerator(initial, w);
  result.regularity_index = regularity_index(result.numerator);
  result.k1 = std::max(result.regularity_index, d * (n - 1));
  result.missing_variable = missing_variable_shortcut(initial, initial.nvars());

  if (!result.missing_variable) {
    result.prefix_scanned = true;
    if (result.k1 > 0) {
      const auto hr = hr_values(w, result.k1 - 1);
      const auto h = quotient_h_values(result.numerator, hr, result.k1 - 1);
      for (std::int64_t k = 0; k < result.k1; ++k) {
        if (h[static_cast<std::size_t>(k)] >= 2) {
          result.holds = false;
          result.failure = C2Failure::Prefix;
          result.witness = witness_at(initial, w, k, h[static_cast<std::size_t>(k)]);
          break;
        }
      }
    }
  }

  const auto ring_qp = rescale(quasi_poly_R(w.normalized()), w.gcd());
  result.quasi_polynomial = quasi_poly_quotient(result.numerator, ring_qp);

  std::optional<std::int64_t> bad_piece;
  for (std::int64_t i = 0; i < d; ++i) {
    const auto& p = result.quasi_polynomial.piece(i);
    if (!p.is_constant(Rational(0)) && !p.is_constant(Rational(1))) {
      bad_piece = i;
      break;
    }
  }
  result.pieces_zero_or_one = !bad_piece.has_value();
  if (bad_piece && result.failure == C2Failure::None) {
    result.holds = false;
    result.failure = C2Failure::Piece;
    const auto ri = result.regularity_index;
    const auto i = *bad_piece;
    std::int64_t k = i;
    if (k < ri) k += ((ri - k + d - 1) / d) * d;
    C2Witness witness;
    witness.piece_index = i;
    for (std::int64_t step = 0; step < kWitnessSearchSteps; ++step, k += d) {
      const auto value = result.quasi_polynomial.piece(i).evaluate(Rational(k));
      if (value >= Rational(2)) {
        witness = witness_at(initial, w, k, value.numerator());
        witness.piece_index = i;
        break;
      }
    }
    result.witness = std::move(witness);
  }
  return result;
}

OrderDomainReport check_order_domain(const ProblemSpec& spec, const GroebnerOptions& options) {
  OrderDomainReport report;
  const auto& w = spec.ring->weights();
  report.basis = buchberger(spec.ring, spec.generators, options);
  report.c1 = check_c1(report.basis, w);
  report.initial = initial_ideal(report.basis);
  report.c2 = check_c2(report.initial, w);
  report.is_order_domain = report.c1.holds && report.c2.holds;
  return report;
}

}  // namespace hqp
