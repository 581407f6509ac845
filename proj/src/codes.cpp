#include "hqp/codes.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "hqp/error.hpp"
#include "hqp/hilbert.hpp"

namespace hqp {

namespace {

const GaloisField& finite_field_of(const Field& field) {
  if (!field.is_finite()) throw Error(ErrorKind::InvalidField, "codes need a finite field, got " + field.to_string());
  return field.galois();
}

// Polynomial over GF(q) flattened to (coefficient index, exponents) pairs.
struct CompiledPoly {
  std::vector<std::pair<GaloisField::Elem, Monomial>> terms;

  GaloisField::Elem evaluate(const GaloisField& gf, const Point& p) const {
    GaloisField::Elem sum = 0;
    for (const auto& [c, m] : terms) {
      GaloisField::Elem v = c;
      for (std::size_t i = 0; i < p.size() && v != 0; ++i) {
        if (m[i] != 0) v = gf.mul(v, gf.pow(p[i], m[i]));
      }
      sum = gf.add(sum, v);
    }
    return sum;
  }
};

CompiledPoly compile(const Polynomial& f) {
  CompiledPoly out;
  for (const auto& t : f.terms()) out.terms.emplace_back(t.coefficient.index(), t.monomial);
  return out;
}

GaloisField::Elem evaluate_monomial(const GaloisField& gf, const Monomial& m, const Point& p) {
  GaloisField::Elem v = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (m[i] != 0) v = gf.mul(v, gf.pow(p[i], m[i]));
  }
  return v;
}

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(const GaloisField& gf, std::vector<std::vector<GaloisField::Elem>>& rows,
                                    std::size_t length) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < length && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[r]);
    const auto inv = gf.inv(rows[r][col]);
    for (auto& v : rows[r]) v = gf.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const auto factor = rows[i][col];
      for (std::size_t j = 0; j < length; ++j) rows[i][j] = gf.sub(rows[i][j], gf.mul(factor, rows[r][j]));
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

std::string LinearCode::to_text() const {
  std::ostringstream os;
  const auto& gf = finite_field_of(field);
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ' ';
      os << gf.to_string(row[j]);
    }
    os << '\n';
  }
  return os.str();
}

std::vector<Polynomial> extend_to_Iq(const RingPtr& ring, std::span<const Polynomial> generators, std::uint64_t q) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be at least 2");
  std::vector<Polynomial> out(generators.begin(), generators.end());
  const auto one = ring->field().one();
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    Monomial power(ring->nvars());
    if (q > std::numeric_limits<Exponent>::max()) throw Error(ErrorKind::Overflow, "q too large for an exponent");
    power[i] = static_cast<Exponent>(q);
    out.push_back(Polynomial::term(ring, power, one) - Polynomial::variable(ring, i));
  }
  return out;
}

VarietyPoints enumerate_points(const RingPtr& ring, std::span<const Polynomial> generators, std::uint64_t budget) {
  const auto& gf = finite_field_of(ring->field());
  const auto n = ring->nvars();
  const std::uint64_t q = gf.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > budget / q) {
      throw Error(ErrorKind::ResourceExhausted, "q^n exceeds the point budget of " + std::to_string(budget));
    }
    total *= q;
  }
  std::vector<CompiledPoly> compiled;
  for (const auto& g : generators) compiled.push_back(compile(g));

  VarietyPoints out{ring->field(), n, {}};
  Point p(n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t c = idx;
    for (std::size_t i = n; i-- > 0;) {
      p[i] = static_cast<GaloisField::Elem>(c % q);
      c /= q;
    }
    const bool zero = std::all_of(compiled.begin(), compiled.end(),
                                  [&](const CompiledPoly& f) { return f.evaluate(gf, p) == 0; });
    if (zero) out.points.push_back(p);
  }
  return out;
}

EvaluationCode build_code(const VarietyPoints& points, const std::vector<Monomial>& monomials) {
  const auto& gf = finite_field_of(points.field);
  if (monomials.size() > points.size()) {
    throw Error(ErrorKind::InvalidArgument, "dimension exceeds the number of points");
  }
  EvaluationCode out{monomials, LinearCode{points.field, points.size(), {}}};
  for (const auto& m : monomials) {
    std::vector<GaloisField::Elem> row;
    row.reserve(points.size());
    for (const auto& p : points.points) row.push_back(evaluate_monomial(gf, m, p));
    out.code.rows.push_back(std::move(row));
  }
  if (rank(out.code) != monomials.size()) {
    throw Error(ErrorKind::RankDeficient, "evaluation vectors are linearly dependent");
  }
  return out;
}

std::size_t rank(const LinearCode& code) {
  auto rows = code.rows;
  return row_reduce(finite_field_of(code.field), rows, code.length).size();
}

LinearCode dual_code(const LinearCode& code) {
  const auto& gf = finite_field_of(code.field);
  auto rows = code.rows;
  const auto pivots = row_reduce(gf, rows, code.length);
  LinearCode dual{code.field, code.length, {}};
  std::vector<bool> is_pivot(code.length, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < code.length; ++free) {
    if (is_pivot[free]) continue;
    std::vector<GaloisField::Elem> v(code.length, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = gf.neg(rows[r][free]);
    dual.rows.push_back(std::move(v));
  }
  return dual;
}

std::optional<std::size_t> exact_min_distance(const LinearCode& code, std::uint64_t budget) {
  const auto& gf = finite_field_of(code.field);
  const auto k = code.dimension();
  if (k == 0) return std::nullopt;
  const std::uint64_t q = gf.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > budget / q) {
      throw Error(ErrorKind::ResourceExhausted, "q^k exceeds the enumeration budget of " + std::to_string(budget));
    }
    total *= q;
  }
  std::size_t best = code.length;
  std::vector<GaloisField::Elem> message(k, 0);
  std::vector<GaloisField::Elem> word(code.length);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::uint64_t c = idx;
    for (std::size_t i = k; i-- > 0;) {
      message[i] = static_cast<GaloisField::Elem>(c % q);
      c /= q;
    }
    // Weights are invariant under scaling: only normalized messages.
    const auto first = std::find_if(message.begin(), message.end(), [](auto v) { return v != 0; });
    if (*first != 1) continue;
    std::fill(word.begin(), word.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (message[i] == 0) continue;
      for (std::size_t j = 0; j < code.length; ++j) word[j] = gf.add(word[j], gf.mul(message[i], code.rows[i][j]));
    }
    const auto w = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](auto v) { return v != 0; }));
    best = std::min(best, w);
  }
  return best;
}

std::optional<std::int64_t> rho_evaluate(const Polynomial& f, const GroebnerBasis& basis, const WeightVector& w) {
  const auto remainder = normal_form(f, basis.polynomials());
  if (remainder.is_zero()) return std::nullopt;
  std::int64_t best = -1;
  for (const auto& t : remainder.terms()) best = std::max(best, weight(t.monomial, w));
  return best;
}

// ---------------------------------------------------------------------------
// Semigroup

SemigroupView::SemigroupView(const MonomialIdeal& initial, const WeightVector& w, std::int64_t bound,
                             std::vector<std::int64_t> finite_weights)
    : bound_(bound), member_(static_cast<std::size_t>(std::max<std::int64_t>(bound, 0)) + 1, false),
      finite_(std::move(finite_weights)) {
  std::sort(finite_.begin(), finite_.end());
  if (initial.is_unit() || bound < 0) return;
  const auto h = hilbert_numerator(initial, w);
  const auto hr = hr_values(w, bound);
  const auto values = quotient_h_values(h, hr, bound);
  for (std::int64_t lambda = 0; lambda <= bound; ++lambda) {
    const auto& v = values[static_cast<std::size_t>(lambda)];
    if (v >= 2) {
      throw Error(ErrorKind::NotOrderDomain,
                  "two staircase monomials share weight " + std::to_string(lambda) + "; no value semigroup");
    }
    member_[static_cast<std::size_t>(lambda)] = (v == 1);
  }
}

bool SemigroupView::contains(std::int64_t lambda) const {
  if (lambda < 0) return false;
  if (lambda > bound_) {
    throw Error(ErrorKind::BoundExceeded,
                std::to_string(lambda) + " exceeds the semigroup bound " + std::to_string(bound_));
  }
  return member_[static_cast<std::size_t>(lambda)];
}

std::size_t mu(std::int64_t lambda, const SemigroupView& gamma) {
  if (lambda > gamma.bound()) {
    throw Error(ErrorKind::BoundExceeded,
                std::to_string(lambda) + " exceeds the semigroup bound " + std::to_string(gamma.bound()));
  }
  std::size_t count = 0;
  for (std::int64_t alpha = 0; alpha <= lambda; ++alpha) {
    if (gamma.contains(alpha) && gamma.contains(lambda - alpha)) ++count;
  }
  return count;
}

std::size_t sigma(std::int64_t alpha, const SemigroupView& gamma) {
  std::size_t count = 0;
  for (auto lambda : gamma.finite_weights()) {
    if (lambda >= alpha && gamma.contains(lambda - alpha)) ++count;
  }
  return count;
}

DistanceBounds distance_bounds(const EvaluationCode& code, const WeightVector& w, const SemigroupView& gamma) {
  DistanceBounds bounds;
  std::vector<std::int64_t> chosen;
  for (const auto& m : code.monomials) chosen.push_back(weight(m, w));
  bounds.primal = std::numeric_limits<std::size_t>::max();
  for (auto alpha : chosen) bounds.primal = std::min(bounds.primal, sigma(alpha, gamma));
  if (chosen.empty()) bounds.primal = 0;

  const auto& finite = gamma.finite_weights();
  const std::int64_t top = finite.empty() ? -1 : finite.back();
  for (std::int64_t lambda = 0; lambda <= top; ++lambda) {
    if (!gamma.contains(lambda)) continue;
    if (std::find(chosen.begin(), chosen.end(), lambda) != chosen.end()) continue;
    const auto m = mu(lambda, gamma);
    if (!bounds.dual || m < *bounds.dual) bounds.dual = m;
  }
  return bounds;
}

OrderDomainCodeSetup prepare_order_domain_code(const ProblemSpec& spec, const OrderDomainReport& report,
                                               const GroebnerOptions& options, std::uint64_t point_budget) {
  if (!report.is_order_domain) {
    throw Error(ErrorKind::NotOrderDomain, "distance bounds are only defined for order domains");
  }
  const auto& ring = spec.ring;
  const auto& gf = finite_field_of(ring->field());
  const std::uint64_t q = spec.q.value_or(gf.order());
  if (q != gf.order()) {
    throw Error(ErrorKind::InvalidProblem,
                "q = " + std::to_string(q) + " differs from the field order " + std::to_string(gf.order()));
  }
  auto points = enumerate_points(ring, spec.generators, point_budget);
  const auto iq = extend_to_Iq(ring, spec.generators, q);
  auto basis = buchberger(ring, iq, options);
  auto initial = initial_ideal(basis);
  auto staircase = enumerate_staircase(initial, ring->order());
  if (staircase.size() != points.size()) {
    throw Error(ErrorKind::RankDeficient, "staircase of I_q has " + std::to_string(staircase.size()) +
                                              " monomials but the variety has " + std::to_string(points.size()) +
                                              " points");
  }
  std::vector<std::int64_t> finite;
  for (const auto& m : staircase) finite.push_back(weight(m, ring->weights()));
  const std::int64_t bound = finite.empty() ? 0 : *std::max_element(finite.begin(), finite.end());
  SemigroupView gamma(report.initial, ring->weights(), bound, finite);
  return OrderDomainCodeSetup{std::move(points), std::move(basis), std::move(initial), std::move(staircase),
                              std::move(gamma)};
}

EvaluationCode order_domain_code(const OrderDomainCodeSetup& setup, std::size_t k) {
  if (k > setup.staircase.size()) {
    throw Error(ErrorKind::InvalidArgument, "k = " + std::to_string(k) + " exceeds the code length " +
                                                std::to_string(setup.staircase.size()));
  }
  const std::vector<Monomial> chosen(setup.staircase.begin(), setup.staircase.begin() + static_cast<std::ptrdiff_t>(k));
  return build_code(setup.points, chosen);
}

}  // namespace hqp
