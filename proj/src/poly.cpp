#include "hqp/poly.hpp"

#include <algorithm>
#include <numeric>

#include "hqp/error.hpp"

namespace hqp {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in weight");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in weight");
  return r;
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                "dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) out.push_back(i);
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_size(size(), other.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  if (!divides(other)) throw Error(ErrorKind::InvalidArgument, "monomial does not divide");
  Monomial q(size());
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] = other.exps_[i] - exps_[i];
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_size(size(), other.size());
  Monomial r(size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  require_same_size(size(), other.size());
  Monomial r(size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  require_same_size(size(), other.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_size(a.size(), b.size());
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (__builtin_add_overflow(a.exps_[i], b.exps_[i], &r.exps_[i])) {
      throw Error(ErrorKind::Overflow, "exponent overflow");
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// WeightVector

WeightVector::WeightVector(std::vector<std::int64_t> weights) : w_(std::move(weights)) {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i] < 1) {
      throw Error(ErrorKind::NonPositiveWeight,
                  "weight " + std::to_string(i + 1) + " is " + std::to_string(w_[i]) + "; weights must be positive");
    }
  }
}

std::int64_t WeightVector::lcm() const {
  std::int64_t l = 1;
  for (auto w : w_) l = checked_mul(l / std::gcd(l, w), w);
  return l;
}

std::int64_t WeightVector::gcd() const {
  std::int64_t g = 0;
  for (auto w : w_) g = std::gcd(g, w);
  return g == 0 ? 1 : g;
}

std::int64_t WeightVector::sum() const {
  std::int64_t s = 0;
  for (auto w : w_) s = checked_add(s, w);
  return s;
}

WeightVector WeightVector::normalized() const {
  const auto g = gcd();
  std::vector<std::int64_t> out(w_);
  for (auto& w : out) w /= g;
  return WeightVector(std::move(out));
}

std::int64_t weight(const Monomial& m, const WeightVector& w) {
  require_same_size(m.size(), w.size());
  std::int64_t total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    total = checked_add(total, checked_mul(static_cast<std::int64_t>(m[i]), w[i]));
  }
  return total;
}

// ---------------------------------------------------------------------------
// WeightedOrder

WeightedOrder::WeightedOrder(WeightVector weights, TieBreak tiebreak, std::vector<std::size_t> precedence)
    : weights_(std::move(weights)), tiebreak_(tiebreak), precedence_(std::move(precedence)) {
  require_same_size(weights_.size(), precedence_.size());
  std::vector<std::size_t> sorted(precedence_);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw Error(ErrorKind::InvalidArgument, "variable precedence is not a permutation");
  }
}

WeightedOrder::WeightedOrder(WeightVector weights) : weights_(std::move(weights)), precedence_(weights_.size()) {
  std::iota(precedence_.begin(), precedence_.end(), std::size_t{0});
}

std::strong_ordering WeightedOrder::tiebreak_compare(const Monomial& a, const Monomial& b) const {
  if (tiebreak_ == TieBreak::Lex) {
    for (auto v : precedence_) {
      if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
  }
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da <=> db;
  for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it) {
    if (a[*it] != b[*it]) return b[*it] <=> a[*it];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering WeightedOrder::compare(const Monomial& a, const Monomial& b) const {
  require_same_size(a.size(), weights_.size());
  require_same_size(b.size(), weights_.size());
  const auto wa = weight(a, weights_);
  const auto wb = weight(b, weights_);
  if (wa != wb) return wa <=> wb;
  return tiebreak_compare(a, b);
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, const WeightedOrder& order) {
  return order.compare(a, b);
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(Field field, std::vector<std::string> variables, WeightedOrder order)
    : field_(std::move(field)), vars_(std::move(variables)), order_(std::move(order)) {
  if (vars_.size() != order_.nvars()) {
    throw Error(ErrorKind::WeightCountMismatch, std::to_string(vars_.size()) + " variables but " +
                                                    std::to_string(order_.nvars()) + " weights");
  }
}

std::optional<std::size_t> Ring::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

std::string Ring::monomial_to_string(const Monomial& m) const {
  require_same_size(m.size(), vars_.size());
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars_[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
  const auto n = ring->nvars();
  return term(std::move(ring), Monomial(n), c);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const FieldElement& c) {
  if (!(c.field() == ring->field())) throw Error(ErrorKind::FieldMismatch, "coefficient not in ring field");
  require_same_size(m.size(), ring->nvars());
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->nvars());
  m[index] = 1;
  auto one = ring->field().one();
  return term(std::move(ring), std::move(m), one);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const auto& order = p.ring_->order();
  for (const auto& t : terms) {
    require_same_size(t.monomial.size(), p.ring_->nvars());
    if (!(t.coefficient.field() == p.ring_->field())) {
      throw Error(ErrorKind::FieldMismatch, "coefficient not in ring field");
    }
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient = p.terms_.back().coefficient + t.coefficient;
      if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
    } else if (!t.coefficient.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no leading term");
  return terms_.front();
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_)) {
    throw Error(ErrorKind::RingMismatch, "polynomials from different rings");
  }
}

Polynomial Polynomial::combine(const Polynomial& rhs, bool subtract) const {
  check_ring(rhs);
  const auto& order = ring_->order();
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < rhs.terms_.size()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (i == terms_.size()) {
      c = std::strong_ordering::less;
    } else if (j == rhs.terms_.size()) {
      c = std::strong_ordering::greater;
    } else {
      c = order.compare(terms_[i].monomial, rhs.terms_[j].monomial);
    }
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      const auto& t = rhs.terms_[j++];
      out.terms_.push_back({t.monomial, subtract ? -t.coefficient : t.coefficient});
    } else {
      auto s = subtract ? terms_[i].coefficient - rhs.terms_[j].coefficient
                        : terms_[i].coefficient + rhs.terms_[j].coefficient;
      if (!s.is_zero()) out.terms_.push_back({terms_[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.monomial, -t.coefficient});
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  *this = combine(rhs, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  *this = combine(rhs, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      products.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
    }
  }
  return Polynomial::from_terms(a.ring_, std::move(products));
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.monomial, t.coefficient * c});
  return out;
}

Polynomial Polynomial::mul_term(const Monomial& m, const FieldElement& c) const {
  // Multiplying by a monomial preserves the order of the terms.
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, t.coefficient * c});
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = constant(ring_, ring_->field().one());
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  require_same_size(point.size(), ring_->nvars());
  auto sum = ring_->field().zero();
  for (const auto& t : terms_) {
    auto v = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.monomial[i] != 0) v = v * point[i].pow(t.monomial[i]);
    }
    sum = sum + v;
  }
  return sum;
}

Polynomial Polynomial::with_ring(RingPtr other) const {
  if (!(other->field() == ring_->field())) throw Error(ErrorKind::RingMismatch, "different coefficient field");
  require_same_size(other->nvars(), ring_->nvars());
  std::vector<Term> copy(terms_);
  return from_terms(std::move(other), std::move(copy));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
        !(a.terms_[i].coefficient == b.terms_[i].coefficient)) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const bool rational = ring_->field().is_rational();
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    bool negative = false;
    std::string coeff;
    if (rational) {
      const auto& r = t.coefficient.rational();
      negative = r.sign() < 0;
      coeff = (negative ? -r : r).to_string();
    } else {
      coeff = t.coefficient.to_string();
      if (coeff.find('+') != std::string::npos) coeff = "(" + coeff + ")";
    }
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.monomial.is_one()) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += ring_->monomial_to_string(t.monomial);
    }
  }
  return out;
}

std::vector<Monomial> top_weight_monomials(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no support");
  std::int64_t top = -1;
  for (const auto& t : f.terms()) top = std::max(top, weight(t.monomial, w));
  std::vector<Monomial> out;
  for (const auto& t : f.terms()) {
    if (weight(t.monomial, w) == top) out.push_back(t.monomial);
  }
  return out;
}

bool is_w_homogeneous(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) return true;
  const auto w0 = weight(f.terms().front().monomial, w);
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const Term& t) { return weight(t.monomial, w) == w0; });
}

}  // namespace hqp
