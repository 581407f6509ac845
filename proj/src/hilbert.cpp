#include "hqp/hilbert.hpp"

#include <algorithm>
#include <map>

#include "hqp/error.hpp"
#include "hqp/linalg.hpp"

namespace hqp {

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool UniPoly::is_constant(const Rational& value) const {
  if (value.is_zero()) return c_.empty();
  return c_.size() == 1 && c_[0] == value;
}

const Rational& UniPoly::leading_coefficient() const {
  if (c_.empty()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no leading coefficient");
  return c_.back();
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::shifted(std::int64_t shift) const {
  if (shift == 0 || c_.empty()) return *this;
  // Horner in the ring Q[x]: acc = acc * (x - shift) + c_i.
  std::vector<Rational> acc;
  const Rational minus_shift(-shift);
  for (std::size_t i = c_.size(); i-- > 0;) {
    std::vector<Rational> next(acc.size() + 1);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] += acc[j] * minus_shift;
    }
    next[0] += c_[i];
    acc = std::move(next);
  }
  return UniPoly(std::move(acc));
}

UniPoly UniPoly::stretched(std::int64_t a) const {
  std::vector<Rational> out(c_);
  BigInt power = 1;
  for (auto& c : out) {
    c /= Rational(power);
    power *= a;
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const BigInt& factor) const {
  std::vector<Rational> out(c_);
  for (auto& c : out) c *= Rational(factor);
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

std::vector<std::string> UniPoly::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.to_string());
  if (out.empty()) out.emplace_back("0");
  return out;
}

std::string UniPoly::to_string(std::string_view variable) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const auto& c = c_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const auto magnitude = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += magnitude.to_string();
      continue;
    }
    if (!(magnitude == Rational(1))) out += magnitude.to_string() + "*";
    out += variable;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// HilbertNumerator / QuasiPolynomial

HilbertNumerator::HilbertNumerator(std::vector<BigInt> coefficients, WeightVector weights)
    : h_(std::move(coefficients)), w_(std::move(weights)) {
  while (!h_.empty() && h_.back() == 0) h_.pop_back();
}

std::string HilbertNumerator::to_string() const {
  if (h_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < h_.size(); ++i) {
    if (h_[i] == 0) continue;
    const bool negative = h_[i] < 0;
    const BigInt magnitude = abs(h_[i]);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

QuasiPolynomial::QuasiPolynomial(std::vector<UniPoly> pieces, std::int64_t regularity_index)
    : pieces_(std::move(pieces)), ri_(regularity_index) {
  if (pieces_.empty()) throw Error(ErrorKind::InvalidArgument, "quasi-polynomial needs at least one piece");
}

Rational QuasiPolynomial::evaluate(std::int64_t k) const {
  const auto d = period();
  const auto residue = ((k % d) + d) % d;
  return piece(residue).evaluate(Rational(k));
}

std::vector<QuasiPolynomial::DistinctPiece> QuasiPolynomial::distinct_pieces() const {
  std::vector<DistinctPiece> out;
  std::map<std::vector<std::string>, std::size_t> seen;
  for (std::int64_t i = 0; i < period(); ++i) {
    const auto& p = piece(i);
    auto key = p.coefficient_strings();
    const auto [it, inserted] = seen.try_emplace(std::move(key), out.size());
    if (inserted) out.push_back({p, {}});
    out[it->second].residues.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Numerator

namespace {

using TPoly = std::vector<BigInt>;

constexpr std::int64_t kMaxNumeratorDegree = 50'000'000;

void trim(TPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// a - t^shift * b
TPoly sub_shifted(TPoly a, const TPoly& b, std::int64_t shift) {
  const auto s = static_cast<std::size_t>(shift);
  if (a.size() < b.size() + s) a.resize(b.size() + s);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + s] -= b[i];
  trim(a);
  return a;
}

TPoly numerator_rec(const MonomialIdeal& ideal, const WeightVector& w) {
  if (ideal.is_zero()) return {1};
  if (ideal.is_unit()) return {};
  const auto& gens = ideal.generators();
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i) {
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) coprime = gens[i].coprime(gens[j]);
  }
  if (coprime) {
    TPoly result{1};
    for (const auto& g : gens) result = sub_shifted(result, result, weight(g, w));
    return result;
  }
  const Monomial& pivot = gens.back();
  const MonomialIdeal rest(ideal.nvars(), std::vector<Monomial>(gens.begin(), gens.end() - 1));
  return sub_shifted(numerator_rec(rest, w), numerator_rec(rest.colon(pivot), w), weight(pivot, w));
}

}  // namespace

HilbertNumerator hilbert_numerator(const MonomialIdeal& ideal, const WeightVector& w) {
  if (w.size() != ideal.nvars()) throw Error(ErrorKind::DimensionMismatch, "weight count differs from variable count");
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "the ideal contains 1");
  Monomial all(ideal.nvars());
  for (const auto& g : ideal.generators()) all = all.lcm(g);
  if (weight(all, w) > kMaxNumeratorDegree) {
    throw Error(ErrorKind::ResourceExhausted, "Hilbert numerator degree bound is too large");
  }
  return HilbertNumerator(numerator_rec(ideal, w), w);
}

std::int64_t regularity_index(const HilbertNumerator& h) {
  if (h.degree() < 0) return 0;
  return std::max<std::int64_t>(0, h.degree() - h.weights().sum() + 1);
}

// ---------------------------------------------------------------------------
// Hilbert function values

std::vector<BigInt> hr_values(const WeightVector& w, std::int64_t kmax) {
  if (kmax < 0) return {};
  const auto size = static_cast<std::size_t>(kmax) + 1;
  // A_r = sum of w_i dividing r: the power sums of the roots of prod(1 - t^{w_i}).
  std::vector<std::int64_t> a(size, 0);
  for (auto wi : w.entries()) {
    for (std::int64_t r = wi; r <= kmax; r += wi) a[static_cast<std::size_t>(r)] += wi;
  }
  std::vector<std::size_t> support;
  for (std::size_t r = 1; r < size; ++r) {
    if (a[r] != 0) support.push_back(r);
  }
  std::vector<BigInt> h(size);
  h[0] = 1;
  BigInt acc;
  for (std::size_t k = 1; k < size; ++k) {
    acc = 0;
    for (auto r : support) {
      if (r > k) break;
      mpz_addmul_ui(acc.get_mpz_t(), h[k - r].get_mpz_t(), static_cast<unsigned long>(a[r]));
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), k)) {
      throw Error(ErrorKind::NonIntegerIntermediate, "H_R(" + std::to_string(k) + ") recurrence is not integral");
    }
    mpz_divexact_ui(h[k].get_mpz_t(), acc.get_mpz_t(), k);
  }
  return h;
}

std::vector<BigInt> quotient_h_values(const HilbertNumerator& h, std::span<const BigInt> hr, std::int64_t kmax) {
  if (kmax < 0) return {};
  if (static_cast<std::int64_t>(hr.size()) <= kmax) {
    throw Error(ErrorKind::InvalidArgument, "H_R values do not cover 0.." + std::to_string(kmax));
  }
  const auto& coeffs = h.coefficients();
  std::vector<BigInt> out(static_cast<std::size_t>(kmax) + 1);
  for (std::int64_t k = 0; k <= kmax; ++k) {
    BigInt v = 0;
    const auto top = std::min<std::int64_t>(k, h.degree());
    for (std::int64_t i = 0; i <= top; ++i) {
      const auto& hi = coeffs[static_cast<std::size_t>(i)];
      if (hi != 0) v += hi * hr[static_cast<std::size_t>(k - i)];
    }
    if (v < 0) throw Error(ErrorKind::NegativeValue, "negative Hilbert function value at k=" + std::to_string(k));
    out[static_cast<std::size_t>(k)] = std::move(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quasi-polynomials

QuasiPolynomial quasi_poly_R(const WeightVector& w) {
  if (w.size() == 0) return QuasiPolynomial({UniPoly({Rational(1)})}, 0);
  if (w.gcd() != 1) throw Error(ErrorKind::InvalidArgument, "weights must have gcd 1; rescale afterwards");
  const auto n = static_cast<std::int64_t>(w.size());
  const auto d = w.lcm();

  BigInt denominator = 1;
  for (std::int64_t i = 2; i < n; ++i) denominator *= i;
  for (auto wi : w.entries()) denominator *= wi;
  const Rational lead(BigInt(1), denominator);

  const auto hr = hr_values(w, std::max<std::int64_t>(0, (n - 1) * d - 1));
  const auto m = static_cast<std::size_t>(n - 1);
  std::vector<UniPoly> pieces;
  pieces.reserve(static_cast<std::size_t>(d));
  for (std::int64_t j = 0; j < d; ++j) {
    IntegerMatrix vandermonde(m, std::vector<BigInt>(m));
    std::vector<Rational> rhs(m);
    for (std::size_t r = 0; r < m; ++r) {
      const BigInt x = j + static_cast<std::int64_t>(r) * d;
      BigInt power = 1;
      for (std::size_t c = 0; c < m; ++c) {
        vandermonde[r][c] = power;
        power *= x;
      }
      // power == x^{n-1}; the known leading term moves to the right-hand side.
      rhs[r] = Rational(hr[static_cast<std::size_t>(x.get_si())]) - lead * Rational(power);
    }
    auto coeffs = solve_fraction_free(std::move(vandermonde), rhs);
    coeffs.push_back(lead);
    pieces.emplace_back(std::move(coeffs));
  }
  return QuasiPolynomial(std::move(pieces), 0);
}

QuasiPolynomial rescale(const QuasiPolynomial& p, std::int64_t a) {
  if (a < 1) throw Error(ErrorKind::InvalidArgument, "rescale factor must be positive");
  if (a == 1) return p;
  const auto d = p.period();
  std::vector<UniPoly> pieces(static_cast<std::size_t>(a * d));
  for (std::int64_t i = 0; i < a * d; i += a) pieces[static_cast<std::size_t>(i)] = p.piece(i / a).stretched(a);
  return QuasiPolynomial(std::move(pieces), p.regularity_index());
}

QuasiPolynomial quasi_poly_quotient(const HilbertNumerator& h, const QuasiPolynomial& ring_qp) {
  const auto d = ring_qp.period();
  if (d != h.weights().lcm()) {
    throw Error(ErrorKind::InvalidArgument, "ring quasi-polynomial period differs from lcm of the weights");
  }
  const auto& coeffs = h.coefficients();
  std::vector<UniPoly> pieces(static_cast<std::size_t>(d));
  for (std::int64_t j = 0; j <= h.degree(); ++j) {
    const auto& hj = coeffs[static_cast<std::size_t>(j)];
    if (hj == 0) continue;
    for (std::int64_t i = 0; i < d; ++i) {
      const auto source = (((i - j) % d) + d) % d;
      pieces[static_cast<std::size_t>(i)] += ring_qp.piece(source).shifted(j).scaled(hj);
    }
  }
  return QuasiPolynomial(std::move(pieces), regularity_index(h));
}

QuasiPolynomial hilbert_quasi_polynomial(const MonomialIdeal& ideal, const WeightVector& w) {
  const auto h = hilbert_numerator(ideal, w);
  const auto ring_qp = rescale(quasi_poly_R(w.normalized()), w.gcd());
  return quasi_poly_quotient(h, ring_qp);
}

}  // namespace hqp
