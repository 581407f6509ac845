#include "hqp/fields.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

#include "hqp/error.hpp"

namespace hqp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::CoefficientNotInField: return "CoefficientNotInField";
    case ErrorKind::WeightCountMismatch: return "WeightCountMismatch";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::InvalidProblem: return "InvalidProblem";
    case ErrorKind::ResourceExhausted: return "ResourceExhausted";
    case ErrorKind::InfiniteStaircase: return "InfiniteStaircase";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::NonIntegerIntermediate: return "NonIntegerIntermediate";
    case ErrorKind::NegativeValue: return "NegativeValue";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotOrderDomain: return "NotOrderDomain";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const BigInt& value) { return value.get_str(); }

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero rational");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

BigInt parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw Error(ErrorKind::SyntaxError, "malformed integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

// ---------------------------------------------------------------------------
// Small polynomial helpers over GF(p), coefficients low to high.

namespace {

using PolyP = std::vector<std::uint32_t>;

void trim(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p prime; Fermat.
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of f modulo g (g nonzero).
PolyP poly_rem(PolyP f, const PolyP& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t c = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = c * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
  PolyP m = modulus;
  trim(m);
  if (m.size() < 2) return false;
  const std::size_t k = m.size() - 1;
  if (k == 1) return true;
  // Every monic candidate divisor of degree 1..k/2.
  for (std::size_t deg = 1; deg <= k / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      PolyP g(deg + 1, 0);
      g[deg] = 1;
      std::uint64_t c = code;
      for (std::size_t i = 0; i < deg; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (poly_rem(m, g, p).empty()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// GaloisField

std::shared_ptr<const GaloisField> GaloisField::create(std::uint32_t p,
                                                       std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
  }
  for (auto& c : modulus) {
    if (c >= p) throw Error(ErrorKind::InvalidField, "modulus coefficient out of range");
  }
  trim(modulus);
  if (modulus.size() < 2) throw Error(ErrorKind::InvalidField, "modulus must have degree >= 1");
  if (modulus.back() != 1) throw Error(ErrorKind::InvalidField, "modulus must be monic");
  std::uint64_t order = 1;
  for (std::size_t i = 1; i < modulus.size(); ++i) {
    order *= p;
    if (order > kMaxOrder) {
      throw Error(ErrorKind::InvalidField, "field order exceeds " + std::to_string(kMaxOrder));
    }
  }
  if (!is_irreducible_mod_p(p, modulus)) {
    std::ostringstream os;
    os << "modulus is reducible over GF(" << p << ")";
    throw Error(ErrorKind::ReducibleModulus, os.str());
  }
  return std::shared_ptr<const GaloisField>(new GaloisField(p, std::move(modulus)));
}

GaloisField::GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(static_cast<std::uint32_t>(modulus.size() - 1)), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < k_; ++i) q_ *= p_;
  const std::uint32_t group = q_ - 1;

  auto slow_pow = [this](Elem a, std::uint64_t e) {
    Elem result = 1;
    while (e) {
      if (e & 1) result = mul_slow(result, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return result;
  };

  Elem g = 1;
  if (group > 1) {
    const auto factors = prime_factors(group);
    for (Elem cand = 2; cand < q_; ++cand) {
      bool primitive = true;
      for (auto f : factors) {
        if (slow_pow(cand, group / f) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        g = cand;
        break;
      }
    }
  }

  exp_.assign(2 * static_cast<std::size_t>(group), 0);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    exp_[i] = x;
    exp_[i + group] = x;
    log_[x] = i;
    x = mul_slow(x, g);
  }
  zech_.assign(group, -1);
  for (std::uint32_t n = 0; n < group; ++n) {
    const Elem s = add_slow(1, exp_[n]);
    zech_[n] = s == 0 ? -1 : static_cast<std::int64_t>(log_[s]);
  }
  log_minus_one_ = (p_ == 2) ? 0 : group / 2;
}

std::vector<std::uint32_t> GaloisField::digits(Elem a) const {
  std::vector<std::uint32_t> d(k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

GaloisField::Elem GaloisField::from_digits(const std::vector<std::uint32_t>& d) const {
  Elem a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
  return a;
}

GaloisField::Elem GaloisField::add_slow(Elem a, Elem b) const {
  auto da = digits(a);
  const auto db = digits(b);
  for (std::uint32_t i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
  return from_digits(da);
}

GaloisField::Elem GaloisField::mul_slow(Elem a, Elem b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  PolyP prod(2 * k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
    }
  }
  auto r = poly_rem(prod, modulus_, p_);
  r.resize(k_, 0);
  return from_digits(r);
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t group = q_ - 1;
  const std::uint32_t la = log_[a];
  const std::uint32_t n = (log_[b] + group - la) % group;
  const std::int64_t z = zech_[n];
  if (z < 0) return 0;
  return exp_[la + static_cast<std::uint32_t>(z)];
}

GaloisField::Elem GaloisField::neg(Elem a) const {
  if (a == 0 || p_ == 2) return a;
  return exp_[log_[a] + log_minus_one_];
}

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in GF(" + std::to_string(q_) + ")");
  const std::uint32_t group = q_ - 1;
  return exp_[(group - log_[a]) % group];
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t group = q_ - 1;
  return exp_[static_cast<std::size_t>((log_[a] * (e % group)) % group)];
}

GaloisField::Elem GaloisField::from_integer(std::int64_t n) const {
  const std::int64_t p = p_;
  return static_cast<Elem>(((n % p) + p) % p);
}

std::string GaloisField::to_string(Elem a, std::string_view symbol) const {
  if (k_ == 1) return std::to_string(a);
  const auto d = digits(a);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]) + "*";
    out += symbol;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string GaloisField::modulus_string(std::string_view symbol) const {
  std::string out;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    const auto c = modulus_[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += symbol;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Field

Field Field::rationals() { return Field(nullptr); }

Field Field::prime(std::uint32_t p) { return Field(GaloisField::create(p, {0, 1})); }

Field Field::extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  return Field(GaloisField::create(p, std::move(modulus)));
}

const std::vector<std::uint32_t>* Field::default_modulus(std::uint32_t p, std::uint32_t k) {
  // Conway polynomials, constant term first.
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
  };
  const auto it = table.find({p, k});
  return it == table.end() ? nullptr : &it->second;
}

Field Field::galois(std::uint32_t p, std::uint32_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidField, "extension degree must be >= 1");
  if (k == 1) return prime(p);
  const auto* m = default_modulus(p, k);
  if (m == nullptr) {
    throw Error(ErrorKind::InvalidField, "no default modulus for GF(" + std::to_string(p) + "^" +
                                             std::to_string(k) + "); give one explicitly");
  }
  return extension(p, *m);
}

const GaloisField& Field::galois() const {
  if (!gf_) throw Error(ErrorKind::InvalidField, "Q is not a finite field");
  return *gf_;
}

FieldElement Field::zero() const {
  return gf_ ? FieldElement(*this, GaloisField::Elem{0}) : FieldElement(*this, Rational(0));
}

FieldElement Field::one() const {
  return gf_ ? FieldElement(*this, GaloisField::Elem{1}) : FieldElement(*this, Rational(1));
}

FieldElement Field::from_integer(const BigInt& n) const {
  if (!gf_) return FieldElement(*this, Rational(n));
  const BigInt p = gf_->characteristic();
  BigInt r = n % p;
  if (r < 0) r += p;
  return FieldElement(*this, static_cast<GaloisField::Elem>(r.get_ui()));
}

FieldElement Field::from_rational(const Rational& r) const {
  if (!gf_) return FieldElement(*this, r);
  const auto num = from_integer(r.numerator());
  const auto den = from_integer(r.denominator());
  if (den.is_zero()) {
    throw Error(ErrorKind::CoefficientNotInField,
                "denominator of " + r.to_string() + " vanishes in " + to_string());
  }
  return num / den;
}

FieldElement Field::generator() const {
  if (!gf_ || gf_->degree() == 1) {
    throw Error(ErrorKind::CoefficientNotInField,
                "generator symbol 'a' is only defined for extension fields, not " + to_string());
  }
  return FieldElement(*this, gf_->generator());
}

FieldElement Field::element(GaloisField::Elem index) const {
  if (!gf_ || index >= gf_->order()) {
    throw Error(ErrorKind::InvalidArgument, "element index out of range");
  }
  return FieldElement(*this, index);
}

std::string Field::to_string() const {
  if (!gf_) return "Q";
  if (gf_->degree() == 1) return "GF(" + std::to_string(gf_->characteristic()) + ")";
  return "GF(" + std::to_string(gf_->characteristic()) + "^" + std::to_string(gf_->degree()) + "; " +
         gf_->modulus_string() + ")";
}

bool operator==(const Field& a, const Field& b) {
  if (a.gf_ == b.gf_) return true;
  if (!a.gf_ || !b.gf_) return false;
  return a.gf_->same_as(*b.gf_);
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorKind::FieldMismatch,
                "operands from " + a.field().to_string() + " and " + b.field().to_string());
  }
}

}  // namespace

bool FieldElement::is_zero() const {
  return field_.is_rational() ? rational().is_zero() : index() == 0;
}

bool FieldElement::is_one() const {
  return field_.is_rational() ? rational() == Rational(1) : index() == 1;
}

FieldElement FieldElement::operator-() const {
  if (field_.is_rational()) return {field_, -rational()};
  return {field_, field_.galois().neg(index())};
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (field_.is_rational()) return {field_, Rational(1) / rational()};
  return {field_, field_.galois().inv(index())};
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  if (!field_.is_rational()) return {field_, field_.galois().pow(index(), e)};
  Rational result(1), base = rational();
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return {field_, result};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  if (a.field_.is_rational()) return {a.field_, a.rational() + b.rational()};
  return {a.field_, a.field_.galois().add(a.index(), b.index())};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  if (a.field_.is_rational()) return {a.field_, a.rational() - b.rational()};
  return {a.field_, a.field_.galois().sub(a.index(), b.index())};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  if (a.field_.is_rational()) return {a.field_, a.rational() * b.rational()};
  return {a.field_, a.field_.galois().mul(a.index(), b.index())};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (a.field_.is_rational()) return {a.field_, a.rational() / b.rational()};
  return {a.field_, a.field_.galois().div(a.index(), b.index())};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string FieldElement::to_string() const {
  if (field_.is_rational()) return rational().to_string();
  return field_.galois().to_string(index());
}

}  // namespace hqp
