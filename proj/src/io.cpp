#include "hqp/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <regex>
#include <set>

#include "hqp/error.hpp"

namespace hqp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string located(const std::string& message, int line, int column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

// ---------------------------------------------------------------------------
// Polynomial expressions

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string_view text;
  int column;  // 1-based within the source
};

std::vector<Token> tokenize(std::string_view src, int line, int column_offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    const int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, src.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Name, src.substr(i, j - i), col});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw Error(ErrorKind::SyntaxError,
                    located(std::string("unexpected character '") + c + "'", line, column_offset + col),
                    SourceLocation{line, column_offset + col});
    }
    out.push_back({kind, src.substr(i, 1), col});
    ++i;
  }
  out.push_back({Tok::End, {}, static_cast<int>(src.size()) + 1});
  return out;
}

class ExpressionParser {
 public:
  ExpressionParser(std::string_view src, RingPtr ring, int line, int column_offset)
      : tokens_(tokenize(src, line, column_offset)), ring_(std::move(ring)), line_(line), offset_(column_offset) {}

  Polynomial parse() {
    auto p = expr();
    if (peek().kind != Tok::End) fail(ErrorKind::SyntaxError, "unexpected '" + std::string(peek().text) + "'");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(ErrorKind kind, const std::string& message) const { fail_at(kind, message, peek().column); }

  [[noreturn]] void fail_at(ErrorKind kind, const std::string& message, int column) const {
    const int col = offset_ + column;
    throw Error(kind, located(message, line_, col), SourceLocation{line_, col});
  }

  Polynomial expr() {
    bool negate = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negate = next().kind == Tok::Minus;
    auto acc = term();
    if (negate) acc = -acc;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      auto t = term();
      if (minus) {
        acc -= t;
      } else {
        acc += t;
      }
    }
    return acc;
  }

  Polynomial term() {
    auto acc = factor();
    while (peek().kind == Tok::Star) {
      next();
      acc = acc * factor();
    }
    return acc;
  }

  std::uint64_t exponent() {
    if (peek().kind != Tok::Number) fail(ErrorKind::SyntaxError, "expected a non-negative integer exponent");
    const auto& tok = next();
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
      fail_at(ErrorKind::SyntaxError, "exponent too large", tok.column);
    }
    return value;
  }

  Polynomial factor() {
    const auto& field = ring_->field();
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Number: {
        next();
        BigInt num(std::string(tok.text), 10);
        BigInt den = 1;
        if (peek().kind == Tok::Slash) {
          next();
          if (peek().kind != Tok::Number) fail(ErrorKind::SyntaxError, "expected an integer denominator");
          const auto& d = next();
          den = BigInt(std::string(d.text), 10);
          if (den == 0) fail_at(ErrorKind::DivisionByZero, "zero denominator", d.column);
        }
        try {
          return Polynomial::constant(ring_, field.from_rational(Rational(num, den)));
        } catch (const Error& e) {
          fail_at(e.kind(), e.what(), tok.column);
        }
      }
      case Tok::Name: {
        next();
        Polynomial base(ring_);
        if (auto idx = ring_->variable_index(tok.text)) {
          base = Polynomial::variable(ring_, *idx);
        } else if (tok.text == "a" && field.is_finite() && field.degree() > 1) {
          base = Polynomial::constant(ring_, field.generator());
        } else if (tok.text == "a") {
          fail_at(ErrorKind::CoefficientNotInField,
                  "generator symbol 'a' is not defined over " + field.to_string(), tok.column);
        } else {
          fail_at(ErrorKind::UnknownVariable, "unknown variable '" + std::string(tok.text) + "'", tok.column);
        }
        if (peek().kind == Tok::Caret) {
          next();
          return base.pow(exponent());
        }
        return base;
      }
      case Tok::LParen: {
        next();
        auto inner = expr();
        if (peek().kind != Tok::RParen) fail(ErrorKind::SyntaxError, "expected ')'");
        next();
        if (peek().kind == Tok::Caret) {
          next();
          return inner.pow(exponent());
        }
        return inner;
      }
      case Tok::End:
        fail(ErrorKind::SyntaxError, "unexpected end of expression");
      default:
        fail(ErrorKind::SyntaxError, "expected a coefficient, a variable or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  RingPtr ring_;
  int line_;
  int offset_;
};

std::int64_t parse_int(std::string_view text, ErrorKind kind, const std::string& what, int line) {
  text = trim(text);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(kind, "line " + std::to_string(line) + ": malformed " + what + " '" + std::string(text) + "'",
                SourceLocation{line, 1});
  }
  return value;
}

}  // namespace

Polynomial parse_polynomial(std::string_view source, const RingPtr& ring, int line, int column_offset) {
  return ExpressionParser(source, ring, line, column_offset).parse();
}

// ---------------------------------------------------------------------------
// Fields

Field parse_field(std::string_view text) {
  const std::string s(trim(text));
  if (s == "Q") return Field::rationals();
  static const std::regex pattern(R"(GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?(?:;\s*(.*\S)\s*)?\))");
  std::smatch m;
  if (!std::regex_match(s, m, pattern)) {
    throw Error(ErrorKind::InvalidField, "unrecognized field '" + s + "'; expected Q, GF(p), GF(p^k) or GF(p^k; m(a))");
  }
  std::uint64_t p = std::stoull(m[1].str());
  std::uint64_t k = m[2].matched ? std::stoull(m[2].str()) : 1;
  if (k == 0) throw Error(ErrorKind::InvalidField, "extension degree must be positive");
  if (!m[2].matched && !is_prime(p)) {
    // GF(q) for a prime power q.
    std::uint64_t base = 0;
    for (std::uint64_t f = 2; f * f <= p; ++f) {
      if (p % f == 0) {
        base = f;
        break;
      }
    }
    if (base == 0 || !is_prime(base)) throw Error(ErrorKind::InvalidField, "field order " + m[1].str() + " is not a prime power");
    std::uint64_t rest = p;
    k = 0;
    while (rest % base == 0) {
      rest /= base;
      ++k;
    }
    if (rest != 1) throw Error(ErrorKind::InvalidField, "field order " + m[1].str() + " is not a prime power");
    p = base;
  }
  if (!is_prime(p)) throw Error(ErrorKind::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
  if (p > GaloisField::kMaxOrder || k > 64) throw Error(ErrorKind::InvalidField, "field too large");
  const auto p32 = static_cast<std::uint32_t>(p);
  if (!m[3].matched) return Field::galois(p32, static_cast<std::uint32_t>(k));

  const auto ring = Ring::make(Field::prime(p32), {"a"}, WeightedOrder(WeightVector({1})));
  const auto modulus = parse_polynomial(m[3].str(), ring);
  if (modulus.is_zero()) throw Error(ErrorKind::InvalidField, "zero modulus");
  const auto degree = modulus.leading_monomial()[0];
  if (m[2].matched && degree != k) {
    throw Error(ErrorKind::InvalidField, "modulus degree " + std::to_string(degree) + " differs from k = " + std::to_string(k));
  }
  std::vector<std::uint32_t> coeffs(degree + 1, 0);
  for (const auto& t : modulus.terms()) coeffs[t.monomial[0]] = t.coefficient.index();
  return Field::extension(p32, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Problem files

namespace {

struct Entry {
  std::string value;
  int line;
  int value_column;  // 0-based column where the value starts
};

WeightedOrder parse_order(const Entry& e, const std::vector<std::string>& vars, const WeightVector& weights) {
  static const std::regex pattern(R"(\s*(lex|degrevlex)\s*(?:\((.*)\))?\s*)");
  std::smatch m;
  if (!std::regex_match(e.value, m, pattern)) {
    throw Error(ErrorKind::InvalidProblem,
                "line " + std::to_string(e.line) + ": order must be lex or degrevlex, optionally with (x > y > ...)",
                SourceLocation{e.line, e.value_column + 1});
  }
  const auto tiebreak = m[1].str() == "lex" ? TieBreak::Lex : TieBreak::DegRevLex;
  std::vector<std::size_t> precedence(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) precedence[i] = i;
  if (m[2].matched) {
    const std::string chain = m[2].str();
    const bool descending = chain.find('>') != std::string::npos;
    const bool ascending = chain.find('<') != std::string::npos;
    if (descending && ascending) {
      throw Error(ErrorKind::InvalidProblem, "line " + std::to_string(e.line) + ": mix of '<' and '>' in order",
                  SourceLocation{e.line, e.value_column + 1});
    }
    std::vector<std::size_t> listed;
    for (auto name : split(chain, descending ? '>' : '<')) {
      name = trim(name);
      const auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) {
        throw Error(ErrorKind::UnknownVariable,
                    "line " + std::to_string(e.line) + ": unknown variable '" + std::string(name) + "' in order",
                    SourceLocation{e.line, e.value_column + 1});
      }
      listed.push_back(static_cast<std::size_t>(it - vars.begin()));
    }
    if (!descending) std::reverse(listed.begin(), listed.end());
    const std::set<std::size_t> unique(listed.begin(), listed.end());
    if (listed.size() != vars.size() || unique.size() != vars.size()) {
      throw Error(ErrorKind::InvalidProblem,
                  "line " + std::to_string(e.line) + ": order must list every variable exactly once",
                  SourceLocation{e.line, e.value_column + 1});
    }
    precedence = listed;
  }
  return WeightedOrder(weights, tiebreak, precedence);
}

}  // namespace

ProblemSpec parse_problem(std::string_view contents) {
  static const std::set<std::string> known = {"field", "vars", "weights", "order", "ideal", "q", "code_k"};
  std::map<std::string, Entry> entries;
  int line_no = 0;
  for (auto raw : split(contents, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line_no) + ": expected 'key = value'",
                  SourceLocation{line_no, 1});
    }
    const std::string key(trim(line.substr(0, eq)));
    if (!known.count(key)) {
      throw Error(ErrorKind::InvalidProblem, "line " + std::to_string(line_no) + ": unknown key '" + key + "'",
                  SourceLocation{line_no, 1});
    }
    if (entries.count(key)) {
      throw Error(ErrorKind::InvalidProblem, "line " + std::to_string(line_no) + ": duplicate key '" + key + "'",
                  SourceLocation{line_no, 1});
    }
    std::size_t start = eq + 1;
    while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
    entries[key] = Entry{std::string(trim(line.substr(eq + 1))), line_no, static_cast<int>(start)};
  }
  for (const char* required : {"field", "vars", "weights"}) {
    if (!entries.count(required)) {
      throw Error(ErrorKind::InvalidProblem, std::string("missing required key '") + required + "'");
    }
  }

  const auto& field_entry = entries["field"];
  Field field = [&] {
    try {
      return parse_field(field_entry.value);
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(field_entry.line) + ": " + e.what(),
                  SourceLocation{field_entry.line, field_entry.value_column + 1});
    }
  }();

  const auto& vars_entry = entries["vars"];
  std::vector<std::string> vars;
  for (auto name : split(vars_entry.value, ',')) {
    name = trim(name);
    if (!is_identifier(name)) {
      throw Error(ErrorKind::InvalidProblem,
                  "line " + std::to_string(vars_entry.line) + ": invalid variable name '" + std::string(name) + "'",
                  SourceLocation{vars_entry.line, vars_entry.value_column + 1});
    }
    if (std::find(vars.begin(), vars.end(), name) != vars.end()) {
      throw Error(ErrorKind::InvalidProblem,
                  "line " + std::to_string(vars_entry.line) + ": duplicate variable '" + std::string(name) + "'",
                  SourceLocation{vars_entry.line, vars_entry.value_column + 1});
    }
    if (name == "a" && field.is_finite() && field.degree() > 1) {
      throw Error(ErrorKind::InvalidProblem,
                  "line " + std::to_string(vars_entry.line) + ": 'a' is reserved for the extension field generator",
                  SourceLocation{vars_entry.line, vars_entry.value_column + 1});
    }
    vars.emplace_back(name);
  }

  const auto& weights_entry = entries["weights"];
  std::string_view wtext = trim(weights_entry.value);
  if (wtext.size() >= 2 && wtext.front() == '[' && wtext.back() == ']') wtext = wtext.substr(1, wtext.size() - 2);
  std::vector<std::int64_t> raw_weights;
  for (auto item : split(wtext, ',')) {
    raw_weights.push_back(parse_int(item, ErrorKind::InvalidProblem, "weight", weights_entry.line));
  }
  if (raw_weights.size() != vars.size()) {
    throw Error(ErrorKind::WeightCountMismatch,
                "line " + std::to_string(weights_entry.line) + ": " + std::to_string(vars.size()) + " variables but " +
                    std::to_string(raw_weights.size()) + " weights",
                SourceLocation{weights_entry.line, weights_entry.value_column + 1});
  }
  WeightVector weights = [&] {
    try {
      return WeightVector(raw_weights);
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(weights_entry.line) + ": " + e.what(),
                  SourceLocation{weights_entry.line, weights_entry.value_column + 1});
    }
  }();

  WeightedOrder order(weights);
  if (entries.count("order")) order = parse_order(entries["order"], vars, weights);

  ProblemSpec spec;
  spec.ring = Ring::make(field, vars, order);

  if (entries.count("ideal")) {
    const auto& e = entries["ideal"];
    std::size_t local = 0;
    for (auto piece : split(e.value, ';')) {
      const auto trimmed = trim(piece);
      if (!trimmed.empty()) {
        const int offset = e.value_column + static_cast<int>(local + (trimmed.data() - piece.data()));
        spec.generators.push_back(parse_polynomial(trimmed, spec.ring, e.line, offset));
        spec.generator_sources.emplace_back(trimmed);
      }
      local += piece.size() + 1;
    }
  }
  if (entries.count("q")) {
    const auto q = parse_int(entries["q"].value, ErrorKind::InvalidProblem, "q", entries["q"].line);
    if (q < 2) throw Error(ErrorKind::InvalidProblem, "q must be at least 2");
    spec.q = static_cast<std::uint64_t>(q);
  }
  if (entries.count("code_k")) {
    const auto k = parse_int(entries["code_k"].value, ErrorKind::InvalidProblem, "code_k", entries["code_k"].line);
    if (k < 0) throw Error(ErrorKind::InvalidProblem, "code_k must be non-negative");
    spec.code_k = static_cast<std::uint64_t>(k);
  }
  return spec;
}

ProblemSpec with_tiebreak(const ProblemSpec& spec, TieBreak tiebreak) {
  const auto& ring = *spec.ring;
  ProblemSpec out = spec;
  out.ring = Ring::make(ring.field(), ring.variables(),
                        WeightedOrder(ring.weights(), tiebreak, ring.order().precedence()));
  out.generators.clear();
  for (const auto& g : spec.generators) out.generators.push_back(g.with_ring(out.ring));
  return out;
}

// ---------------------------------------------------------------------------
// JSON

Json numerator_to_json(const HilbertNumerator& h) {
  Json coeffs = Json::array();
  for (const auto& c : h.coefficients()) coeffs.push_back(c.get_str());
  return Json{{"numerator", h.to_string()},
              {"numerator_coefficients", coeffs},
              {"denominator_weights", h.weights().entries()},
              {"ri", regularity_index(h)}};
}

Json quasi_polynomial_to_json(const QuasiPolynomial& qp, bool include_all_pieces) {
  Json out{{"period", qp.period()}, {"ri", qp.regularity_index()}};
  if (include_all_pieces) {
    Json pieces = Json::array();
    for (const auto& p : qp.pieces()) pieces.push_back(p.coefficient_strings());
    out["pieces"] = pieces;
  }
  Json distinct = Json::array();
  int max_degree = -1;
  for (const auto& d : qp.distinct_pieces()) {
    max_degree = std::max(max_degree, d.polynomial.degree());
    distinct.push_back(Json{{"coefficients", d.polynomial.coefficient_strings()},
                            {"polynomial", d.polynomial.to_string()},
                            {"residues", d.residues}});
  }
  out["distinct_pieces"] = distinct;
  out["distinct_piece_count"] = distinct.size();
  out["max_piece_degree"] = max_degree;
  return out;
}

Json report_to_json(const OrderDomainReport& report, const Ring& ring) {
  auto monomials = [&](const std::vector<Monomial>& ms) {
    Json arr = Json::array();
    for (const auto& m : ms) arr.push_back(ring.monomial_to_string(m));
    return arr;
  };
  Json basis = Json::array();
  for (const auto& g : report.basis.polynomials()) basis.push_back(g.to_string());

  Json violations = Json::array();
  for (const auto& v : report.c1.violations) {
    violations.push_back(Json{{"generator", v.generator.to_string()},
                              {"top_weight_monomials", monomials(v.top_weight_monomials)}});
  }

  const auto& c2 = report.c2;
  Json witness = nullptr;
  if (c2.witness) {
    witness = Json{{"weight", c2.witness->weight},
                   {"hilbert_value", c2.witness->hilbert_value.get_str()},
                   {"monomials", monomials(c2.witness->monomials)},
                   {"piece_index", c2.witness->piece_index ? Json(*c2.witness->piece_index) : Json(nullptr)}};
  }
  const char* failure = c2.failure == C2Failure::None ? "none" : (c2.failure == C2Failure::Prefix ? "prefix" : "piece");

  Json diagnostics = quasi_polynomial_to_json(c2.quasi_polynomial, false);
  diagnostics["d"] = c2.period;
  diagnostics["ri"] = c2.regularity_index;
  diagnostics["k1"] = c2.k1;
  diagnostics.erase("period");
  const auto num = numerator_to_json(c2.numerator);
  diagnostics["numerator"] = num["numerator"];
  diagnostics["numerator_coefficients"] = num["numerator_coefficients"];

  return Json{{"is_order_domain", report.is_order_domain},
              {"field", ring.field().to_string()},
              {"variables", ring.variables()},
              {"weights", ring.weights().entries()},
              {"groebner_basis", basis},
              {"initial_ideal", monomials(report.initial.generators())},
              {"c1", Json{{"holds", report.c1.holds}, {"violations", violations}}},
              {"c2", Json{{"holds", c2.holds},
                          {"failure", failure},
                          {"witness", witness},
                          {"prefix_scanned", c2.prefix_scanned},
                          {"pieces_zero_or_one", c2.pieces_zero_or_one}}},
              {"shortcut_used", c2.missing_variable ? "missing-variable" : "none"},
              {"missing_variable", c2.missing_variable ? Json(ring.variables()[*c2.missing_variable]) : Json(nullptr)},
              {"diagnostics", diagnostics}};
}

std::string emit(const Json& value, bool pretty) { return value.dump(pretty ? 2 : -1); }

}  // namespace hqp
