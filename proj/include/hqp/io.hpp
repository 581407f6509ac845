#pragma once

#include <string>
#include <string_view>

#include "hqp/codes.hpp"
#include "hqp/fields.hpp"
#include "hqp/hilbert.hpp"
#include "hqp/orderdomain.hpp"
#include "hqp/poly.hpp"
#include "hqp/problem.hpp"
#include "json.hpp"

namespace hqp {

/// "Q", "GF(p)", "GF(p^k)", "GF(q)" for a prime power q, or "GF(p^k; m(a))".
Field parse_field(std::string_view text);

/// Parses
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := integer ['/' integer] | name ['^' nat] | '(' expr ')' ['^' nat]
/// where a name is a ring variable or, over an extension field, the generator
/// symbol `a`. Locations in errors are reported as (line, column_offset + col).
Polynomial parse_polynomial(std::string_view source, const RingPtr& ring, int line = 1, int column_offset = 0);

/// Line-oriented `key = value` document with keys field, vars, weights,
/// order, ideal (semicolon separated), q and code_k. `#` starts a comment.
ProblemSpec parse_problem(std::string_view contents);

/// Same problem with a different tie-break (precedence kept).
ProblemSpec with_tiebreak(const ProblemSpec& spec, TieBreak tiebreak);

using Json = nlohmann::json;

Json numerator_to_json(const HilbertNumerator& h);
/// {period, ri, pieces: [[c0, c1, ...], ...]}, coefficients as "p/q" strings.
Json quasi_polynomial_to_json(const QuasiPolynomial& qp, bool include_all_pieces = true);
Json report_to_json(const OrderDomainReport& report, const Ring& ring);

/// Keys come out sorted, so equal values always serialize identically.
std::string emit(const Json& value, bool pretty = false);

}  // namespace hqp
