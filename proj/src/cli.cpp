#include "hqp/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hqp/codes.hpp"
#include "hqp/error.hpp"
#include "hqp/io.hpp"
#include "hqp/orderdomain.hpp"

namespace hqp::cli {

namespace {

struct Settings {
  std::string input;
  std::uint64_t budget_pairs = 100'000;
  std::uint64_t budget_points = 10'000'000;
  std::int64_t kmax = 20;
  std::optional<std::uint64_t> k;
  std::optional<std::string> tiebreak;
  std::optional<std::string> matrix_out;
  bool pretty = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidProblem, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ProblemSpec load(const Settings& s) {
  auto spec = parse_problem(read_file(s.input));
  if (s.tiebreak) {
    if (*s.tiebreak == "lex") {
      spec = with_tiebreak(spec, TieBreak::Lex);
    } else if (*s.tiebreak == "degrevlex") {
      spec = with_tiebreak(spec, TieBreak::DegRevLex);
    } else {
      throw Error(ErrorKind::InvalidArgument, "tie-break must be lex or degrevlex");
    }
  }
  return spec;
}

GroebnerOptions groebner_options(const Settings& s) { return GroebnerOptions{s.budget_pairs}; }

MonomialIdeal initial_of(const ProblemSpec& spec, const Settings& s) {
  return initial_ideal(buchberger(spec.ring, spec.generators, groebner_options(s)));
}

Json error_json(const Error& e) {
  Json out{{"error", Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
  if (e.location()) out["error"]["location"] = Json{{"line", e.location()->line}, {"column", e.location()->column}};
  return out;
}

struct Result {
  Json body;
  int exit_code = kExitTrue;
};

// ---------------------------------------------------------------------------

Result cmd_check(const Settings& s) {
  const auto spec = load(s);
  const auto report = check_order_domain(spec, groebner_options(s));
  return {report_to_json(report, *spec.ring), report.is_order_domain ? kExitTrue : kExitFalse};
}

Result cmd_hilbert_fn(const Settings& s) {
  if (s.kmax < 0) throw Error(ErrorKind::InvalidArgument, "--kmax must be non-negative");
  const auto spec = load(s);
  const auto& w = spec.ring->weights();
  const auto initial = initial_of(spec, s);
  const auto h = hilbert_numerator(initial, w);
  const auto hr = hr_values(w, s.kmax);
  const auto values = quotient_h_values(h, hr, s.kmax);
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.get_str());
  return {Json{{"kmax", s.kmax}, {"weights", w.entries()}, {"values", arr}}};
}

Result cmd_hilbert_series(const Settings& s) {
  const auto spec = load(s);
  const auto& w = spec.ring->weights();
  const auto initial = initial_of(spec, s);
  const auto h = hilbert_numerator(initial, w);
  auto out = numerator_to_json(h);
  std::string denominator;
  for (const auto wi : w.entries()) denominator += "(1 - t^" + std::to_string(wi) + ")";
  out["series"] = "(" + h.to_string() + ")/(" + denominator + ")";
  return {out};
}

Result cmd_quasi_poly(const Settings& s) {
  const auto spec = load(s);
  const auto& w = spec.ring->weights();
  const auto initial = initial_of(spec, s);
  const auto qp = hilbert_quasi_polynomial(initial, w);
  auto out = quasi_polynomial_to_json(qp, true);
  out["d"] = qp.period();
  out["numerator"] = hilbert_numerator(initial, w).to_string();
  return {out};
}

struct CodeContext {
  ProblemSpec spec;
  OrderDomainCodeSetup setup;
  EvaluationCode code;
};

CodeContext build_code_context(const Settings& s) {
  auto spec = load(s);
  const auto k = s.k ? s.k : spec.code_k;
  if (!k) throw Error(ErrorKind::InvalidArgument, "code dimension missing: pass --k or set code_k");
  const auto report = check_order_domain(spec, groebner_options(s));
  auto setup = prepare_order_domain_code(spec, report, groebner_options(s), s.budget_points);
  auto code = order_domain_code(setup, static_cast<std::size_t>(*k));
  if (s.matrix_out) {
    std::ofstream out(*s.matrix_out, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + *s.matrix_out + "'");
    out << code.code.to_text();
  }
  return {std::move(spec), std::move(setup), std::move(code)};
}

Json code_summary(const CodeContext& ctx) {
  Json monomials = Json::array();
  for (const auto& m : ctx.code.monomials) monomials.push_back(ctx.spec.ring->monomial_to_string(m));
  return Json{{"field", ctx.spec.ring->field().to_string()},
              {"n", ctx.setup.points.size()},
              {"k", ctx.code.code.dimension()},
              {"monomials", monomials},
              {"staircase_size", ctx.setup.staircase.size()}};
}

Result cmd_code_bound(const Settings& s) {
  const auto ctx = build_code_context(s);
  const auto bounds = distance_bounds(ctx.code, ctx.spec.ring->weights(), ctx.setup.gamma);
  auto out = code_summary(ctx);
  out["primal_bound"] = bounds.primal;
  out["dual_bound"] = bounds.dual ? Json(*bounds.dual) : Json(nullptr);
  out["finite_weights"] = ctx.setup.gamma.finite_weights();
  return {out};
}

Result cmd_min_distance(const Settings& s) {
  const auto ctx = build_code_context(s);
  const auto d = exact_min_distance(ctx.code.code);
  const auto dual = exact_min_distance(dual_code(ctx.code.code));
  auto out = code_summary(ctx);
  out["min_distance"] = d ? Json(*d) : Json(nullptr);
  out["dual_min_distance"] = dual ? Json(*dual) : Json(nullptr);
  return {out};
}

// ---------------------------------------------------------------------------
// selftest

struct Golden {
  const char* name;
  const char* source;
  bool verdict;
  std::int64_t d;
  std::int64_t ri;
  const char* numerator;
  std::vector<std::string> initial;
  std::size_t distinct_pieces;
  bool shortcut;
};

const std::vector<Golden>& goldens() {
  static const std::vector<Golden> table = {
      {"hermitian",
       "field = GF(4)\nvars = x, y\nweights = 2, 3\norder = lex(y > x)\nideal = x^3 - y^2 - y\n",
       true, 6, 2, "1 - t^6", {"y^2"}, 1, true},
      {"maximal49",
       "field = GF(7^2)\nvars = x, y\nweights = 16, 7\norder = lex(y > x)\nideal = y^16 - x*(x+1)^6\n",
       true, 112, 90, "1 - t^112", {"y^16"}, 1, true},
      {"gk",
       "field = GF(3^6)\nvars = u, v, w\nweights = 28, 21, 27\norder = lex(w > v > u)\n"
       "ideal = v^4 - u^3 - u; w^7 - v^9 + v\n",
       true, 756, 198, "1 - t^84 - t^189 + t^273", {"v^4", "w^7"}, 1, true},
      {"ree",
       "field = GF(3^6)\nvars = x, y, z\nweights = 3, 4, 5\norder = lex(x > y > z)\n"
       "ideal = x^4 - x^2 - y^3 + y; x*y^3 - x*y - z^3 + z\n",
       false, 60, 16, "1 - t^12 - t^15 + t^27", {"x^4", "x^3*z^3", "x^2*z^6", "x*y^3", "x*z^9", "y^15"}, 1, false},
  };
  return table;
}

Result cmd_selftest(const Settings&) {
  Json cases = Json::array();
  bool all = true;
  for (const auto& g : goldens()) {
    const auto spec = parse_problem(g.source);
    const auto report = check_order_domain(spec);
    std::vector<std::string> initial;
    for (const auto& m : report.initial.generators()) initial.push_back(spec.ring->monomial_to_string(m));
    Json mismatches = Json::array();
    auto expect = [&](const char* what, const auto& got, const auto& want) {
      if (!(got == want)) mismatches.push_back(Json{{"field", what}, {"got", got}, {"expected", want}});
    };
    expect("is_order_domain", report.is_order_domain, g.verdict);
    expect("d", report.c2.period, g.d);
    expect("ri", report.c2.regularity_index, g.ri);
    expect("numerator", report.c2.numerator.to_string(), std::string(g.numerator));
    expect("initial_ideal", initial, g.initial);
    expect("distinct_pieces", report.c2.quasi_polynomial.distinct_pieces().size(), g.distinct_pieces);
    expect("shortcut", report.c2.missing_variable.has_value(), g.shortcut);
    const bool ok = mismatches.empty();
    all = all && ok;
    cases.push_back(Json{{"name", g.name}, {"passed", ok}, {"mismatches", mismatches}});
  }
  return {Json{{"passed", all}, {"cases", cases}}, all ? kExitTrue : kExitFalse};
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Hilbert quasi-polynomials and order-domain checks"};
  app.require_subcommand(1, 1);
  Settings s;

  const auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("input", s.input, "Problem file")->required();
    sub->add_option("--budget-pairs", s.budget_pairs, "Maximum number of S-pairs processed");
    sub->add_option("--tiebreak", s.tiebreak, "Tie-break order: lex or degrevlex")
        ->check(CLI::IsMember({"lex", "degrevlex"}));
    sub->add_flag("--json-pretty", s.pretty, "Indent JSON output");
  };
  const auto add_code = [&](CLI::App* sub) {
    sub->add_option("--k", s.k, "Code dimension (overrides code_k)");
    sub->add_option("--budget-points", s.budget_points, "Maximum number of candidate points q^n");
    sub->add_option("--matrix-out", s.matrix_out, "Write the generator matrix as plain text");
  };

  std::map<CLI::App*, std::function<Result(const Settings&)>> handlers;
  auto* check = app.add_subcommand("check", "Decide whether (R/I, <_W) is an order domain");
  add_common(check, true);
  handlers[check] = cmd_check;
  auto* hfn = app.add_subcommand("hilbert-fn", "Hilbert function values H(0..kmax)");
  add_common(hfn, true);
  hfn->add_option("--kmax", s.kmax, "Largest degree");
  handlers[hfn] = cmd_hilbert_fn;
  auto* hs = app.add_subcommand("hilbert-series", "Numerator of the Hilbert series");
  add_common(hs, true);
  handlers[hs] = cmd_hilbert_series;
  auto* qp = app.add_subcommand("quasi-poly", "Hilbert quasi-polynomial of R/in(I)");
  add_common(qp, true);
  handlers[qp] = cmd_quasi_poly;
  auto* cb = app.add_subcommand("code-bound", "Semigroup bounds for an order-domain code");
  add_common(cb, true);
  add_code(cb);
  handlers[cb] = cmd_code_bound;
  auto* md = app.add_subcommand("min-distance", "Exhaustive minimum distance of the code and its dual");
  add_common(md, true);
  add_code(md);
  handlers[md] = cmd_min_distance;
  auto* st = app.add_subcommand("selftest", "Run the built-in curve examples against pinned results");
  add_common(st, false);
  handlers[st] = cmd_selftest;

  Outcome outcome;
  std::vector<const char*> argv{"hqp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    outcome.out = app.help();
    outcome.exit_code = kExitTrue;
    return outcome;
  } catch (const CLI::ParseError& e) {
    const Error err(ErrorKind::InvalidArgument, e.what());
    outcome.out = emit(error_json(err), false) + "\n";
    outcome.exit_code = kExitError;
    return outcome;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto result = handlers.at(chosen)(s);
    outcome.out = emit(result.body, s.pretty) + "\n";
    outcome.exit_code = result.exit_code;
  } catch (const Error& e) {
    outcome.out = emit(error_json(e), s.pretty) + "\n";
    outcome.exit_code = e.kind() == ErrorKind::ResourceExhausted ? kExitResourceExhausted : kExitError;
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream timing;
  timing.setf(std::ios::fixed);
  timing.precision(1);
  timing << chosen->get_name() << ": " << ms << " ms\n";
  outcome.err = timing.str();
  return outcome;
}

}  // namespace hqp::cli
