// Acceptance suite: one PASS/FAIL line per criterion, exact tolerances.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hqp/codes.hpp"
#include "hqp/hilbert.hpp"
#include "hqp/io.hpp"
#include "hqp/orderdomain.hpp"
#include "oracles.hpp"

using namespace hqp;

namespace {

struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

ProblemSpec load(const std::string& name) {
  std::ifstream in(std::string(HQP_PROBLEM_DIR) + "/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_problem(os.str());
}

std::vector<std::string> names(const Ring& r, const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(r.monomial_to_string(m));
  return out;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

bool all_pieces_one(const QuasiPolynomial& qp) {
  for (const auto& p : qp.pieces()) {
    if (!p.is_constant(Rational(1))) return false;
  }
  return true;
}

// Two distinct staircase monomials of the reported weight.
bool witness_sound(const MonomialIdeal& m, const WeightVector& w, const std::optional<C2Witness>& wit) {
  if (!wit || wit->monomials.size() != 2) return false;
  const auto& a = wit->monomials[0];
  const auto& b = wit->monomials[1];
  return !(a == b) && !m.contains(a) && !m.contains(b) && weight(a, w) == wit->weight && weight(b, w) == wit->weight;
}

void hermitian(Check& c) {
  const auto spec = load("hermitian.od");
  const auto r = check_order_domain(spec);
  const auto& w = spec.ring->weights();
  const auto h = quotient_h_values(r.c2.numerator, hr_values(w, 4), 4);
  c.expect(r.c2.numerator.to_string() == "1 - t^6", "numerator " + r.c2.numerator.to_string());
  c.expect(r.c2.regularity_index == 2, "ri");
  c.expect(r.c2.period == 6, "d");
  c.expect(r.c2.quasi_polynomial.period() == 6 && all_pieces_one(r.c2.quasi_polynomial), "pieces");
  c.expect(h[1] == 0, "H(1)");
  c.expect(r.is_order_domain, "verdict");
}

void maximal(Check& c) {
  const auto spec = load("maximal49.od");
  const auto r = check_order_domain(spec);
  c.expect(names(*spec.ring, r.initial.generators()) == std::vector<std::string>{"y^16"}, "initial ideal");
  c.expect(r.c2.numerator.to_string() == "1 - t^112", "numerator");
  c.expect(r.c2.regularity_index == 90, "ri");
  c.expect(r.c2.period == 112, "d");
  c.expect(r.c2.quasi_polynomial.period() == 112 && all_pieces_one(r.c2.quasi_polynomial), "pieces");
  c.expect(r.is_order_domain, "verdict");
  c.expect(r.c2.missing_variable == std::optional<std::size_t>{0} && !r.c2.prefix_scanned, "shortcut");
}

void gk(Check& c) {
  const auto spec = load("gk.od");
  const auto r = check_order_domain(spec);
  c.expect(names(*spec.ring, r.initial.generators()) == std::vector<std::string>{"v^4", "w^7"}, "initial ideal");
  c.expect(r.c2.period == 756, "d");
  c.expect(r.c2.quasi_polynomial.period() == 756 && all_pieces_one(r.c2.quasi_polynomial), "pieces");
  c.expect(r.is_order_domain, "verdict");
  c.expect(r.c2.missing_variable == std::optional<std::size_t>{0} && !r.c2.prefix_scanned, "shortcut");
}

void ree(Check& c) {
  const auto spec = load("ree.od");
  const auto& w = spec.ring->weights();
  const auto r = check_order_domain(spec);
  const auto computed = names(*spec.ring, r.initial.generators());
  c.expect(computed == std::vector<std::string>{"x^4", "x*y^3"}, "initial ideal is (" + join(computed) + ")");
  c.note("Groebner basis leading monomials: " + join(computed));

  const auto& qp = r.c2.quasi_polynomial;
  const auto distinct = qp.distinct_pieces().size();
  int max_degree = 0;
  for (const auto& p : qp.pieces()) max_degree = std::max(max_degree, p.degree());
  c.expect(distinct == 60 && max_degree == 1,
           "quasi-polynomial has " + std::to_string(distinct) + " distinct piece(s) of degree " +
               std::to_string(max_degree));

  // The same count on the ideal as stated, (x^4, x*y^3), for comparison.
  const MonomialIdeal stated(3, {Monomial(std::vector<Exponent>{4, 0, 0}), Monomial(std::vector<Exponent>{1, 3, 0})});
  const auto sq = hilbert_quasi_polynomial(stated, w);
  int stated_degree = 0;
  for (const auto& p : sq.pieces()) stated_degree = std::max(stated_degree, p.degree());
  c.note("(x^4, x*y^3) gives " + std::to_string(sq.distinct_pieces().size()) + " distinct pieces of degree " +
         std::to_string(stated_degree) + " among " + std::to_string(sq.period()));

  c.expect(!r.is_order_domain, "verdict");
  c.expect(witness_sound(r.initial, w, r.c2.witness), "witness");
  if (r.c2.witness) {
    c.note("witness " + join(names(*spec.ring, r.c2.witness->monomials)) + " at weight " +
           std::to_string(r.c2.witness->weight));
  }
}

void remark(Check& c) {
  const auto spec = load("remark.od");
  const auto& w = spec.ring->weights();
  const auto r = check_order_domain(spec);
  const auto h = quotient_h_values(r.c2.numerator, hr_values(w, 4), 4);
  c.expect(r.c2.quasi_polynomial.period() == 1 && r.c2.quasi_polynomial.piece(0).is_constant(Rational(1)),
           "piece is 1");
  c.expect(h[1] == 2, "H(1)");
  c.expect(!r.is_order_domain, "verdict");
  c.expect(!r.c2.holds && r.c2.failure == C2Failure::Prefix && r.c2.prefix_scanned, "prefix-scan failure");
  c.expect(witness_sound(r.initial, w, r.c2.witness), "witness");
}

void oracle_suite(Check& c) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> nd(1, 4);
  std::uniform_int_distribution<std::int64_t> kd(0, 120);
  std::size_t hr_ok = 0;
  for (int t = 0; t < 200; ++t) {
    const auto w = oracle::random_weights(rng, nd(rng), 12);
    const auto k = kd(rng);
    if (hr_values(WeightVector(w), k)[static_cast<std::size_t>(k)] == oracle::count_partitions(w, k)) ++hr_ok;
  }
  c.expect(hr_ok == 200, "hr_values " + std::to_string(hr_ok) + "/200");

  std::uniform_int_distribution<std::size_t> n3(1, 3);
  std::uniform_int_distribution<std::uint32_t> e(0, 4);
  std::uniform_int_distribution<int> ng(1, 3);
  std::size_t c2_ok = 0;
  for (int t = 0; t < 50; ++t) {
    const auto n = n3(rng);
    const auto w = oracle::random_weights(rng, n, 6);
    std::vector<std::vector<std::uint32_t>> gens;
    std::vector<Monomial> ms;
    const int g = ng(rng);
    for (int i = 0; i < g; ++i) {
      std::vector<std::uint32_t> v(n);
      for (auto& x : v) x = e(rng);
      if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) v[0] = 1;
      gens.push_back(v);
      ms.emplace_back(v);
    }
    const auto r = check_c2(MonomialIdeal(n, ms), WeightVector(w));
    const auto counts = oracle::staircase_counts(gens, w, r.regularity_index + 2 * r.period);
    const bool collision = std::any_of(counts.begin(), counts.end(), [](const BigInt& v) { return v >= 2; });
    if (r.holds == !collision) ++c2_ok;
  }
  c.expect(c2_ok == 50, "check_c2 " + std::to_string(c2_ok) + "/50");
}

void leading_coefficient(Check& c) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> nd(1, 5);
  int done = 0;
  while (done < 20) {
    const auto w = oracle::random_weights(rng, nd(rng), 7);
    const WeightVector wv(w);
    if (wv.gcd() != 1) continue;
    ++done;
    const auto n = w.size();
    BigInt denom = 1;
    for (std::size_t i = 2; i < n; ++i) denom *= static_cast<long>(i);
    for (const auto x : w) denom *= static_cast<long>(x);
    const auto qp = quasi_poly_R(wv);
    const auto d = qp.period();
    const auto hr = hr_values(wv, 3 * d);
    bool ok = true;
    for (const auto& p : qp.pieces()) {
      ok = ok && p.degree() == static_cast<int>(n) - 1 && p.leading_coefficient() == Rational(BigInt(1), denom);
    }
    for (std::int64_t k = 0; k <= 3 * d; ++k) ok = ok && qp.evaluate(k) == Rational(hr[static_cast<std::size_t>(k)]);
    c.expect(ok, "W = [" + [&] {
      std::string s;
      for (const auto x : w) s += (s.empty() ? "" : ",") + std::to_string(x);
      return s;
    }() + "]");
  }
}

void performance(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto p5 = quasi_poly_R(WeightVector({2, 2, 6, 9, 12}));
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  c.expect(ms < 5000.0, "n=5 took " + std::to_string(ms) + " ms");
  char buf[64];
  std::snprintf(buf, sizeof buf, "n=5 in %.1f ms", ms);
  c.note(buf);
  const auto h5 = hr_values(WeightVector({2, 2, 6, 9, 12}), 2 * p5.period());
  bool ok5 = true;
  for (std::int64_t k = 0; k <= 2 * p5.period(); ++k) ok5 = ok5 && p5.evaluate(k) == Rational(h5[static_cast<std::size_t>(k)]);
  c.expect(ok5, "n=5 pieces");

  const WeightVector w6({1, 1, 1, 2, 2, 9});
  const auto p6 = quasi_poly_R(w6);
  c.expect(p6.period() == 18, "n=6 period");
  const auto h6 = hr_values(w6, 3 * 18);
  bool ok6 = true;
  for (std::int64_t k = 0; k <= 3 * 18; ++k) ok6 = ok6 && p6.evaluate(k) == Rational(h6[static_cast<std::size_t>(k)]);
  c.expect(ok6, "n=6 pieces against H_R");
}

void codes(Check& c) {
  const auto spec = load("hermitian.od");
  const auto report = check_order_domain(spec);
  const auto setup = prepare_order_domain_code(spec, report);
  const auto n = setup.points.size();
  c.expect(n == 8, "points");
  c.expect(setup.staircase.size() == 8, "staircase size");
  std::string table;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto code = order_domain_code(setup, k);
    const auto b = distance_bounds(code, spec.ring->weights(), setup.gamma);
    const auto d = exact_min_distance(code.code);
    c.expect(d && b.primal <= *d, "primal bound at k=" + std::to_string(k));
    std::string dual_text = "-";
    if (k < n) {
      const auto dd = exact_min_distance(dual_code(code.code));
      if (b.dual) {
        c.expect(dd && *b.dual <= *dd, "dual bound at k=" + std::to_string(k));
        dual_text = std::to_string(*b.dual) + "<=" + std::to_string(*dd);
      }
    }
    table += " k=" + std::to_string(k) + ":" + std::to_string(b.primal) + "<=" + (d ? std::to_string(*d) : "?") + "/" +
             dual_text;
  }
  c.note("primal/dual:" + table);
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Check&)> run;
    double limit_ms;
  };
  const std::vector<Criterion> criteria = {
      {1, "Hermitian curve over GF(4)", hermitian, 1000},
      {2, "maximal curve over GF(49)", maximal, 5000},
      {3, "GK curve over GF(729)", gk, 30000},
      {4, "Ree curve over GF(729)", ree, 5000},
      {5, "prefix-scan counterexample", remark, 0},
      {6, "oracle suite", oracle_suite, 0},
      {7, "leading-coefficient law", leading_coefficient, 0},
      {8, "performance of quasi_poly_R", performance, 0},
      {9, "Hermitian code bounds", codes, 0},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (cr.limit_ms > 0 && ms >= cr.limit_ms) check.failures.push_back("runtime over limit");
    const bool pass = check.failures.empty();
    if (!pass) ++failed;
    char head[160];
    std::snprintf(head, sizeof head, "[%s] criterion %d: %s (%.1f ms)", pass ? "PASS" : "FAIL", cr.id, cr.title, ms);
    std::cout << head;
    if (!pass) std::cout << " -- failed: " << join(check.failures);
    std::cout << "\n";
    for (const auto& n : check.notes) std::cout << "    " << n << "\n";
  }
  std::cout << (failed == 0 ? std::string("all criteria passed") : "failed criteria: " + std::to_string(failed)) << "\n";
  return failed == 0 ? 0 : 1;
}
