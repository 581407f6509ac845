#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "hqp/codes.hpp"
#include "hqp/error.hpp"
#include "hqp/io.hpp"

using namespace hqp;

namespace {

ProblemSpec load(const std::string& name) {
  std::ifstream in(std::string(HQP_PROBLEM_DIR) + "/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_problem(os.str());
}

struct Hermitian {
  ProblemSpec spec = load("hermitian.od");
  OrderDomainReport report = check_order_domain(spec);
  OrderDomainCodeSetup setup = prepare_order_domain_code(spec, report);
};

const Hermitian& hermitian() {
  static const Hermitian h;
  return h;
}

// Numerical semigroup generated by `gens`, as a membership table up to `bound`.
std::vector<bool> semigroup(const std::vector<std::int64_t>& gens, std::int64_t bound) {
  std::vector<bool> in(static_cast<std::size_t>(bound + 1), false);
  in[0] = true;
  for (std::int64_t v = 1; v <= bound; ++v) {
    for (const auto g : gens) {
      if (g <= v && in[static_cast<std::size_t>(v - g)]) in[static_cast<std::size_t>(v)] = true;
    }
  }
  return in;
}

std::size_t hamming(const std::vector<GaloisField::Elem>& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](auto x) { return x != 0; }));
}

// Every codeword of the dual is orthogonal to every row of the code.
bool orthogonal(const LinearCode& a, const LinearCode& b) {
  const auto& gf = a.field.galois();
  for (const auto& r : a.rows) {
    for (const auto& s : b.rows) {
      GaloisField::Elem acc = 0;
      for (std::size_t i = 0; i < r.size(); ++i) acc = gf.add(acc, gf.mul(r[i], s[i]));
      if (acc != 0) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("points of the Hermitian curve over GF(4)") {
  const auto& h = hermitian();
  const auto& gf = h.spec.ring->field().galois();
  // Direct count of x^3 = y^2 + y over GF(4) with table arithmetic.
  std::set<Point> expected;
  for (GaloisField::Elem x = 0; x < 4; ++x) {
    for (GaloisField::Elem y = 0; y < 4; ++y) {
      if (gf.pow(x, 3) == gf.add(gf.mul(y, y), y)) expected.insert({x, y});
    }
  }
  CHECK(expected.size() == 8);
  CHECK(std::set<Point>(h.setup.points.points.begin(), h.setup.points.points.end()) == expected);
  CHECK(h.setup.staircase.size() == h.setup.points.size());
  std::vector<std::string> lead;
  for (const auto& m : h.setup.iq_initial.generators()) lead.push_back(h.spec.ring->monomial_to_string(m));
  std::sort(lead.begin(), lead.end());
  CHECK(lead == std::vector<std::string>{"x^4", "y^2"});
  CHECK(h.setup.gamma.finite_weights() == std::vector<std::int64_t>{0, 2, 3, 4, 5, 6, 7, 9});
}

TEST_CASE("points of the maximal curve over GF(49)") {
  const auto spec = load("maximal49.od");
  const auto& gf = spec.ring->field().galois();
  std::size_t expected = 0;
  for (GaloisField::Elem x = 0; x < 49; ++x) {
    const auto rhs = gf.mul(x, gf.pow(gf.add(x, gf.from_integer(1)), 6));
    for (GaloisField::Elem y = 0; y < 49; ++y) {
      if (gf.pow(y, 16) == rhs) ++expected;
    }
  }
  const auto pts = enumerate_points(spec.ring, extend_to_Iq(spec.ring, spec.generators, 49));
  CHECK(pts.size() == expected);
  CHECK_THROWS_AS((void)enumerate_points(spec.ring, spec.generators, 100), Error);
}

TEST_CASE("semigroup membership, mu and sigma against direct counts") {
  const auto& h = hermitian();
  const auto& gamma = h.setup.gamma;
  const auto in = semigroup({2, 3}, gamma.bound());
  for (std::int64_t v = 0; v <= gamma.bound(); ++v) CHECK(gamma.contains(v) == in[static_cast<std::size_t>(v)]);
  CHECK_THROWS_AS((void)gamma.contains(gamma.bound() + 1), Error);

  for (std::int64_t lambda = 0; lambda <= std::min<std::int64_t>(gamma.bound(), 30); ++lambda) {
    std::size_t expected = 0;
    if (in[static_cast<std::size_t>(lambda)]) {
      for (std::int64_t a = 0; a <= lambda; ++a) {
        if (in[static_cast<std::size_t>(a)] && in[static_cast<std::size_t>(lambda - a)]) ++expected;
      }
    }
    CHECK(mu(lambda, gamma) == expected);
  }
  for (const auto alpha : gamma.finite_weights()) {
    std::size_t expected = 0;
    for (const auto lambda : gamma.finite_weights()) {
      if (lambda >= alpha && in[static_cast<std::size_t>(lambda - alpha)]) ++expected;
    }
    CHECK(sigma(alpha, gamma) == expected);
  }
}

TEST_CASE("rho on the Hermitian coordinate ring") {
  const auto& h = hermitian();
  const auto& w = h.spec.ring->weights();
  CHECK(rho_evaluate(parse_polynomial("x", h.spec.ring), h.report.basis, w) == 2);
  CHECK(rho_evaluate(parse_polynomial("y", h.spec.ring), h.report.basis, w) == 3);
  CHECK(rho_evaluate(parse_polynomial("y^2", h.spec.ring), h.report.basis, w) == 6);
  CHECK(rho_evaluate(parse_polynomial("x*y + 1", h.spec.ring), h.report.basis, w) == 5);
  CHECK(!rho_evaluate(parse_polynomial("x^3 - y^2 - y", h.spec.ring), h.report.basis, w).has_value());
}

TEST_CASE("distance bounds never exceed the true distances") {
  const auto& h = hermitian();
  const auto n = h.setup.points.size();
  for (std::size_t k = 1; k <= n; ++k) {
    CAPTURE(k);
    const auto code = order_domain_code(h.setup, k);
    CHECK(rank(code.code) == k);
    const auto dual = dual_code(code.code);
    CHECK(dual.dimension() == n - k);
    CHECK(orthogonal(code.code, dual));
    const auto bounds = distance_bounds(code, h.spec.ring->weights(), h.setup.gamma);
    const auto d = exact_min_distance(code.code);
    REQUIRE(d.has_value());
    CHECK(bounds.primal <= *d);
    CHECK(bounds.primal >= 1);
    if (bounds.dual && k < n) {
      const auto dd = exact_min_distance(dual);
      REQUIRE(dd.has_value());
      CHECK(*bounds.dual <= *dd);
    }
  }
  const auto four = order_domain_code(h.setup, 4);
  const auto b = distance_bounds(four, h.spec.ring->weights(), h.setup.gamma);
  CHECK(b.primal == 4);
  CHECK(b.dual == std::optional<std::size_t>{4});
  CHECK(exact_min_distance(four.code) == std::optional<std::size_t>{4});
}

TEST_CASE("exhaustive distance on small codes") {
  const auto f2 = Field::prime(2);
  CHECK(exact_min_distance(LinearCode{f2, 3, {{1, 1, 1}}}) == std::optional<std::size_t>{3});
  const LinearCode hamming74{f2, 7, {{1, 0, 0, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}}};
  CHECK(exact_min_distance(hamming74) == std::optional<std::size_t>{3});
  const auto dual = dual_code(hamming74);
  CHECK(dual.dimension() == 3);
  CHECK(exact_min_distance(dual) == std::optional<std::size_t>{4});
  for (const auto& r : dual.rows) CHECK(hamming(r) >= 4);
  CHECK(!exact_min_distance(LinearCode{f2, 3, {}}).has_value());
  CHECK_THROWS_AS((void)exact_min_distance(hamming74, 4), Error);
}

TEST_CASE("dependent evaluation vectors are rejected") {
  const auto& h = hermitian();
  // x^4 = x on GF(4), so 1, x, x^4 would be dependent if x^4 were allowed.
  const Monomial x(std::vector<Exponent>{1, 0});
  const Monomial x4(std::vector<Exponent>{4, 0});
  try {
    (void)build_code(h.setup.points, {x, x4});
    FAIL("expected RankDeficient");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RankDeficient);
  }
}

TEST_CASE("codes are refused for non order domains") {
  auto spec = load("ree.od");
  spec.q = 729;
  const auto report = check_order_domain(spec);
  REQUIRE(!report.is_order_domain);
  try {
    (void)prepare_order_domain_code(spec, report);
    FAIL("expected NotOrderDomain");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotOrderDomain);
  }
}
