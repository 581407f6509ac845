#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "hqp/error.hpp"
#include "hqp/io.hpp"
#include "hqp/poly.hpp"

using namespace hqp;

namespace {

RingPtr ring_of(Field field, std::vector<std::string> vars, std::vector<std::int64_t> w,
                std::vector<std::size_t> precedence = {}, TieBreak tb = TieBreak::Lex) {
  if (precedence.empty()) {
    for (std::size_t i = 0; i < vars.size(); ++i) precedence.push_back(i);
  }
  return Ring::make(std::move(field), std::move(vars), WeightedOrder(WeightVector(std::move(w)), tb, precedence));
}

Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, Exponent max_e) {
  std::uniform_int_distribution<Exponent> dist(0, max_e);
  std::vector<Exponent> e(n);
  for (auto& x : e) x = dist(rng);
  return Monomial(e);
}

}  // namespace

TEST_CASE("weights of monomials") {
  CHECK(weight(mono({3, 0}), WeightVector({2, 3})) == 6);
  CHECK(weight(mono({0, 0}), WeightVector({5, 9})) == 0);
  CHECK(weight(mono({1, 2}), WeightVector({16, 7})) == 30);
  CHECK_THROWS_AS((void)weight(mono({1, 2, 3}), WeightVector({1, 1})), Error);
  CHECK_THROWS_AS(WeightVector({0, 3}), Error);
  const WeightVector w({4, 6, 10});
  CHECK(w.lcm() == 60);
  CHECK(w.gcd() == 2);
  CHECK(w.normalized() == WeightVector({2, 3, 5}));
}

TEST_CASE("weighted order comparisons") {
  // Variables (x, y); y is most significant in the tie-break.
  const WeightedOrder order(WeightVector({2, 3}), TieBreak::Lex, {1, 0});
  CHECK(order.compare(mono({3, 0}), mono({0, 2})) < 0);
  CHECK(order.compare(mono({2, 1}), mono({2, 1})) == 0);
  const WeightedOrder ree(WeightVector({3, 4, 5}), TieBreak::Lex, {0, 1, 2});
  CHECK(ree.compare(mono({4, 0, 0}), mono({1, 3, 0})) < 0);
  CHECK_THROWS_AS(WeightedOrder(WeightVector({1, 1}), TieBreak::Lex, {0, 0}), Error);
}

TEST_CASE("degrevlex tie-break") {
  // Equal weight and equal total degree: the smaller power of the last variable wins.
  const WeightedOrder order(WeightVector({1, 1, 1}), TieBreak::DegRevLex, {0, 1, 2});
  CHECK(order.compare(mono({1, 1, 0}), mono({2, 0, 0})) < 0);
  CHECK(order.compare(mono({1, 0, 1}), mono({0, 2, 0})) < 0);
}

TEST_CASE("order properties on random monomials") {
  std::mt19937_64 rng(11);
  for (const auto tb : {TieBreak::Lex, TieBreak::DegRevLex}) {
    const WeightedOrder order(WeightVector({3, 1, 4, 2}), tb, {2, 0, 3, 1});
    for (int t = 0; t < 2000; ++t) {
      const auto a = random_monomial(rng, 4, 4);
      const auto b = random_monomial(rng, 4, 4);
      const auto c = random_monomial(rng, 4, 4);
      const auto ab = order.compare(a, b);
      CHECK((ab == 0) == (a == b));
      CHECK((order.compare(b, a) < 0) == (ab > 0));
      if (order.less(a, b) && order.less(b, c)) CHECK(order.less(a, c));
      if (order.less(a, b)) CHECK(order.less(a * c, b * c));
      CHECK(weight(a * b, order.weights()) == weight(a, order.weights()) + weight(b, order.weights()));
      CHECK(!order.less(a * b, a));
    }
  }
}

TEST_CASE("descending chains under the weighted order are finite") {
  std::mt19937_64 rng(3);
  const WeightedOrder order(WeightVector({2, 5, 3}), TieBreak::Lex, {0, 1, 2});
  for (int t = 0; t < 50; ++t) {
    std::vector<Monomial> chain;
    for (int i = 0; i < 200; ++i) chain.push_back(random_monomial(rng, 3, 6));
    std::sort(chain.begin(), chain.end(), [&](const Monomial& a, const Monomial& b) { return order.less(b, a); });
    chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
    // A strictly descending chain can be no longer than the number of monomials
    // weighing at most the first element.
    const auto top = weight(chain.front(), order.weights());
    std::size_t below = 0;
    for (Exponent a = 0; 2 * a <= top; ++a) {
      for (Exponent b = 0; 2 * a + 5 * b <= top; ++b) {
        for (Exponent c = 0; 2 * a + 5 * b + 3 * c <= top; ++c) ++below;
      }
    }
    CHECK(chain.size() <= below);
  }
}

TEST_CASE("polynomial arithmetic") {
  const auto q = ring_of(Field::rationals(), {"x", "y"}, {1, 1});
  const auto f = parse_polynomial("x + y", q);
  const auto g = parse_polynomial("x - y", q);
  CHECK((f * g) == parse_polynomial("x^2 - y^2", q));
  CHECK((f + (-f)).is_zero());
  const auto f2 = ring_of(Field::prime(2), {"x", "y"}, {1, 1});
  const auto h = parse_polynomial("x + y", f2);
  CHECK(h.pow(2) == parse_polynomial("x^2 + y^2", f2));
  const auto other = ring_of(Field::rationals(), {"x", "z"}, {1, 1});
  try {
    (void)(f + parse_polynomial("x", other));
    FAIL("expected RingMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RingMismatch);
  }
}

TEST_CASE("leading monomial of a product is the product of leading monomials") {
  std::mt19937_64 rng(5);
  const auto r = ring_of(Field::galois(3, 2), {"x", "y", "z"}, {2, 3, 5}, {2, 0, 1});
  const auto& field = r->field();
  std::uniform_int_distribution<std::uint32_t> coeff(1, 8);
  auto random_poly = [&] {
    std::vector<Term> terms;
    for (int i = 0; i < 4; ++i) terms.push_back({random_monomial(rng, 3, 3), field.element(coeff(rng))});
    return Polynomial::from_terms(r, terms);
  };
  for (int t = 0; t < 200; ++t) {
    const auto f = random_poly();
    const auto g = random_poly();
    if (f.is_zero() || g.is_zero()) continue;
    CHECK((f * g).leading_monomial() == f.leading_monomial() * g.leading_monomial());
    CHECK(((f * g) - (g * f)).is_zero());
    const auto sum = f + g;
    const auto& terms = sum.terms();
    for (std::size_t i = 1; i < terms.size(); ++i) CHECK(r->order().less(terms[i].monomial, terms[i - 1].monomial));
  }
}

TEST_CASE("top-weight monomials") {
  const auto herm = ring_of(Field::galois(2, 2), {"x", "y"}, {2, 3}, {1, 0});
  const auto f = parse_polynomial("x^3 - y^2 - y", herm);
  const auto top = top_weight_monomials(f, herm->weights());
  REQUIRE(top.size() == 2);
  CHECK(herm->monomial_to_string(top[0]) == "y^2");
  CHECK(herm->monomial_to_string(top[1]) == "x^3");
  CHECK(top_weight_monomials(parse_polynomial("x", herm), herm->weights()).size() == 1);

  const auto ree = ring_of(Field::galois(3, 6), {"x", "y"}, {3, 4});
  const auto g = parse_polynomial("x^4 - x^2 - y^3 + y", ree);
  const auto top2 = top_weight_monomials(g, ree->weights());
  REQUIRE(top2.size() == 2);
  CHECK(ree->monomial_to_string(top2[0]) == "x^4");
  CHECK(ree->monomial_to_string(top2[1]) == "y^3");
  CHECK_THROWS_AS((void)top_weight_monomials(Polynomial(ree), ree->weights()), Error);
}

TEST_CASE("W-homogeneity") {
  const auto r = ring_of(Field::rationals(), {"x", "y"}, {2, 3});
  CHECK(is_w_homogeneous(parse_polynomial("x^3 - y^2", r), r->weights()));
  CHECK(!is_w_homogeneous(parse_polynomial("x^3 - y^2", r), WeightVector({1, 1})));
  CHECK(is_w_homogeneous(Polynomial(r), r->weights()));
}

TEST_CASE("exponent overflow is detected") {
  const Monomial big(std::vector<Exponent>{std::numeric_limits<Exponent>::max()});
  CHECK_THROWS_AS((void)(big * big), Error);
}
