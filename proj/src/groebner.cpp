#include "hqp/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "hqp/error.hpp"

namespace hqp {

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators) : nvars_(nvars) {
  for (const auto& g : generators) {
    if (g.size() != nvars) throw Error(ErrorKind::DimensionMismatch, "generator has wrong variable count");
  }
  std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = a.total_degree(), db = b.total_degree();
    return da != db ? da < db : a.exponents() < b.exponents();
  });
  for (auto& g : generators) {
    const bool redundant =
        std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
  std::sort(gens_.begin(), gens_.end(),
            [](const Monomial& a, const Monomial& b) { return a.exponents() > b.exponents(); });
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_.front().is_one();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(m.quotient_of(g.lcm(m)));
  return MonomialIdeal(nvars_, std::move(out));
}

std::vector<std::size_t> MonomialIdeal::absent_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars_; ++v) {
    const bool used = std::any_of(gens_.begin(), gens_.end(), [v](const Monomial& g) { return g[v] != 0; });
    if (!used) out.push_back(v);
  }
  return out;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const auto& g : basis_) out.push_back(g.leading_monomial());
  return out;
}

// ---------------------------------------------------------------------------
// Reduction

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  Polynomial p = f;
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term lead = p.leading_term();
    const Polynomial* divisor = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(lead.monomial)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(lead);
      p -= Polynomial::term(p.ring_ptr(), lead.monomial, lead.coefficient);
      continue;
    }
    const auto factor = divisor->leading_monomial().quotient_of(lead.monomial);
    p -= divisor->mul_term(factor, lead.coefficient / divisor->leading_coefficient());
  }
  // Remainder terms were produced in descending order.
  Polynomial r(f.ring_ptr());
  r = Polynomial::from_terms(f.ring_ptr(), std::move(remainder));
  return r;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto& mf = f.leading_monomial();
  const auto& mg = g.leading_monomial();
  const auto l = mf.lcm(mg);
  const auto one = f.ring().field().one();
  return f.mul_term(mf.quotient_of(l), one / f.leading_coefficient()) -
         g.mul_term(mg.quotient_of(l), one / g.leading_coefficient());
}

bool is_groebner_basis(std::span<const Polynomial> polys) {
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (polys[i].is_zero() || polys[j].is_zero()) continue;
      if (!normal_form(s_polynomial(polys[i], polys[j]), polys).is_zero()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::int64_t lcm_weight;
};

// Normal selection strategy: smallest lcm weight, then lexicographically
// smallest lcm exponent vector, then indices.
struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const {
    return std::tie(a.lcm_weight, a.lcm.exponents(), a.i, a.j) <
           std::tie(b.lcm_weight, b.lcm.exponents(), b.i, b.j);
  }
};

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis) {
  // Drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& mi = basis[i].leading_monomial();
      const auto& mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (!(mi == mj) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i].monic());
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const auto& g = minimal[i];
    const auto lead = Polynomial::term(g.ring_ptr(), g.leading_monomial(), g.leading_coefficient());
    reduced.push_back(lead + normal_form(g - lead, others));
  }
  const auto& order = reduced.empty() ? WeightedOrder() : reduced.front().ring().order();
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  return reduced;
}

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> generators, const GroebnerOptions& options) {
  std::vector<Polynomial> basis;
  for (auto& g : generators) {
    if (!(g.ring() == *ring)) throw Error(ErrorKind::RingMismatch, "generator from a different ring");
    if (!g.is_zero()) basis.push_back(g.monic());
  }
  const auto& w = ring->weights();
  std::set<Pair, PairLess> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto l = basis[i].leading_monomial().lcm(basis[j].leading_monomial());
      const auto lw = weight(l, w);
      queue.insert(Pair{i, j, std::move(l), lw});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  std::uint64_t processed = 0;
  while (!queue.empty()) {
    const Pair pair = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pair.i, pair.j});

    const auto& mi = basis[pair.i].leading_monomial();
    const auto& mj = basis[pair.j].leading_monomial();
    if (mi.coprime(mj)) continue;
    // Chain criterion: some lm(g_k) divides the lcm and both pairs with k are done.
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (basis[k].leading_monomial().divides(pair.lcm) && !is_pending(pair.i, k) && !is_pending(pair.j, k)) {
        chain = true;
      }
    }
    if (chain) continue;

    if (++processed > options.pair_budget) {
      throw Error(ErrorKind::ResourceExhausted,
                  "Groebner basis computation exceeded the budget of " + std::to_string(options.pair_budget) +
                      " S-pairs");
    }
    auto r = normal_form(s_polynomial(basis[pair.i], basis[pair.j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    add_pairs_for(basis.size() - 1);
  }
  return GroebnerBasis(ring, reduce_basis(std::move(basis)));
}

MonomialIdeal initial_ideal(const GroebnerBasis& basis) {
  return MonomialIdeal(basis.ring().nvars(), basis.leading_monomials());
}

// ---------------------------------------------------------------------------
// Staircase

bool staircase_is_finite(const MonomialIdeal& ideal) {
  for (std::size_t v = 0; v < ideal.nvars(); ++v) {
    const bool has_pure_power = std::any_of(ideal.generators().begin(), ideal.generators().end(),
                                            [v](const Monomial& g) {
                                              const auto s = g.support();
                                              return s.empty() || (s.size() == 1 && s[0] == v);
                                            });
    if (!has_pure_power) return false;
  }
  return true;
}

std::vector<Monomial> enumerate_staircase(const MonomialIdeal& ideal, const WeightedOrder& order,
                                          std::uint64_t limit) {
  const auto n = ideal.nvars();
  if (!staircase_is_finite(ideal)) throw Error(ErrorKind::InfiniteStaircase, "staircase is infinite");
  if (ideal.is_unit()) return {};
  std::vector<Exponent> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    Exponent best = 0;
    for (const auto& g : ideal.generators()) {
      const auto s = g.support();
      if (s.size() == 1 && s[0] == v && (best == 0 || g[v] < best)) best = g[v];
    }
    bound[v] = best;
  }
  std::vector<Monomial> out;
  Monomial m(n);
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    if (v == n) {
      if (!ideal.contains(m)) {
        if (out.size() >= limit) throw Error(ErrorKind::ResourceExhausted, "staircase exceeds enumeration limit");
        out.push_back(m);
      }
      return;
    }
    for (Exponent e = 0; e < bound[v]; ++e) {
      m[v] = e;
      if (ideal.contains(m)) break;  // larger exponents stay in the ideal
      visit(v + 1);
    }
    m[v] = 0;
  };
  visit(0);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  return out;
}

std::vector<Monomial> staircase_of_weight(const MonomialIdeal& ideal, const WeightVector& w, std::int64_t k,
                                          std::size_t max_count) {
  const auto n = ideal.nvars();
  if (w.size() != n) throw Error(ErrorKind::DimensionMismatch, "weight count differs from variable count");
  std::vector<Monomial> out;
  if (k < 0 || n == 0) return out;
  Monomial m(n);
  std::function<void(std::size_t, std::int64_t)> visit = [&](std::size_t v, std::int64_t remaining) {
    if (out.size() >= max_count) return;
    if (v + 1 == n) {
      if (remaining % w[v] != 0) return;
      m[v] = static_cast<Exponent>(remaining / w[v]);
      if (!ideal.contains(m)) out.push_back(m);
      m[v] = 0;
      return;
    }
    for (std::int64_t e = 0; e * w[v] <= remaining && out.size() < max_count; ++e) {
      m[v] = static_cast<Exponent>(e);
      if (ideal.contains(m)) break;
      visit(v + 1, remaining - e * w[v]);
    }
    m[v] = 0;
  };
  visit(0, k);
  return out;
}

}  // namespace hqp
