#include "hqp/linalg.hpp"

#include <utility>

#include "hqp/error.hpp"

namespace hqp {

std::vector<Rational> solve_fraction_free(IntegerMatrix a, const std::vector<Rational>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorKind::DimensionMismatch, "right-hand side has wrong length");
  for (const auto& row : a) {
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
  }
  if (n == 0) return {};

  BigInt scale = 1;
  for (const auto& r : b) scale = lcm(scale, r.denominator());
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt rhs = b[i].numerator() * (scale / b[i].denominator());
    a[i].push_back(rhs);
  }

  BigInt previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorKind::SingularSystem, "singular linear system");
    if (pivot != k) std::swap(a[pivot], a[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        BigInt v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        // Bareiss: the division is exact.
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][k] = 0;
    }
    previous = a[k][k];
  }

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(a[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(a[i][j]) * x[j];
    x[i] = acc / Rational(a[i][i]);
  }
  for (auto& v : x) v /= Rational(scale);
  return x;
}

}  // namespace hqp
