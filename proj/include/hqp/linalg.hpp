#pragma once

#include <vector>

#include "hqp/fields.hpp"

namespace hqp {

using IntegerMatrix = std::vector<std::vector<BigInt>>;

/// Solves A x = b exactly for square integer A and rational b. The right-hand
/// side is cleared of denominators and the augmented system is reduced with
/// Bareiss' fraction-free elimination, so every intermediate stays an integer.
/// Throws SingularSystem when A is singular.
std::vector<Rational> solve_fraction_free(IntegerMatrix a, const std::vector<Rational>& b);

}  // namespace hqp
