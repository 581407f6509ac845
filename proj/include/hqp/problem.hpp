#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hqp/poly.hpp"

namespace hqp {

/// A parsed problem: the ring (field, variables, weighted order), the ideal
/// generators, and the optional code parameters.
struct ProblemSpec {
  RingPtr ring;
  std::vector<std::string> generator_sources;
  std::vector<Polynomial> generators;
  /// Order of the field the code is evaluated over; defaults to the field order.
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> code_k;
};

}  // namespace hqp
