#pragma once

#include <cstdint>
#include <variant>

#include "partopt/graph.hpp"

namespace partopt {

struct CostRange {
  Cost lo = 0;
  Cost hi = 0;
};

/// Random instance recipe. S0 is either an absolute value or a fraction of
/// sum(s), floored.
struct GenSpec {
  std::size_t nodes = 10;
  std::size_t edges = 15;
  CostRange hw{0, 20};
  CostRange sw{0, 20};
  CostRange comm{0, 20};
  std::variant<Cost, double> s0 = 0.5;
  std::uint64_t seed = 1;
};

/// Seed-deterministic: m distinct non-loop edges drawn uniformly from all
/// unordered pairs, costs uniform in their inclusive ranges.
/// Throws std::invalid_argument for m > n(n-1)/2 or malformed ranges.
ProblemInstance generate(const GenSpec& spec);

}  // namespace partopt
