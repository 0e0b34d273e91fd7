#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "partopt/graph.hpp"
#include "partopt/result.hpp"

namespace partopt {

inline constexpr std::size_t kDefaultNodeLimit = 26;

/// Raised when an instance is too large for exhaustive enumeration.
class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Enumerates all 2^n partitions and returns the least H_P with S_P <= S0.
/// Among optima the lexicographically smallest assignment wins (node 0 most
/// significant, software before hardware). `h_max` optionally restricts the
/// admissible hardware cost.
OptResult enumerate(const ProblemInstance& instance, std::size_t node_limit = kDefaultNodeLimit,
                    std::optional<Cost> h_max = std::nullopt);

/// True iff some partition has S_P <= S0 and H_P <= h_limit.
bool brute_feasible(const ProblemInstance& instance, Cost h_limit,
                    std::size_t node_limit = kDefaultNodeLimit);

}  // namespace partopt
