#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "partopt/graph.hpp"
#include "partopt/result.hpp"

namespace partopt {

/// Genetic algorithm settings. Population 500, elite 50 and 75 generations are
/// the tuned values; the remaining operators are standard choices.
struct GaConfig {
  std::size_t population_size = 500;
  std::size_t elite_count = 50;
  std::size_t generations = 75;
  /// Per-bit flip probability; 1/n when absent.
  std::optional<double> mutation_rate;
  double crossover_rate = 0.9;
  std::size_t tournament_size = 2;
  /// Penalty per unit of budget violation; 1 + sum(h) when absent.
  std::optional<Cost> penalty_weight;
  std::uint64_t seed = 1;
  Seconds timeout = kDefaultTimeout;
  std::uint64_t memory_limit_bytes = kDefaultMemoryLimitBytes;
  /// Called after each generation with the best fitness seen so far.
  std::function<void(std::size_t generation, Cost best_fitness)> on_generation;
};

/// Throws std::invalid_argument when the configuration is unusable.
void check_config(const GaConfig& cfg);

/// H_P + penalty * max(0, S_P - S0), saturating at the Cost range.
Cost fitness(const ProblemInstance& instance, const Partition& p, Cost penalty_weight);

/// Evolves partitions under a penalty fitness and returns the best feasible
/// individual ever evaluated. Deterministic for a fixed seed.
OptResult ga_solve(const ProblemInstance& instance, const GaConfig& cfg = {});

/// 100 * (hp_ga - hp_exact) / hp_exact. When hp_exact is 0 the error is 0 for
/// an exact match and +infinity otherwise.
double ga_error_percent(Cost hp_ga, Cost hp_exact);

}  // namespace partopt
