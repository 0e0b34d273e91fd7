#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "partopt/brute_force.hpp"
#include "partopt/ga.hpp"
#include "partopt/graph.hpp"
#include "partopt/result.hpp"

namespace partopt {

/// Column order of every strategy block in the CSV.
inline constexpr std::array<Strategy, 6> kBenchStrategyOrder = {
    Strategy::Sequential, Strategy::Parallel, Strategy::Binary,
    Strategy::Bnb,        Strategy::Ga,       Strategy::Brute};

/// Runs of the GA per row; seeds are seed, seed+1, seed+2.
inline constexpr std::size_t kGaRunsPerRow = 3;

struct BenchInstance {
  std::string name;
  ProblemInstance instance;
};

struct BenchConfig {
  std::vector<Strategy> strategies;
  std::size_t workers = 4;
  Seconds timeout = kDefaultTimeout;
  std::uint64_t memory_limit_bytes = kDefaultMemoryLimitBytes;
  std::uint64_t seed = 1;
  GaConfig ga;
  std::size_t node_limit = kDefaultNodeLimit;
};

struct StrategyCell {
  std::optional<Cost> hp;
  std::optional<Cost> sp;
  Seconds elapsed{0.0};
  SolveStatus status = SolveStatus::InfeasibleInstance;
  /// Non-empty when the run threw instead of producing a result.
  std::string error;
};

struct BenchRow {
  std::string name;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  Cost s0 = 0;
  std::map<Strategy, StrategyCell> cells;
  /// Present only when an exact strategy solved the row and the GA did too.
  std::optional<double> ga_error_pct;
  /// elapsed(sequential) / elapsed(parallel), present only when both solved.
  std::optional<double> speedup;
};

struct BenchReport {
  std::vector<BenchRow> rows;
};

/// Runs every strategy on every instance, one row at a time. Failures are
/// recorded in the row and never abort the suite.
BenchReport run_bench(const std::vector<BenchInstance>& instances, const BenchConfig& cfg);

/// Fixed header: name,nodes,edges,s0, then <strategy>_hp,_sp,_time,_status for
/// each strategy in kBenchStrategyOrder, then ga_error_pct,speedup.
std::string csv_header();

/// Timeouts and memory-outs appear as TO / MO in the time and status columns;
/// other status values are OK, NF (no feasible threshold) and ERR.
std::string to_csv(const BenchReport& report);

}  // namespace partopt
