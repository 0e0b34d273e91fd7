#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "partopt/graph.hpp"

namespace partopt {

using Clock = std::chrono::steady_clock;
using Seconds = std::chrono::duration<double>;

/// Wall-clock limit shared by every solver (7,200 s per run).
inline constexpr Seconds kDefaultTimeout{7200.0};

/// Ceiling on solver-owned allocations before a run is recorded as a memory-out (24 GiB).
inline constexpr std::uint64_t kDefaultMemoryLimitBytes = 24ULL << 30;

/// Printed when no threshold in the probed range is feasible.
inline constexpr std::string_view kViolationNotFound = "Violation not found";

enum class Strategy { Sequential, Parallel, Binary, Bnb, Ga, Brute };

enum class SolveStatus { Solved, InfeasibleInstance, Timeout, MemoryOut };

std::string_view to_string(Strategy s);
std::string_view to_string(SolveStatus s);
/// Accepts the lowercase CLI names (sequential, parallel, binary, bnb, ga, brute).
std::optional<Strategy> parse_strategy(std::string_view name);

struct OptResult {
  std::optional<Cost> optimum_hp;
  std::optional<Partition> witness;
  std::optional<Cost> sp_at_witness;
  /// Oracle calls for sweeps, expanded nodes for bnb, fitness evaluations for ga,
  /// enumerated partitions for brute.
  std::uint64_t probes = 0;
  Seconds elapsed{0.0};
  Strategy strategy = Strategy::Sequential;
  SolveStatus status = SolveStatus::InfeasibleInstance;

  bool solved() const { return status == SolveStatus::Solved; }
};

/// Absolute deadline derived from a start time and a limit.
class Deadline {
 public:
  Deadline(Clock::time_point start, Seconds limit)
      : at_(start + std::chrono::duration_cast<Clock::duration>(limit)) {}
  explicit Deadline(Seconds limit) : Deadline(Clock::now(), limit) {}

  bool expired() const { return Clock::now() >= at_; }
  Clock::time_point at() const { return at_; }

 private:
  Clock::time_point at_;
};

/// Human-readable summary used by the CLI: hp, sp, witness, elapsed, probes.
std::string format_result(const OptResult& result);

}  // namespace partopt
