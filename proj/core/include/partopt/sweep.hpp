#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "partopt/graph.hpp"
#include "partopt/result.hpp"

namespace partopt {

/// Threshold range and worker count for the sweeps. Thresholds always step by 1.
struct SweepConfig {
  Cost h_min = 0;
  /// Defaults to hmax(graph) when absent.
  std::optional<Cost> h_max;
  std::size_t workers = 1;
  Seconds timeout = kDefaultTimeout;
  /// A feasible verdict at k cancels in-batch workers probing thresholds above k.
  bool cancellation_on_hit = true;
  /// Test hook run on each parallel worker before its probe (e.g. to inject delays).
  std::function<void(std::size_t worker, Cost threshold)> before_probe;
};

/// Throws std::invalid_argument unless 0 <= h_min <= h_max and workers >= 1.
void check_config(const SweepConfig& cfg, const TaskGraph& graph);

/// Probes thresholds h_min, h_min+1, ... and stops at the first feasible one.
OptResult sweep_sequential(const ProblemInstance& instance, const SweepConfig& cfg = {});

/// Probes thresholds in ascending batches of cfg.workers concurrent oracle
/// calls. The batch answer is its least feasible threshold, never the first
/// worker to finish; workers below a hit always run to completion.
OptResult sweep_parallel(const ProblemInstance& instance, const SweepConfig& cfg = {});

/// Binary search for the least feasible threshold. One probe at h_max, then
/// at most ceil(log2(h_max - h_min + 1)) more.
OptResult sweep_binary(const ProblemInstance& instance, const SweepConfig& cfg = {});

}  // namespace partopt
