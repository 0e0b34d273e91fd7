#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "partopt/graph.hpp"
#include "partopt/result.hpp"

namespace partopt {

/// 0-1 integer program  min f'z  s.t.  A z <= b  over z = (x_0..x_{n-1}, y_0..y_{m-1}).
///
/// Row 0 is the software budget  -s.x + c.y <= S0 - sum(s).  Rows 2e+1 and
/// 2e+2 force y_e >= x_u - x_v and y_e >= x_v - x_u. Slack variables are
/// binary; a larger y_e only tightens the budget row, so the feasible x set
/// equals the one obtained with y_e = |x_u - x_v|.
struct IlpModel {
  std::size_t node_vars = 0;
  std::size_t slack_vars = 0;
  std::vector<Cost> objective;
  std::vector<std::vector<Cost>> rows;
  std::vector<Cost> bounds;

  std::size_t variable_count() const { return node_vars + slack_vars; }
  std::size_t row_count() const { return rows.size(); }

  /// True when every row satisfies A z <= b. Throws DimensionError on size mismatch.
  bool satisfied(const std::vector<Cost>& z) const;
  Cost objective_value(const std::vector<Cost>& z) const;
};

IlpModel build_ilp(const ProblemInstance& instance);

/// Extends a partition to ILP variables with y_e = |x_u - x_v|.
std::vector<Cost> ilp_assignment(const TaskGraph& graph, const Partition& p);

/// Plain-text listing: header counts, objective, one `row` line per
/// constraint, then the bound vector.
std::string write_ilp_listing(const IlpModel& model);

struct BnbOptions {
  Seconds timeout = kDefaultTimeout;
  /// Ceiling on the open-node list; exceeding it ends the run as MemoryOut.
  std::uint64_t memory_limit_bytes = kDefaultMemoryLimitBytes;
  /// Called with the hardware cost of every incumbent, starting with all-hardware.
  std::function<void(Cost)> on_incumbent;
};

/// Best-first branch-and-bound minimising H_P subject to S_P <= S0.
///
/// The node bound is the committed hardware cost; nodes are pruned when they
/// cannot beat the incumbent or when completion_bound() exceeds S0 within the
/// remaining hardware allowance. On Timeout or MemoryOut the best incumbent is
/// still reported.
OptResult minimize(const ProblemInstance& instance, const BnbOptions& options = {});
OptResult minimize(const ProblemInstance& instance, Seconds timeout);

}  // namespace partopt
