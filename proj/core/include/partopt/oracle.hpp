#pragma once

#include <cstdint>
#include <optional>
#include <stop_token>
#include <vector>

#include "partopt/graph.hpp"
#include "partopt/result.hpp"

namespace partopt {

enum class NodeState : std::uint8_t { Unassigned, Software, Hardware };

/// Search state over a fixed graph: some nodes committed to a context, the rest open.
///
/// Maintains committed hardware cost, committed software node cost, the
/// communication cost of edges already cut between committed nodes, and for every
/// node the total edge weight towards committed hardware and committed software
/// neighbours. All updates are O(degree).
class PartialAssignment {
 public:
  explicit PartialAssignment(const TaskGraph& graph);

  void assign(std::size_t node, NodeState state);
  void unassign(std::size_t node);

  NodeState state(std::size_t node) const { return states_[node]; }
  std::size_t assigned_count() const { return assigned_; }
  bool complete() const { return assigned_ == states_.size(); }

  Cost committed_hw() const { return committed_hw_; }
  Cost committed_sw_nodes() const { return committed_sw_nodes_; }
  /// Sum of c over edges whose endpoints are committed to different contexts.
  Cost committed_comm() const { return committed_comm_; }
  /// Edge weight from `node` to neighbours committed to hardware.
  Cost weight_to_hardware(std::size_t node) const { return to_hw_[node]; }
  /// Edge weight from `node` to neighbours committed to software.
  Cost weight_to_software(std::size_t node) const { return to_sw_[node]; }

  const TaskGraph& graph() const { return *graph_; }

  /// Recomputes every cached sum from scratch and compares.
  bool consistent() const;
  /// Requires complete().
  Partition to_partition() const;

 private:
  const TaskGraph* graph_;
  std::vector<NodeState> states_;
  std::vector<Cost> to_hw_;
  std::vector<Cost> to_sw_;
  std::size_t assigned_ = 0;
  Cost committed_hw_ = 0;
  Cost committed_sw_nodes_ = 0;
  Cost committed_comm_ = 0;
};

/// Lower bound on S_P over all completions of `partial`: committed software
/// nodes plus edges already cut between committed nodes.
Cost min_residual_software(const ProblemInstance& instance, const PartialAssignment& partial);

/// Tighter lower bound on S_P over completions that add at most `hw_budget`
/// further hardware cost. Each open node is charged the cheaper of its two
/// contexts against committed neighbours, and the savings from moving open
/// nodes to hardware are capped by a fractional knapsack over `hw_budget`.
/// Returns a value above any reachable S_P when `hw_budget` is negative.
Cost completion_bound(const PartialAssignment& partial, Cost hw_budget);

/// Variable order shared by the oracle and branch-and-bound: descending
/// hardware cost, ties by ascending index.
std::vector<std::size_t> branching_order(const TaskGraph& graph);

struct OracleLimits {
  std::stop_token stop;
  std::optional<Deadline> deadline;
};

struct OracleVerdict {
  enum class Outcome { Feasible, Infeasible, Cancelled, Timeout };

  Outcome outcome = Outcome::Infeasible;
  std::optional<Partition> witness;
  std::uint64_t nodes_explored = 0;

  bool feasible() const { return outcome == Outcome::Feasible; }
};

/// Cancellation and deadline are polled once every this many search nodes.
inline constexpr std::uint64_t kInterruptPollInterval = 4096;

/// Decides whether some partition has S_P <= s0 and H_P <= h_limit.
///
/// Mirrors an ASSUME(S_P <= s0) / ASSERT(H_P > h_limit) check: a Feasible
/// verdict carries the assignment that violates the assertion. The search is
/// complete and deterministic: depth-first over branching_order(), software
/// before hardware, pruning on committed hardware cost and completion_bound().
/// Throws std::invalid_argument when h_limit is negative.
OracleVerdict feasible(const ProblemInstance& instance, Cost h_limit,
                       const OracleLimits& limits = {});

}  // namespace partopt
