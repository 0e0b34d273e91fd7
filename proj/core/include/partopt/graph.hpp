#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace partopt {

/// Cost values: hardware area or software/communication time, unitless.
using Cost = std::int64_t;

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Cost cost = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Violation {
  enum class Kind {
    EmptyGraph,
    LengthMismatch,
    NegativeCost,
    NodeOutOfRange,
    SelfLoop,
    DuplicateEdge,
    CostOverflow,
  };

  Kind kind;
  /// Offending node or edge index (meaning depends on kind).
  std::size_t index = 0;
  std::string message;
};

/// Checks every task-graph invariant on raw cost data. Empty result means valid.
std::vector<Violation> validate(const std::vector<Cost>& hw_costs,
                                const std::vector<Cost>& sw_costs,
                                const std::vector<Edge>& edges);

class InvalidGraph : public std::invalid_argument {
 public:
  explicit InvalidGraph(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Thrown when a partition or vector length does not match the graph.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Task graph G = (V, E) with per-node hardware/software costs and
/// per-edge communication costs. Immutable after construction.
class TaskGraph {
 public:
  struct Neighbor {
    std::size_t node;
    Cost cost;
  };

  /// Throws InvalidGraph if any invariant fails.
  TaskGraph(std::vector<Cost> hw_costs, std::vector<Cost> sw_costs,
            std::vector<Edge> edges);

  std::size_t node_count() const { return hw_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Cost>& hw_costs() const { return hw_; }
  const std::vector<Cost>& sw_costs() const { return sw_; }
  const std::vector<Edge>& edges() const { return edges_; }

  Cost hw(std::size_t i) const { return hw_[i]; }
  Cost sw(std::size_t i) const { return sw_[i]; }

  /// Undirected adjacency; each edge appears in both endpoint lists.
  const std::vector<Neighbor>& neighbors(std::size_t i) const { return adjacency_[i]; }

  Cost total_hw() const { return total_hw_; }
  Cost total_sw() const { return total_sw_; }
  Cost total_comm() const { return total_comm_; }

  friend bool operator==(const TaskGraph& a, const TaskGraph& b) {
    return a.hw_ == b.hw_ && a.sw_ == b.sw_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Cost> hw_;
  std::vector<Cost> sw_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  Cost total_hw_ = 0;
  Cost total_sw_ = 0;
  Cost total_comm_ = 0;
};

/// Re-checks the invariants of an already constructed graph.
std::vector<Violation> validate(const TaskGraph& graph);

/// Hardware-software partition. Bit i is true when node i is in hardware.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<bool> assignment) : bits_(std::move(assignment)) {}

  static Partition all_software(std::size_t n) { return Partition(std::vector<bool>(n, false)); }
  static Partition all_hardware(std::size_t n) { return Partition(std::vector<bool>(n, true)); }
  /// Parses a string of '0'/'1' characters; '1' means hardware.
  static Partition from_string(const std::string& bits);

  std::size_t size() const { return bits_.size(); }
  bool in_hardware(std::size_t i) const { return bits_[i]; }
  void assign(std::size_t i, bool hardware) { bits_[i] = hardware; }
  const std::vector<bool>& bits() const { return bits_; }

  Partition complement() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<bool> bits_;
};

/// A task graph together with its software budget S0.
class ProblemInstance {
 public:
  ProblemInstance(TaskGraph graph, Cost s0);

  const TaskGraph& graph() const { return graph_; }
  Cost s0() const { return s0_; }

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;

 private:
  TaskGraph graph_;
  Cost s0_;
};

struct CostReport {
  Cost hp = 0;
  Cost sp = 0;
  std::size_t cut_edge_count = 0;
  bool feasible = false;

  friend bool operator==(const CostReport&, const CostReport&) = default;
};

Cost hardware_cost(const TaskGraph& graph, const Partition& p);

/// Node term of S_P: sum of s_i over software nodes.
Cost software_node_cost(const TaskGraph& graph, const Partition& p);
/// Communication term of S_P: sum of c over edges with endpoints in different contexts.
Cost communication_cost(const TaskGraph& graph, const Partition& p);
Cost software_cost(const TaskGraph& graph, const Partition& p);
std::size_t cut_edge_count(const TaskGraph& graph, const Partition& p);

CostReport evaluate(const ProblemInstance& instance, const Partition& p);

/// Transposed incidence matrix: one row per edge, +1 at u, -1 at v.
std::vector<std::vector<int>> incidence_rows(const TaskGraph& graph);

/// Hardware cost of the all-hardware partition.
Cost hmax(const TaskGraph& graph);

}  // namespace partopt
