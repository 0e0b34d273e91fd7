#include "partopt/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace partopt {

PartialAssignment::PartialAssignment(const TaskGraph& graph)
    : graph_(&graph),
      states_(graph.node_count(), NodeState::Unassigned),
      to_hw_(graph.node_count(), 0),
      to_sw_(graph.node_count(), 0) {}

void PartialAssignment::assign(std::size_t node, NodeState state) {
  assert(states_[node] == NodeState::Unassigned && state != NodeState::Unassigned);
  states_[node] = state;
  ++assigned_;
  const bool hw = state == NodeState::Hardware;
  if (hw) {
    committed_hw_ += graph_->hw(node);
  } else {
    committed_sw_nodes_ += graph_->sw(node);
  }
  for (const auto& nb : graph_->neighbors(node)) {
    (hw ? to_hw_ : to_sw_)[nb.node] += nb.cost;
    const NodeState other = states_[nb.node];
    if (other != NodeState::Unassigned && other != state) committed_comm_ += nb.cost;
  }
}

void PartialAssignment::unassign(std::size_t node) {
  const NodeState state = states_[node];
  assert(state != NodeState::Unassigned);
  const bool hw = state == NodeState::Hardware;
  for (const auto& nb : graph_->neighbors(node)) {
    (hw ? to_hw_ : to_sw_)[nb.node] -= nb.cost;
    const NodeState other = states_[nb.node];
    if (other != NodeState::Unassigned && other != state) committed_comm_ -= nb.cost;
  }
  if (hw) {
    committed_hw_ -= graph_->hw(node);
  } else {
    committed_sw_nodes_ -= graph_->sw(node);
  }
  states_[node] = NodeState::Unassigned;
  --assigned_;
}

bool PartialAssignment::consistent() const {
  const std::size_t n = states_.size();
  Cost hw = 0, sw = 0, comm = 0;
  std::size_t assigned = 0;
  std::vector<Cost> to_hw(n, 0), to_sw(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (states_[i] == NodeState::Hardware) hw += graph_->hw(i);
    if (states_[i] == NodeState::Software) sw += graph_->sw(i);
    if (states_[i] != NodeState::Unassigned) ++assigned;
  }
  for (const Edge& e : graph_->edges()) {
    const NodeState a = states_[e.u], b = states_[e.v];
    if (a != NodeState::Unassigned && b != NodeState::Unassigned && a != b) comm += e.cost;
    if (a == NodeState::Hardware) to_hw[e.v] += e.cost;
    if (a == NodeState::Software) to_sw[e.v] += e.cost;
    if (b == NodeState::Hardware) to_hw[e.u] += e.cost;
    if (b == NodeState::Software) to_sw[e.u] += e.cost;
  }
  return hw == committed_hw_ && sw == committed_sw_nodes_ && comm == committed_comm_ &&
         assigned == assigned_ && to_hw == to_hw_ && to_sw == to_sw_;
}

Partition PartialAssignment::to_partition() const {
  if (!complete()) throw std::logic_error("partial assignment is not complete");
  std::vector<bool> bits(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) bits[i] = states_[i] == NodeState::Hardware;
  return Partition(std::move(bits));
}

Cost min_residual_software(const ProblemInstance& instance, const PartialAssignment& partial) {
  if (instance.graph().node_count() != partial.graph().node_count()) {
    throw DimensionError("partial assignment does not belong to this instance");
  }
  return partial.committed_sw_nodes() + partial.committed_comm();
}

namespace {

__extension__ using Wide = __int128;

struct KnapsackItem {
  Cost saving;
  Cost weight;
};

// a.saving / a.weight > b.saving / b.weight, zero weights first.
bool better_ratio(const KnapsackItem& a, const KnapsackItem& b) {
  return static_cast<Wide>(a.saving) * b.weight > static_cast<Wide>(b.saving) * a.weight;
}

}  // namespace

Cost completion_bound(const PartialAssignment& partial, Cost hw_budget) {
  if (hw_budget < 0) return std::numeric_limits<Cost>::max();
  const TaskGraph& g = partial.graph();
  thread_local std::vector<KnapsackItem> items;
  items.clear();

  // Baseline: every open node in software, paying for its edges to committed hardware.
  Cost baseline = partial.committed_sw_nodes() + partial.committed_comm();
  Cost free_saving = 0;
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    if (partial.state(u) != NodeState::Unassigned) continue;
    const Cost as_sw = g.sw(u) + partial.weight_to_hardware(u);
    const Cost as_hw = partial.weight_to_software(u);
    baseline += as_sw;
    const Cost saving = as_sw - as_hw;
    if (saving <= 0 || g.hw(u) > hw_budget) continue;
    if (g.hw(u) == 0) {
      free_saving += saving;
    } else {
      items.push_back({saving, g.hw(u)});
    }
  }

  std::sort(items.begin(), items.end(), better_ratio);
  Cost capacity = hw_budget;
  Wide saving = free_saving;
  for (const auto& item : items) {
    if (capacity == 0) break;
    if (item.weight <= capacity) {
      saving += item.saving;
      capacity -= item.weight;
    } else {
      saving += static_cast<Wide>(item.saving) * capacity / item.weight;
      capacity = 0;
    }
  }
  return baseline - static_cast<Cost>(saving);
}

std::vector<std::size_t> branching_order(const TaskGraph& graph) {
  std::vector<std::size_t> order(graph.node_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return graph.hw(a) > graph.hw(b);
  });
  return order;
}

namespace {

class FeasibilitySearch {
 public:
  FeasibilitySearch(const ProblemInstance& instance, Cost h_limit, const OracleLimits& limits)
      : instance_(instance),
        h_limit_(h_limit),
        limits_(limits),
        order_(branching_order(instance.graph())),
        partial_(instance.graph()) {}

  OracleVerdict run() {
    OracleVerdict verdict;
    if (descend(0)) {
      verdict.outcome = OracleVerdict::Outcome::Feasible;
      verdict.witness = partial_.to_partition();
    } else {
      verdict.outcome = interrupted_.value_or(OracleVerdict::Outcome::Infeasible);
    }
    verdict.nodes_explored = nodes_;
    return verdict;
  }

 private:
  bool poll_interrupt() {
    if (limits_.stop.stop_requested()) {
      interrupted_ = OracleVerdict::Outcome::Cancelled;
    } else if (limits_.deadline && limits_.deadline->expired()) {
      interrupted_ = OracleVerdict::Outcome::Timeout;
    }
    return interrupted_.has_value();
  }

  bool descend(std::size_t depth) {
    if (nodes_++ % kInterruptPollInterval == 0 && poll_interrupt()) return false;

    if (completion_bound(partial_, h_limit_ - partial_.committed_hw()) > instance_.s0()) {
      return false;
    }
    if (depth == order_.size()) return true;

    const std::size_t v = order_[depth];
    for (NodeState choice : {NodeState::Software, NodeState::Hardware}) {
      if (choice == NodeState::Hardware &&
          partial_.committed_hw() + instance_.graph().hw(v) > h_limit_) {
        continue;
      }
      partial_.assign(v, choice);
      if (descend(depth + 1)) return true;
      partial_.unassign(v);
      if (interrupted_) return false;
    }
    return false;
  }

  const ProblemInstance& instance_;
  Cost h_limit_;
  const OracleLimits& limits_;
  std::vector<std::size_t> order_;
  PartialAssignment partial_;
  std::uint64_t nodes_ = 0;
  std::optional<OracleVerdict::Outcome> interrupted_;
};

}  // namespace

OracleVerdict feasible(const ProblemInstance& instance, Cost h_limit, const OracleLimits& limits) {
  if (h_limit < 0) throw std::invalid_argument("h_limit must be non-negative");
  return FeasibilitySearch(instance, h_limit, limits).run();
}

}  // namespace partopt
