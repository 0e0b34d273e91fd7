#include "partopt/bnb.hpp"

#include <queue>
#include <sstream>

#include "partopt/oracle.hpp"

namespace partopt {

IlpModel build_ilp(const ProblemInstance& instance) {
  const TaskGraph& g = instance.graph();
  const std::size_t n = g.node_count();
  const std::size_t m = g.edge_count();

  IlpModel model;
  model.node_vars = n;
  model.slack_vars = m;
  model.objective.assign(n + m, 0);
  for (std::size_t i = 0; i < n; ++i) model.objective[i] = g.hw(i);

  std::vector<Cost> budget(n + m, 0);
  for (std::size_t i = 0; i < n; ++i) budget[i] = -g.sw(i);
  for (std::size_t e = 0; e < m; ++e) budget[n + e] = g.edges()[e].cost;
  model.rows.push_back(std::move(budget));
  model.bounds.push_back(instance.s0() - g.total_sw());

  for (std::size_t e = 0; e < m; ++e) {
    const Edge& edge = g.edges()[e];
    std::vector<Cost> forward(n + m, 0);
    forward[edge.u] = 1;
    forward[edge.v] = -1;
    forward[n + e] = -1;
    std::vector<Cost> backward(n + m, 0);
    backward[edge.u] = -1;
    backward[edge.v] = 1;
    backward[n + e] = -1;
    model.rows.push_back(std::move(forward));
    model.bounds.push_back(0);
    model.rows.push_back(std::move(backward));
    model.bounds.push_back(0);
  }
  return model;
}

bool IlpModel::satisfied(const std::vector<Cost>& z) const {
  if (z.size() != variable_count()) throw DimensionError("ILP assignment has wrong length");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Cost lhs = 0;
    for (std::size_t j = 0; j < z.size(); ++j) lhs += rows[r][j] * z[j];
    if (lhs > bounds[r]) return false;
  }
  return true;
}

Cost IlpModel::objective_value(const std::vector<Cost>& z) const {
  if (z.size() != variable_count()) throw DimensionError("ILP assignment has wrong length");
  Cost sum = 0;
  for (std::size_t j = 0; j < z.size(); ++j) sum += objective[j] * z[j];
  return sum;
}

std::vector<Cost> ilp_assignment(const TaskGraph& graph, const Partition& p) {
  if (p.size() != graph.node_count()) throw DimensionError("partition has wrong length");
  std::vector<Cost> z;
  z.reserve(graph.node_count() + graph.edge_count());
  for (std::size_t i = 0; i < p.size(); ++i) z.push_back(p.in_hardware(i) ? 1 : 0);
  for (const Edge& e : graph.edges()) z.push_back(p.in_hardware(e.u) != p.in_hardware(e.v) ? 1 : 0);
  return z;
}

std::string write_ilp_listing(const IlpModel& model) {
  std::ostringstream os;
  auto write_vector = [&os](const std::vector<Cost>& v) {
    for (Cost c : v) os << ' ' << c;
    os << '\n';
  };
  os << "# minimize f'z subject to A z <= b, z binary; z = (x, y), x per node, y per edge\n";
  os << "variables " << model.variable_count() << '\n';
  os << "node_vars " << model.node_vars << '\n';
  os << "slack_vars " << model.slack_vars << '\n';
  os << "constraints " << model.row_count() << '\n';
  os << "objective";
  write_vector(model.objective);
  for (const auto& row : model.rows) {
    os << "row";
    write_vector(row);
  }
  os << "bounds";
  write_vector(model.bounds);
  return os.str();
}

namespace {

struct OpenNode {
  Cost committed_hw;
  std::uint32_t depth;
  std::uint64_t seq;
  // decisions[d] is true when order[d] went to hardware.
  std::vector<bool> decisions;
};

// Lowest committed cost first, then deepest, then oldest.
struct WorseNode {
  bool operator()(const OpenNode& a, const OpenNode& b) const {
    if (a.committed_hw != b.committed_hw) return a.committed_hw > b.committed_hw;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.seq > b.seq;
  }
};

std::uint64_t node_bytes(std::size_t depth) { return sizeof(OpenNode) + (depth + 63) / 64 * 8; }

class BestFirstSearch {
 public:
  BestFirstSearch(const ProblemInstance& instance, const BnbOptions& options)
      : instance_(instance),
        options_(options),
        order_(branching_order(instance.graph())),
        partial_(instance.graph()) {}

  OptResult run() {
    const auto start = Clock::now();
    const Deadline deadline(start, options_.timeout);
    const TaskGraph& g = instance_.graph();
    const std::size_t n = g.node_count();

    OptResult out;
    out.strategy = Strategy::Bnb;
    out.status = SolveStatus::Solved;
    set_incumbent(Partition::all_hardware(n), g.total_hw());

    push(OpenNode{0, 0, 0, {}});
    while (!open_.empty()) {
      if (out.probes % 256 == 0 && deadline.expired()) {
        out.status = SolveStatus::Timeout;
        break;
      }
      if (open_bytes_ > options_.memory_limit_bytes) {
        out.status = SolveStatus::MemoryOut;
        break;
      }
      OpenNode node = open_.top();
      open_.pop();
      open_bytes_ -= node_bytes(node.depth);
      if (node.committed_hw >= incumbent_hp_) break;
      ++out.probes;
      load(node);

      Cost open_hw = 0, sw_if_all_sw = base_sw(), sw_if_all_hw = base_sw();
      for (std::size_t d = node.depth; d < n; ++d) {
        const std::size_t u = order_[d];
        open_hw += g.hw(u);
        sw_if_all_sw += g.sw(u) + partial_.weight_to_hardware(u);
        sw_if_all_hw += partial_.weight_to_software(u);
      }
      // Every open node costs at least node.committed_hw, so a feasible
      // all-software completion here is optimal.
      if (sw_if_all_sw <= instance_.s0()) {
        set_incumbent(complete_with(node, false), node.committed_hw);
        break;
      }
      if (node.depth == n) continue;
      if (sw_if_all_hw <= instance_.s0() && node.committed_hw + open_hw < incumbent_hp_) {
        set_incumbent(complete_with(node, true), node.committed_hw + open_hw);
      }
      branch(node);
    }

    out.optimum_hp = incumbent_hp_;
    out.sp_at_witness = software_cost(g, incumbent_);
    out.witness = incumbent_;
    out.elapsed = Clock::now() - start;
    return out;
  }

 private:
  Cost base_sw() const { return partial_.committed_sw_nodes() + partial_.committed_comm(); }

  void set_incumbent(Partition p, Cost hp) {
    incumbent_ = std::move(p);
    incumbent_hp_ = hp;
    if (options_.on_incumbent) options_.on_incumbent(hp);
  }

  void push(OpenNode node) {
    open_bytes_ += node_bytes(node.depth);
    open_.push(std::move(node));
  }

  void load(const OpenNode& node) {
    for (std::size_t d = 0; d < loaded_depth_; ++d) partial_.unassign(order_[d]);
    for (std::size_t d = 0; d < node.depth; ++d) {
      partial_.assign(order_[d], node.decisions[d] ? NodeState::Hardware : NodeState::Software);
    }
    loaded_depth_ = node.depth;
  }

  Partition complete_with(const OpenNode& node, bool hardware) const {
    std::vector<bool> bits(order_.size(), hardware);
    for (std::size_t d = 0; d < node.depth; ++d) bits[order_[d]] = node.decisions[d];
    return Partition(std::move(bits));
  }

  void branch(const OpenNode& node) {
    const std::size_t v = order_[node.depth];
    for (NodeState choice : {NodeState::Software, NodeState::Hardware}) {
      const bool hw = choice == NodeState::Hardware;
      const Cost child_hw = node.committed_hw + (hw ? instance_.graph().hw(v) : 0);
      if (child_hw >= incumbent_hp_) continue;
      partial_.assign(v, choice);
      const bool viable =
          completion_bound(partial_, incumbent_hp_ - 1 - child_hw) <= instance_.s0();
      partial_.unassign(v);
      if (!viable) continue;
      OpenNode child{child_hw, node.depth + 1, ++seq_, node.decisions};
      child.decisions.push_back(hw);
      push(std::move(child));
    }
  }

  const ProblemInstance& instance_;
  const BnbOptions& options_;
  std::vector<std::size_t> order_;
  PartialAssignment partial_;
  std::size_t loaded_depth_ = 0;
  std::priority_queue<OpenNode, std::vector<OpenNode>, WorseNode> open_;
  std::uint64_t open_bytes_ = 0;
  std::uint64_t seq_ = 0;
  Partition incumbent_;
  Cost incumbent_hp_ = 0;
};

}  // namespace

OptResult minimize(const ProblemInstance& instance, const BnbOptions& options) {
  return BestFirstSearch(instance, options).run();
}

OptResult minimize(const ProblemInstance& instance, Seconds timeout) {
  BnbOptions options;
  options.timeout = timeout;
  return minimize(instance, options);
}

}  // namespace partopt
