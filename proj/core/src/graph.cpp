#include "partopt/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace partopt {

namespace {

bool checked_add(Cost a, Cost b, Cost& out) { return !__builtin_add_overflow(a, b, &out); }

std::string join_messages(const std::vector<Violation>& violations) {
  std::ostringstream os;
  os << "invalid task graph:";
  for (const auto& v : violations) {
    os << "\n  " << v.message;
  }
  return os.str();
}

void check_size(const TaskGraph& graph, const Partition& p) {
  if (p.size() != graph.node_count()) {
    std::ostringstream os;
    os << "partition has " << p.size() << " entries, graph has " << graph.node_count()
       << " nodes";
    throw DimensionError(os.str());
  }
}

}  // namespace

std::vector<Violation> validate(const std::vector<Cost>& hw_costs,
                                const std::vector<Cost>& sw_costs,
                                const std::vector<Edge>& edges) {
  std::vector<Violation> out;
  auto add = [&](Violation::Kind kind, std::size_t index, std::string message) {
    out.push_back(Violation{kind, index, std::move(message)});
  };

  if (hw_costs.empty()) {
    add(Violation::Kind::EmptyGraph, 0, "graph has no nodes");
  }
  if (hw_costs.size() != sw_costs.size()) {
    add(Violation::Kind::LengthMismatch, 0,
        "hardware cost list has " + std::to_string(hw_costs.size()) +
            " entries, software cost list has " + std::to_string(sw_costs.size()));
  }
  const std::size_t n = std::min(hw_costs.size(), sw_costs.size());

  Cost hw_sum = 0;
  Cost sw_sum = 0;
  bool overflow = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (hw_costs[i] < 0) {
      add(Violation::Kind::NegativeCost, i,
          "negative hardware cost at node " + std::to_string(i));
    } else if (!checked_add(hw_sum, hw_costs[i], hw_sum)) {
      overflow = true;
    }
    if (sw_costs[i] < 0) {
      add(Violation::Kind::NegativeCost, i,
          "negative software cost at node " + std::to_string(i));
    } else if (!checked_add(sw_sum, sw_costs[i], sw_sum)) {
      overflow = true;
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    const std::string where = "edge " + std::to_string(k) + " (" + std::to_string(e.u) +
                              "," + std::to_string(e.v) + ")";
    if (e.u >= n || e.v >= n) {
      add(Violation::Kind::NodeOutOfRange, k, "node index out of range in " + where);
      continue;
    }
    if (e.u == e.v) {
      add(Violation::Kind::SelfLoop, k, "self-loop at node " + std::to_string(e.u));
      continue;
    }
    if (!seen.insert(std::minmax(e.u, e.v)).second) {
      add(Violation::Kind::DuplicateEdge, k, "duplicate edge " + where);
    }
    if (e.cost < 0) {
      add(Violation::Kind::NegativeCost, k, "negative communication cost on " + where);
    } else if (!checked_add(sw_sum, e.cost, sw_sum)) {
      overflow = true;
    }
  }

  if (overflow) {
    add(Violation::Kind::CostOverflow, 0, "cost sums exceed the 64-bit integer range");
  }
  return out;
}

std::vector<Violation> validate(const TaskGraph& graph) {
  return validate(graph.hw_costs(), graph.sw_costs(), graph.edges());
}

InvalidGraph::InvalidGraph(std::vector<Violation> violations)
    : std::invalid_argument(join_messages(violations)), violations_(std::move(violations)) {}

TaskGraph::TaskGraph(std::vector<Cost> hw_costs, std::vector<Cost> sw_costs,
                     std::vector<Edge> edges)
    : hw_(std::move(hw_costs)), sw_(std::move(sw_costs)), edges_(std::move(edges)) {
  if (auto violations = validate(hw_, sw_, edges_); !violations.empty()) {
    throw InvalidGraph(std::move(violations));
  }
  adjacency_.resize(hw_.size());
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back({e.v, e.cost});
    adjacency_[e.v].push_back({e.u, e.cost});
    total_comm_ += e.cost;
  }
  for (std::size_t i = 0; i < hw_.size(); ++i) {
    total_hw_ += hw_[i];
    total_sw_ += sw_[i];
  }
}

Partition Partition::from_string(const std::string& bits) {
  std::vector<bool> out;
  out.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("partition string must contain only '0' and '1'");
    }
    out.push_back(ch == '1');
  }
  return Partition(std::move(out));
}

Partition Partition::complement() const {
  std::vector<bool> out(bits_);
  out.flip();
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (bool b : bits_) {
    out.push_back(b ? '1' : '0');
  }
  return out;
}

ProblemInstance::ProblemInstance(TaskGraph graph, Cost s0) : graph_(std::move(graph)), s0_(s0) {
  if (s0_ < 0) {
    throw std::invalid_argument("software budget s0 must be non-negative");
  }
}

Cost hardware_cost(const TaskGraph& graph, const Partition& p) {
  check_size(graph, p);
  Cost sum = 0;
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    if (p.in_hardware(i)) sum += graph.hw(i);
  }
  return sum;
}

Cost software_node_cost(const TaskGraph& graph, const Partition& p) {
  check_size(graph, p);
  Cost sum = 0;
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    if (!p.in_hardware(i)) sum += graph.sw(i);
  }
  return sum;
}

Cost communication_cost(const TaskGraph& graph, const Partition& p) {
  check_size(graph, p);
  Cost sum = 0;
  for (const Edge& e : graph.edges()) {
    if (p.in_hardware(e.u) != p.in_hardware(e.v)) sum += e.cost;
  }
  return sum;
}

Cost software_cost(const TaskGraph& graph, const Partition& p) {
  return software_node_cost(graph, p) + communication_cost(graph, p);
}

std::size_t cut_edge_count(const TaskGraph& graph, const Partition& p) {
  check_size(graph, p);
  return static_cast<std::size_t>(
      std::count_if(graph.edges().begin(), graph.edges().end(),
                    [&](const Edge& e) { return p.in_hardware(e.u) != p.in_hardware(e.v); }));
}

CostReport evaluate(const ProblemInstance& instance, const Partition& p) {
  CostReport r;
  r.hp = hardware_cost(instance.graph(), p);
  r.sp = software_cost(instance.graph(), p);
  r.cut_edge_count = cut_edge_count(instance.graph(), p);
  r.feasible = r.sp <= instance.s0();
  return r;
}

std::vector<std::vector<int>> incidence_rows(const TaskGraph& graph) {
  std::vector<std::vector<int>> rows(graph.edge_count(), std::vector<int>(graph.node_count(), 0));
  for (std::size_t k = 0; k < graph.edge_count(); ++k) {
    rows[k][graph.edges()[k].u] = 1;
    rows[k][graph.edges()[k].v] = -1;
  }
  return rows;
}

Cost hmax(const TaskGraph& graph) { return graph.total_hw(); }

}  // namespace partopt
