#include "partopt/brute_force.hpp"

#include <bit>
#include <limits>
#include <vector>

namespace partopt {

namespace {

// Hard ceiling from the 64-bit mask.
constexpr std::size_t kMaskBits = 62;

void check_size(const ProblemInstance& instance, std::size_t node_limit) {
  const std::size_t n = instance.graph().node_count();
  if (n > node_limit || n > kMaskBits) {
    throw SizeError("instance has " + std::to_string(n) + " nodes; enumeration limit is " +
                    std::to_string(std::min(node_limit, kMaskBits)));
  }
}

// Walks all partitions in Gray-code order with O(degree) updates per step.
// Node i corresponds to mask bit (n-1-i), so numeric mask order is the
// lexicographic order of assignment vectors. `visit(mask, hp, sp)` returns
// false to stop early.
template <typename Visit>
void gray_walk(const TaskGraph& g, Visit&& visit) {
  const std::size_t n = g.node_count();
  std::vector<bool> hw(n, false);
  Cost hp = 0;
  Cost sw_nodes = g.total_sw();
  Cost comm = 0;
  std::uint64_t mask = 0;
  if (!visit(mask, hp, sw_nodes + comm)) return;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    const std::size_t node = n - 1 - bit;
    const bool to_hw = !hw[node];
    hw[node] = to_hw;
    if (to_hw) {
      hp += g.hw(node);
      sw_nodes -= g.sw(node);
    } else {
      hp -= g.hw(node);
      sw_nodes += g.sw(node);
    }
    for (const auto& nb : g.neighbors(node)) {
      comm += hw[nb.node] != to_hw ? nb.cost : -nb.cost;
    }
    mask ^= std::uint64_t{1} << bit;
    if (!visit(mask, hp, sw_nodes + comm)) return;
  }
}

Partition from_mask(std::uint64_t mask, std::size_t n) {
  std::vector<bool> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> (n - 1 - i)) & 1U;
  return Partition(std::move(bits));
}

}  // namespace

OptResult enumerate(const ProblemInstance& instance, std::size_t node_limit,
                    std::optional<Cost> h_max) {
  check_size(instance, node_limit);
  const auto start = Clock::now();
  const TaskGraph& g = instance.graph();
  const Cost limit = h_max.value_or(std::numeric_limits<Cost>::max());

  Cost best_hp = std::numeric_limits<Cost>::max();
  std::uint64_t best_mask = 0;
  bool found = false;
  gray_walk(g, [&](std::uint64_t mask, Cost hp, Cost sp) {
    if (sp <= instance.s0() && hp <= limit &&
        (!found || hp < best_hp || (hp == best_hp && mask < best_mask))) {
      found = true;
      best_hp = hp;
      best_mask = mask;
    }
    return true;
  });

  OptResult out;
  out.strategy = Strategy::Brute;
  out.probes = std::uint64_t{1} << g.node_count();
  if (found) {
    out.status = SolveStatus::Solved;
    out.optimum_hp = best_hp;
    out.witness = from_mask(best_mask, g.node_count());
    out.sp_at_witness = software_cost(g, *out.witness);
  } else {
    out.status = SolveStatus::InfeasibleInstance;
  }
  out.elapsed = Clock::now() - start;
  return out;
}

bool brute_feasible(const ProblemInstance& instance, Cost h_limit, std::size_t node_limit) {
  check_size(instance, node_limit);
  bool found = false;
  gray_walk(instance.graph(), [&](std::uint64_t, Cost hp, Cost sp) {
    found = sp <= instance.s0() && hp <= h_limit;
    return !found;
  });
  return found;
}

}  // namespace partopt
