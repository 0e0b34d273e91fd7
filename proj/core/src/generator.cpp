#include "partopt/generator.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace partopt {

namespace {

void check_range(const CostRange& r, const char* what) {
  if (r.lo < 0 || r.hi < r.lo) {
    throw std::invalid_argument(std::string(what) + " cost range must satisfy 0 <= lo <= hi");
  }
}

}  // namespace

ProblemInstance generate(const GenSpec& spec) {
  if (spec.nodes < 1) throw std::invalid_argument("generator needs at least one node");
  const std::size_t capacity = spec.nodes * (spec.nodes - 1) / 2;
  if (spec.edges > capacity) {
    throw std::invalid_argument("edge count " + std::to_string(spec.edges) +
                                " exceeds simple-graph capacity " + std::to_string(capacity));
  }
  check_range(spec.hw, "hardware");
  check_range(spec.sw, "software");
  check_range(spec.comm, "communication");
  if (const double* f = std::get_if<double>(&spec.s0); f && !(*f >= 0.0 && std::isfinite(*f))) {
    throw std::invalid_argument("s0 fraction must be a non-negative number");
  }
  if (const Cost* a = std::get_if<Cost>(&spec.s0); a && *a < 0) {
    throw std::invalid_argument("s0 must be non-negative");
  }

  std::mt19937_64 rng(spec.seed);
  auto draw = [&rng](const CostRange& r) {
    return std::uniform_int_distribution<Cost>(r.lo, r.hi)(rng);
  };

  std::vector<Cost> hw(spec.nodes), sw(spec.nodes);
  for (std::size_t i = 0; i < spec.nodes; ++i) {
    hw[i] = draw(spec.hw);
    sw[i] = draw(spec.sw);
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(capacity);
  for (std::size_t u = 0; u < spec.nodes; ++u) {
    for (std::size_t v = u + 1; v < spec.nodes; ++v) pairs.emplace_back(u, v);
  }
  std::vector<Edge> edges;
  edges.reserve(spec.edges);
  std::bernoulli_distribution flip(0.5);
  for (std::size_t k = 0; k < spec.edges; ++k) {
    std::uniform_int_distribution<std::size_t> pick(k, pairs.size() - 1);
    std::swap(pairs[k], pairs[pick(rng)]);
    auto [u, v] = pairs[k];
    if (flip(rng)) std::swap(u, v);
    edges.push_back(Edge{u, v, draw(spec.comm)});
  }

  Cost total_sw = 0;
  for (Cost s : sw) total_sw += s;
  const Cost s0 = std::holds_alternative<Cost>(spec.s0)
                      ? std::get<Cost>(spec.s0)
                      : static_cast<Cost>(std::floor(std::get<double>(spec.s0) *
                                                     static_cast<double>(total_sw)));
  return ProblemInstance(TaskGraph(std::move(hw), std::move(sw), std::move(edges)), s0);
}

}  // namespace partopt
