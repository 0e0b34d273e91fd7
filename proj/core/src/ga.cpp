#include "partopt/ga.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace partopt {

namespace {

constexpr Cost kCostMax = std::numeric_limits<Cost>::max();

Cost penalised(Cost hp, Cost sp, Cost s0, Cost penalty_weight) {
  const Cost excess = std::max<Cost>(0, sp - s0);
  Cost penalty = 0;
  Cost total = 0;
  if (__builtin_mul_overflow(excess, penalty_weight, &penalty) ||
      __builtin_add_overflow(hp, penalty, &total)) {
    return kCostMax;
  }
  return total;
}

struct Individual {
  std::vector<bool> genes;
  Cost hp = 0;
  Cost sp = 0;
  Cost fitness = 0;
};

class Evolution {
 public:
  Evolution(const ProblemInstance& instance, const GaConfig& cfg)
      : instance_(instance),
        graph_(instance.graph()),
        cfg_(cfg),
        n_(graph_.node_count()),
        mutation_rate_(cfg.mutation_rate.value_or(1.0 / static_cast<double>(n_))),
        penalty_(cfg.penalty_weight.value_or(1 + graph_.total_hw())),
        rng_(cfg.seed) {}

  OptResult run() {
    const auto start = Clock::now();
    const Deadline deadline(start, cfg_.timeout);
    OptResult out;
    out.strategy = Strategy::Ga;

    const std::uint64_t footprint =
        2 * cfg_.population_size * (sizeof(Individual) + (n_ + 7) / 8);
    if (footprint > cfg_.memory_limit_bytes) {
      out.status = SolveStatus::MemoryOut;
      out.elapsed = Clock::now() - start;
      return out;
    }

    std::vector<Individual> population;
    population.reserve(cfg_.population_size);
    population.push_back(make(std::vector<bool>(n_, false)));
    population.push_back(make(std::vector<bool>(n_, true)));
    std::bernoulli_distribution coin(0.5);
    while (population.size() < cfg_.population_size) {
      std::vector<bool> genes(n_);
      for (std::size_t i = 0; i < n_; ++i) genes[i] = coin(rng_);
      population.push_back(make(std::move(genes)));
    }

    bool timed_out = false;
    for (std::size_t gen = 1; gen <= cfg_.generations; ++gen) {
      if (deadline.expired()) {
        timed_out = true;
        break;
      }
      population = next_generation(population);
      if (cfg_.on_generation) cfg_.on_generation(gen, best_fitness_);
    }

    out.probes = evaluations_;
    if (best_feasible_) {
      out.status = timed_out ? SolveStatus::Timeout : SolveStatus::Solved;
      out.optimum_hp = best_feasible_->hp;
      out.sp_at_witness = best_feasible_->sp;
      out.witness = Partition(best_feasible_->genes);
    } else {
      out.status = timed_out ? SolveStatus::Timeout : SolveStatus::InfeasibleInstance;
    }
    out.elapsed = Clock::now() - start;
    return out;
  }

 private:
  Individual make(std::vector<bool> genes) {
    Individual ind;
    ind.genes = std::move(genes);
    for (std::size_t i = 0; i < n_; ++i) {
      if (ind.genes[i]) {
        ind.hp += graph_.hw(i);
      } else {
        ind.sp += graph_.sw(i);
      }
    }
    for (const Edge& e : graph_.edges()) {
      if (ind.genes[e.u] != ind.genes[e.v]) ind.sp += e.cost;
    }
    ind.fitness = penalised(ind.hp, ind.sp, instance_.s0(), penalty_);
    ++evaluations_;
    best_fitness_ = std::min(best_fitness_, ind.fitness);
    if (ind.sp <= instance_.s0() && (!best_feasible_ || ind.hp < best_feasible_->hp)) {
      best_feasible_ = ind;
    }
    return ind;
  }

  const Individual& tournament(const std::vector<Individual>& population) {
    std::uniform_int_distribution<std::size_t> pick(0, population.size() - 1);
    std::size_t best = pick(rng_);
    for (std::size_t t = 1; t < cfg_.tournament_size; ++t) {
      const std::size_t challenger = pick(rng_);
      if (population[challenger].fitness < population[best].fitness) best = challenger;
    }
    return population[best];
  }

  std::vector<Individual> next_generation(const std::vector<Individual>& population) {
    std::vector<std::size_t> ranked(population.size());
    std::iota(ranked.begin(), ranked.end(), std::size_t{0});
    std::stable_sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
      return population[a].fitness < population[b].fitness;
    });

    std::vector<Individual> next;
    next.reserve(population.size());
    for (std::size_t e = 0; e < cfg_.elite_count; ++e) next.push_back(population[ranked[e]]);

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::bernoulli_distribution coin(0.5);
    while (next.size() < population.size()) {
      const Individual& a = tournament(population);
      const Individual& b = tournament(population);
      std::vector<bool> child = a.genes;
      if (unit(rng_) < cfg_.crossover_rate) {
        for (std::size_t i = 0; i < n_; ++i) {
          if (coin(rng_)) child[i] = b.genes[i];
        }
      }
      for (std::size_t i = 0; i < n_; ++i) {
        if (unit(rng_) < mutation_rate_) child[i] = !child[i];
      }
      next.push_back(make(std::move(child)));
    }
    return next;
  }

  const ProblemInstance& instance_;
  const TaskGraph& graph_;
  const GaConfig& cfg_;
  std::size_t n_;
  double mutation_rate_;
  Cost penalty_;
  std::mt19937_64 rng_;
  std::uint64_t evaluations_ = 0;
  Cost best_fitness_ = kCostMax;
  std::optional<Individual> best_feasible_;
};

}  // namespace

void check_config(const GaConfig& cfg) {
  if (cfg.elite_count == 0 || cfg.elite_count >= cfg.population_size) {
    throw std::invalid_argument("elite count must satisfy 0 < elite < population");
  }
  if (cfg.generations < 1) throw std::invalid_argument("generations must be at least 1");
  if (cfg.tournament_size < 1) throw std::invalid_argument("tournament size must be at least 1");
  auto in_unit = [](double r) { return r >= 0.0 && r <= 1.0; };
  if (!in_unit(cfg.crossover_rate)) throw std::invalid_argument("crossover rate must be in [0,1]");
  if (cfg.mutation_rate && !in_unit(*cfg.mutation_rate)) {
    throw std::invalid_argument("mutation rate must be in [0,1]");
  }
  if (cfg.penalty_weight && *cfg.penalty_weight < 1) {
    throw std::invalid_argument("penalty weight must be at least 1");
  }
  if (cfg.timeout.count() < 0) throw std::invalid_argument("timeout must be non-negative");
}

Cost fitness(const ProblemInstance& instance, const Partition& p, Cost penalty_weight) {
  if (penalty_weight < 1) throw std::invalid_argument("penalty weight must be at least 1");
  const CostReport r = evaluate(instance, p);
  return penalised(r.hp, r.sp, instance.s0(), penalty_weight);
}

OptResult ga_solve(const ProblemInstance& instance, const GaConfig& cfg) {
  check_config(cfg);
  return Evolution(instance, cfg).run();
}

double ga_error_percent(Cost hp_ga, Cost hp_exact) {
  if (hp_exact == 0) {
    return hp_ga == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return 100.0 * static_cast<double>(hp_ga - hp_exact) / static_cast<double>(hp_exact);
}

}  // namespace partopt
