#include "partopt/sweep.hpp"

#include <algorithm>
#include <stdexcept>
#include <stop_token>
#include <thread>
#include <vector>

#include "partopt/oracle.hpp"

namespace partopt {

namespace {

Cost resolved_h_max(const SweepConfig& cfg, const TaskGraph& graph) {
  return cfg.h_max.value_or(hmax(graph));
}

class SolveClock {
 public:
  explicit SolveClock(Seconds timeout) : start_(Clock::now()), deadline_(start_, timeout) {}
  const Deadline& deadline() const { return deadline_; }
  Seconds elapsed() const { return Clock::now() - start_; }

 private:
  Clock::time_point start_;
  Deadline deadline_;
};

void record_hit(OptResult& out, const ProblemInstance& instance, Cost k, Partition witness) {
  out.status = SolveStatus::Solved;
  out.optimum_hp = k;
  out.sp_at_witness = software_cost(instance.graph(), witness);
  out.witness = std::move(witness);
}

}  // namespace

void check_config(const SweepConfig& cfg, const TaskGraph& graph) {
  const Cost h_max = resolved_h_max(cfg, graph);
  if (cfg.h_min < 0) throw std::invalid_argument("h_min must be non-negative");
  if (cfg.h_min > h_max) {
    throw std::invalid_argument("h_min (" + std::to_string(cfg.h_min) + ") exceeds h_max (" +
                                std::to_string(h_max) + ")");
  }
  if (cfg.workers < 1) throw std::invalid_argument("workers must be at least 1");
  if (cfg.timeout.count() < 0) throw std::invalid_argument("timeout must be non-negative");
}

OptResult sweep_sequential(const ProblemInstance& instance, const SweepConfig& cfg) {
  check_config(cfg, instance.graph());
  const SolveClock clock(cfg.timeout);
  OptResult out;
  out.strategy = Strategy::Sequential;
  out.status = SolveStatus::InfeasibleInstance;

  const Cost h_max = resolved_h_max(cfg, instance.graph());
  const OracleLimits limits{{}, clock.deadline()};
  for (Cost k = cfg.h_min; k <= h_max; ++k) {
    if (clock.deadline().expired()) {
      out.status = SolveStatus::Timeout;
      break;
    }
    OracleVerdict v = feasible(instance, k, limits);
    ++out.probes;
    if (v.outcome == OracleVerdict::Outcome::Timeout) {
      out.status = SolveStatus::Timeout;
      break;
    }
    if (v.feasible()) {
      record_hit(out, instance, k, std::move(*v.witness));
      break;
    }
  }
  out.elapsed = clock.elapsed();
  return out;
}

OptResult sweep_parallel(const ProblemInstance& instance, const SweepConfig& cfg) {
  check_config(cfg, instance.graph());
  const SolveClock clock(cfg.timeout);
  OptResult out;
  out.strategy = Strategy::Parallel;
  out.status = SolveStatus::InfeasibleInstance;

  const Cost h_max = resolved_h_max(cfg, instance.graph());
  const Cost batch_size = static_cast<Cost>(cfg.workers);

  for (Cost first = cfg.h_min; first <= h_max; first += batch_size) {
    if (clock.deadline().expired()) {
      out.status = SolveStatus::Timeout;
      break;
    }
    const auto count = static_cast<std::size_t>(std::min(batch_size, h_max - first + 1));
    std::vector<std::stop_source> stops(count);
    std::vector<OracleVerdict> verdicts(count);
    {
      std::vector<std::jthread> workers;
      workers.reserve(count);
      for (std::size_t i = 0; i < count; ++i) {
        workers.emplace_back([&, i] {
          const Cost k = first + static_cast<Cost>(i);
          if (cfg.before_probe) cfg.before_probe(i, k);
          verdicts[i] = feasible(instance, k, OracleLimits{stops[i].get_token(), clock.deadline()});
          if (verdicts[i].feasible() && cfg.cancellation_on_hit) {
            for (std::size_t j = i + 1; j < count; ++j) stops[j].request_stop();
          }
        });
      }
    }
    out.probes += count;

    // Thresholds below the least feasible one are never cancelled, so the
    // first non-infeasible verdict in threshold order decides the batch.
    bool decided = false;
    for (std::size_t i = 0; i < count && !decided; ++i) {
      switch (verdicts[i].outcome) {
        case OracleVerdict::Outcome::Feasible:
          record_hit(out, instance, first + static_cast<Cost>(i), std::move(*verdicts[i].witness));
          decided = true;
          break;
        case OracleVerdict::Outcome::Timeout:
          out.status = SolveStatus::Timeout;
          decided = true;
          break;
        case OracleVerdict::Outcome::Cancelled:
        case OracleVerdict::Outcome::Infeasible:
          break;
      }
    }
    if (decided) break;
  }
  out.elapsed = clock.elapsed();
  return out;
}

OptResult sweep_binary(const ProblemInstance& instance, const SweepConfig& cfg) {
  check_config(cfg, instance.graph());
  const SolveClock clock(cfg.timeout);
  OptResult out;
  out.strategy = Strategy::Binary;

  const OracleLimits limits{{}, clock.deadline()};
  auto probe = [&](Cost k) -> std::optional<OracleVerdict> {
    if (clock.deadline().expired()) return std::nullopt;
    OracleVerdict v = feasible(instance, k, limits);
    ++out.probes;
    if (v.outcome == OracleVerdict::Outcome::Timeout) return std::nullopt;
    return v;
  };

  Cost lo = cfg.h_min;
  Cost hi = resolved_h_max(cfg, instance.graph());
  auto top = probe(hi);
  if (!top) {
    out.status = SolveStatus::Timeout;
  } else if (!top->feasible()) {
    out.status = SolveStatus::InfeasibleInstance;
  } else {
    // Invariant: hi is feasible with witness `best`; every k < lo is infeasible.
    Partition best = std::move(*top->witness);
    bool timed_out = false;
    while (lo < hi) {
      const Cost mid = lo + (hi - lo) / 2;
      auto v = probe(mid);
      if (!v) {
        timed_out = true;
        break;
      }
      if (v->feasible()) {
        hi = mid;
        best = std::move(*v->witness);
      } else {
        lo = mid + 1;
      }
    }
    if (timed_out) {
      out.status = SolveStatus::Timeout;
    } else {
      record_hit(out, instance, hi, std::move(best));
    }
  }
  out.elapsed = clock.elapsed();
  return out;
}

}  // namespace partopt
