#include "partopt/bench.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iomanip>
#include <sstream>

#include "partopt/bnb.hpp"
#include "partopt/sweep.hpp"

namespace partopt {

namespace {

StrategyCell cell_from(const OptResult& r) {
  StrategyCell cell;
  cell.hp = r.optimum_hp;
  cell.sp = r.sp_at_witness;
  cell.elapsed = r.elapsed;
  cell.status = r.status;
  return cell;
}

StrategyCell run_ga(const ProblemInstance& instance, const BenchConfig& cfg) {
  std::optional<OptResult> best;
  Seconds total{0.0};
  for (std::size_t run = 0; run < kGaRunsPerRow; ++run) {
    GaConfig ga = cfg.ga;
    ga.seed = cfg.seed + run;
    ga.timeout = cfg.timeout;
    ga.memory_limit_bytes = cfg.memory_limit_bytes;
    OptResult r = ga_solve(instance, ga);
    total += r.elapsed;
    const bool better = !best || (r.solved() && (!best->solved() || *r.optimum_hp < *best->optimum_hp));
    if (better) best = std::move(r);
  }
  StrategyCell cell = cell_from(*best);
  cell.elapsed = total / static_cast<double>(kGaRunsPerRow);
  return cell;
}

StrategyCell run_one(Strategy s, const ProblemInstance& instance, const BenchConfig& cfg) {
  SweepConfig sweep;
  sweep.timeout = cfg.timeout;
  sweep.workers = s == Strategy::Parallel ? cfg.workers : 1;
  switch (s) {
    case Strategy::Sequential: return cell_from(sweep_sequential(instance, sweep));
    case Strategy::Parallel: return cell_from(sweep_parallel(instance, sweep));
    case Strategy::Binary: return cell_from(sweep_binary(instance, sweep));
    case Strategy::Bnb: {
      BnbOptions options;
      options.timeout = cfg.timeout;
      options.memory_limit_bytes = cfg.memory_limit_bytes;
      return cell_from(minimize(instance, options));
    }
    case Strategy::Ga: return run_ga(instance, cfg);
    case Strategy::Brute: return cell_from(enumerate(instance, cfg.node_limit));
  }
  throw std::logic_error("unknown strategy");
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string status_token(const StrategyCell& cell) {
  if (!cell.error.empty()) return "ERR";
  switch (cell.status) {
    case SolveStatus::Solved: return "OK";
    case SolveStatus::InfeasibleInstance: return "NF";
    case SolveStatus::Timeout: return "TO";
    case SolveStatus::MemoryOut: return "MO";
  }
  return "ERR";
}

std::string fixed(double value, int digits) {
  if (std::isinf(value)) return "inf";
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << value;
  return os.str();
}

}  // namespace

BenchReport run_bench(const std::vector<BenchInstance>& instances, const BenchConfig& cfg) {
  if (cfg.strategies.empty()) throw std::invalid_argument("bench needs at least one strategy");
  BenchReport report;
  for (const BenchInstance& bi : instances) {
    BenchRow row;
    row.name = bi.name;
    row.nodes = bi.instance.graph().node_count();
    row.edges = bi.instance.graph().edge_count();
    row.s0 = bi.instance.s0();
    for (Strategy s : cfg.strategies) {
      try {
        row.cells[s] = run_one(s, bi.instance, cfg);
      } catch (const std::exception& e) {
        StrategyCell failed;
        failed.error = e.what();
        row.cells[s] = failed;
      }
    }

    auto solved = [&](Strategy s) -> const StrategyCell* {
      auto it = row.cells.find(s);
      if (it == row.cells.end() || !it->second.error.empty()) return nullptr;
      return it->second.status == SolveStatus::Solved ? &it->second : nullptr;
    };
    const StrategyCell* ga = solved(Strategy::Ga);
    if (ga) {
      for (Strategy exact : {Strategy::Brute, Strategy::Bnb, Strategy::Sequential,
                             Strategy::Parallel, Strategy::Binary}) {
        if (const StrategyCell* ref = solved(exact)) {
          row.ga_error_pct = ga_error_percent(*ga->hp, *ref->hp);
          break;
        }
      }
    }
    const StrategyCell* seq = solved(Strategy::Sequential);
    const StrategyCell* par = solved(Strategy::Parallel);
    if (seq && par && par->elapsed.count() > 0.0) {
      row.speedup = seq->elapsed.count() / par->elapsed.count();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string csv_header() {
  std::string out = "name,nodes,edges,s0";
  for (Strategy s : kBenchStrategyOrder) {
    const std::string prefix(to_string(s));
    out += "," + prefix + "_hp," + prefix + "_sp," + prefix + "_time," + prefix + "_status";
  }
  out += ",ga_error_pct,speedup";
  return out;
}

std::string to_csv(const BenchReport& report) {
  std::ostringstream os;
  os << csv_header() << '\n';
  for (const BenchRow& row : report.rows) {
    os << csv_escape(row.name) << ',' << row.nodes << ',' << row.edges << ',' << row.s0;
    for (Strategy s : kBenchStrategyOrder) {
      auto it = row.cells.find(s);
      if (it == row.cells.end()) {
        os << ",,,,";
        continue;
      }
      const StrategyCell& cell = it->second;
      const std::string status = status_token(cell);
      os << ',' << (cell.hp ? std::to_string(*cell.hp) : "");
      os << ',' << (cell.sp ? std::to_string(*cell.sp) : "");
      os << ',' << (status == "TO" || status == "MO" ? status : fixed(cell.elapsed.count(), 6));
      os << ',' << status;
    }
    os << ',' << (row.ga_error_pct ? fixed(*row.ga_error_pct, 2) : "");
    os << ',' << (row.speedup ? fixed(*row.speedup, 3) : "");
    os << '\n';
  }
  return os.str();
}

}  // namespace partopt
