// partopt: hardware-software bipartitioning solvers.
//
//   partopt solve <file> --strategy {sequential|parallel|binary|bnb|ga|brute}
//   partopt gen --nodes N --edges M [...] -o out.pt
//   partopt bench [files...] [--random K ...] --csv out.csv
//   partopt export-ilp <file> [-o out.ilp]
//
// Exit codes: 0 solved, 2 no feasible threshold, 3 timeout, 4 input error,
// 5 memory-out, 64 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "partopt/partopt.hpp"

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitTimeout = 3;
constexpr int kExitInputError = 4;
constexpr int kExitMemoryOut = 5;
constexpr int kExitUsage = 64;

struct GaFlags {
  std::size_t population = 500;
  std::size_t elite = 50;
  std::size_t generations = 75;
  std::optional<double> mutation;
  double crossover = 0.9;
  std::size_t tournament = 2;
  std::optional<partopt::Cost> penalty;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--ga-population", population, "GA population size")->capture_default_str();
    cmd.add_option("--ga-elite", elite, "GA elite count")->capture_default_str();
    cmd.add_option("--ga-generations", generations, "GA generations")->capture_default_str();
    cmd.add_option("--ga-mutation", mutation, "GA per-bit mutation rate (default 1/n)");
    cmd.add_option("--ga-crossover", crossover, "GA crossover rate")->capture_default_str();
    cmd.add_option("--ga-tournament", tournament, "GA tournament size")->capture_default_str();
    cmd.add_option("--ga-penalty", penalty, "GA penalty weight (default 1 + sum h)");
  }

  partopt::GaConfig config(std::uint64_t seed, double timeout) const {
    partopt::GaConfig cfg;
    cfg.population_size = population;
    cfg.elite_count = elite;
    cfg.generations = generations;
    cfg.mutation_rate = mutation;
    cfg.crossover_rate = crossover;
    cfg.tournament_size = tournament;
    cfg.penalty_weight = penalty;
    cfg.seed = seed;
    cfg.timeout = partopt::Seconds(timeout);
    return cfg;
  }
};

int exit_code(partopt::SolveStatus status) {
  switch (status) {
    case partopt::SolveStatus::Solved: return kExitSolved;
    case partopt::SolveStatus::InfeasibleInstance: return kExitInfeasible;
    case partopt::SolveStatus::Timeout: return kExitTimeout;
    case partopt::SolveStatus::MemoryOut: return kExitMemoryOut;
  }
  return kExitInputError;
}

std::size_t default_workers() { return std::max(1U, std::thread::hardware_concurrency()); }

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct SolveFlags {
  std::string file;
  std::string strategy = "sequential";
  std::optional<partopt::Cost> hmin;
  std::optional<partopt::Cost> hmax;
  std::size_t workers = default_workers();
  double timeout = partopt::kDefaultTimeout.count();
  std::uint64_t seed = 1;
  std::uint64_t memory_limit = partopt::kDefaultMemoryLimitBytes;
  std::size_t node_limit = partopt::kDefaultNodeLimit;
  GaFlags ga;
};

int run_solve(const SolveFlags& f) {
  const auto strategy = partopt::parse_strategy(f.strategy);
  if (!strategy) throw std::invalid_argument("unknown strategy '" + f.strategy + "'");
  const partopt::ProblemInstance instance = partopt::read_instance_file(f.file);

  partopt::SweepConfig sweep;
  sweep.h_min = f.hmin.value_or(0);
  sweep.h_max = f.hmax;
  sweep.workers = f.workers;
  sweep.timeout = partopt::Seconds(f.timeout);
  partopt::check_config(sweep, instance.graph());

  partopt::OptResult result;
  switch (*strategy) {
    case partopt::Strategy::Sequential: result = partopt::sweep_sequential(instance, sweep); break;
    case partopt::Strategy::Parallel: result = partopt::sweep_parallel(instance, sweep); break;
    case partopt::Strategy::Binary: result = partopt::sweep_binary(instance, sweep); break;
    case partopt::Strategy::Bnb: {
      partopt::BnbOptions options;
      options.timeout = sweep.timeout;
      options.memory_limit_bytes = f.memory_limit;
      result = partopt::minimize(instance, options);
      break;
    }
    case partopt::Strategy::Ga: {
      partopt::GaConfig cfg = f.ga.config(f.seed, f.timeout);
      cfg.memory_limit_bytes = f.memory_limit;
      result = partopt::ga_solve(instance, cfg);
      break;
    }
    case partopt::Strategy::Brute: result = partopt::enumerate(instance, f.node_limit, f.hmax); break;
  }
  std::cout << partopt::format_result(result);
  return exit_code(result.status);
}

struct GenFlags {
  partopt::GenSpec spec;
  std::optional<partopt::Cost> s0;
  double s0_fraction = 0.5;
  std::string output;
};

int run_gen(GenFlags f) {
  if (f.s0) {
    f.spec.s0 = *f.s0;
  } else {
    f.spec.s0 = f.s0_fraction;
  }
  write_output(f.output, partopt::write_instance(partopt::generate(f.spec)));
  return kExitSolved;
}

struct BenchFlags {
  std::vector<std::string> files;
  std::size_t random_count = 0;
  std::size_t random_nodes = 12;
  std::size_t random_edges = 20;
  double s0_fraction = 0.5;
  std::vector<std::string> strategies{"sequential", "parallel", "binary", "bnb", "ga", "brute"};
  std::size_t workers = default_workers();
  double timeout = partopt::kDefaultTimeout.count();
  std::uint64_t seed = 1;
  std::uint64_t memory_limit = partopt::kDefaultMemoryLimitBytes;
  std::size_t node_limit = partopt::kDefaultNodeLimit;
  std::string csv;
  GaFlags ga;
};

int run_bench(const BenchFlags& f) {
  std::vector<partopt::BenchInstance> instances;
  for (const auto& file : f.files) {
    instances.push_back({std::filesystem::path(file).stem().string(), partopt::read_instance_file(file)});
  }
  for (std::size_t i = 0; i < f.random_count; ++i) {
    partopt::GenSpec spec;
    spec.nodes = f.random_nodes;
    spec.edges = f.random_edges;
    spec.s0 = f.s0_fraction;
    spec.seed = f.seed + i;
    instances.push_back({"random-" + std::to_string(i), partopt::generate(spec)});
  }
  if (instances.empty()) throw std::invalid_argument("bench needs instance files or --random");

  partopt::BenchConfig cfg;
  for (const auto& name : f.strategies) {
    const auto s = partopt::parse_strategy(name);
    if (!s) throw std::invalid_argument("unknown strategy '" + name + "'");
    cfg.strategies.push_back(*s);
  }
  cfg.workers = f.workers;
  cfg.timeout = partopt::Seconds(f.timeout);
  cfg.memory_limit_bytes = f.memory_limit;
  cfg.seed = f.seed;
  cfg.ga = f.ga.config(f.seed, f.timeout);
  cfg.node_limit = f.node_limit;
  partopt::check_config(cfg.ga);

  write_output(f.csv, partopt::to_csv(partopt::run_bench(instances, cfg)));
  return kExitSolved;
}

int run_export(const std::string& file, const std::string& output) {
  const partopt::ProblemInstance instance = partopt::read_instance_file(file);
  write_output(output, partopt::write_ilp_listing(partopt::build_ilp(instance)));
  return kExitSolved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hardware-software bipartitioning: minimise hardware cost under a software budget"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a key=value file; command-line flags win");

  SolveFlags solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance file");
  solve_cmd->add_option("file", solve.file, "Instance file")->required();
  solve_cmd->add_option("--strategy", solve.strategy, "sequential|parallel|binary|bnb|ga|brute")
      ->capture_default_str();
  solve_cmd->add_option("--hmin", solve.hmin, "Lowest hardware-cost threshold (default 0)");
  solve_cmd->add_option("--hmax", solve.hmax, "Highest hardware-cost threshold (default sum h)");
  solve_cmd->add_option("--workers", solve.workers, "Concurrent probes per batch")->capture_default_str();
  solve_cmd->add_option("--timeout", solve.timeout, "Wall-clock limit in seconds")->capture_default_str();
  solve_cmd->add_option("--seed", solve.seed, "GA seed")->capture_default_str();
  solve_cmd->add_option("--memory-limit", solve.memory_limit, "Solver memory ceiling in bytes")
      ->capture_default_str();
  solve_cmd->add_option("--node-limit", solve.node_limit, "Largest n accepted by brute")
      ->capture_default_str();
  solve.ga.add_to(*solve_cmd);

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance file");
  gen_cmd->add_option("--nodes", gen.spec.nodes, "Node count")->capture_default_str();
  gen_cmd->add_option("--edges", gen.spec.edges, "Edge count")->capture_default_str();
  gen_cmd->add_option("--hw-min", gen.spec.hw.lo)->capture_default_str();
  gen_cmd->add_option("--hw-max", gen.spec.hw.hi)->capture_default_str();
  gen_cmd->add_option("--sw-min", gen.spec.sw.lo)->capture_default_str();
  gen_cmd->add_option("--sw-max", gen.spec.sw.hi)->capture_default_str();
  gen_cmd->add_option("--comm-min", gen.spec.comm.lo)->capture_default_str();
  gen_cmd->add_option("--comm-max", gen.spec.comm.hi)->capture_default_str();
  auto* s0_opt = gen_cmd->add_option("--s0", gen.s0, "Absolute software budget");
  gen_cmd->add_option("--s0-fraction", gen.s0_fraction, "Budget as a fraction of sum s")
      ->capture_default_str()
      ->excludes(s0_opt);
  gen_cmd->add_option("--seed", gen.spec.seed)->capture_default_str();
  gen_cmd->add_option("-o,--output", gen.output, "Output file (stdout if omitted)");

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run strategies over instances and write CSV");
  bench_cmd->add_option("files", bench.files, "Instance files");
  bench_cmd->add_option("--random", bench.random_count, "Add this many generated instances");
  bench_cmd->add_option("--random-nodes", bench.random_nodes)->capture_default_str();
  bench_cmd->add_option("--random-edges", bench.random_edges)->capture_default_str();
  bench_cmd->add_option("--s0-fraction", bench.s0_fraction)->capture_default_str();
  bench_cmd->add_option("--strategies", bench.strategies, "Comma-separated strategy list")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--workers", bench.workers)->capture_default_str();
  bench_cmd->add_option("--timeout", bench.timeout, "Per-run limit in seconds")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_option("--memory-limit", bench.memory_limit)->capture_default_str();
  bench_cmd->add_option("--node-limit", bench.node_limit)->capture_default_str();
  bench_cmd->add_option("--csv", bench.csv, "CSV output file (stdout if omitted)");
  bench.ga.add_to(*bench_cmd);

  std::string ilp_file, ilp_output;
  auto* ilp_cmd = app.add_subcommand("export-ilp", "Write the 0-1 ILP matrix listing");
  ilp_cmd->add_option("file", ilp_file, "Instance file")->required();
  ilp_cmd->add_option("-o,--output", ilp_output, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve);
    if (gen_cmd->parsed()) return run_gen(gen);
    if (bench_cmd->parsed()) return run_bench(bench);
    if (ilp_cmd->parsed()) return run_export(ilp_file, ilp_output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitUsage;
}
