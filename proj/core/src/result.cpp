#include "partopt/result.hpp"

#include <sstream>

namespace partopt {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Sequential: return "sequential";
    case Strategy::Parallel: return "parallel";
    case Strategy::Binary: return "binary";
    case Strategy::Bnb: return "bnb";
    case Strategy::Ga: return "ga";
    case Strategy::Brute: return "brute";
  }
  return "unknown";
}

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved: return "Solved";
    case SolveStatus::InfeasibleInstance: return "InfeasibleInstance";
    case SolveStatus::Timeout: return "Timeout";
    case SolveStatus::MemoryOut: return "MemoryOut";
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (Strategy s : {Strategy::Sequential, Strategy::Parallel, Strategy::Binary, Strategy::Bnb,
                     Strategy::Ga, Strategy::Brute}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string format_result(const OptResult& result) {
  std::ostringstream os;
  os << "strategy " << to_string(result.strategy) << '\n';
  os << "status " << to_string(result.status) << '\n';
  if (result.status == SolveStatus::InfeasibleInstance) {
    os << kViolationNotFound << '\n';
  }
  if (result.optimum_hp) os << "hp " << *result.optimum_hp << '\n';
  if (result.sp_at_witness) os << "sp " << *result.sp_at_witness << '\n';
  if (result.witness) os << "witness " << result.witness->to_string() << '\n';
  os << "elapsed " << result.elapsed.count() << '\n';
  os << "probes " << result.probes << '\n';
  return os.str();
}

}  // namespace partopt
