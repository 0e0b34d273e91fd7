#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "partopt/graph.hpp"

namespace partopt {

/// Instance file syntax error. line() is 1-based; 0 means end of document.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the line-oriented instance format:
///
///     partopt 1
///     nodes <n>
///     edges <m>
///     s0 <S0>
///     node <id> <h> <s>      (n lines, ids 0..n-1 in order)
///     edge <u> <v> <c>       (m lines)
///
/// `#` starts a comment; blank lines are ignored.
ProblemInstance parse_instance(std::string_view document);

/// Canonical form: lowercase keywords, single spaces, nodes then edges in index order.
std::string write_instance(const ProblemInstance& instance);

ProblemInstance read_instance_file(const std::filesystem::path& path);
void write_instance_file(const std::filesystem::path& path, const ProblemInstance& instance);

}  // namespace partopt
