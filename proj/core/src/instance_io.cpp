#include "partopt/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace partopt {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

struct Record {
  std::size_t line;
  std::vector<std::string_view> fields;
};

bool is_keyword(std::string_view w) {
  return w == "partopt" || w == "nodes" || w == "edges" || w == "s0" || w == "node" ||
         w == "edge";
}

std::vector<Record> tokenize(std::string_view document) {
  std::vector<Record> records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= document.size()) {
    const std::size_t eol = std::min(document.find('\n', pos), document.size());
    std::string_view line = document.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    Record rec{line_no, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) rec.fields.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!rec.fields.empty()) records.push_back(std::move(rec));
    if (eol == document.size()) break;
  }
  return records;
}

class Parser {
 public:
  explicit Parser(std::string_view document) : records_(tokenize(document)) {}

  ProblemInstance run() {
    const Record& magic = expect("partopt", 1);
    if (integer(magic, 1) != 1) {
      throw ParseError(magic.line, "unsupported format version '" + std::string(magic.fields[1]) + "'");
    }

    const Record& nodes_rec = expect("nodes", 1);
    const Cost n = integer(nodes_rec, 1);
    if (n < 1) throw ParseError(nodes_rec.line, "graph must have at least one node");

    const Record& edges_rec = expect("edges", 1);
    const Cost m = integer(edges_rec, 1);
    if (m < 0) throw ParseError(edges_rec.line, "edge count must be non-negative");

    const Record& s0_rec = expect("s0", 1);
    const Cost s0 = integer(s0_rec, 1);
    if (s0 < 0) throw ParseError(s0_rec.line, "s0 must be non-negative");

    std::vector<Cost> hw, sw;
    Cost hw_sum = 0, sw_sum = 0;
    for (Cost id = 0; id < n; ++id) {
      const Record& rec = expect("node", 3, "node " + std::to_string(id));
      const Cost got = integer(rec, 1);
      if (got < id) throw ParseError(rec.line, "duplicate node id " + std::to_string(got));
      if (got > id) throw ParseError(rec.line, "missing node id " + std::to_string(id));
      const Cost h = integer(rec, 2);
      const Cost s = integer(rec, 3);
      if (h < 0 || s < 0) throw ParseError(rec.line, "negative cost at node " + std::to_string(id));
      accumulate(rec, hw_sum, h);
      accumulate(rec, sw_sum, s);
      hw.push_back(h);
      sw.push_back(s);
    }

    std::vector<Edge> edges;
    std::set<std::pair<Cost, Cost>> seen;
    for (Cost k = 0; k < m; ++k) {
      const Record& rec = expect("edge", 3, "edge " + std::to_string(k));
      const Cost u = integer(rec, 1);
      const Cost v = integer(rec, 2);
      const Cost c = integer(rec, 3);
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw ParseError(rec.line, "edge endpoint out of range");
      }
      if (u == v) throw ParseError(rec.line, "self-loop at node " + std::to_string(u));
      if (!seen.insert(std::minmax(u, v)).second) {
        throw ParseError(rec.line, "duplicate edge {" + std::to_string(std::min(u, v)) + "," +
                                       std::to_string(std::max(u, v)) + "}");
      }
      if (c < 0) throw ParseError(rec.line, "negative communication cost");
      accumulate(rec, sw_sum, c);
      edges.push_back(Edge{static_cast<std::size_t>(u), static_cast<std::size_t>(v), c});
    }

    if (next_ < records_.size()) {
      const Record& extra = records_[next_];
      throw ParseError(extra.line, "unexpected record '" + std::string(extra.fields[0]) + "'");
    }

    try {
      return ProblemInstance(TaskGraph(std::move(hw), std::move(sw), std::move(edges)), s0);
    } catch (const std::invalid_argument& e) {
      throw ParseError(0, e.what());
    }
  }

 private:
  const Record& expect(std::string_view keyword, std::size_t values, std::string what = {}) {
    if (what.empty()) what = std::string(keyword);
    if (next_ >= records_.size()) throw ParseError(0, "missing field '" + what + "'");
    const Record& rec = records_[next_];
    const std::string_view got = rec.fields[0];
    if (!is_keyword(got)) {
      throw ParseError(rec.line, "unknown keyword '" + std::string(got) + "'");
    }
    if (got != keyword) {
      throw ParseError(rec.line, "missing field '" + what + "' (found '" + std::string(got) + "')");
    }
    if (rec.fields.size() != values + 1) {
      throw ParseError(rec.line, "'" + std::string(keyword) + "' expects " +
                                     std::to_string(values) + " value(s)");
    }
    ++next_;
    return rec;
  }

  static Cost integer(const Record& rec, std::size_t field) {
    const std::string_view text = rec.fields[field];
    Cost value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError(rec.line, "integer overflow in '" + std::string(text) + "'");
    }
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ParseError(rec.line, "expected an integer, found '" + std::string(text) + "'");
    }
    return value;
  }

  static void accumulate(const Record& rec, Cost& sum, Cost value) {
    if (__builtin_add_overflow(sum, value, &sum)) {
      throw ParseError(rec.line, "integer overflow: cost sums exceed the 64-bit range");
    }
  }

  std::vector<Record> records_;
  std::size_t next_ = 0;
};

}  // namespace

ProblemInstance parse_instance(std::string_view document) { return Parser(document).run(); }

std::string write_instance(const ProblemInstance& instance) {
  const TaskGraph& g = instance.graph();
  std::ostringstream os;
  os << "partopt 1\n";
  os << "nodes " << g.node_count() << '\n';
  os << "edges " << g.edge_count() << '\n';
  os << "s0 " << instance.s0() << '\n';
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    os << "node " << i << ' ' << g.hw(i) << ' ' << g.sw(i) << '\n';
  }
  for (const Edge& e : g.edges()) os << "edge " << e.u << ' ' << e.v << ' ' << e.cost << '\n';
  return os.str();
}

ProblemInstance read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

void write_instance_file(const std::filesystem::path& path, const ProblemInstance& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write instance file " + path.string());
  out << write_instance(instance);
}

}  // namespace partopt
