#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace vcs {

using VertexId = std::uint32_t;

struct Edge {
  std::string source;
  std::string target;
  double weight = 0.0;
};

// Raised for malformed input lines; line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParseOptions {
  bool undirected = false;  // materialize both directions of every line
  bool typed = false;       // column position assigns a partition label
  bool require_positive = true;
};

// Parsed edges plus the column-derived partition labels (typed mode only).
// Types come from the original line columns: source column 0, target column 1;
// undirected expansion does not change a vertex's label.
struct EdgeList {
  std::vector<Edge> edges;
  bool typed = false;
  std::unordered_map<std::string, std::uint8_t> vertex_types;
};

// Lines are `<source> <target> <weight>`, split on runs of spaces/tabs.
// Blank lines and lines starting with '#' are skipped. Weight must parse as a
// finite decimal, positive unless `require_positive` is off.
EdgeList parse_edge_list(std::istream& in, const ParseOptions& options = {});

// Aggregated adjacency in CSR form. Ids are assigned in first-appearance
// order (source before target within a line); per-source context blocks are
// sorted by target id; duplicate (source, target) weights are summed.
struct Graph {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::size_t> offsets;  // size |V|+1
  std::vector<VertexId> targets;     // size |E|
  std::vector<double> weights;       // size |E|
  std::vector<double> out_weight_sum;
  std::vector<double> in_weight_sum;
  std::vector<std::uint8_t> types;   // all 0 when untyped
  bool typed = false;

  std::size_t vertex_count() const { return names.size(); }
  std::size_t edge_count() const { return targets.size(); }
  std::size_t degree(VertexId v) const { return offsets[v + 1] - offsets[v]; }

  // Lookup by name; unknown names throw std::out_of_range.
  VertexId vertex_id(const std::string& name) const;
};

Graph build_graph(const EdgeList& list);

}  // namespace vcs
