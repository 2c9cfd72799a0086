#include "vcs/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace vcs {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

double parse_weight(const std::string& token, std::size_t line_no,
                    bool require_positive) {
  const char* begin = token.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  if (end != begin + token.size() || !std::isfinite(value)) {
    throw ParseError(line_no, "bad weight '" + token + "'");
  }
  if (require_positive && value <= 0.0) {
    throw ParseError(line_no, "weight must be positive, got '" + token + "'");
  }
  return value;
}

}  // namespace

EdgeList parse_edge_list(std::istream& in, const ParseOptions& options) {
  EdgeList out;
  out.typed = options.typed;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto fields = split_fields(line);
    if (fields.empty() || fields[0][0] == '#') continue;
    if (fields.size() != 3) {
      throw ParseError(line_no, "expected `source target weight`, got " +
                                    std::to_string(fields.size()) + " fields");
    }
    double w = parse_weight(fields[2], line_no, options.require_positive);
    if (options.typed) {
      for (int col = 0; col < 2; ++col) {
        auto [it, inserted] = out.vertex_types.emplace(
            fields[col], static_cast<std::uint8_t>(col));
        if (!inserted && it->second != col) {
          throw ParseError(line_no, "vertex '" + fields[col] +
                                        "' appears in both columns of a "
                                        "typed edge list");
        }
      }
    }
    out.edges.push_back({fields[0], fields[1], w});
    if (options.undirected) out.edges.push_back({fields[1], fields[0], w});
  }
  return out;
}

VertexId Graph::vertex_id(const std::string& name) const {
  auto it = ids.find(name);
  if (it == ids.end()) {
    throw std::out_of_range("unknown vertex '" + name + "'");
  }
  return it->second;
}

Graph build_graph(const EdgeList& list) {
  if (list.edges.empty()) {
    throw std::invalid_argument("empty edge list");
  }
  Graph g;
  g.typed = list.typed;
  auto intern = [&g](const std::string& name) -> VertexId {
    auto [it, inserted] =
        g.ids.emplace(name, static_cast<VertexId>(g.names.size()));
    if (inserted) g.names.push_back(name);
    return it->second;
  };
  struct RawEdge {
    VertexId source, target;
    double weight;
  };
  std::vector<RawEdge> raw;
  raw.reserve(list.edges.size());
  for (const auto& e : list.edges) {
    VertexId s = intern(e.source);
    VertexId t = intern(e.target);
    raw.push_back({s, t, e.weight});
  }
  const std::size_t n = g.names.size();
  if (n > std::numeric_limits<VertexId>::max()) {
    throw std::invalid_argument("vertex count exceeds id range");
  }

  // Aggregate duplicates and order each context block by target id.
  std::sort(raw.begin(), raw.end(), [](const RawEdge& a, const RawEdge& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });
  g.offsets.assign(n + 1, 0);
  g.out_weight_sum.assign(n, 0.0);
  g.in_weight_sum.assign(n, 0.0);
  for (std::size_t i = 0; i < raw.size();) {
    std::size_t j = i;
    double w = 0.0;
    while (j < raw.size() && raw[j].source == raw[i].source &&
           raw[j].target == raw[i].target) {
      w += raw[j].weight;
      ++j;
    }
    g.targets.push_back(raw[i].target);
    g.weights.push_back(w);
    g.offsets[raw[i].source + 1] += 1;
    g.out_weight_sum[raw[i].source] += w;
    g.in_weight_sum[raw[i].target] += w;
    i = j;
  }
  std::partial_sum(g.offsets.begin(), g.offsets.end(), g.offsets.begin());

  g.types.assign(n, 0);
  if (list.typed) {
    for (const auto& [name, type] : list.vertex_types) {
      g.types[g.ids.at(name)] = type;
    }
  }
  return g;
}

}  // namespace vcs
