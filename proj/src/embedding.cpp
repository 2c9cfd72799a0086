#include "vcs/embedding.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "vcs/graph.hpp"

namespace vcs {

void EmbeddingTable::rebuild_index() {
  index.clear();
  index.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
}

EmbeddingTable make_embedding_table(std::vector<std::string> names,
                                    std::size_t dim) {
  EmbeddingTable table;
  table.dim = dim;
  table.names = std::move(names);
  table.data.assign(table.names.size() * dim, 0.0f);
  table.rebuild_index();
  return table;
}

void save_embedding(std::ostream& out, const EmbeddingTable& table) {
  out << table.names.size() << ' ' << table.dim << '\n';
  char buf[32];
  for (std::size_t i = 0; i < table.names.size(); ++i) {
    out << table.names[i];
    const float* r = table.row(i);
    for (std::size_t k = 0; k < table.dim; ++k) {
      std::snprintf(buf, sizeof(buf), " %.6f", static_cast<double>(r[k]));
      out << buf;
    }
    out << '\n';
  }
}

EmbeddingTable load_embedding(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing embedding header");
  std::istringstream header(line);
  long long count = -1, dim = -1;
  if (!(header >> count >> dim) || count <= 0 || dim <= 0) {
    throw ParseError(1, "bad embedding header '" + line + "'");
  }
  EmbeddingTable table;
  table.dim = static_cast<std::size_t>(dim);
  table.names.reserve(count);
  table.data.reserve(static_cast<std::size_t>(count * dim));
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string name;
    row >> name;
    table.names.push_back(name);
    for (long long k = 0; k < dim; ++k) {
      double v;
      if (!(row >> v) || !std::isfinite(v)) {
        throw ParseError(line_no, "bad embedding row for '" + name + "'");
      }
      table.data.push_back(static_cast<float>(v));
    }
    std::string extra;
    if (row >> extra) {
      throw ParseError(line_no, "trailing fields in row for '" + name + "'");
    }
  }
  if (table.names.size() != static_cast<std::size_t>(count)) {
    throw ParseError(line_no, "header promised " + std::to_string(count) +
                                  " rows, found " +
                                  std::to_string(table.names.size()));
  }
  table.rebuild_index();
  return table;
}

}  // namespace vcs
