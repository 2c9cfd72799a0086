#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

namespace vcs {

// Named embedding rows, the on-disk unit. Text format:
//   <row count> <dim>\n
//   <name> <v1> ... <vdim>\n        (values at 6 decimal places)
struct EmbeddingTable {
  std::size_t dim = 0;
  std::vector<std::string> names;
  std::vector<float> data;  // names.size() * dim, row-major
  std::unordered_map<std::string, std::size_t> index;

  const float* row(std::size_t i) const { return data.data() + i * dim; }
  float* row(std::size_t i) { return data.data() + i * dim; }

  std::optional<std::size_t> find(const std::string& name) const {
    auto it = index.find(name);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  void rebuild_index();
};

EmbeddingTable make_embedding_table(std::vector<std::string> names,
                                    std::size_t dim);

void save_embedding(std::ostream& out, const EmbeddingTable& table);

// Throws ParseError on malformed headers/rows.
EmbeddingTable load_embedding(std::istream& in);

}  // namespace vcs
