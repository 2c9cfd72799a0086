#include "vcs/graph_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vcs {

GraphSampler::GraphSampler(const Graph& graph) : graph_(&graph) {
  const std::size_t n = graph.vertex_count();

  source_table_ = AliasTable::with_zero_guard(graph.out_weight_sum);

  std::vector<double> negative_weights(n);
  for (std::size_t v = 0; v < n; ++v) {
    negative_weights[v] = std::log1p(graph.in_weight_sum[v]);
  }
  negative_table_ = AliasTable::with_zero_guard(negative_weights);

  context_tables_.resize(n);
  std::vector<double> block;
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t begin = graph.offsets[v], end = graph.offsets[v + 1];
    if (begin == end) continue;
    block.assign(graph.weights.begin() + begin, graph.weights.begin() + end);
    context_tables_[v] = AliasTable(block);
  }

  if (!graph.typed) return;
  type_count_ =
      1 + *std::max_element(graph.types.begin(), graph.types.end());

  typed_sources_.resize(type_count_);
  for (std::size_t t = 0; t < type_count_; ++t) {
    std::vector<double> weights;
    auto& part = typed_sources_[t];
    for (VertexId v = 0; v < n; ++v) {
      if (graph.types[v] == t && graph.out_weight_sum[v] > 0.0) {
        part.members.push_back(v);
        weights.push_back(graph.out_weight_sum[v]);
      }
    }
    if (!weights.empty()) part.table = AliasTable(weights);
  }

  typed_contexts_.resize(n * type_count_);
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t begin = graph.offsets[v], end = graph.offsets[v + 1];
    for (std::size_t t = 0; t < type_count_; ++t) {
      std::vector<double> weights;
      auto& part = typed_contexts_[v * type_count_ + t];
      for (std::size_t pos = begin; pos < end; ++pos) {
        if (graph.types[graph.targets[pos]] == t) {
          part.positions.push_back(static_cast<std::uint32_t>(pos - begin));
          weights.push_back(graph.weights[pos]);
        }
      }
      if (!weights.empty()) part.table = AliasTable(weights);
    }
  }
}

std::optional<VertexId> GraphSampler::typed_vertex_sampling(std::uint8_t type,
                                                            Rng& rng) const {
  if (type_count_ == 0) {
    throw std::logic_error("typed sampling on an untyped graph");
  }
  if (type >= type_count_) return std::nullopt;
  const auto& part = typed_sources_[type];
  if (part.table.empty()) return std::nullopt;
  return part.members[part.table.draw(rng)];
}

std::optional<VertexId> GraphSampler::typed_context_sampling(
    VertexId v, std::uint8_t type, Rng& rng) const {
  if (type_count_ == 0) {
    throw std::logic_error("typed sampling on an untyped graph");
  }
  if (type >= type_count_) return std::nullopt;
  const auto& part = typed_contexts_[v * type_count_ + type];
  if (part.table.empty()) return std::nullopt;
  const std::uint32_t pos = part.positions[part.table.draw(rng)];
  return graph_->targets[graph_->offsets[v] + pos];
}

SizeReport GraphSampler::size_report() const {
  SizeReport report;
  report.source_cells = source_table_.size();
  for (const auto& table : context_tables_) {
    report.context_cells += table.size();
  }
  report.context_refs = graph_->edge_count();
  report.negative_cells = negative_table_.size();
  return report;
}

}  // namespace vcs
