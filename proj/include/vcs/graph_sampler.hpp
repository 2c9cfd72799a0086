#pragma once

#include <optional>
#include <vector>

#include "vcs/alias.hpp"
#include "vcs/graph.hpp"
#include "vcs/rng.hpp"

namespace vcs {

// Cell counts of the sampling structure; refs are the target-id arrays the
// context tables index into.
struct SizeReport {
  std::size_t source_cells = 0;
  std::size_t context_cells = 0;
  std::size_t context_refs = 0;
  std::size_t negative_cells = 0;
};

// Sampling views over a Graph:
//   vertex_sampling    P(v) proportional to out-weight sum
//   context_sampling   P(u | v) proportional to weight(v -> u)
//   negative_sampling  P(v) proportional to ln(1 + in-weight sum)
// The source and negative tables have one cell per vertex (cell index is the
// vertex id, no reference array); the per-vertex context tables concatenate
// to one cell per edge. Typed variants restrict and renormalize over one
// partition of a typed graph. The Graph must outlive the sampler.
class GraphSampler {
 public:
  explicit GraphSampler(const Graph& graph);

  // Never returns a vertex with zero out-weight.
  VertexId vertex_sampling(Rng& rng) const {
    return source_table_.draw(rng);
  }

  // Empty when v has no out-edges (walks truncate there).
  std::optional<VertexId> context_sampling(VertexId v, Rng& rng) const {
    const auto& table = context_tables_[v];
    if (table.empty()) return std::nullopt;
    return graph_->targets[graph_->offsets[v] + table.draw(rng)];
  }

  // Never returns a vertex with zero in-weight.
  VertexId negative_sampling(Rng& rng) const {
    return negative_table_.draw(rng);
  }

  // Restricted to vertices of `type`; empty when that partition has no
  // positive out-weight. Typed graphs only (throws std::logic_error).
  std::optional<VertexId> typed_vertex_sampling(std::uint8_t type,
                                                Rng& rng) const;

  // Restricted to v's contexts of `type`; empty when none exist.
  std::optional<VertexId> typed_context_sampling(VertexId v, std::uint8_t type,
                                                 Rng& rng) const;

  SizeReport size_report() const;

  const Graph& graph() const { return *graph_; }

 private:
  struct TypedSource {
    AliasTable table;
    std::vector<VertexId> members;
  };
  struct TypedContext {
    AliasTable table;
    std::vector<std::uint32_t> positions;  // offsets into the context block
  };

  const Graph* graph_;
  AliasTable source_table_;
  AliasTable negative_table_;
  std::vector<AliasTable> context_tables_;
  // Indexed [type], [v * type_count + type]; built only for typed graphs.
  std::size_t type_count_ = 0;
  std::vector<TypedSource> typed_sources_;
  std::vector<TypedContext> typed_contexts_;
};

}  // namespace vcs
