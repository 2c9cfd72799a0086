#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "vcs/embedding.hpp"
#include "vcs/graph_sampler.hpp"
#include "vcs/model.hpp"

namespace vcs {

enum class LineOrder { first, second, both };

struct TrainConfig {
  std::size_t dimensions = 64;
  std::size_t walk_times = 10;    // epochs over the vertex set
  std::size_t walk_length = 40;   // hops per walk (walk holds length+1 slots)
  std::size_t window = 5;
  std::size_t negatives = 5;
  double sample_times = 10.0;     // millions of pair draws (line/hpe)
  double alpha = 0.025;
  std::size_t workers = 1;
  std::uint64_t seed = 1;
  LineOrder line_order = LineOrder::both;
  std::vector<std::size_t> walklet_offsets;  // empty = all of 1..window
};

// Throws std::invalid_argument on out-of-range values.
void validate(const TrainConfig& cfg);

// Weighted walk of up to length hops from start, truncated at vertices with
// no out-edges. walk[0] == start.
std::vector<VertexId> generate_walk(const GraphSampler& sampler,
                                    VertexId start, std::size_t length,
                                    Rng& rng);

// Observes every positive pair a trainer feeds to the optimizer, in emission
// order. With multiple workers the sink is invoked concurrently and must be
// thread-safe. Empty function = no observation.
using PairSink = std::function<void(VertexId, VertexId)>;

struct TrainResult {
  EmbeddingTable vertex;                   // what `train --save` writes
  std::optional<EmbeddingTable> context;   // context-role rows when distinct
};

// Window skip-gram over weighted walks: walk_times epochs, each a seeded
// shuffle of V, windows clipped to the walk, center excluded.
TrainResult train_deepwalk(const GraphSampler& sampler, const TrainConfig& cfg,
                           const PairSink& sink = {});

// One model per offset k: only the pairs exactly k hops apart in the walk
// train it. Output rows concatenate the offset models (ascending k).
TrainResult train_walklets(const GraphSampler& sampler, const TrainConfig& cfg,
                           const PairSink& sink = {});

// Edge sampling: v1 by out-weight, v2 among v1's contexts. First order
// shares one matrix for both roles; second order keeps separate context
// rows; `both` trains the two models on the same drawn pairs and
// concatenates their vertex rows.
TrainResult train_line(const GraphSampler& sampler, const TrainConfig& cfg,
                       const PairSink& sink = {});

// Walks from a sampled v1; every visited vertex becomes a context of v1, so
// only v1's vertex row accumulates gradient per walk.
TrainResult train_hpe(const GraphSampler& sampler, const TrainConfig& cfg,
                      const PairSink& sink = {});

}  // namespace vcs
