#include "vcs/trainers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace vcs {

namespace {

// splitmix64 finalizer over a combined word; derives independent stream seeds
// (per epoch, per offset model) from the user seed.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void shuffle_ids(std::vector<VertexId>& ids, Rng& rng) {
  for (std::size_t i = ids.size(); i > 1; --i) {
    std::swap(ids[i - 1], ids[rng.uniform_int(i)]);
  }
}

// Worker 0 runs on the calling thread when workers == 1, keeping
// single-worker runs free of scheduling effects.
template <typename Fn>
void run_workers(std::size_t workers, Fn&& fn) {
  if (workers <= 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(fn, w);
  for (auto& t : pool) t.join();
}

std::pair<std::size_t, std::size_t> slice(std::size_t n, std::size_t workers,
                                          std::size_t w) {
  return {n * w / workers, n * (w + 1) / workers};
}

EmbeddingTable to_table(const Graph& g, const std::vector<real>& data,
                        std::size_t dim) {
  auto table = make_embedding_table(g.names, dim);
  std::copy(data.begin(), data.end(), table.data.begin());
  return table;
}

std::vector<std::size_t> resolve_offsets(const TrainConfig& cfg) {
  std::vector<std::size_t> offsets = cfg.walklet_offsets;
  if (offsets.empty()) {
    for (std::size_t k = 1; k <= cfg.window; ++k) offsets.push_back(k);
  }
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
  return offsets;
}

// Shared skeleton for the walk trainers: walk_times epochs, each a fresh
// seeded shuffle of V chunked across workers. emit_pairs(walk, rng, alpha)
// runs the per-walk updates.
template <typename EmitFn>
void walk_epochs(const GraphSampler& sampler, const TrainConfig& cfg,
                 TrainProgress& progress, std::uint64_t shuffle_stream,
                 EmitFn&& emit_pairs) {
  const std::size_t n = sampler.graph().vertex_count();
  std::vector<VertexId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<VertexId>(i);
  Rng shuffle_rng(mix_seed(cfg.seed, shuffle_stream));
  std::vector<Rng> worker_rngs;
  for (std::size_t w = 0; w < cfg.workers; ++w) {
    worker_rngs.emplace_back(cfg.seed + w);
  }
  for (std::size_t epoch = 0; epoch < cfg.walk_times; ++epoch) {
    shuffle_ids(order, shuffle_rng);
    run_workers(cfg.workers, [&](std::size_t w) {
      auto [lo, hi] = slice(n, cfg.workers, w);
      Rng& rng = worker_rngs[w];
      for (std::size_t i = lo; i < hi; ++i) {
        const real alpha = progress.alpha();
        auto walk = generate_walk(sampler, order[i], cfg.walk_length, rng);
        emit_pairs(walk, rng, alpha);
        progress.advance();
      }
    });
  }
}

}  // namespace

void validate(const TrainConfig& cfg) {
  if (cfg.dimensions == 0) throw std::invalid_argument("dimensions must be positive");
  if (cfg.walk_times == 0) throw std::invalid_argument("walk-times must be positive");
  if (cfg.walk_length == 0) throw std::invalid_argument("walk-length must be positive");
  if (cfg.window == 0) throw std::invalid_argument("window must be positive");
  if (cfg.window > cfg.walk_length) {
    throw std::invalid_argument("window cannot exceed walk-length");
  }
  if (!(cfg.sample_times > 0)) throw std::invalid_argument("sample-times must be positive");
  if (!(cfg.alpha > 0)) throw std::invalid_argument("alpha must be positive");
  if (cfg.workers == 0) throw std::invalid_argument("threads must be positive");
  for (std::size_t k : cfg.walklet_offsets) {
    if (k < 1 || k > cfg.window) {
      throw std::invalid_argument("walklet offsets must lie in [1, window]");
    }
  }
}

std::vector<VertexId> generate_walk(const GraphSampler& sampler,
                                    VertexId start, std::size_t length,
                                    Rng& rng) {
  std::vector<VertexId> walk;
  walk.reserve(length + 1);
  walk.push_back(start);
  for (std::size_t step = 0; step < length; ++step) {
    auto next = sampler.context_sampling(walk.back(), rng);
    if (!next) break;
    walk.push_back(*next);
  }
  return walk;
}

TrainResult train_deepwalk(const GraphSampler& sampler, const TrainConfig& cfg,
                           const PairSink& sink) {
  validate(cfg);
  const Graph& g = sampler.graph();
  auto model = init_model(g.vertex_count(), cfg.dimensions, cfg.seed);
  TrainProgress progress(static_cast<real>(cfg.alpha),
                         cfg.walk_times * g.vertex_count());
  walk_epochs(sampler, cfg, progress, /*shuffle_stream=*/0,
              [&](const std::vector<VertexId>& walk, Rng& rng, real alpha) {
                std::vector<VertexId> negatives(cfg.negatives);
                const std::size_t len = walk.size();
                for (std::size_t i = 0; i < len; ++i) {
                  const std::size_t jlo = i > cfg.window ? i - cfg.window : 0;
                  const std::size_t jhi = std::min(i + cfg.window, len - 1);
                  for (std::size_t j = jlo; j <= jhi; ++j) {
                    if (j == i) continue;
                    if (sink) sink(walk[i], walk[j]);
                    for (auto& vn : negatives) {
                      vn = sampler.negative_sampling(rng);
                    }
                    update_pair(model, walk[i], walk[j], negatives, alpha);
                  }
                }
              });
  TrainResult result;
  result.vertex = to_table(g, model.phi, cfg.dimensions);
  result.context = to_table(g, model.phi_ctx, cfg.dimensions);
  return result;
}

TrainResult train_walklets(const GraphSampler& sampler, const TrainConfig& cfg,
                           const PairSink& sink) {
  validate(cfg);
  const Graph& g = sampler.graph();
  const auto offsets = resolve_offsets(cfg);
  const std::size_t d = cfg.dimensions;
  auto out = make_embedding_table(g.names, offsets.size() * d);
  for (std::size_t block = 0; block < offsets.size(); ++block) {
    const std::size_t k = offsets[block];
    auto model = init_model(g.vertex_count(), d, mix_seed(cfg.seed, 100 + k));
    TrainProgress progress(static_cast<real>(cfg.alpha),
                           cfg.walk_times * g.vertex_count());
    walk_epochs(sampler, cfg, progress, /*shuffle_stream=*/k,
                [&](const std::vector<VertexId>& walk, Rng& rng, real alpha) {
                  std::vector<VertexId> negatives(cfg.negatives);
                  const std::size_t len = walk.size();
                  for (std::size_t i = 0; i < len; ++i) {
                    for (int dir = 0; dir < 2; ++dir) {
                      // contexts exactly k hops ahead, then k hops back
                      if (dir == 0 ? i + k >= len : i < k) continue;
                      const VertexId vj = dir == 0 ? walk[i + k] : walk[i - k];
                      if (sink) sink(walk[i], vj);
                      for (auto& vn : negatives) {
                        vn = sampler.negative_sampling(rng);
                      }
                      update_pair(model, walk[i], vj, negatives, alpha);
                    }
                  }
                });
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      std::copy(model.phi_row(static_cast<VertexId>(v)),
                model.phi_row(static_cast<VertexId>(v)) + d,
                out.row(v) + block * d);
    }
  }
  TrainResult result;
  result.vertex = std::move(out);
  return result;
}

TrainResult train_line(const GraphSampler& sampler, const TrainConfig& cfg,
                       const PairSink& sink) {
  validate(cfg);
  const Graph& g = sampler.graph();
  const bool first = cfg.line_order != LineOrder::second;
  const bool second = cfg.line_order != LineOrder::first;
  const std::size_t d = cfg.dimensions;
  EmbeddingModel m1, m2;
  if (first) m1 = init_model(g.vertex_count(), d, mix_seed(cfg.seed, 1));
  if (second) m2 = init_model(g.vertex_count(), d, mix_seed(cfg.seed, 2));
  const auto budget =
      static_cast<std::uint64_t>(std::llround(cfg.sample_times * 1e6));
  TrainProgress progress(static_cast<real>(cfg.alpha), budget);
  run_workers(cfg.workers, [&](std::size_t w) {
    Rng rng(cfg.seed + w);
    std::vector<VertexId> negatives(cfg.negatives);
    std::uint64_t my_budget =
        budget / cfg.workers + (w < budget % cfg.workers ? 1 : 0);
    for (std::uint64_t it = 0; it < my_budget; ++it) {
      const real alpha = progress.alpha();
      const VertexId v1 = sampler.vertex_sampling(rng);
      // v1 carries positive out-weight, so a context always exists.
      const VertexId v2 = *sampler.context_sampling(v1, rng);
      if (sink) sink(v1, v2);
      for (auto& vn : negatives) vn = sampler.negative_sampling(rng);
      if (first) {
        update_pair(m1.phi.data(), m1.phi.data(), d, v1, v2, negatives, alpha);
      }
      if (second) {
        update_pair(m2, v1, v2, negatives, alpha);
      }
      progress.advance();
    }
  });
  TrainResult result;
  if (first && second) {
    auto out = make_embedding_table(g.names, 2 * d);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      std::copy(m1.phi_row(static_cast<VertexId>(v)),
                m1.phi_row(static_cast<VertexId>(v)) + d, out.row(v));
      std::copy(m2.phi_row(static_cast<VertexId>(v)),
                m2.phi_row(static_cast<VertexId>(v)) + d, out.row(v) + d);
    }
    result.vertex = std::move(out);
  } else if (first) {
    result.vertex = to_table(g, m1.phi, d);
  } else {
    result.vertex = to_table(g, m2.phi, d);
    result.context = to_table(g, m2.phi_ctx, d);
  }
  return result;
}

TrainResult train_hpe(const GraphSampler& sampler, const TrainConfig& cfg,
                      const PairSink& sink) {
  validate(cfg);
  const Graph& g = sampler.graph();
  auto model = init_model(g.vertex_count(), cfg.dimensions, cfg.seed);
  const auto budget =
      static_cast<std::uint64_t>(std::llround(cfg.sample_times * 1e6));
  TrainProgress progress(static_cast<real>(cfg.alpha), budget);
  run_workers(cfg.workers, [&](std::size_t w) {
    Rng rng(cfg.seed + w);
    std::vector<VertexId> negatives(cfg.negatives);
    std::uint64_t my_budget =
        budget / cfg.workers + (w < budget % cfg.workers ? 1 : 0);
    std::uint64_t emitted = 0;
    while (emitted < my_budget) {
      const real alpha = progress.alpha();
      const VertexId v1 = sampler.vertex_sampling(rng);
      VertexId cur = v1;
      // Budget counts emitted pairs; a walk in flight finishes (at most
      // walk_length of slack).
      for (std::size_t step = 0; step < cfg.walk_length; ++step) {
        auto next = sampler.context_sampling(cur, rng);
        if (!next) break;
        if (sink) sink(v1, *next);
        for (auto& vn : negatives) vn = sampler.negative_sampling(rng);
        update_pair(model, v1, *next, negatives, alpha,
                    /*update_vertex_row=*/true);
        ++emitted;
        progress.advance();
        cur = *next;
      }
    }
  });
  TrainResult result;
  result.vertex = to_table(g, model.phi, cfg.dimensions);
  result.context = to_table(g, model.phi_ctx, cfg.dimensions);
  return result;
}

}  // namespace vcs
