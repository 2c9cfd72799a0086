#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "vcs/graph.hpp"
#include "vcs/rng.hpp"

namespace vcs {

using real = float;

// Dot products are clipped to [-kSigmoidBound, kSigmoidBound]; outside, the
// fast sigmoid saturates to exactly 0/1 and updates vanish.
inline constexpr double kSigmoidBound = 6.0;
inline constexpr int kSigmoidTableSize = 1024;

// Table lookup with linear interpolation between knots; exact 0/1 beyond the
// clip range. Max error vs the true sigmoid is ~2e-6.
real fast_sigmoid(real x);

// Exact counterparts, used by the objective (and as the table's reference).
double sigmoid(double x);
double log_sigmoid(double x);  // stable for large |x|

// Pair of role matrices under training. phi rows are the vertex embeddings,
// phi_ctx the context-role rows.
struct EmbeddingModel {
  std::size_t vertex_count = 0;
  std::size_t dim = 0;
  std::vector<real> phi;
  std::vector<real> phi_ctx;

  real* phi_row(VertexId v) { return phi.data() + std::size_t{v} * dim; }
  const real* phi_row(VertexId v) const {
    return phi.data() + std::size_t{v} * dim;
  }
  real* ctx_row(VertexId v) { return phi_ctx.data() + std::size_t{v} * dim; }
  const real* ctx_row(VertexId v) const {
    return phi_ctx.data() + std::size_t{v} * dim;
  }
};

// phi ~ U[-0.5/dim, 0.5/dim) element-wise in row-major order from the given
// seed; phi_ctx all zero.
EmbeddingModel init_model(std::size_t vertex_count, std::size_t dim,
                          std::uint64_t seed);

// sigmoid(phi(vi) . phi_ctx(vj)) via the lookup table.
real score(const EmbeddingModel& model, VertexId vi, VertexId vj);

// One asynchronous SGD step on a positive pair plus its negatives:
// coefficient (1 - sigma) on the positive, (0 - sigma) on each negative;
// each context row is updated immediately while the vertex-row gradient is
// accumulated and applied once at the end (skipped when update_vertex_row is
// off). phi and phi_ctx may alias (shared-matrix first-order training).
void update_pair(real* phi, real* phi_ctx, std::size_t dim, VertexId vi,
                 VertexId vj, const std::vector<VertexId>& negatives,
                 real alpha, bool update_vertex_row = true);

inline void update_pair(EmbeddingModel& model, VertexId vi, VertexId vj,
                        const std::vector<VertexId>& negatives, real alpha,
                        bool update_vertex_row = true) {
  update_pair(model.phi.data(), model.phi_ctx.data(), model.dim, vi, vj,
              negatives, alpha, update_vertex_row);
}

// Sampled negative-log-likelihood: -sum log sigma(x_pos) - sum log
// sigma(-x_neg), exact sigmoid, additive across pairs.
double objective_value(const EmbeddingModel& model,
                       const std::vector<std::pair<VertexId, VertexId>>& pos,
                       const std::vector<std::pair<VertexId, VertexId>>& neg);

// Shared update counter driving the linear learning-rate decay
// alpha0 * (1 - completed/total), floored at alpha0 * 1e-4. Workers advance
// it with relaxed atomics; reads are approximate by design.
class TrainProgress {
 public:
  TrainProgress(real alpha0, std::uint64_t total_updates)
      : alpha0_(alpha0), total_(total_updates ? total_updates : 1) {}

  void advance(std::uint64_t n = 1) {
    completed_.fetch_add(n, std::memory_order_relaxed);
  }

  std::uint64_t completed() const {
    return completed_.load(std::memory_order_relaxed);
  }

  real alpha() const { return decayed_alpha(alpha0_, completed(), total_); }

  static real decayed_alpha(real alpha0, std::uint64_t completed,
                            std::uint64_t total);

 private:
  std::atomic<std::uint64_t> completed_{0};
  real alpha0_;
  std::uint64_t total_;
};

}  // namespace vcs
