#include "vcs/model.hpp"

#include <cmath>

namespace vcs {

namespace {

struct SigmoidTable {
  real knots[kSigmoidTableSize];
  SigmoidTable() {
    for (int i = 0; i < kSigmoidTableSize; ++i) {
      double x = -kSigmoidBound +
                 2.0 * kSigmoidBound * i / (kSigmoidTableSize - 1);
      knots[i] = static_cast<real>(sigmoid(x));
    }
  }
};

const SigmoidTable g_sigmoid_table;

}  // namespace

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double log_sigmoid(double x) {
  // log sigma(x) = -log1p(exp(-x)), rewritten to keep exp's argument <= 0.
  return x >= 0.0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x));
}

real fast_sigmoid(real x) {
  if (x > kSigmoidBound) return 1.0f;
  if (x < -kSigmoidBound) return 0.0f;
  double pos = (x + kSigmoidBound) * (kSigmoidTableSize - 1) /
               (2.0 * kSigmoidBound);
  int lo = static_cast<int>(pos);
  if (lo >= kSigmoidTableSize - 1) lo = kSigmoidTableSize - 2;
  double frac = pos - lo;
  return static_cast<real>(g_sigmoid_table.knots[lo] * (1.0 - frac) +
                           g_sigmoid_table.knots[lo + 1] * frac);
}

EmbeddingModel init_model(std::size_t vertex_count, std::size_t dim,
                          std::uint64_t seed) {
  EmbeddingModel model;
  model.vertex_count = vertex_count;
  model.dim = dim;
  model.phi.resize(vertex_count * dim);
  model.phi_ctx.assign(vertex_count * dim, 0.0f);
  Rng rng(seed);
  const double half = 0.5 / static_cast<double>(dim);
  for (auto& v : model.phi) {
    v = static_cast<real>((rng.uniform() - 0.5) * 2.0 * half);
  }
  return model;
}

real score(const EmbeddingModel& model, VertexId vi, VertexId vj) {
  const real* a = model.phi_row(vi);
  const real* b = model.ctx_row(vj);
  real dot = 0.0f;
  for (std::size_t k = 0; k < model.dim; ++k) dot += a[k] * b[k];
  return fast_sigmoid(dot);
}

void update_pair(real* phi, real* phi_ctx, std::size_t dim, VertexId vi,
                 VertexId vj, const std::vector<VertexId>& negatives,
                 real alpha, bool update_vertex_row) {
  real* vrow = phi + std::size_t{vi} * dim;
  // Scratch survives across calls; workers each get their own copy.
  static thread_local std::vector<real> acc;
  acc.assign(dim, 0.0f);
  auto one_context = [&](VertexId vc, real label) {
    real* crow = phi_ctx + std::size_t{vc} * dim;
    real dot = 0.0f;
    for (std::size_t k = 0; k < dim; ++k) dot += vrow[k] * crow[k];
    real g = (label - fast_sigmoid(dot)) * alpha;
    for (std::size_t k = 0; k < dim; ++k) acc[k] += g * crow[k];
    for (std::size_t k = 0; k < dim; ++k) crow[k] += g * vrow[k];
  };
  one_context(vj, 1.0f);
  for (VertexId vn : negatives) one_context(vn, 0.0f);
  if (update_vertex_row) {
    for (std::size_t k = 0; k < dim; ++k) vrow[k] += acc[k];
  }
}

double objective_value(const EmbeddingModel& model,
                       const std::vector<std::pair<VertexId, VertexId>>& pos,
                       const std::vector<std::pair<VertexId, VertexId>>& neg) {
  auto dot = [&](VertexId a, VertexId b) {
    const real* x = model.phi_row(a);
    const real* y = model.ctx_row(b);
    double d = 0.0;
    for (std::size_t k = 0; k < model.dim; ++k) {
      d += static_cast<double>(x[k]) * static_cast<double>(y[k]);
    }
    return d;
  };
  double value = 0.0;
  for (const auto& [vi, vj] : pos) value -= log_sigmoid(dot(vi, vj));
  for (const auto& [vi, vk] : neg) value -= log_sigmoid(-dot(vi, vk));
  return value;
}

real TrainProgress::decayed_alpha(real alpha0, std::uint64_t completed,
                                  std::uint64_t total) {
  if (completed > total) completed = total;
  real alpha = alpha0 * (1.0f - static_cast<real>(completed) /
                                    static_cast<real>(total));
  real floor = alpha0 * 1e-4f;
  return alpha < floor ? floor : alpha;
}

}  // namespace vcs
