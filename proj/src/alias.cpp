#include "vcs/alias.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vcs {

AliasTable::AliasTable(const std::vector<double>& weights) {
  build(weights, /*allow_zero=*/false);
}

AliasTable AliasTable::with_zero_guard(const std::vector<double>& weights) {
  AliasTable table;
  table.build(weights, /*allow_zero=*/true);
  return table;
}

void AliasTable::build(const std::vector<double>& weights, bool allow_zero) {
  const std::size_t n = weights.size();
  if (n == 0) throw std::invalid_argument("alias table: empty weight vector");
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double w = weights[i];
    if (!std::isfinite(w) || w < 0.0 || (w == 0.0 && !allow_zero)) {
      throw std::invalid_argument("alias table: bad weight at index " +
                                  std::to_string(i));
    }
    sum += w;
  }
  if (sum <= 0.0) {
    throw std::invalid_argument("alias table: total weight is zero");
  }

  prob_.assign(n, 1.0);
  alias_.resize(n);
  std::vector<double> scaled(n);
  std::vector<std::uint32_t> small, large;
  std::uint32_t fallback = 0;  // positive item, guard target for zero cells
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = weights[i] * static_cast<double>(n) / sum;
    alias_[i] = static_cast<std::uint32_t>(i);
    if (weights[i] > weights[fallback]) fallback = static_cast<std::uint32_t>(i);
    // Ties at the mean are classified small.
    (scaled[i] <= 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }

  // Pair off in ascending-index order (worklists are filled ascending and
  // consumed front to back).
  std::size_t s = 0, l = 0;
  while (s < small.size() && l < large.size()) {
    std::uint32_t lo = small[s++];
    std::uint32_t hi = large[l];
    prob_[lo] = scaled[lo];
    alias_[lo] = hi;
    scaled[hi] -= 1.0 - scaled[lo];
    if (scaled[hi] <= 1.0) {
      // Residual now belongs in the small worklist; append and move on.
      ++l;
      small.push_back(hi);
    }
  }
  // Leftovers (either list) carry residual 1 up to rounding.
  for (; l < large.size(); ++l) prob_[large[l]] = 1.0;
  for (; s < small.size(); ++s) prob_[small[s]] = 1.0;

  // Zero-weight cells must never be returned, even via rounding leftovers.
  if (allow_zero) {
    for (std::size_t i = 0; i < n; ++i) {
      if (weights[i] == 0.0) {
        prob_[i] = 0.0;
        alias_[i] = fallback;
      }
    }
  }
}

std::vector<double> AliasTable::reconstructed_probabilities() const {
  const std::size_t n = prob_.size();
  std::vector<double> p(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] += prob_[i];
    p[alias_[i]] += 1.0 - prob_[i];
  }
  for (auto& v : p) v /= static_cast<double>(n);
  return p;
}

CdfSampler::CdfSampler(const std::vector<double>& weights) {
  if (weights.empty()) {
    throw std::invalid_argument("cdf sampler: empty weight vector");
  }
  cumulative_.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    double w = weights[i];
    if (!std::isfinite(w) || w <= 0.0) {
      throw std::invalid_argument("cdf sampler: bad weight at index " +
                                  std::to_string(i));
    }
    total_ += w;
    cumulative_.push_back(total_);
  }
}

std::uint32_t CdfSampler::index_for(double point) const {
  auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), point);
  if (it == cumulative_.end()) --it;  // guards float rounding at the top end
  return static_cast<std::uint32_t>(it - cumulative_.begin());
}

}  // namespace vcs
