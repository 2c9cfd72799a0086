#pragma once

#include <cstdint>
#include <vector>

#include "vcs/rng.hpp"

namespace vcs {

// Walker alias table: n weights become n cells; a draw costs one uniform cell
// pick plus one coin, independent of n. Construction is deterministic: items
// are scaled by n/sum, classified small (scaled <= 1, ties at the mean go
// small) or large, and paired in ascending-index order.
class AliasTable {
 public:
  AliasTable() = default;

  // All weights must be positive and finite; throws std::invalid_argument.
  explicit AliasTable(const std::vector<double>& weights);

  // Accepts zero weights (at least one must be positive). Zero-weight cells
  // keep probability 0 and alias to a positive item, so they are never drawn.
  static AliasTable with_zero_guard(const std::vector<double>& weights);

  std::size_t size() const { return prob_.size(); }
  bool empty() const { return prob_.empty(); }

  std::uint32_t draw(Rng& rng) const {
    auto cell = static_cast<std::uint32_t>(rng.uniform_int(prob_.size()));
    return rng.uniform() < prob_[cell] ? cell : alias_[cell];
  }

  // P(i) recovered from the table: (prob[i] + sum of donations to i) / n.
  // Test hook for the reconstruction invariant.
  std::vector<double> reconstructed_probabilities() const;

  double prob(std::size_t cell) const { return prob_[cell]; }
  std::uint32_t alias(std::size_t cell) const { return alias_[cell]; }

 private:
  void build(const std::vector<double>& weights, bool allow_zero);

  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
};

// Cumulative-sum sampler: O(log n) per draw via binary search. Slower route
// kept as the independent cross-check for the alias path.
class CdfSampler {
 public:
  explicit CdfSampler(const std::vector<double>& weights);

  std::size_t size() const { return cumulative_.size(); }

  // Item i owns (cumulative[i-1], cumulative[i]]; a point of exactly 0 maps
  // to item 0.
  std::uint32_t index_for(double point) const;

  std::uint32_t draw(Rng& rng) const {
    return index_for(rng.uniform() * total_);
  }

  double total() const { return total_; }

 private:
  std::vector<double> cumulative_;
  double total_ = 0.0;
};

}  // namespace vcs
