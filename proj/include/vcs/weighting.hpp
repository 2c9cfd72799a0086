#pragma once

#include <string>
#include <vector>

#include "vcs/graph.hpp"

namespace vcs {

enum class WeightScheme { binary, tf, tfidf, rating, rating_irf };

WeightScheme weight_scheme_from_string(const std::string& name);
std::string to_string(WeightScheme scheme);

struct ReweightResult {
  std::vector<Edge> edges;
  std::size_t dropped_zero_weight = 0;  // targets reached by every source
};

// Transforms the weights of an aggregated edge list (duplicates already
// summed):
//   binary      every weight becomes 1
//   tf, rating  weights pass through
//   tfidf       w(i,j) * ln(|V| / df(j)), df(j) = distinct sources into j
//   rating_irf  w(u,i) * ln(|U| / raters(i)); requires a typed (bipartite)
//               list, |U| = distinct sources
// Zero-weight results are dropped and counted. Input order is preserved.
ReweightResult reweight(const std::vector<Edge>& edges, WeightScheme scheme,
                        bool typed);

// Sums duplicate (source, target) weights, keeping first-appearance order.
std::vector<Edge> aggregate_edges(const std::vector<Edge>& edges);

}  // namespace vcs
