#include "vcs/weighting.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace vcs {

WeightScheme weight_scheme_from_string(const std::string& name) {
  if (name == "binary") return WeightScheme::binary;
  if (name == "tf") return WeightScheme::tf;
  if (name == "tfidf") return WeightScheme::tfidf;
  if (name == "rating") return WeightScheme::rating;
  if (name == "rating-irf" || name == "rating_irf") {
    return WeightScheme::rating_irf;
  }
  throw std::invalid_argument("unknown weighting scheme '" + name + "'");
}

std::string to_string(WeightScheme scheme) {
  switch (scheme) {
    case WeightScheme::binary: return "binary";
    case WeightScheme::tf: return "tf";
    case WeightScheme::tfidf: return "tfidf";
    case WeightScheme::rating: return "rating";
    case WeightScheme::rating_irf: return "rating-irf";
  }
  return "?";
}

std::vector<Edge> aggregate_edges(const std::vector<Edge>& edges) {
  std::vector<Edge> out;
  std::map<std::pair<std::string, std::string>, std::size_t> seen;
  for (const auto& e : edges) {
    auto key = std::make_pair(e.source, e.target);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(std::move(key), out.size());
      out.push_back(e);
    } else {
      out[it->second].weight += e.weight;
    }
  }
  return out;
}

ReweightResult reweight(const std::vector<Edge>& edges, WeightScheme scheme,
                        bool typed) {
  if (scheme == WeightScheme::rating_irf && !typed) {
    throw std::invalid_argument(
        "rating-irf needs a typed edge list (sources form the user set)");
  }
  ReweightResult result;
  result.edges.reserve(edges.size());

  if (scheme == WeightScheme::binary || scheme == WeightScheme::tf ||
      scheme == WeightScheme::rating) {
    for (const auto& e : edges) {
      result.edges.push_back(e);
      if (scheme == WeightScheme::binary) result.edges.back().weight = 1.0;
    }
    return result;
  }

  // df(target) = distinct sources pointing at it. The edge list is
  // aggregated, so each (source, target) occurs once.
  std::unordered_map<std::string, std::size_t> df;
  std::unordered_set<std::string> sources;
  std::unordered_set<std::string> vertices;
  for (const auto& e : edges) {
    df[e.target] += 1;
    sources.insert(e.source);
    vertices.insert(e.source);
    vertices.insert(e.target);
  }
  const double universe = scheme == WeightScheme::tfidf
                              ? static_cast<double>(vertices.size())
                              : static_cast<double>(sources.size());
  for (const auto& e : edges) {
    const double factor =
        std::log(universe / static_cast<double>(df.at(e.target)));
    const double w = e.weight * factor;
    if (w <= 0.0) {
      result.dropped_zero_weight += 1;
      continue;
    }
    result.edges.push_back({e.source, e.target, w});
  }
  return result;
}

}  // namespace vcs
