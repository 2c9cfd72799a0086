#pragma once

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "vcs/graph.hpp"

namespace test_support {

using EdgeSpec = std::tuple<std::string, std::string, double>;

inline std::string edge_text(const std::vector<EdgeSpec>& edges) {
  std::ostringstream out;
  for (const auto& [s, t, w] : edges) out << s << ' ' << t << ' ' << w << '\n';
  return out.str();
}

inline vcs::Graph make_graph(const std::vector<EdgeSpec>& edges,
                             bool undirected = false, bool typed = false) {
  std::istringstream in(edge_text(edges));
  vcs::ParseOptions options;
  options.undirected = undirected;
  options.typed = typed;
  return vcs::build_graph(vcs::parse_edge_list(in, options));
}

// Ten vertices named v0..v9, every vertex with out-edges (walks never
// truncate), uneven weights. Used by the pair-distribution audits.
inline std::vector<EdgeSpec> audit_fixture() {
  return {
      {"v0", "v1", 2.0}, {"v0", "v2", 0.5}, {"v1", "v2", 1.0},
      {"v1", "v3", 3.0}, {"v2", "v4", 1.5}, {"v2", "v0", 1.0},
      {"v3", "v5", 2.0}, {"v3", "v6", 0.5}, {"v4", "v6", 1.0},
      {"v4", "v7", 2.5}, {"v5", "v8", 1.0}, {"v5", "v1", 0.5},
      {"v6", "v9", 2.0}, {"v6", "v0", 1.0}, {"v7", "v9", 0.5},
      {"v7", "v3", 1.5}, {"v8", "v2", 2.0}, {"v8", "v7", 1.0},
      {"v9", "v5", 1.0}, {"v9", "v4", 3.0},
  };
}

using Matrix = std::vector<std::vector<double>>;

inline Matrix transition_matrix(const vcs::Graph& g) {
  const std::size_t n = g.vertex_count();
  Matrix p(n, std::vector<double>(n, 0.0));
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
      p[v][g.targets[e]] = g.weights[e] / g.out_weight_sum[v];
    }
  }
  return p;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

// P^1..P^max_power.
inline std::vector<Matrix> matrix_powers(const Matrix& p,
                                         std::size_t max_power) {
  std::vector<Matrix> powers{p};
  for (std::size_t k = 1; k < max_power; ++k) {
    powers.push_back(matmul(powers.back(), p));
  }
  return powers;
}

inline void normalize(Matrix& m) {
  double total = 0.0;
  for (const auto& row : m) {
    for (double v : row) total += v;
  }
  for (auto& row : m) {
    for (auto& v : row) v /= total;
  }
}

// Expected ordered-pair frequencies of window skip-gram over walks of
// `length` hops started uniformly: both emission directions of every
// in-window position pair, marginals advanced through the chain.
inline Matrix window_pair_distribution(const vcs::Graph& g, std::size_t length,
                                       std::size_t window) {
  const std::size_t n = g.vertex_count();
  const auto p = transition_matrix(g);
  const auto powers = matrix_powers(p, window);
  Matrix freq(n, std::vector<double>(n, 0.0));
  std::vector<double> mu(n, 1.0 / static_cast<double>(n));
  for (std::size_t i = 0; i <= length; ++i) {
    for (std::size_t d = 1; d <= window && i + d <= length; ++d) {
      const auto& pd = powers[d - 1];
      for (std::size_t a = 0; a < n; ++a) {
        if (mu[a] == 0.0) continue;
        for (std::size_t b = 0; b < n; ++b) {
          const double joint = mu[a] * pd[a][b];  // (pos i)=a, (pos i+d)=b
          freq[a][b] += joint;                    // emitted at center i
          freq[b][a] += joint;                    // emitted at center i+d
        }
      }
    }
    if (i < length) {
      std::vector<double> next(n, 0.0);
      for (std::size_t a = 0; a < n; ++a) {
        if (mu[a] == 0.0) continue;
        for (std::size_t b = 0; b < n; ++b) next[b] += mu[a] * p[a][b];
      }
      mu = next;
    }
  }
  normalize(freq);
  return freq;
}

// Same, restricted to position pairs exactly `offset` apart.
inline Matrix offset_pair_distribution(const vcs::Graph& g, std::size_t length,
                                       std::size_t offset) {
  const std::size_t n = g.vertex_count();
  const auto p = transition_matrix(g);
  const auto powers = matrix_powers(p, offset);
  const auto& pk = powers[offset - 1];
  Matrix freq(n, std::vector<double>(n, 0.0));
  std::vector<double> mu(n, 1.0 / static_cast<double>(n));
  for (std::size_t i = 0; i <= length; ++i) {
    if (i + offset <= length) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          const double joint = mu[a] * pk[a][b];
          freq[a][b] += joint;
          freq[b][a] += joint;
        }
      }
    }
    if (i < length) {
      std::vector<double> next(n, 0.0);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) next[b] += mu[a] * p[a][b];
      }
      mu = next;
    }
  }
  normalize(freq);
  return freq;
}

// Edge sampling: frequency proportional to edge weight.
inline Matrix edge_pair_distribution(const vcs::Graph& g) {
  const std::size_t n = g.vertex_count();
  Matrix freq(n, std::vector<double>(n, 0.0));
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
      freq[v][g.targets[e]] = g.weights[e];
    }
  }
  normalize(freq);
  return freq;
}

// Source drawn by out-weight, then every hop 1..length pairs with it.
inline Matrix hop_pair_distribution(const vcs::Graph& g, std::size_t length) {
  const std::size_t n = g.vertex_count();
  const auto p = transition_matrix(g);
  const auto powers = matrix_powers(p, length);
  double total_out = 0.0;
  for (double w : g.out_weight_sum) total_out += w;
  Matrix freq(n, std::vector<double>(n, 0.0));
  for (std::size_t a = 0; a < n; ++a) {
    const double src = g.out_weight_sum[a] / total_out;
    if (src == 0.0) continue;
    for (const auto& pd : powers) {
      for (std::size_t b = 0; b < n; ++b) freq[a][b] += src * pd[a][b];
    }
  }
  normalize(freq);
  return freq;
}

inline double l1_distance(const Matrix& a, const Matrix& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      d += std::abs(a[i][j] - b[i][j]);
    }
  }
  return d;
}

}  // namespace test_support
