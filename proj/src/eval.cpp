#include "vcs/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "vcs/graph.hpp"
#include "vcs/rng.hpp"

namespace vcs {

namespace {

std::vector<double> stable_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return values[a] < values[b];
                   });
  std::vector<double> ranks(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    ranks[order[pos]] = static_cast<double>(pos + 1);
  }
  return ranks;
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
  const auto n = static_cast<double>(xs.size());
  double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return sxy / std::sqrt(sxx * syy);
}

double cosine(const float* a, const float* b, std::size_t dim) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    dot += static_cast<double>(a[k]) * b[k];
    na += static_cast<double>(a[k]) * a[k];
    nb += static_cast<double>(b[k]) * b[k];
  }
  double denom = std::sqrt(na) * std::sqrt(nb);
  return denom > 0.0 ? dot / denom : 0.0;
}

}  // namespace

double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("spearman: length mismatch");
  }
  if (xs.size() < 2) {
    throw std::invalid_argument("spearman: need at least two observations");
  }
  auto constant = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(),
                       [&](double x) { return x == v.front(); });
  };
  if (constant(xs) || constant(ys)) {
    throw std::invalid_argument("spearman: constant input has no rank order");
  }
  return pearson(stable_ranks(xs), stable_ranks(ys));
}

std::vector<SimilarityRow> load_similarity_benchmark(std::istream& in) {
  std::vector<SimilarityRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string a, b, score_token;
    if (!(fields >> a)) continue;
    if (a[0] == '#') continue;
    std::string extra;
    if (!(fields >> b >> score_token) || (fields >> extra)) {
      throw ParseError(line_no, "expected `word1 word2 score`");
    }
    char* end = nullptr;
    double score = std::strtod(score_token.c_str(), &end);
    if (end != score_token.c_str() + score_token.size() ||
        !std::isfinite(score)) {
      throw ParseError(line_no, "bad score '" + score_token + "'");
    }
    rows.push_back({a, b, score});
  }
  return rows;
}

SimilarityReport eval_word_similarity(const EmbeddingTable& table,
                                      const std::vector<SimilarityRow>& rows) {
  std::vector<double> system_scores, human_scores;
  SimilarityReport report;
  for (const auto& row : rows) {
    auto a = table.find(row.word_a);
    auto b = table.find(row.word_b);
    if (!a || !b) {
      report.skipped += 1;
      continue;
    }
    system_scores.push_back(cosine(table.row(*a), table.row(*b), table.dim));
    human_scores.push_back(row.score);
  }
  report.covered = system_scores.size();
  if (report.covered < 2) {
    throw std::runtime_error("word similarity: fewer than two benchmark "
                             "pairs are covered by the embedding");
  }
  report.rho = spearman(system_scores, human_scores);
  return report;
}

std::vector<std::size_t> recommend(
    const EmbeddingTable& table, const std::vector<std::size_t>& query_rows,
    std::size_t k, const std::vector<std::size_t>& candidate_rows,
    const std::unordered_set<std::size_t>& exclude, Scorer scorer) {
  if (query_rows.empty()) {
    throw std::invalid_argument("recommend: no query rows");
  }
  std::vector<std::pair<double, std::size_t>> scored;
  scored.reserve(candidate_rows.size());
  for (std::size_t cand : candidate_rows) {
    if (exclude.count(cand)) continue;
    double score = 0.0;
    for (std::size_t q : query_rows) {
      if (scorer == Scorer::dot) {
        const float* a = table.row(q);
        const float* b = table.row(cand);
        double dot = 0.0;
        for (std::size_t i = 0; i < table.dim; ++i) {
          dot += static_cast<double>(a[i]) * b[i];
        }
        score += dot;
      } else {
        score += cosine(table.row(q), table.row(cand), table.dim);
      }
    }
    scored.emplace_back(score / static_cast<double>(query_rows.size()), cand);
  }
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  if (scored.size() > k) scored.resize(k);
  std::vector<std::size_t> out;
  out.reserve(scored.size());
  for (const auto& [score, cand] : scored) out.push_back(cand);
  return out;
}

RecSplit load_rec_split(std::istream& train_in, std::istream& test_in) {
  RecSplit split;
  auto read = [](std::istream& in, bool require_positive) {
    ParseOptions options;
    options.require_positive = require_positive;
    return parse_edge_list(in, options);
  };
  // Train weights feed nothing here but must be a valid edge list; test
  // weights are ignored entirely.
  for (const auto& e : read(train_in, true).edges) {
    split.train[e.source].push_back(e.target);
  }
  std::unordered_map<std::string, std::unordered_set<std::string>> train_sets;
  for (const auto& [user, items] : split.train) {
    train_sets[user] = {items.begin(), items.end()};
  }
  for (const auto& e : read(test_in, false).edges) {
    auto it = train_sets.find(e.source);
    if (it != train_sets.end() && it->second.count(e.target)) {
      throw std::runtime_error("rec split: test item '" + e.target +
                               "' of user '" + e.source +
                               "' also appears in training");
    }
    split.test[e.source].push_back(e.target);
  }
  return split;
}

std::string MetricReport::to_text() const {
  // Right-aligned labels keep every line `<label>: <value>` with one space,
  // so rows stay grep-able while the values line up in a column.
  std::vector<std::pair<std::string, double>> lines;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const std::string k = std::to_string(ks[i]);
    lines.emplace_back("Recall@" + k + ":", recall[i]);
    lines.emplace_back("HR@" + k + ":", hit_ratio[i]);
    lines.emplace_back("mAP@" + k + ":", map[i]);
  }
  std::size_t width = 0;
  for (const auto& [label, value] : lines) {
    width = std::max(width, label.size());
  }
  std::ostringstream out;
  char buf[128];
  for (const auto& [label, value] : lines) {
    std::snprintf(buf, sizeof(buf), "%*s %.4f\n", static_cast<int>(width),
                  label.c_str(), value);
    out << buf;
  }
  std::snprintf(buf, sizeof(buf),
                "users evaluated: %zu, skipped: %zu, runs: %zu\n",
                users_evaluated, users_skipped, runs);
  out << buf;
  return out.str();
}

std::string MetricReport::to_csv() const {
  std::ostringstream out;
  char buf[64];
  out << "metric,k,value\n";
  for (std::size_t i = 0; i < ks.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "recall,%zu,%.6f\n", ks[i], recall[i]);
    out << buf;
    std::snprintf(buf, sizeof(buf), "hit_ratio,%zu,%.6f\n", ks[i],
                  hit_ratio[i]);
    out << buf;
    std::snprintf(buf, sizeof(buf), "map,%zu,%.6f\n", ks[i], map[i]);
    out << buf;
  }
  return out.str();
}

MetricReport eval_recommendation(const EmbeddingTable& table,
                                 const RecSplit& split,
                                 const RecEvalParams& params) {
  if (params.queries == 0 || params.runs == 0 || params.ks.empty()) {
    throw std::invalid_argument("rec eval: queries, runs, and k list must be "
                                "non-empty/positive");
  }
  // Candidate universe: every embedded item seen in training interactions.
  std::vector<std::size_t> candidates;
  {
    std::unordered_set<std::size_t> seen;
    for (const auto& [user, items] : split.train) {
      for (const auto& item : items) {
        if (auto row = table.find(item); row && seen.insert(*row).second) {
          candidates.push_back(*row);
        }
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  if (candidates.empty()) {
    throw std::runtime_error("rec eval: no training item is covered by the "
                             "embedding");
  }

  // Users iterate in sorted order so runs are reproducible.
  std::vector<std::string> users;
  users.reserve(split.test.size());
  for (const auto& [user, items] : split.test) {
    if (!items.empty()) users.push_back(user);
  }
  std::sort(users.begin(), users.end());

  const std::size_t kmax =
      *std::max_element(params.ks.begin(), params.ks.end());
  MetricReport report;
  report.ks = params.ks;
  report.recall.assign(params.ks.size(), 0.0);
  report.hit_ratio.assign(params.ks.size(), 0.0);
  report.map.assign(params.ks.size(), 0.0);
  report.runs = params.runs;

  for (std::size_t run = 0; run < params.runs; ++run) {
    Rng rng(params.seed + run);
    std::vector<double> recall_sum(params.ks.size(), 0.0);
    std::vector<double> hr_sum(params.ks.size(), 0.0);
    std::vector<double> ap_sum(params.ks.size(), 0.0);
    std::size_t evaluated = 0, skipped = 0;
    for (const auto& user : users) {
      auto train_it = split.train.find(user);
      std::vector<std::size_t> pool;
      if (train_it != split.train.end()) {
        for (const auto& item : train_it->second) {
          if (auto row = table.find(item)) pool.push_back(*row);
        }
      }
      if (pool.empty()) {
        skipped += 1;
        continue;
      }
      // Seeded partial Fisher-Yates: first `queries` slots become the draw.
      std::vector<std::size_t> queries = pool;
      const std::size_t q = std::min(params.queries, queries.size());
      for (std::size_t i = 0; i < q; ++i) {
        std::swap(queries[i],
                  queries[i + rng.uniform_int(queries.size() - i)]);
      }
      queries.resize(q);

      std::unordered_set<std::size_t> exclude(pool.begin(), pool.end());
      auto ranked = recommend(table, queries, kmax, candidates, exclude,
                              params.scorer);

      const auto& test_items = split.test.at(user);
      std::unordered_set<std::size_t> test_rows;
      for (const auto& item : test_items) {
        if (auto row = table.find(item)) test_rows.insert(*row);
      }
      const auto test_size = static_cast<double>(test_items.size());
      for (std::size_t ki = 0; ki < params.ks.size(); ++ki) {
        const std::size_t k = params.ks[ki];
        std::size_t hits = 0;
        double precision_sum = 0.0;
        for (std::size_t r = 0; r < ranked.size() && r < k; ++r) {
          if (test_rows.count(ranked[r])) {
            hits += 1;
            precision_sum +=
                static_cast<double>(hits) / static_cast<double>(r + 1);
          }
        }
        recall_sum[ki] += static_cast<double>(hits) / test_size;
        hr_sum[ki] += hits > 0 ? 1.0 : 0.0;
        ap_sum[ki] +=
            precision_sum / std::min(test_size, static_cast<double>(k));
      }
      evaluated += 1;
    }
    if (evaluated == 0) {
      throw std::runtime_error("rec eval: no user has both embedded training "
                               "items and test items");
    }
    for (std::size_t ki = 0; ki < params.ks.size(); ++ki) {
      report.recall[ki] += recall_sum[ki] / evaluated / params.runs;
      report.hit_ratio[ki] += hr_sum[ki] / evaluated / params.runs;
      report.map[ki] += ap_sum[ki] / evaluated / params.runs;
    }
    report.users_evaluated = evaluated;
    report.users_skipped = skipped;
  }
  return report;
}

}  // namespace vcs
