#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "vcs/embedding.hpp"

namespace vcs {

// Rank correlation via Pearson on rank vectors. Ties take their stable sort
// position (first occurrence ranks first), the convention the frozen
// regression values pin down. Throws on mismatched lengths, fewer than two
// observations, or a constant input.
double spearman(const std::vector<double>& xs, const std::vector<double>& ys);

struct SimilarityRow {
  std::string word_a;
  std::string word_b;
  double score = 0.0;
};

// `<word1> <word2> <score>` per line; same comment/blank handling as edge
// lists, any finite score.
std::vector<SimilarityRow> load_similarity_benchmark(std::istream& in);

struct SimilarityReport {
  double rho = 0.0;
  std::size_t covered = 0;  // pairs with both words embedded
  std::size_t skipped = 0;
};

// Spearman between cosine similarities and human scores over covered pairs.
// Throws when fewer than two pairs are covered.
SimilarityReport eval_word_similarity(const EmbeddingTable& table,
                                      const std::vector<SimilarityRow>& rows);

enum class Scorer { dot, cosine };

// Top-k candidate rows for a query set: each candidate scored by the mean
// dot product (or mean cosine) against the query vectors, exclusions
// removed, ties broken by ascending row id. Returns at most k rows.
std::vector<std::size_t> recommend(
    const EmbeddingTable& table, const std::vector<std::size_t>& query_rows,
    std::size_t k, const std::vector<std::size_t>& candidate_rows,
    const std::unordered_set<std::size_t>& exclude, Scorer scorer);

// Per-user train/test interactions, keyed by name. Test items never overlap
// that user's train items (enforced at load).
struct RecSplit {
  std::unordered_map<std::string, std::vector<std::string>> train;
  std::unordered_map<std::string, std::vector<std::string>> test;
};

RecSplit load_rec_split(std::istream& train_in, std::istream& test_in);

struct RecEvalParams {
  std::size_t queries = 5;
  std::vector<std::size_t> ks = {10, 20, 30};
  std::size_t runs = 10;
  std::uint64_t seed = 1;
  Scorer scorer = Scorer::dot;
};

struct MetricReport {
  std::vector<std::size_t> ks;
  std::vector<double> recall;     // parallel to ks
  std::vector<double> hit_ratio;
  std::vector<double> map;
  std::size_t users_evaluated = 0;  // per run
  std::size_t users_skipped = 0;
  std::size_t runs = 0;

  std::string to_text() const;
  std::string to_csv() const;
};

// For each seeded run: draw `queries` items from every user's training
// items (those present in the embedding), rank candidates (all embedded
// train items, user's own train items excluded), and score the user's test
// set; metrics average over users with at least one test item and a usable
// query, then over runs.
MetricReport eval_recommendation(const EmbeddingTable& table,
                                 const RecSplit& split,
                                 const RecEvalParams& params);

}  // namespace vcs
