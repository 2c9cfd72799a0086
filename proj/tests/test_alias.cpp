#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cmath>
#include <limits>
#include <vector>

#include "vcs/alias.hpp"
#include "vcs/rng.hpp"

using vcs::AliasTable;
using vcs::CdfSampler;
using vcs::Rng;

namespace {

// Brute-force normalization, the ground truth every sampler must reproduce.
std::vector<double> normalized(const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  std::vector<double> p(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) p[i] = weights[i] / total;
  return p;
}

template <typename Sampler>
std::vector<double> empirical(const Sampler& sampler, std::size_t n,
                              std::size_t draws, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::size_t> counts(n, 0);
  for (std::size_t i = 0; i < draws; ++i) ++counts[sampler.draw(rng)];
  std::vector<double> freq(n);
  for (std::size_t i = 0; i < n; ++i) {
    freq[i] = static_cast<double>(counts[i]) / static_cast<double>(draws);
  }
  return freq;
}

double l1(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

}  // namespace

TEST_CASE("weights [1,3]: table layout and recovered probabilities") {
  AliasTable table({1.0, 3.0});
  REQUIRE(table.size() == 2);
  // scaled = [0.5, 1.5]: cell 0 keeps 0.5 and aliases to item 1, which ends
  // as the leftover cell with probability 1.
  CHECK(table.prob(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(table.alias(0) == 1);
  CHECK(table.prob(1) == doctest::Approx(1.0).epsilon(1e-12));

  auto recovered = table.reconstructed_probabilities();
  CHECK(recovered[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(recovered[1] == doctest::Approx(0.75).epsilon(1e-12));

  auto freq = empirical(table, 2, 1000000, 42);
  CHECK(l1(freq, {0.25, 0.75}) < 0.005);
}

TEST_CASE("equal weights: every cell keeps probability one") {
  AliasTable table({2.0, 2.0, 2.0, 2.0});
  for (std::size_t i = 0; i < table.size(); ++i) {
    CHECK(table.prob(i) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("weights [1,1,2]: items at the mean are classified small") {
  AliasTable table({1.0, 1.0, 2.0});
  // scaled = [0.75, 0.75, 1.5]; both small cells alias to item 2.
  CHECK(table.prob(0) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(table.alias(0) == 2);
  CHECK(table.prob(1) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(table.alias(1) == 2);
  CHECK(table.prob(2) == doctest::Approx(1.0).epsilon(1e-12));
  auto recovered = table.reconstructed_probabilities();
  CHECK(l1(recovered, {0.25, 0.25, 0.5}) < 1e-12);
}

TEST_CASE("weights [1,2,7]: recovered probabilities and draw frequencies") {
  AliasTable table({1.0, 2.0, 7.0});
  auto recovered = table.reconstructed_probabilities();
  CHECK(l1(recovered, {0.1, 0.2, 0.7}) < 1e-12);
  auto freq = empirical(table, 3, 1000000, 7);
  CHECK(l1(freq, {0.1, 0.2, 0.7}) < 0.005);
}

TEST_CASE("single item: always drawn") {
  AliasTable table({5.0});
  Rng rng(1);
  for (int i = 0; i < 100; ++i) CHECK(table.draw(rng) == 0);
}

TEST_CASE("reconstruction invariant holds on random weight vectors") {
  Rng rng(20240818);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.uniform_int(200);
    std::vector<double> weights(n);
    for (auto& w : weights) w = rng.uniform() * 1e3 + 1e-6;
    AliasTable table(weights);
    CHECK(l1(table.reconstructed_probabilities(), normalized(weights)) < 1e-9);
  }
}

TEST_CASE("strict constructor rejects degenerate input") {
  CHECK_THROWS_AS(AliasTable(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(AliasTable({1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(AliasTable({-1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(AliasTable({1.0, std::numeric_limits<double>::quiet_NaN()}),
                  std::invalid_argument);
  CHECK_THROWS_AS(AliasTable({1.0, std::numeric_limits<double>::infinity()}),
                  std::invalid_argument);
}

TEST_CASE("zero guard keeps zero-weight items undrawable") {
  auto table = AliasTable::with_zero_guard({0.0, 5.0, 0.0});
  auto recovered = table.reconstructed_probabilities();
  CHECK(l1(recovered, {0.0, 1.0, 0.0}) < 1e-12);
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) CHECK(table.draw(rng) == 1);

  auto split = AliasTable::with_zero_guard({2.0, 0.0, 2.0});
  auto freq = empirical(split, 3, 200000, 9);
  CHECK(freq[1] == 0.0);
  CHECK(l1(freq, {0.5, 0.0, 0.5}) < 0.01);

  CHECK_THROWS_AS(AliasTable::with_zero_guard({0.0, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("cdf sampler: interval ownership and frozen lookups") {
  CdfSampler cdf({1.0, 3.0});
  // Item 0 owns (0, 1], item 1 owns (1, 4].
  CHECK(cdf.index_for(2.0) == 1);
  CHECK(cdf.index_for(1.0) == 0);
  CHECK(cdf.index_for(1.0000001) == 1);
  CHECK(cdf.index_for(4.0) == 1);
  CHECK(cdf.index_for(4.5) == 1);  // clamped to the last item
  CHECK(cdf.total() == doctest::Approx(4.0));

  CdfSampler uniform({1.0, 1.0, 1.0});
  CHECK(uniform.index_for(0.0) == 0);
  CHECK(uniform.index_for(3.0) == 2);

  CHECK_THROWS_AS(CdfSampler({1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(CdfSampler(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("cdf draw frequencies match the normalization") {
  CdfSampler cdf({1.0, 3.0});
  auto freq = empirical(cdf, 2, 1000000, 11);
  CHECK(l1(freq, {0.25, 0.75}) < 0.005);
}

TEST_CASE("alias and cdf agree on random weight vectors") {
  // Two independent sampling routes over the same weights; their empirical
  // distributions and the exact normalization must line up three ways.
  Rng rng(555);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + rng.uniform_int(29);
    std::vector<double> weights(n);
    for (auto& w : weights) w = rng.uniform() * 1e3 + 1e-3;
    AliasTable alias(weights);
    CdfSampler cdf(weights);
    auto exact = normalized(weights);
    auto from_alias = empirical(alias, n, 200000, 1000 + trial);
    auto from_cdf = empirical(cdf, n, 200000, 2000 + trial);
    CHECK(l1(from_alias, exact) < 0.02);
    CHECK(l1(from_cdf, exact) < 0.02);
    CHECK(l1(from_alias, from_cdf) < 0.03);
  }
}

TEST_CASE("draws are deterministic for a fixed seed") {
  AliasTable table({1.0, 2.0, 3.0, 4.0});
  Rng a(77), b(77), c(78);
  bool all_equal = true, any_differ = false;
  for (int i = 0; i < 200; ++i) {
    auto x = table.draw(a);
    all_equal = all_equal && (x == table.draw(b));
    any_differ = any_differ || (x != table.draw(c));
  }
  CHECK(all_equal);
  CHECK(any_differ);
}

TEST_CASE("mean draw time is flat in table size") {
  auto bench = [](const AliasTable& table, std::size_t draws) {
    Rng rng(99);
    std::uint64_t sink = 0;
    auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < draws; ++i) sink = sink + table.draw(rng);
    auto stop = std::chrono::steady_clock::now();
    // Keep the loop observable.
    if (sink == std::uint64_t(-1)) std::abort();
    return std::chrono::duration<double, std::nano>(stop - start).count() /
           static_cast<double>(draws);
  };
  Rng rng(5);
  std::vector<double> small_w(100), big_w(1000000);
  for (auto& w : small_w) w = rng.uniform() + 0.01;
  for (auto& w : big_w) w = rng.uniform() + 0.01;
  AliasTable small(small_w), big(big_w);
  bench(small, 200000);  // warm up caches and clocks
  bench(big, 200000);
  double small_ns = bench(small, 2000000);
  double big_ns = bench(big, 2000000);
  MESSAGE("per-draw ns: n=100 " << small_ns << ", n=1e6 " << big_ns);
  CHECK(big_ns < 3.0 * small_ns);
}
