#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "coverdeal/graph.hpp"

namespace coverdeal::testing {

// 11-node sensor network: K_4 on {2,6,8,11} with leaves {1}, {3,4,5}, {7}, {9,10}.
inline HFamilySpec example_16_spec() {
  return HFamilySpec{11, {2, 6, 8, 11}, {{2, {1}}, {6, {3, 4, 5}}, {8, {7}}, {11, {9, 10}}}};
}

// K_3 on {2,4,6}, one leaf each.
inline HFamilySpec example_29_spec() {
  return HFamilySpec{6, {2, 4, 6}, {{2, {1}}, {4, {3}}, {6, {5}}}};
}

// K_3 on {2,3,4}, only vertex 2 carries a star.
inline HFamilySpec single_star_spec() { return HFamilySpec{4, {2, 3, 4}, {{2, {1}}}}; }

// K_2 on {2,4}, one leaf each.
inline HFamilySpec m2_spec() { return HFamilySpec{4, {2, 4}, {{2, {1}}, {4, {3}}}}; }

enum class Regime { all_stars, some_starless };

/// Random valid spec with n <= max_n. Labels are shuffled unless
/// `consecutive`, in which case leaves of alpha_i sit just below alpha_i.
inline HFamilySpec random_spec(std::mt19937& rng, int max_n, Regime regime, bool consecutive) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const bool all = regime == Regime::all_stars;
  // all stars: n >= 2m; some starless: n >= m + 1 and at least one starless center
  const int m = all ? uniform(2, max_n / 2) : uniform(2, max_n - 1);
  const int min_leaves = all ? m : 1;
  const int max_leaves = all ? max_n - m : std::min(max_n - m, (m - 1) * 3);
  const int total_leaves = uniform(min_leaves, std::max(min_leaves, max_leaves));
  const int n = m + total_leaves;

  std::vector<int> counts(static_cast<std::size_t>(m), all ? 1 : 0);
  const int starless = all ? 0 : uniform(1, m - 1);
  std::vector<int> eligible(static_cast<std::size_t>(m));
  std::iota(eligible.begin(), eligible.end(), 0);
  std::shuffle(eligible.begin(), eligible.end(), rng);
  eligible.resize(static_cast<std::size_t>(m - starless));
  int remaining = total_leaves - (all ? m : 0);
  if (!all) {
    counts[static_cast<std::size_t>(eligible.front())] = 1;
    --remaining;
  }
  while (remaining-- > 0)
    ++counts[static_cast<std::size_t>(eligible[static_cast<std::size_t>(uniform(0, static_cast<int>(eligible.size()) - 1))])];

  HFamilySpec spec;
  spec.n = n;
  if (consecutive) {
    int label = 0;
    for (int i = 0; i < m; ++i) {
      std::vector<int> ls;
      for (int k = 0; k < counts[static_cast<std::size_t>(i)]; ++k) ls.push_back(++label);
      spec.clique.push_back(++label);
      if (!ls.empty()) spec.leaves[label] = ls;
    }
  } else {
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    std::vector<int> centers(labels.begin(), labels.begin() + m);
    std::size_t next = static_cast<std::size_t>(m);
    for (int i = 0; i < m; ++i) {
      std::vector<int> ls;
      for (int k = 0; k < counts[static_cast<std::size_t>(i)]; ++k) ls.push_back(labels[next++]);
      if (!ls.empty()) spec.leaves[centers[static_cast<std::size_t>(i)]] = ls;
    }
    std::sort(centers.begin(), centers.end());
    spec.clique = centers;
  }
  return spec;
}

/// Deterministic mix of both regimes and both labelings.
inline std::vector<HFamilySpec> sweep_specs(int count, int max_n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<HFamilySpec> out;
  for (int i = 0; i < count; ++i) {
    Regime regime = (i % 3 == 2) ? Regime::some_starless : Regime::all_stars;
    out.push_back(random_spec(rng, max_n, regime, i % 2 == 0));
  }
  return out;
}

inline SimpleGraph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return SimpleGraph::from_edges(n, edges);
}

} // namespace coverdeal::testing
