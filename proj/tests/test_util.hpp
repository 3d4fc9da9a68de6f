/// Shared helpers for the test suite: fixture paths, random graph generation
/// with fixed seeds, and independent brute-force oracles.
#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gainspec/gain_graph.hpp"
#include "gainspec/group.hpp"
#include "gainspec/spectral.hpp"

namespace testutil {

inline std::string fixture(const std::string& name) {
  return std::string(GAINSPEC_FIXTURES_DIR) + "/" + name;
}

/// Random connected graph: a random spanning tree plus `extra` distinct
/// non-tree edges (fewer if the graph saturates), gains uniform over the group.
inline gainspec::GainGraph random_connected_graph(gainspec::GroupPtr g, int n, int extra,
                                                  std::mt19937& rng) {
  std::uniform_int_distribution<int> elem(0, g->order() - 1);
  std::set<std::pair<int, int>> used;
  std::vector<gainspec::GainEdge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    int u = pick(rng);
    used.insert({u, v});
    edges.push_back({u, v, elem(rng)});
  }
  std::vector<std::pair<int, int>> free_pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!used.count({u, v})) free_pairs.emplace_back(u, v);
  std::shuffle(free_pairs.begin(), free_pairs.end(), rng);
  for (int i = 0; i < extra && i < int(free_pairs.size()); ++i)
    edges.push_back({free_pairs[i].first, free_pairs[i].second, elem(rng)});
  return gainspec::GainGraph(std::move(g), n, std::move(edges));
}

inline gainspec::SwitchingFunction random_switching(gainspec::GroupPtr g, int n,
                                                    std::mt19937& rng) {
  std::uniform_int_distribution<int> elem(0, g->order() - 1);
  gainspec::SwitchingFunction f{g, std::vector<int>(n)};
  for (int& v : f.values) v = elem(rng);
  return f;
}

/// Exhaustive closed-walk enumeration, counting walk gains per conjugacy
/// class.  Exponential in hmax; intended for small graphs only.
inline gainspec::ClassProfile brute_profile(const gainspec::GainGraph& g, int hmax) {
  const gainspec::FiniteGroup& grp = *g.group();
  gainspec::ClassProfile prof{g.group(), hmax, {}};
  prof.counts.assign(hmax + 1, std::vector<gainspec::Int>(grp.classes().size()));
  for (int start = 0; start < g.n(); ++start) {
    // walk state: (current vertex, accumulated gain), expanded step by step
    std::vector<std::pair<int, int>> frontier = {{start, grp.identity()}};
    for (int h = 0; h <= hmax; ++h) {
      for (auto [v, gain] : frontier)
        if (v == start) prof.counts[h][grp.class_of(gain)] += 1;
      if (h == hmax) break;
      std::vector<std::pair<int, int>> next;
      for (auto [v, gain] : frontier)
        for (auto [w, x] : g.neighbors(v)) next.emplace_back(w, grp.mul(gain, x));
      frontier = std::move(next);
    }
  }
  return prof;
}

/// Orbit count of G^k under simultaneous conjugation, by explicit orbit
/// expansion over all |G|^k tuples.
inline gainspec::Int brute_orbit_count(const gainspec::FiniteGroup& g, int k) {
  int N = g.order();
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= N;
  std::vector<bool> seen(total, false);
  auto encode = [&](const std::vector<int>& t) {
    long long code = 0;
    for (int v : t) code = code * N + v;
    return code;
  };
  gainspec::Int orbits = 0;
  std::vector<int> tuple(k);
  for (long long start = 0; start < total; ++start) {
    if (seen[start]) continue;
    ++orbits;
    long long rem = start;
    for (int i = k - 1; i >= 0; --i) {
      tuple[i] = int(rem % N);
      rem /= N;
    }
    for (int x = 0; x < N; ++x) {
      std::vector<int> conj(k);
      for (int i = 0; i < k; ++i) conj[i] = g.conjugate(tuple[i], x);
      seen[encode(conj)] = true;
    }
  }
  return orbits;
}

/// Polynomial product, coefficients leading-first.
inline std::vector<double> polymul(const std::vector<double>& a,
                                   const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace testutil
