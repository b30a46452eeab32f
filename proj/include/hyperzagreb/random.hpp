// Copyright 2026 The hyperzagreb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERZAGREB_RANDOM_HPP
#define HYPERZAGREB_RANDOM_HPP

#include <cstdint>
#include <iterator>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "hyperzagreb/graph.hpp"

// Seeded random instances. Only std::mt19937_64 is used, and only through
// integer draws done by hand, so sequences are identical across standard
// libraries (the std distributions are not portable in that sense).

namespace hz {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]. Rejection sampling keeps it unbiased.
inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform: empty range");
  const std::uint64_t span = hi - lo;
  if (span == UINT64_MAX) return rng();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return lo + x % range;
}

/// Uniform labeled tree on n vertices via a random Pruefer sequence.
inline Graph random_tree(std::size_t n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("random_tree: n must be positive");
  if (n == 1) return make_graph(1, std::vector<Edge>{});
  if (n == 2) return make_graph(2, {{0, 1}});
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(uniform(rng, 0, n - 1));
  std::vector<std::size_t> deg(n, 1);
  for (Vertex c : code) ++deg[c];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 1) leaves.insert(v);
  }
  std::vector<Edge> edges;
  for (Vertex c : code) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, c);
    if (--deg[c] == 1) leaves.insert(c);
  }
  const Vertex a = *leaves.begin();
  const Vertex b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return make_graph(n, edges);
}

/// Random connected graph: a random tree plus up to `extra` random non-edges.
inline Graph random_connected(std::size_t n, std::size_t extra, Rng& rng) {
  const Graph t = random_tree(n, rng);
  std::vector<Edge> edges = t.edges();
  std::vector<Edge> absent;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!t.has_edge(u, v)) absent.emplace_back(u, v);
    }
  }
  for (std::size_t i = 0; i < extra && !absent.empty(); ++i) {
    const auto k = uniform(rng, 0, absent.size() - 1);
    edges.push_back(absent[k]);
    absent[k] = absent.back();
    absent.pop_back();
  }
  return make_graph(n, edges);
}

/// Random unicyclic graph: a random tree plus one random non-edge (n >= 3).
inline Graph random_unicyclic(std::size_t n, Rng& rng) {
  if (n < 3) throw std::invalid_argument("random_unicyclic: n must be at least 3");
  const Graph t = random_tree(n, rng);
  for (;;) {
    const auto u = static_cast<Vertex>(uniform(rng, 0, n - 1));
    const auto v = static_cast<Vertex>(uniform(rng, 0, n - 1));
    if (u == v || t.has_edge(u, v)) continue;
    auto edges = t.edges();
    edges.emplace_back(u, v);
    return make_graph(n, edges);
  }
}

}  // namespace hz

#endif  // HYPERZAGREB_RANDOM_HPP
