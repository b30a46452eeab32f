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

#ifndef HYPERZAGREB_GRAPH_HPP
#define HYPERZAGREB_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hz {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Exact value of a degree-based index. All index arithmetic is integral and
/// overflow-checked; an overflow throws std::overflow_error rather than wrap.
using IndexValue = std::uint64_t;

enum class GraphErrorKind {
  kEmptyGraph,
  kVertexOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kNotAnEdge,
};

class GraphError : public std::invalid_argument {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  GraphErrorKind kind() const noexcept { return kind_; }

 private:
  GraphErrorKind kind_;
};

namespace detail {

inline IndexValue checked_add(IndexValue a, IndexValue b) {
  IndexValue out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("index value exceeds 64-bit range");
  }
  return out;
}

inline IndexValue checked_mul(IndexValue a, IndexValue b) {
  IndexValue out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("index value exceeds 64-bit range");
  }
  return out;
}

}  // namespace detail

/// Simple undirected graph on the dense vertex set 0..order()-1.
///
/// Instances are immutable once built. Every neighbor list is strictly
/// increasing, the adjacency relation is symmetric, and there are no loops.
/// Use make_graph() to construct one.
class Graph {
 public:
  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  std::size_t degree(Vertex v) const {
    check_vertex(v);
    return adjacency_[v].size();
  }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& row = adjacency_[u];
    return std::binary_search(row.begin(), row.end(), v);
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<std::vector<Vertex>> adjacency, std::size_t m)
      : adjacency_(std::move(adjacency)), edge_count_(m) {}

  void check_vertex(Vertex v) const {
    if (v >= adjacency_.size()) {
      throw GraphError(GraphErrorKind::kVertexOutOfRange,
                       "vertex " + std::to_string(v) + " out of range for order " +
                           std::to_string(adjacency_.size()));
    }
  }

  friend Graph make_graph(std::size_t order, std::span<const Edge> edges);

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Builds a graph with exactly the given edges. Rejects an empty vertex set,
/// out-of-range ids, loops and repeated edges (in either orientation).
inline Graph make_graph(std::size_t order, std::span<const Edge> edges) {
  if (order == 0) {
    throw GraphError(GraphErrorKind::kEmptyGraph, "graph order must be at least 1");
  }
  std::vector<std::vector<Vertex>> adjacency(order);
  for (const auto& [u, v] : edges) {
    if (u >= order || v >= order) {
      throw GraphError(GraphErrorKind::kVertexOutOfRange,
                       "edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") references a vertex outside 0.." +
                           std::to_string(order - 1));
    }
    if (u == v) {
      throw GraphError(GraphErrorKind::kSelfLoop,
                       "self-loop at vertex " + std::to_string(u));
    }
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (Vertex u = 0; u < order; ++u) {
    auto& row = adjacency[u];
    std::sort(row.begin(), row.end());
    auto dup = std::adjacent_find(row.begin(), row.end());
    if (dup != row.end()) {
      throw GraphError(GraphErrorKind::kDuplicateEdge,
                       "duplicate edge (" + std::to_string(std::min<Vertex>(u, *dup)) +
                           "," + std::to_string(std::max<Vertex>(u, *dup)) + ")");
    }
  }
  return Graph(std::move(adjacency), edges.size());
}

inline Graph make_graph(std::size_t order, std::initializer_list<Edge> edges) {
  return make_graph(order, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph make_graph(std::size_t order, const std::vector<Edge>& edges) {
  return make_graph(order, std::span<const Edge>(edges));
}

inline std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

/// h(xy) = (d(x) + d(y))^2 for an edge xy of g.
inline IndexValue edge_contribution(const Graph& g, Vertex x, Vertex y) {
  if (!g.has_edge(x, y)) {
    throw GraphError(GraphErrorKind::kNotAnEdge,
                     "(" + std::to_string(x) + "," + std::to_string(y) +
                         ") is not an edge");
  }
  const IndexValue s = g.degree(x) + g.degree(y);
  return detail::checked_mul(s, s);
}

/// Hyper-Zagreb index: sum of (d(x)+d(y))^2 over all edges. Zero for
/// edgeless graphs.
inline IndexValue hyper_zagreb(const Graph& g) {
  IndexValue total = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const IndexValue du = g.degree(u);
    for (Vertex v : g.neighbors(u)) {
      if (v < u) continue;
      const IndexValue s = du + g.degree(v);
      total = detail::checked_add(total, detail::checked_mul(s, s));
    }
  }
  return total;
}

/// Hyper-Zagreb index restricted to a chosen set of edges, with degrees taken
/// in the whole of g. Edges need not be sorted.
inline IndexValue hyper_zagreb_over(const Graph& g, std::span<const Edge> edges) {
  IndexValue total = 0;
  for (const auto& [x, y] : edges) {
    total = detail::checked_add(total, edge_contribution(g, x, y));
  }
  return total;
}

struct ClassicalIndices {
  IndexValue first_zagreb = 0;   // M1 = sum_v d(v)^2
  IndexValue second_zagreb = 0;  // M2 = sum_uv d(u) d(v)
  IndexValue forgotten = 0;      // F  = sum_uv d(u)^2 + d(v)^2

  friend bool operator==(const ClassicalIndices&, const ClassicalIndices&) = default;
};

inline ClassicalIndices classical_indices(const Graph& g) {
  using detail::checked_add;
  using detail::checked_mul;
  ClassicalIndices out;
  for (Vertex u = 0; u < g.order(); ++u) {
    const IndexValue du = g.degree(u);
    out.first_zagreb = checked_add(out.first_zagreb, checked_mul(du, du));
    for (Vertex v : g.neighbors(u)) {
      if (v < u) continue;
      const IndexValue dv = g.degree(v);
      out.second_zagreb = checked_add(out.second_zagreb, checked_mul(du, dv));
      out.forgotten =
          checked_add(out.forgotten, checked_add(checked_mul(du, du), checked_mul(dv, dv)));
    }
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == g.order();
}

inline bool is_tree(const Graph& g) {
  return g.size() + 1 == g.order() && is_connected(g);
}

inline bool is_unicyclic(const Graph& g) {
  return g.size() == g.order() && is_connected(g);
}

enum class GraphClass { kTree, kUnicyclic };

inline bool in_class(const Graph& g, GraphClass cls) {
  return cls == GraphClass::kTree ? is_tree(g) : is_unicyclic(g);
}

inline const char* to_string(GraphClass cls) {
  return cls == GraphClass::kTree ? "trees" : "unicyclic";
}

/// Vertices of the unique cycle of a unicyclic graph, in cyclic order
/// starting from the smallest id and continuing toward its smaller cycle
/// neighbor. Empty if g is not unicyclic.
inline std::vector<Vertex> cycle_vertices(const Graph& g) {
  if (!is_unicyclic(g)) return {};
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const Vertex v = leaves.back();
    leaves.pop_back();
    removed[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] == 1) leaves.push_back(w);
    }
  }
  Vertex start = 0;
  while (removed[start]) ++start;
  std::vector<Vertex> cycle{start};
  Vertex prev = start;
  Vertex cur = start;
  // first step goes to the smaller on-cycle neighbor
  for (Vertex w : g.neighbors(start)) {
    if (!removed[w]) {
      cur = w;
      break;
    }
  }
  while (cur != start) {
    cycle.push_back(cur);
    Vertex next = cur;
    for (Vertex w : g.neighbors(cur)) {
      if (!removed[w] && w != prev) {
        next = w;
        break;
      }
    }
    prev = cur;
    cur = next;
  }
  return cycle;
}

/// Relabels g so that vertex v becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return make_graph(g.order(), edges);
}

}  // namespace hz

#endif  // HYPERZAGREB_GRAPH_HPP
