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

#ifndef HYPERZAGREB_CANONICAL_HPP
#define HYPERZAGREB_CANONICAL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperzagreb/graph.hpp"

namespace hz {

/// Exact isomorphism certificate. Two graphs have equal codes if and only if
/// they are isomorphic; codes are totally ordered (bytewise) and sort first by
/// order.
///
/// Layout: 4-byte big-endian order, one class tag byte, then a payload.
///   'T' trees      - parenthesis string of the tree rooted at its center
///                    (the smaller string when there are two centers)
///   'U' unicyclic  - the m rooted trees hanging off the cycle, written
///                    around the cycle and read in the dihedral position
///                    that minimizes the concatenation
///   'G' otherwise  - upper-triangle adjacency bits of the lexicographically
///                    least relabeling found by individualization/refinement
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }

  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (unsigned char c : bytes_) {
      out.push_back(kDigits[c >> 4]);
      out.push_back(kDigits[c & 0xF]);
    }
    return out;
  }

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string bytes_;
};

namespace detail {

inline std::string order_prefix(std::size_t n, char tag) {
  std::string out(5, '\0');
  const auto n32 = static_cast<std::uint32_t>(n);
  out[0] = static_cast<char>((n32 >> 24) & 0xFF);
  out[1] = static_cast<char>((n32 >> 16) & 0xFF);
  out[2] = static_cast<char>((n32 >> 8) & 0xFF);
  out[3] = static_cast<char>(n32 & 0xFF);
  out[4] = tag;
  return out;
}

// Peels leaves until one or two vertices remain.
inline std::vector<Vertex> tree_centers(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 1) return {0};
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : g.neighbors(v)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace detail

/// Canonical parenthesis string of the tree hanging from `root`, never
/// stepping onto vertices marked in `blocked` (other than root itself).
/// Children are ordered by an isomorphism-invariant per-level ranking, so
/// the string depends only on the rooted isomorphism class.
inline std::string rooted_tree_code(const Graph& g, Vertex root,
                                    const std::vector<char>& blocked = {}) {
  const auto is_blocked = [&](Vertex v) {
    return !blocked.empty() && blocked[v] && v != root;
  };
  std::vector<Vertex> bfs{root};
  std::vector<Vertex> parent(g.order(), root);
  std::vector<std::size_t> depth(g.order(), 0);
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const Vertex u = bfs[head];
    for (Vertex v : g.neighbors(u)) {
      if (v == parent[u] && u != root) continue;
      if (v == root || is_blocked(v)) continue;
      parent[v] = u;
      depth[v] = depth[u] + 1;
      bfs.push_back(v);
    }
  }

  std::vector<std::vector<Vertex>> children(g.order());
  for (std::size_t i = 1; i < bfs.size(); ++i) children[parent[bfs[i]]].push_back(bfs[i]);

  std::vector<std::size_t> rank(g.order(), 0);
  // bfs is sorted by depth; walk levels bottom-up
  std::size_t hi = bfs.size();
  while (hi > 0) {
    std::size_t lo = hi;
    const std::size_t d = depth[bfs[hi - 1]];
    while (lo > 0 && depth[bfs[lo - 1]] == d) --lo;
    std::vector<std::pair<std::vector<std::size_t>, Vertex>> keyed;
    keyed.reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) {
      const Vertex v = bfs[i];
      auto& kids = children[v];
      std::sort(kids.begin(), kids.end(),
                [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
      std::vector<std::size_t> key;
      key.reserve(kids.size());
      for (Vertex c : kids) key.push_back(rank[c]);
      keyed.emplace_back(std::move(key), v);
    }
    std::sort(keyed.begin(), keyed.end());
    std::size_t r = 0;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i > 0 && keyed[i].first != keyed[i - 1].first) ++r;
      rank[keyed[i].second] = r;
    }
    hi = lo;
  }

  std::string out;
  out.reserve(2 * bfs.size());
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  out.push_back('(');
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < children[v].size()) {
      const Vertex c = children[v][next++];
      out.push_back('(');
      stack.emplace_back(c, 0);
    } else {
      out.push_back(')');
      stack.pop_back();
    }
  }
  return out;
}

namespace detail {

inline std::string tree_payload(const Graph& g) {
  const auto centers = tree_centers(g);
  std::string best = rooted_tree_code(g, centers[0]);
  for (std::size_t i = 1; i < centers.size(); ++i) {
    best = std::min(best, rooted_tree_code(g, centers[i]));
  }
  return best;
}

inline std::string unicyclic_payload(const Graph& g) {
  const auto cycle = cycle_vertices(g);
  std::vector<char> on_cycle(g.order(), 0);
  for (Vertex v : cycle) on_cycle[v] = 1;
  const std::size_t m = cycle.size();
  std::vector<std::string> hanging(m);
  for (std::size_t i = 0; i < m; ++i) hanging[i] = rooted_tree_code(g, cycle[i], on_cycle);

  std::string best;
  std::string candidate;
  for (int dir : {1, -1}) {
    for (std::size_t start = 0; start < m; ++start) {
      candidate.clear();
      for (std::size_t step = 0; step < m; ++step) {
        const std::size_t idx = dir > 0 ? (start + step) % m : (start + m - step) % m;
        candidate += hanging[idx];
      }
      if (best.empty() || candidate < best) best = candidate;
    }
  }
  return best;
}

// Individualization/refinement search for the least adjacency string.
class GeneralCanonizer {
 public:
  explicit GeneralCanonizer(const Graph& g) : g_(g), n_(g.order()) {}

  std::string run() {
    std::vector<std::size_t> colors(n_);
    for (Vertex v = 0; v < n_; ++v) colors[v] = g_.degree(v);
    compress(colors);
    search(std::move(colors));
    return best_;
  }

 private:
  static void compress(std::vector<std::size_t>& colors) {
    std::vector<std::size_t> sorted(colors);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto& c : colors) {
      c = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), c) -
                                   sorted.begin());
    }
  }

  static std::size_t count_colors(const std::vector<std::size_t>& colors) {
    std::size_t mx = 0;
    for (auto c : colors) mx = std::max(mx, c);
    return colors.empty() ? 0 : mx + 1;
  }

  void refine(std::vector<std::size_t>& colors) const {
    std::size_t classes = count_colors(colors);
    for (;;) {
      std::vector<std::pair<std::vector<std::size_t>, Vertex>> sig(n_);
      for (Vertex v = 0; v < n_; ++v) {
        auto& key = sig[v].first;
        key.push_back(colors[v]);
        std::vector<std::size_t> nb;
        for (Vertex w : g_.neighbors(v)) nb.push_back(colors[w]);
        std::sort(nb.begin(), nb.end());
        key.insert(key.end(), nb.begin(), nb.end());
        sig[v].second = v;
      }
      std::sort(sig.begin(), sig.end());
      std::size_t c = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && sig[i].first != sig[i - 1].first) ++c;
        colors[sig[i].second] = c;
      }
      if (c + 1 == classes) return;
      classes = c + 1;
    }
  }

  void search(std::vector<std::size_t> colors) {
    refine(colors);
    const std::size_t classes = count_colors(colors);
    if (classes == n_) {
      consider_leaf(colors);
      return;
    }
    std::vector<std::size_t> cell_size(classes, 0);
    for (auto c : colors) ++cell_size[c];
    std::size_t target = classes;
    for (std::size_t c = 0; c < classes; ++c) {
      if (cell_size[c] > 1 && (target == classes || cell_size[c] < cell_size[target])) {
        target = c;
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      std::vector<std::size_t> next(n_);
      for (Vertex u = 0; u < n_; ++u) {
        next[u] = 2 * colors[u] + ((colors[u] == target && u != v) ? 1 : 0);
      }
      compress(next);
      search(std::move(next));
    }
  }

  void consider_leaf(const std::vector<std::size_t>& label) {
    std::vector<Vertex> inverse(n_);
    for (Vertex v = 0; v < n_; ++v) inverse[label[v]] = v;
    const std::size_t bits = n_ * (n_ - 1) / 2;
    std::string packed((bits + 7) / 8, '\0');
    std::size_t k = 0;
    for (std::size_t j = 1; j < n_; ++j) {
      for (std::size_t i = 0; i < j; ++i, ++k) {
        if (g_.has_edge(inverse[i], inverse[j])) {
          packed[k / 8] = static_cast<char>(packed[k / 8] | (0x80 >> (k % 8)));
        }
      }
    }
    if (!have_best_ || packed < best_) {
      best_ = std::move(packed);
      have_best_ = true;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::string best_;
  bool have_best_ = false;
};

}  // namespace detail

inline CanonicalCode canonical_code(const Graph& g) {
  if (is_tree(g)) {
    return CanonicalCode(detail::order_prefix(g.order(), 'T') + detail::tree_payload(g));
  }
  if (is_unicyclic(g)) {
    return CanonicalCode(detail::order_prefix(g.order(), 'U') + detail::unicyclic_payload(g));
  }
  return CanonicalCode(detail::order_prefix(g.order(), 'G') +
                       detail::GeneralCanonizer(g).run());
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() &&
         canonical_code(a) == canonical_code(b);
}

}  // namespace hz

#endif  // HYPERZAGREB_CANONICAL_HPP
