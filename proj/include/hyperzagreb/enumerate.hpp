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

#ifndef HYPERZAGREB_ENUMERATE_HPP
#define HYPERZAGREB_ENUMERATE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "hyperzagreb/codec.hpp"
#include "hyperzagreb/graph.hpp"

namespace hz {

/// Single-consumer lazy sequence of pairwise non-isomorphic graphs.
class GraphStream {
 public:
  using Generator = std::function<std::optional<Graph>()>;

  explicit GraphStream(Generator gen) : gen_(std::move(gen)) {}

  std::optional<Graph> next() { return gen_(); }

  template <typename Fn>
  std::size_t for_each(Fn&& fn) {
    std::size_t count = 0;
    while (auto g = next()) {
      fn(*g);
      ++count;
    }
    return count;
  }

 private:
  Generator gen_;
};

namespace detail {

using LevelSequence = std::vector<int>;

// Preorder depth sequence to edge list; vertex i of the sequence becomes
// offset + i, except that vertex 0 becomes `root_id`.
inline void append_level_sequence(const LevelSequence& levels, Vertex root_id, Vertex offset,
                                  std::vector<Edge>& edges) {
  std::vector<Vertex> stack;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const Vertex id = i == 0 ? root_id : static_cast<Vertex>(offset + i - 1);
    stack.resize(static_cast<std::size_t>(levels[i]));
    if (!stack.empty()) edges.emplace_back(stack.back(), id);
    stack.push_back(id);
  }
}

inline Graph level_sequence_graph(const LevelSequence& levels) {
  std::vector<Edge> edges;
  append_level_sequence(levels, 0, 1, edges);
  return make_graph(levels.size(), edges);
}

// Successor of a canonical rooted level sequence (Beyer-Hedetniemi). When
// `p` is given, the change starts there instead of at the last non-leaf.
inline std::optional<LevelSequence> next_rooted(const LevelSequence& pred,
                                                std::optional<std::size_t> p = std::nullopt) {
  std::size_t pos = 0;
  if (p) {
    pos = *p;
  } else {
    pos = pred.size() - 1;
    while (pred[pos] == 1) --pos;
  }
  if (pos == 0) return std::nullopt;
  std::size_t q = pos - 1;
  while (pred[q] != pred[pos] - 1) --q;
  LevelSequence out(pred);
  for (std::size_t i = pos; i < out.size(); ++i) out[i] = out[i - pos + q];
  return out;
}

// Splits a free-tree candidate into the first subtree of the root (depths
// shifted up by one) and the rest of the tree.
inline std::pair<LevelSequence, LevelSequence> split_first_subtree(const LevelSequence& layout) {
  std::size_t m = layout.size();
  bool seen_one = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (seen_one) {
        m = i;
        break;
      }
      seen_one = true;
    }
  }
  LevelSequence left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  LevelSequence rest{0};
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

// Free trees as center-rooted level sequences (Wright, Richmond, Odlyzko and
// McKay): a rooted sequence is kept only when its first subtree is no
// taller and no larger than the remainder, which leaves one sequence per
// isomorphism class.
inline LevelSequence next_free_candidate(const LevelSequence& candidate) {
  const auto [left, rest] = split_first_subtree(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;

  const std::size_t p = left.size();
  LevelSequence next = *next_rooted(candidate, p);
  if (candidate[p] > 2) {
    const auto new_left = split_first_subtree(next).first;
    const int h = *std::max_element(new_left.begin(), new_left.end());
    const std::size_t len = static_cast<std::size_t>(h) + 1;
    for (std::size_t i = 0; i < len; ++i) next[next.size() - len + i] = static_cast<int>(i) + 1;
  }
  return next;
}

}  // namespace detail

/// All free trees on n vertices, one per isomorphism class.
inline GraphStream trees(std::size_t n) {
  if (n == 0) throw std::invalid_argument("trees: n must be at least 1");
  if (n == 1) {
    auto done = std::make_shared<bool>(false);
    return GraphStream([done]() -> std::optional<Graph> {
      if (*done) return std::nullopt;
      *done = true;
      return make_graph(1, std::vector<Edge>{});
    });
  }
  detail::LevelSequence start;
  for (std::size_t i = 0; i <= n / 2; ++i) start.push_back(static_cast<int>(i));
  for (std::size_t i = 1; i < (n + 1) / 2; ++i) start.push_back(static_cast<int>(i));
  auto state = std::make_shared<std::optional<detail::LevelSequence>>(std::move(start));
  return GraphStream([state]() -> std::optional<Graph> {
    if (!*state) return std::nullopt;
    const auto layout = detail::next_free_candidate(**state);
    *state = detail::next_rooted(layout);
    return detail::level_sequence_graph(layout);
  });
}

/// All rooted trees of the given order as canonical level sequences.
inline std::vector<std::vector<int>> rooted_tree_sequences(std::size_t order) {
  if (order == 0) return {};
  std::vector<std::vector<int>> out;
  std::optional<detail::LevelSequence> cur = detail::LevelSequence(order);
  std::iota(cur->begin(), cur->end(), 0);
  while (cur) {
    out.push_back(*cur);
    if (order == 1) break;
    cur = detail::next_rooted(*cur);
  }
  return out;
}

namespace detail {

// Unicyclic graphs as bracelets (sequences up to rotation and reflection) of
// rooted trees around a cycle. Rooted trees get integer ids ordered by
// (order, generation index); a sequence is emitted only if it is the least
// element of its dihedral orbit.
class UnicyclicEnumerator {
 public:
  UnicyclicEnumerator(std::size_t n, std::size_t m_lo, std::size_t m_hi)
      : n_(n), m_(m_lo), m_hi_(std::min(m_hi, n)) {
    const std::size_t max_order = n >= 3 ? n - 2 : 0;
    offset_.assign(max_order + 2, 0);
    for (std::size_t s = 1; s <= max_order; ++s) {
      auto seqs = rooted_tree_sequences(s);
      offset_[s] = sequences_.size();
      for (auto& q : seqs) sequences_.push_back(std::move(q));
      offset_[s + 1] = sequences_.size();
    }
    if (n < 3 || m_ > m_hi_) {
      exhausted_ = true;
    } else {
      exhausted_ = !start_cycle();
    }
  }

  std::optional<Graph> next() {
    while (!exhausted_) {
      const bool canonical = is_canonical();
      std::optional<Graph> out;
      if (canonical) out = assemble();
      step();
      if (out) return out;
    }
    return std::nullopt;
  }

 private:
  std::size_t count_of(std::size_t order) const { return offset_[order + 1] - offset_[order]; }

  bool start_cycle() {
    if (m_ > m_hi_) return false;
    parts_.assign(m_, 1);
    parts_[m_ - 1] = n_ - (m_ - 1);
    choice_.assign(m_, 0);
    return true;
  }

  // Lexicographic successor among compositions of n into m parts with every
  // part at least parts_[0].
  bool next_composition() {
    const std::size_t lo = parts_[0];
    std::size_t tail = parts_[m_ - 1];
    for (std::size_t i = m_ - 1; i-- > 1;) {
      // tail currently holds sum of parts_[i+1..m-1]
      const std::size_t slots = m_ - 1 - i;
      if (tail >= 1 + slots * lo) {
        ++parts_[i];
        const std::size_t rest = tail - 1;
        for (std::size_t j = i + 1; j + 1 < m_; ++j) parts_[j] = lo;
        parts_[m_ - 1] = rest - (slots - 1) * lo;
        return true;
      }
      tail += parts_[i];
    }
    const std::size_t first = lo + 1;
    if (first * m_ > n_) return false;
    parts_[0] = first;
    for (std::size_t j = 1; j + 1 < m_; ++j) parts_[j] = first;
    parts_[m_ - 1] = n_ - first * (m_ - 1);
    return true;
  }

  bool next_choice() {
    for (std::size_t i = m_; i-- > 0;) {
      if (++choice_[i] < count_of(parts_[i])) return true;
      choice_[i] = 0;
    }
    return false;
  }

  void step() {
    if (next_choice()) return;
    if (next_composition()) return;
    ++m_;
    if (!start_cycle()) exhausted_ = true;
  }

  std::size_t id_at(std::size_t i) const { return offset_[parts_[i]] + choice_[i]; }

  bool is_canonical() const {
    std::vector<std::size_t> seq(m_);
    for (std::size_t i = 0; i < m_; ++i) seq[i] = id_at(i);
    for (std::size_t r = 0; r < m_; ++r) {
      for (int dir : {1, -1}) {
        if (r == 0 && dir == 1) continue;
        for (std::size_t j = 0; j < m_; ++j) {
          const std::size_t idx = dir > 0 ? (r + j) % m_ : (r + m_ - j) % m_;
          if (seq[idx] < seq[j]) return false;
          if (seq[idx] > seq[j]) break;
        }
      }
    }
    return true;
  }

  Graph assemble() const {
    std::vector<Edge> edges;
    edges.reserve(n_);
    for (Vertex v = 0; v < m_; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % m_));
    Vertex offset = static_cast<Vertex>(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& levels = sequences_[id_at(i)];
      append_level_sequence(levels, static_cast<Vertex>(i), offset, edges);
      offset += static_cast<Vertex>(levels.size() - 1);
    }
    return make_graph(n_, edges);
  }

  std::size_t n_;
  std::size_t m_;
  std::size_t m_hi_;
  std::vector<std::vector<int>> sequences_;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> parts_;
  std::vector<std::size_t> choice_;
  bool exhausted_ = false;
};

}  // namespace detail

/// Connected unicyclic graphs on n vertices whose cycle length lies in
/// [m_lo, m_hi], one per isomorphism class, ordered by cycle length.
inline GraphStream unicyclic_graphs(std::size_t n, std::size_t m_lo, std::size_t m_hi) {
  auto e = std::make_shared<detail::UnicyclicEnumerator>(n, std::max<std::size_t>(m_lo, 3), m_hi);
  return GraphStream([e]() { return e->next(); });
}

inline GraphStream unicyclic_graphs(std::size_t n) {
  if (n < 3) throw std::invalid_argument("unicyclic_graphs: n must be at least 3");
  return unicyclic_graphs(n, 3, n);
}

inline GraphStream class_stream(GraphClass cls, std::size_t n) {
  return cls == GraphClass::kTree ? trees(n) : unicyclic_graphs(n);
}

/// Writes one graph6 line per graph; returns the number written.
inline std::size_t write_graph6(GraphStream& stream, std::ostream& out) {
  return stream.for_each([&](const Graph& g) { out << encode_graph6(g) << '\n'; });
}

// ---------------------------------------------------------------------------
// Labeled brute-force oracle

inline constexpr std::size_t kOracleMaxOrder = 8;

struct OracleResult {
  std::size_t labeled_count = 0;
  std::vector<Graph> classes;  // one representative per isomorphism class
};

namespace detail {

struct SmallGraph {
  std::size_t n = 0;
  std::array<std::uint8_t, kOracleMaxOrder> adj{};
  std::array<std::uint8_t, kOracleMaxOrder> deg{};
};

inline bool permutation_isomorphic(const SmallGraph& a, const SmallGraph& b) {
  const std::size_t n = a.n;
  std::array<int, kOracleMaxOrder> map{};
  std::uint8_t used = 0;
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t t = 0; t < n; ++t) {
      if ((used >> t) & 1u) continue;
      if (a.deg[i] != b.deg[t]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const bool ea = (a.adj[i] >> j) & 1u;
        const bool eb = (b.adj[t] >> map[j]) & 1u;
        ok = ea == eb;
      }
      if (!ok) continue;
      map[i] = static_cast<int>(t);
      used = static_cast<std::uint8_t>(used | (1u << t));
      if (extend(i + 1)) return true;
      used = static_cast<std::uint8_t>(used & ~(1u << t));
    }
    return false;
  };
  return extend(0);
}

inline std::uint64_t small_invariant(const SmallGraph& g) {
  std::array<std::uint32_t, kOracleMaxOrder> key{};
  for (std::size_t v = 0; v < g.n; ++v) {
    std::uint32_t nsum = 0;
    for (std::size_t w = 0; w < g.n; ++w) {
      if ((g.adj[v] >> w) & 1u) nsum += g.deg[w];
    }
    key[v] = (static_cast<std::uint32_t>(g.deg[v]) << 8) | nsum;
  }
  std::sort(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(g.n));
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t v = 0; v < g.n; ++v) h = (h ^ key[v]) * 1099511628211ull;
  return h;
}

}  // namespace detail

/// Scans every labeled graph on n <= 8 vertices with the edge count of the
/// class, keeps the connected ones, and partitions them into isomorphism
/// classes by explicit permutation search. Independent of canonical_code.
inline OracleResult labeled_oracle(std::size_t n, GraphClass cls) {
  if (n == 0 || n > kOracleMaxOrder) {
    throw std::domain_error("labeled_oracle: n must be in 1.." + std::to_string(kOracleMaxOrder));
  }
  OracleResult result;
  const std::size_t k = cls == GraphClass::kTree ? n - 1 : n;
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);
  }
  const std::size_t total = slots.size();
  if (k > total) return result;

  std::map<std::uint64_t, std::vector<std::size_t>> buckets;
  std::vector<detail::SmallGraph> reps;

  const auto visit = [&](std::uint32_t mask) {
    detail::SmallGraph g;
    g.n = n;
    std::array<int, kOracleMaxOrder> parent{};
    std::iota(parent.begin(), parent.end(), 0);
    const std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t components = n;
    for (std::size_t b = 0; b < total; ++b) {
      if (!((mask >> b) & 1u)) continue;
      const auto [u, v] = slots[b];
      g.adj[u] = static_cast<std::uint8_t>(g.adj[u] | (1u << v));
      g.adj[v] = static_cast<std::uint8_t>(g.adj[v] | (1u << u));
      ++g.deg[u];
      ++g.deg[v];
      const int ru = find(static_cast<int>(u));
      const int rv = find(static_cast<int>(v));
      if (ru != rv) {
        parent[ru] = rv;
        --components;
      }
    }
    if (components != 1) return;
    ++result.labeled_count;
    auto& bucket = buckets[detail::small_invariant(g)];
    for (std::size_t idx : bucket) {
      if (detail::permutation_isomorphic(g, reps[idx])) return;
    }
    bucket.push_back(reps.size());
    reps.push_back(g);
  };

  if (k == 0) {
    visit(0);
  } else {
    // Gosper's hack over all k-subsets of the edge slots
    std::uint32_t mask = (1u << k) - 1;
    const std::uint32_t limit = total >= 32 ? 0 : (1u << total);
    while (mask < limit) {
      visit(mask);
      const std::uint32_t low = mask & (~mask + 1);
      const std::uint32_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }

  for (const auto& r : reps) {
    std::vector<Edge> edges;
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        if ((r.adj[i] >> j) & 1u) edges.emplace_back(i, j);
      }
    }
    result.classes.push_back(make_graph(n, edges));
  }
  return result;
}

}  // namespace hz

#endif  // HYPERZAGREB_ENUMERATE_HPP
