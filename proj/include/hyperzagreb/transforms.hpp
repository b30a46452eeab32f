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

#ifndef HYPERZAGREB_TRANSFORMS_HPP
#define HYPERZAGREB_TRANSFORMS_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "hyperzagreb/canonical.hpp"
#include "hyperzagreb/graph.hpp"

// HM-monotone rewrites. Every function returns fresh graphs and leaves its
// inputs alone. When a rewrite's hypothesis fails the result is an
// Inapplicable value, not an exception; exceptions are reserved for malformed
// input such as out-of-range vertex ids.

namespace hz {

struct Inapplicable {
  std::string reason;
};

template <typename T>
using Outcome = std::variant<T, Inapplicable>;

template <typename T>
bool applicable(const Outcome<T>& o) {
  return std::holds_alternative<T>(o);
}

/// G(u) o H(z): vertices of g keep their ids, z is merged into u, the other
/// vertices of h follow in increasing order from g.order().
struct CoalescencePlan {
  Graph g;
  Vertex u = 0;
  Graph h;
  Vertex z = 0;
};

inline Graph coalesce(const Graph& g, Vertex u, const Graph& h, Vertex z) {
  if (u >= g.order() || z >= h.order()) {
    throw GraphError(GraphErrorKind::kVertexOutOfRange, "coalesce: vertex id out of range");
  }
  std::vector<Vertex> map(h.order());
  Vertex next = static_cast<Vertex>(g.order());
  for (Vertex v = 0; v < h.order(); ++v) map[v] = v == z ? u : next++;
  auto edges = g.edges();
  for (const auto& [a, b] : h.edges()) edges.emplace_back(map[a], map[b]);
  return make_graph(g.order() + h.order() - 1, edges);
}

inline Graph coalesce(const CoalescencePlan& plan) {
  return coalesce(plan.g, plan.u, plan.h, plan.z);
}

// ---------------------------------------------------------------------------
// Moving a pendant graph from u to w

struct ShiftConditions {
  bool degree = false;          // d(u) <= d(w)
  bool neighbor_sum = false;    // sum d(N(u)\w) <= sum d(N(w)\u)
  bool degree_tight = false;    // d(u) == d(w)
  bool neighbor_sum_tight = false;
  std::size_t sum_u = 0;
  std::size_t sum_w = 0;

  bool hold() const { return degree && neighbor_sum; }
  bool both_tight() const { return degree_tight && neighbor_sum_tight; }
};

inline ShiftConditions shift_conditions(const Graph& g, Vertex u, Vertex w) {
  ShiftConditions c;
  const std::size_t du = g.degree(u);
  const std::size_t dw = g.degree(w);
  for (Vertex x : g.neighbors(u)) {
    if (x != w) c.sum_u += g.degree(x);
  }
  for (Vertex x : g.neighbors(w)) {
    if (x != u) c.sum_w += g.degree(x);
  }
  c.degree = du <= dw;
  c.degree_tight = du == dw;
  c.neighbor_sum = c.sum_u <= c.sum_w;
  c.neighbor_sum_tight = c.sum_u == c.sum_w;
  return c;
}

struct ShiftInstance {
  Graph g;
  Vertex u = 0;
  Vertex w = 0;
  Graph h;
  Vertex z = 0;
};

struct ShiftResult {
  Graph g1;  // h hung at u
  Graph g2;  // h hung at w
  ShiftConditions conditions;
};

inline ShiftResult apply_shift(const ShiftInstance& inst) {
  if (inst.u >= inst.g.order() || inst.w >= inst.g.order() || inst.z >= inst.h.order()) {
    throw GraphError(GraphErrorKind::kVertexOutOfRange, "apply_shift: vertex id out of range");
  }
  if (inst.u == inst.w) throw std::invalid_argument("apply_shift: u and w must differ");
  return ShiftResult{coalesce(inst.g, inst.u, inst.h, inst.z),
                       coalesce(inst.g, inst.w, inst.h, inst.z),
                       shift_conditions(inst.g, inst.u, inst.w)};
}

// ---------------------------------------------------------------------------
// Joining by an edge versus identifying and adding a pendant

struct JoinIdentifyResult {
  Graph joined;      // g1 + g2 + edge u~v; v shifted by g1.order()
  Graph identified;  // u and v merged, plus a pendant on the merged vertex
  bool applicable = false;  // both endpoints have degree >= 2 in `joined`
};

inline JoinIdentifyResult join_or_identify(const Graph& g1, Vertex u, const Graph& g2, Vertex v) {
  if (u >= g1.order() || v >= g2.order()) {
    throw GraphError(GraphErrorKind::kVertexOutOfRange, "join_or_identify: vertex id out of range");
  }
  const auto shift = static_cast<Vertex>(g1.order());
  auto joined_edges = g1.edges();
  for (const auto& [a, b] : g2.edges()) joined_edges.emplace_back(a + shift, b + shift);
  joined_edges.emplace_back(u, v + shift);
  Graph joined = make_graph(g1.order() + g2.order(), joined_edges);

  const Graph merged = coalesce(g1, u, g2, v);
  auto identified_edges = merged.edges();
  identified_edges.emplace_back(u, static_cast<Vertex>(merged.order()));
  Graph identified = make_graph(merged.order() + 1, identified_edges);

  const bool ok = joined.degree(u) >= 2 && joined.degree(v + shift) >= 2;
  return JoinIdentifyResult{std::move(joined), std::move(identified), ok};
}

// ---------------------------------------------------------------------------
// Unicyclic structure

/// The cycle of a unicyclic graph in cyclic order, with the non-cycle
/// vertices hanging from each cycle vertex.
struct CycleStructure {
  std::vector<Vertex> cycle;
  std::vector<std::vector<Vertex>> hanging;  // per cycle position, whole subtree
  std::vector<std::size_t> position;         // cycle index per vertex, or npos
  bool star_form = true;                     // every hanging tree has depth <= 1

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t length() const { return cycle.size(); }
  bool adjacent_on_cycle(std::size_t i, std::size_t j) const {
    const std::size_t m = cycle.size();
    return (i + 1) % m == j || (j + 1) % m == i;
  }
  /// Cycle positions that carry at least one tree vertex, in cyclic order.
  std::vector<std::size_t> attachment_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (!hanging[i].empty()) out.push_back(i);
    }
    return out;
  }
};

inline CycleStructure cycle_structure(const Graph& g) {
  CycleStructure s;
  s.cycle = cycle_vertices(g);
  if (s.cycle.empty()) throw std::invalid_argument("graph is not unicyclic");
  s.position.assign(g.order(), CycleStructure::npos);
  for (std::size_t i = 0; i < s.cycle.size(); ++i) s.position[s.cycle[i]] = i;
  s.hanging.resize(s.cycle.size());
  for (std::size_t i = 0; i < s.cycle.size(); ++i) {
    const Vertex root = s.cycle[i];
    std::vector<std::pair<Vertex, Vertex>> stack;  // (vertex, parent)
    for (Vertex x : g.neighbors(root)) {
      if (s.position[x] == CycleStructure::npos) stack.emplace_back(x, root);
    }
    while (!stack.empty()) {
      const auto [v, parent] = stack.back();
      stack.pop_back();
      s.hanging[i].push_back(v);
      for (Vertex x : g.neighbors(v)) {
        if (x != parent) {
          s.star_form = false;
          stack.emplace_back(x, v);
        }
      }
    }
    std::sort(s.hanging[i].begin(), s.hanging[i].end());
  }
  return s;
}

namespace detail {

// Re-hangs every vertex in `moved` as a pendant of `target`, dropping all of
// their current edges.
inline Graph rehang_as_pendants(const Graph& g, const std::vector<Vertex>& moved, Vertex target) {
  std::vector<char> is_moved(g.order(), 0);
  for (Vertex v : moved) is_moved[v] = 1;
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) {
    if (!is_moved[a] && !is_moved[b]) edges.emplace_back(a, b);
  }
  for (Vertex v : moved) edges.emplace_back(target, v);
  return make_graph(g.order(), edges);
}

}  // namespace detail

/// Hypothesis of the adjacent-attachment merge: source and target adjacent on
/// the cycle, y the other cycle neighbor of source, d(y) <= d(target) and
/// d(source) <= d(target), both in star-attachment form with pendants.
inline std::optional<std::string> merge_violation(const Graph& g, const CycleStructure& s,
                                                    std::size_t source, std::size_t target) {
  const std::size_t m = s.length();
  if (!s.star_form) return "graph is not in star-attachment form";
  if (source >= m || target >= m || source == target) return "positions must be distinct cycle indices";
  if (!s.adjacent_on_cycle(source, target)) return "source and target are not adjacent on the cycle";
  if (s.hanging[source].empty()) return "source carries no pendants";
  if (s.hanging[target].empty()) return "target carries no pendants";
  const std::size_t y = (source + 1) % m == target ? (source + m - 1) % m : (source + 1) % m;
  const std::size_t d_target = g.degree(s.cycle[target]);
  if (g.degree(s.cycle[y]) > d_target) return "d(y) exceeds d(target)";
  if (g.degree(s.cycle[source]) > d_target) return "d(source) exceeds d(target)";
  return std::nullopt;
}

/// Moves the pendants at cycle position `source` onto the adjacent cycle
/// position `target`.
inline Outcome<Graph> merge_adjacent(const Graph& g, std::size_t source, std::size_t target) {
  if (!is_unicyclic(g)) return Inapplicable{"graph is not unicyclic"};
  const auto s = cycle_structure(g);
  if (auto why = merge_violation(g, s, source, target)) return Inapplicable{*why};
  return detail::rehang_as_pendants(g, s.hanging[source], s.cycle[target]);
}

/// Attachment-index form: merges attachment i (in cyclic order) into
/// attachment i+1, which must sit on the next cycle vertex.
inline Outcome<Graph> merge_adjacent(const Graph& g, std::size_t i) {
  if (!is_unicyclic(g)) return Inapplicable{"graph is not unicyclic"};
  const auto s = cycle_structure(g);
  const auto att = s.attachment_positions();
  if (att.size() < 2) return Inapplicable{"fewer than two attachments"};
  if (i >= att.size()) return Inapplicable{"attachment index out of range"};
  return merge_adjacent(g, att[i], att[(i + 1) % att.size()]);
}

// ---------------------------------------------------------------------------
// Reduction to a single star attachment

enum class StepKind {
  kStart,
  kStarCollapse,  // hanging tree replaced by a star of the same order
  kMerge,         // adjacent-attachment merge
  kShift,         // pendant star moved under the degree/neighbor-sum conditions
  kDirectShift,   // no conditioned move applies; HM increase checked numerically
};

inline const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::kStart: return "start";
    case StepKind::kStarCollapse: return "star-collapse";
    case StepKind::kMerge: return "merge";
    case StepKind::kShift: return "shift";
    case StepKind::kDirectShift: return "direct-shift";
  }
  return "?";
}

struct ChainStep {
  Graph graph;
  StepKind kind = StepKind::kStart;
  IndexValue hm = 0;
};

/// Replaces the tree at one cycle position by a star of the same order.
inline Graph collapse_to_star(const Graph& g, const CycleStructure& s, std::size_t position) {
  return detail::rehang_as_pendants(g, s.hanging[position], s.cycle[position]);
}

/// Rewrites a unicyclic graph into C_m(n-m) through star collapses, adjacent
/// merges and conditioned shifts. Each step strictly increases HM. Merges
/// always target the attachment of largest degree; ties go to the candidate
/// whose result has the smallest canonical code.
inline std::vector<ChainStep> reduce_to_single_attachment(const Graph& g) {
  if (!is_unicyclic(g)) throw std::invalid_argument("reduce_to_single_attachment: not unicyclic");
  std::vector<ChainStep> chain{{g, StepKind::kStart, hyper_zagreb(g)}};

  auto s = cycle_structure(g);
  for (std::size_t i = 0; i < s.length(); ++i) {
    bool is_star = true;
    for (Vertex v : s.hanging[i]) is_star = is_star && chain.back().graph.degree(v) == 1;
    if (is_star) continue;
    Graph next = collapse_to_star(chain.back().graph, s, i);
    chain.push_back({next, StepKind::kStarCollapse, hyper_zagreb(next)});
    s = cycle_structure(chain.back().graph);
  }

  for (;;) {
    const Graph& cur = chain.back().graph;
    s = cycle_structure(cur);
    const auto att = s.attachment_positions();
    if (att.size() <= 1) break;

    struct Candidate {
      std::size_t target_degree;
      CanonicalCode code;
      StepKind kind;
      Graph result;
    };
    std::optional<Candidate> best;
    const auto better = [](const Candidate& a, const Candidate& b) {
      return std::tie(b.target_degree, a.code) < std::tie(a.target_degree, b.code);
    };
    for (std::size_t src : att) {
      for (std::size_t dst : att) {
        if (src == dst) continue;
        StepKind kind = StepKind::kDirectShift;
        if (!merge_violation(cur, s, src, dst)) {
          kind = StepKind::kMerge;
        } else {
          std::vector<Edge> kept;
          std::vector<char> drop(cur.order(), 0);
          for (Vertex v : s.hanging[src]) drop[v] = 1;
          for (const auto& [a, b] : cur.edges()) {
            if (!drop[a] && !drop[b]) kept.emplace_back(a, b);
          }
          const Graph without = make_graph(cur.order(), kept);
          const auto c = shift_conditions(without, s.cycle[src], s.cycle[dst]);
          if (c.hold() && !c.both_tight()) kind = StepKind::kShift;
        }
        if (kind == StepKind::kDirectShift) continue;
        Graph result = detail::rehang_as_pendants(cur, s.hanging[src], s.cycle[dst]);
        Candidate cand{cur.degree(s.cycle[dst]), canonical_code(result), kind, std::move(result)};
        if (!best || better(cand, *best)) best = std::move(cand);
      }
    }
    if (!best) {
      // fall back to the strictly improving move with the largest gain
      std::optional<std::tuple<IndexValue, CanonicalCode, Graph>> fallback;
      for (std::size_t src : att) {
        for (std::size_t dst : att) {
          if (src == dst) continue;
          Graph result = detail::rehang_as_pendants(cur, s.hanging[src], s.cycle[dst]);
          const IndexValue hm = hyper_zagreb(result);
          if (hm <= chain.back().hm) continue;
          auto code = canonical_code(result);
          if (!fallback || hm > std::get<0>(*fallback) ||
              (hm == std::get<0>(*fallback) && code < std::get<1>(*fallback))) {
            fallback.emplace(hm, std::move(code), std::move(result));
          }
        }
      }
      if (!fallback) throw std::logic_error("reduce_to_single_attachment: no improving move");
      chain.push_back({std::get<2>(*fallback), StepKind::kDirectShift, std::get<0>(*fallback)});
      continue;
    }
    const IndexValue hm = hyper_zagreb(best->result);
    chain.push_back({std::move(best->result), best->kind, hm});
  }
  return chain;
}

}  // namespace hz

#endif  // HYPERZAGREB_TRANSFORMS_HPP
