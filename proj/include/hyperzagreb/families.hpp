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

#ifndef HYPERZAGREB_FAMILIES_HPP
#define HYPERZAGREB_FAMILIES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperzagreb/graph.hpp"

// Named extremal trees and unicyclic graphs, and the cubic polynomials that
// give their Hyper-Zagreb index in closed form.
//
// Tree families (center is always vertex 0):
//   S_n    star
//   T^1_n  star with one edge subdivided
//   T^2_n  center with n-4 leaves, adjacent to a degree-3 vertex with 2 leaves
//   T^3_n  star with two edges subdivided
//   T^4_n  center with n-5 leaves, adjacent to a degree-4 vertex with 3 leaves
//
// Unicyclic graphs C_m(T_1, ..., T_k) put each rooted tree T_i on a distinct
// cycle vertex by identifying the tree root with it. An integer l in place
// of a tree stands for the star with l leaves rooted at its center.

namespace hz {

enum class FamilyKind {
  kStar,
  kPath,
  kCycle,
  kTreeT1,
  kTreeT2,
  kTreeT3,
  kTreeT4,
  kCycleWithAttachments,
};

enum class FamilyErrorKind { kBelowMinimum, kAttachmentMismatch, kUnknownKey };

class FamilyError : public std::invalid_argument {
 public:
  FamilyError(FamilyErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  FamilyErrorKind kind() const noexcept { return kind_; }

 private:
  FamilyErrorKind kind_;
};

/// Smallest order for which each kind is built.
inline std::size_t family_minimum(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kStar: return 2;
    case FamilyKind::kPath: return 1;
    case FamilyKind::kCycle: return 3;
    case FamilyKind::kTreeT1: return 4;
    case FamilyKind::kTreeT2: return 6;
    case FamilyKind::kTreeT3: return 5;
    case FamilyKind::kTreeT4: return 6;
    case FamilyKind::kCycleWithAttachments: return 3;
  }
  return 0;
}

struct RootedTree {
  Graph tree;
  Vertex root = 0;
};

/// Validates that `tree` is a tree and `root` one of its vertices.
inline RootedTree make_rooted(Graph tree, Vertex root) {
  if (root >= tree.order()) {
    throw FamilyError(FamilyErrorKind::kAttachmentMismatch, "root outside the tree");
  }
  if (!is_tree(tree)) {
    throw FamilyError(FamilyErrorKind::kAttachmentMismatch, "attachment is not a tree");
  }
  return RootedTree{std::move(tree), root};
}

struct Attachment {
  std::size_t position = 0;  // cycle index 0..m-1
  RootedTree tree;
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::kStar;
  std::size_t n = 0;
  std::size_t cycle_length = 0;         // CycleWithAttachments only
  std::vector<Attachment> attachments;  // CycleWithAttachments only
};

namespace detail {

inline void require_order(FamilyKind kind, std::size_t n, const char* name) {
  if (n < family_minimum(kind)) {
    throw FamilyError(FamilyErrorKind::kBelowMinimum,
                      std::string(name) + " needs n >= " + std::to_string(family_minimum(kind)) +
                          ", got " + std::to_string(n));
  }
}

// Center 0; `arms` lists, per non-leaf neighbor, how many leaves hang below
// it (1 for a subdivided edge). Remaining vertices become leaves of 0.
inline Graph broom(std::size_t n, std::initializer_list<std::size_t> arms) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t leaves : arms) {
    const Vertex y = next++;
    edges.emplace_back(0, y);
    for (std::size_t i = 0; i < leaves; ++i) edges.emplace_back(y, next++);
  }
  while (next < n) edges.emplace_back(0, next++);
  return make_graph(n, edges);
}

}  // namespace detail

inline Graph star_graph(std::size_t n) {
  detail::require_order(FamilyKind::kStar, n, "S_n");
  return detail::broom(n, {});
}

inline Graph path_graph(std::size_t n) {
  detail::require_order(FamilyKind::kPath, n, "P_n");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return make_graph(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  detail::require_order(FamilyKind::kCycle, n, "C_n");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return make_graph(n, edges);
}

/// T^k_n for k in 1..4, center at vertex 0.
inline Graph tree_t_family(int k, std::size_t n) {
  switch (k) {
    case 1:
      detail::require_order(FamilyKind::kTreeT1, n, "T^1_n");
      return detail::broom(n, {1});
    case 2:
      detail::require_order(FamilyKind::kTreeT2, n, "T^2_n");
      return detail::broom(n, {2});
    case 3:
      detail::require_order(FamilyKind::kTreeT3, n, "T^3_n");
      return detail::broom(n, {1, 1});
    case 4:
      detail::require_order(FamilyKind::kTreeT4, n, "T^4_n");
      return detail::broom(n, {3});
    default:
      throw FamilyError(FamilyErrorKind::kUnknownKey,
                        "no tree family T^" + std::to_string(k));
  }
}

/// Star with `leaves` pendant vertices, rooted at its center.
inline RootedTree star_rooted(std::size_t leaves) {
  return RootedTree{detail::broom(leaves + 1, {}), 0};
}

/// Path on `order` vertices rooted at an endpoint.
inline RootedTree path_rooted(std::size_t order) { return RootedTree{path_graph(order), 0}; }

/// T^k on `order` vertices rooted at its center.
inline RootedTree tree_t_rooted(int k, std::size_t order) {
  return RootedTree{tree_t_family(k, order), 0};
}

/// Cycle 0..m-1 with each attachment's root identified with its position.
/// Non-root tree vertices get ids m, m+1, ... in attachment order.
inline Graph build_cycle_with_attachments(std::size_t m, const std::vector<Attachment>& attachments,
                                          std::size_t expected_n) {
  if (m < 3) {
    throw FamilyError(FamilyErrorKind::kAttachmentMismatch,
                      "cycle length must be at least 3, got " + std::to_string(m));
  }
  std::vector<char> used(m, 0);
  std::size_t n = m;
  for (const auto& a : attachments) {
    if (a.position >= m) {
      throw FamilyError(FamilyErrorKind::kAttachmentMismatch,
                        "attachment position " + std::to_string(a.position) + " not on the cycle");
    }
    if (used[a.position]) {
      throw FamilyError(FamilyErrorKind::kAttachmentMismatch,
                        "two attachments at cycle position " + std::to_string(a.position));
    }
    used[a.position] = 1;
    if (a.tree.root >= a.tree.tree.order() || !is_tree(a.tree.tree)) {
      throw FamilyError(FamilyErrorKind::kAttachmentMismatch, "attachment is not a rooted tree");
    }
    n += a.tree.tree.order() - 1;
  }
  if (expected_n != 0 && n != expected_n) {
    throw FamilyError(FamilyErrorKind::kAttachmentMismatch,
                      "attachments give order " + std::to_string(n) + ", expected " +
                          std::to_string(expected_n));
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < m; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % m));
  Vertex next = static_cast<Vertex>(m);
  for (const auto& a : attachments) {
    const auto& t = a.tree.tree;
    std::vector<Vertex> map(t.order());
    for (Vertex v = 0; v < t.order(); ++v) {
      map[v] = (v == a.tree.root) ? static_cast<Vertex>(a.position) : next++;
    }
    for (const auto& [u, v] : t.edges()) edges.emplace_back(map[u], map[v]);
  }
  return make_graph(n, edges);
}

inline Graph build(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kStar: return star_graph(spec.n);
    case FamilyKind::kPath: return path_graph(spec.n);
    case FamilyKind::kCycle: return cycle_graph(spec.n);
    case FamilyKind::kTreeT1: return tree_t_family(1, spec.n);
    case FamilyKind::kTreeT2: return tree_t_family(2, spec.n);
    case FamilyKind::kTreeT3: return tree_t_family(3, spec.n);
    case FamilyKind::kTreeT4: return tree_t_family(4, spec.n);
    case FamilyKind::kCycleWithAttachments:
      return build_cycle_with_attachments(spec.cycle_length, spec.attachments, spec.n);
  }
  throw FamilyError(FamilyErrorKind::kUnknownKey, "unknown family kind");
}

/// a3 n^3 + a2 n^2 + a1 n + a0, meaningful for n >= valid_n_min.
struct ClosedFormPoly {
  std::int64_t a3 = 0;
  std::int64_t a2 = 0;
  std::int64_t a1 = 0;
  std::int64_t a0 = 0;
  std::size_t valid_n_min = 0;

  IndexValue evaluate(std::size_t n) const {
    const __int128 x = static_cast<__int128>(n);
    const __int128 v = ((static_cast<__int128>(a3) * x + a2) * x + a1) * x + a0;
    if (v < 0 || v > static_cast<__int128>(UINT64_MAX)) {
      throw std::overflow_error("closed form value out of range at n = " + std::to_string(n));
    }
    return static_cast<IndexValue>(v);
  }

  std::string to_string() const {
    std::string out;
    const auto term = [&](std::int64_t c, const char* mono) {
      if (c == 0) return;
      const std::int64_t mag = c < 0 ? -c : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1 || *mono == '\0') out += std::to_string(mag);
      out += mono;
    };
    term(a3, "n^3");
    term(a2, "n^2");
    term(a1, "n");
    term(a0, "");
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const ClosedFormPoly&, const ClosedFormPoly&) = default;
};

// kSupplementary marks families found by exhaustive ranking rather than
// listed in one of the ranking chains.
enum class CatalogSource { kTreeChain, kUnicyclicChain, kBound, kSupplementary };

inline const char* to_string(CatalogSource s) {
  switch (s) {
    case CatalogSource::kTreeChain: return "tree-chain";
    case CatalogSource::kUnicyclicChain: return "unicyclic-chain";
    case CatalogSource::kBound: return "bound";
    case CatalogSource::kSupplementary: return "supplementary";
  }
  return "?";
}

struct CatalogEntry {
  std::string key;
  std::string description;
  GraphClass graph_class;
  CatalogSource source;
  ClosedFormPoly poly;
  std::function<Graph(std::size_t)> make;
};

namespace detail {

inline FamilySpec simple(FamilyKind kind, std::size_t n) { return FamilySpec{kind, n, 0, {}}; }

inline FamilySpec on_cycle(std::size_t n, std::size_t m, std::vector<Attachment> attachments) {
  return FamilySpec{FamilyKind::kCycleWithAttachments, n, m, std::move(attachments)};
}

// A star whose center also carries a pendant P_3.
inline Graph pendant_path_broom(std::size_t n) {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}};
  for (Vertex v = 4; v < n; ++v) edges.emplace_back(0, v);
  return make_graph(n, edges);
}

inline std::vector<CatalogEntry> make_catalog() {
  using K = FamilyKind;
  using S = CatalogSource;
  const auto T = GraphClass::kTree;
  const auto U = GraphClass::kUnicyclic;
  const auto star = [](std::size_t l) { return star_rooted(l); };
  const auto via = [](auto spec_of) {
    return [spec_of](std::size_t n) { return build(spec_of(n)); };
  };
  std::vector<CatalogEntry> c;

  c.push_back({"S_n", "star", T, S::kTreeChain, {1, -1, 0, 0, 2},
               via([](std::size_t n) { return simple(K::kStar, n); })});
  c.push_back({"T^1_n", "star with one subdivided edge", T, S::kTreeChain, {1, -4, 7, 6, 4},
               via([](std::size_t n) { return simple(K::kTreeT1, n); })});
  c.push_back({"T^2_n", "star joined to a degree-3 vertex carrying 2 leaves", T, S::kTreeChain,
               {1, -7, 20, 16, 6}, via([](std::size_t n) { return simple(K::kTreeT2, n); })});
  c.push_back({"T^3_n", "star with two subdivided edges", T, S::kTreeChain, {1, -7, 20, 0, 5},
               via([](std::size_t n) { return simple(K::kTreeT3, n); })});

  c.push_back({"C_3(n-3)", "triangle with n-3 pendants on one vertex", U, S::kUnicyclicChain,
               {1, -1, 4, 18, 4},
               via([=](std::size_t n) { return on_cycle(n, 3, {{0, star(n - 3)}}); })});
  c.push_back({"C_3(1,n-4)", "triangle with 1 and n-4 pendants on two vertices", U,
               S::kUnicyclicChain, {1, -4, 11, 38, 5}, via([=](std::size_t n) {
                 return on_cycle(n, 3, {{0, star(1)}, {1, star(n - 4)}});
               })});
  c.push_back({"C_3(T^1_{n-2})", "triangle carrying T^1_{n-2} at its center", U, S::kUnicyclicChain,
               {1, -4, 11, 20, 6},
               via([](std::size_t n) { return on_cycle(n, 3, {{0, tree_t_rooted(1, n - 2)}}); })});
  c.push_back({"C_4(n-4)", "4-cycle with n-4 pendants on one vertex", U, S::kUnicyclicChain,
               {1, -4, 9, 28, 5},
               via([=](std::size_t n) { return on_cycle(n, 4, {{0, star(n - 4)}}); })});
  c.push_back({"C_3(2,n-5)", "triangle with 2 and n-5 pendants on two vertices", U,
               S::kUnicyclicChain, {1, -7, 24, 68, 6}, via([=](std::size_t n) {
                 return on_cycle(n, 3, {{0, star(2)}, {1, star(n - 5)}});
               })});
  c.push_back({"C_3(1,1,n-5)", "triangle with 1, 1 and n-5 pendants", U, S::kUnicyclicChain,
               {1, -7, 24, 48, 6}, via([=](std::size_t n) {
                 return on_cycle(n, 3, {{0, star(1)}, {1, star(1)}, {2, star(n - 5)}});
               })});
  c.push_back({"C_3(T^2_{n-2})", "triangle carrying T^2_{n-2} at its center", U, S::kUnicyclicChain,
               {1, -7, 24, 26, 8},
               via([](std::size_t n) { return on_cycle(n, 3, {{0, tree_t_rooted(2, n - 2)}}); })});
  c.push_back({"C_3(T^3_{n-2})", "triangle carrying T^3_{n-2} at its center", U, S::kUnicyclicChain,
               {1, -7, 24, 10, 7},
               via([](std::size_t n) { return on_cycle(n, 3, {{0, tree_t_rooted(3, n - 2)}}); })});

  c.push_back({"T^{P_3}_n", "star whose center also carries a pendant P_3", T,
               S::kBound, {1, -7, 18, 10, 6}, pendant_path_broom});
  c.push_back({"C_3(3,n-6)", "triangle with 3 and n-6 pendants", U, S::kBound,
               {1, -10, 43, 108, 7}, via([=](std::size_t n) {
                 return on_cycle(n, 3, {{0, star(3)}, {1, star(n - 6)}});
               })});
  c.push_back({"C_3(P_3,n-5)", "triangle with a P_3 (by an endpoint) and n-5 pendants", U,
               S::kBound, {1, -7, 22, 40, 6}, via([=](std::size_t n) {
                 return on_cycle(n, 3, {{0, path_rooted(3)}, {1, star(n - 5)}});
               })});
  c.push_back({"C_3(1,2,n-6)", "triangle with 1, 2 and n-6 pendants", U, S::kBound,
               {1, -10, 43, 62, 7}, via([=](std::size_t n) {
                 return on_cycle(n, 3, {{0, star(1)}, {1, star(2)}, {2, star(n - 6)}});
               })});
  c.push_back({"C_4(T^1_{n-3})", "4-cycle carrying T^1_{n-3} at its center", U,
               S::kBound, {1, -7, 22, 20, 7},
               via([](std::size_t n) { return on_cycle(n, 4, {{0, tree_t_rooted(1, n - 3)}}); })});
  c.push_back({"C_4(1,n-5)@alpha=1", "4-cycle with 1 and n-5 pendants on adjacent vertices", U,
               S::kBound, {1, -7, 22, 38, 6}, via([=](std::size_t n) {
                 return on_cycle(n, 4, {{0, star(1)}, {1, star(n - 5)}});
               })});
  c.push_back({"C_5(n-5)", "5-cycle with n-5 pendants on one vertex", U, S::kBound,
               {1, -7, 20, 30, 6},
               via([=](std::size_t n) { return on_cycle(n, 5, {{0, star(n - 5)}}); })});

  c.push_back({"C_3(1,T^1_{n-3})", "triangle with 1 pendant and T^1_{n-3} on two vertices", U,
               S::kSupplementary, {1, -7, 24, 28, 7}, via([=](std::size_t n) {
                 return on_cycle(n, 3, {{0, star(1)}, {1, tree_t_rooted(1, n - 3)}});
               })});
  return c;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = detail::make_catalog();
  return entries;
}

inline const CatalogEntry& catalog_entry(std::string_view key) {
  for (const auto& e : catalog()) {
    if (e.key == key) return e;
  }
  throw FamilyError(FamilyErrorKind::kUnknownKey, "unknown catalog key '" + std::string(key) + "'");
}

inline ClosedFormPoly closed_form(std::string_view key) { return catalog_entry(key).poly; }

/// The member of a catalog family at order n.
inline Graph build_member(std::string_view key, std::size_t n) {
  const auto& entry = catalog_entry(key);
  if (n < entry.poly.valid_n_min) {
    throw FamilyError(FamilyErrorKind::kBelowMinimum,
                      entry.key + " needs n >= " + std::to_string(entry.poly.valid_n_min) +
                          ", got " + std::to_string(n));
  }
  return entry.make(n);
}

/// HM of C_m(n-m): 16(m-2) + 2(n-m+4)^2 + (n-m)(n-m+3)^2.
inline IndexValue cm_star_hm(std::size_t m, std::size_t n) {
  if (m < 3 || m > n) {
    throw FamilyError(FamilyErrorKind::kBelowMinimum,
                      "need 3 <= m <= n, got m = " + std::to_string(m) + ", n = " +
                          std::to_string(n));
  }
  using detail::checked_add;
  using detail::checked_mul;
  const IndexValue l = n - m;
  return checked_add(checked_add(checked_mul(16, m - 2), checked_mul(2, (l + 4) * (l + 4))),
                     checked_mul(l, (l + 3) * (l + 3)));
}

/// The same expression with 4(m-2) for the cycle part. Kept only to document
/// that it disagrees with direct computation.
inline IndexValue cm_star_hm_literal(std::size_t m, std::size_t n) {
  return cm_star_hm(m, n) - 12 * (m - 2);
}

/// C_m with all n-m pendants on vertex 0.
inline Graph cm_star(std::size_t m, std::size_t n) {
  if (m < 3 || m > n) {
    throw FamilyError(FamilyErrorKind::kBelowMinimum,
                      "need 3 <= m <= n, got m = " + std::to_string(m) + ", n = " +
                          std::to_string(n));
  }
  if (m == n) return cycle_graph(n);
  return build_cycle_with_attachments(m, {{0, star_rooted(n - m)}}, n);
}

}  // namespace hz

#endif  // HYPERZAGREB_FAMILIES_HPP
