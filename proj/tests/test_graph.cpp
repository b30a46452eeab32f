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

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <numeric>

#include "hyperzagreb/families.hpp"
#include "hyperzagreb/graph.hpp"
#include "hyperzagreb/random.hpp"

namespace hz {
namespace {

GraphErrorKind error_kind(std::size_t n, std::vector<Edge> edges) {
  try {
    make_graph(n, edges);
  } catch (const GraphError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected GraphError";
  return GraphErrorKind::kNotAnEdge;
}

TEST(Graph, RejectsMalformedInput) {
  EXPECT_EQ(error_kind(0, {}), GraphErrorKind::kEmptyGraph);
  EXPECT_EQ(error_kind(3, {{0, 3}}), GraphErrorKind::kVertexOutOfRange);
  EXPECT_EQ(error_kind(3, {{1, 1}}), GraphErrorKind::kSelfLoop);
  EXPECT_EQ(error_kind(3, {{0, 1}, {0, 1}}), GraphErrorKind::kDuplicateEdge);
  EXPECT_EQ(error_kind(3, {{0, 1}, {1, 0}}), GraphErrorKind::kDuplicateEdge);
}

TEST(Graph, BasicAccessors) {
  const Graph g = make_graph(4, {{2, 0}, {0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.degree(2), 3u);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(0, 3));
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 2}, {2, 3}};
  EXPECT_EQ(g.edges(), expected);
  EXPECT_THROW(g.degree(4), GraphError);
}

TEST(Graph, SingleVertexHasZeroIndex) {
  const Graph g = make_graph(1, std::vector<Edge>{});
  EXPECT_EQ(hyper_zagreb(g), 0u);
  EXPECT_TRUE(is_tree(g));
  EXPECT_FALSE(is_unicyclic(g));
}

TEST(HyperZagreb, SmallValues) {
  EXPECT_EQ(hyper_zagreb(cycle_graph(3)), 48u);
  EXPECT_EQ(hyper_zagreb(path_graph(2)), 4u);
  EXPECT_EQ(hyper_zagreb(path_graph(3)), 18u);
  EXPECT_EQ(hyper_zagreb(star_graph(5)), 100u);
  for (std::size_t n = 3; n <= 40; ++n) EXPECT_EQ(hyper_zagreb(cycle_graph(n)), 16 * n);
  for (std::size_t n = 2; n <= 40; ++n) EXPECT_EQ(hyper_zagreb(star_graph(n)), n * n * n - n * n);
}

TEST(HyperZagreb, EdgeContribution) {
  const Graph s = star_graph(5);
  EXPECT_EQ(edge_contribution(s, 0, 1), 25u);
  EXPECT_EQ(edge_contribution(s, 3, 0), 25u);
  try {
    edge_contribution(s, 1, 2);
    FAIL() << "expected GraphError";
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphErrorKind::kNotAnEdge);
  }
}

TEST(HyperZagreb, SubsetSumsToWhole) {
  const Graph g = star_graph(6);
  const auto edges = g.edges();
  EXPECT_EQ(hyper_zagreb_over(g, edges), hyper_zagreb(g));
  const std::vector<Edge> half(edges.begin(), edges.begin() + 2);
  EXPECT_EQ(hyper_zagreb_over(g, half), 2u * 36u);
  EXPECT_EQ(hyper_zagreb_over(g, std::vector<Edge>{}), 0u);
}

TEST(HyperZagreb, ForgottenIdentityOnRandomGraphs) {
  Rng rng(20261016);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = uniform(rng, 1, 30);
    const Graph g = random_connected(n, uniform(rng, 0, 2 * n), rng);
    const auto c = classical_indices(g);
    EXPECT_EQ(hyper_zagreb(g), c.forgotten + 2 * c.second_zagreb);
    // handshake-style check: sum over edges of d(u)+d(v) equals M1
    IndexValue m1 = 0;
    for (const auto& [u, v] : g.edges()) m1 += g.degree(u) + g.degree(v);
    EXPECT_EQ(m1, c.first_zagreb);
  }
}

TEST(HyperZagreb, RelabelInvariant) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = uniform(rng, 2, 25);
    const Graph g = random_connected(n, uniform(rng, 0, n), rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabel(g, perm);
    EXPECT_EQ(hyper_zagreb(g), hyper_zagreb(h));
    EXPECT_EQ(classical_indices(g), classical_indices(h));
  }
}

TEST(HyperZagreb, CheckedArithmeticThrows) {
  constexpr IndexValue kMax = std::numeric_limits<IndexValue>::max();
  EXPECT_THROW(detail::checked_add(kMax, 1), std::overflow_error);
  EXPECT_THROW(detail::checked_mul(kMax / 2 + 1, 2), std::overflow_error);
  EXPECT_EQ(detail::checked_mul(1u << 31, 1u << 31), IndexValue{1} << 62);
}

TEST(Structure, ClassPredicates) {
  EXPECT_TRUE(is_tree(path_graph(5)));
  EXPECT_FALSE(is_unicyclic(path_graph(5)));
  EXPECT_TRUE(is_unicyclic(cycle_graph(5)));
  EXPECT_FALSE(is_tree(cycle_graph(5)));
  const Graph two_components = make_graph(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(is_connected(two_components));
  EXPECT_FALSE(is_tree(two_components));
  // four edges on four vertices but disconnected: triangle plus isolated vertex
  const Graph tri_plus = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  EXPECT_FALSE(is_unicyclic(tri_plus));
  EXPECT_TRUE(in_class(star_graph(4), GraphClass::kTree));
  EXPECT_STREQ(to_string(GraphClass::kUnicyclic), "unicyclic");
}

TEST(Structure, CycleVerticesInCyclicOrder) {
  // 4-cycle 5-2-7-3 with pendants
  const Graph g = make_graph(8, {{5, 2}, {2, 7}, {7, 3}, {3, 5}, {0, 5}, {1, 0}, {4, 7}, {6, 2}});
  const std::vector<Vertex> expected{2, 5, 3, 7};
  EXPECT_EQ(cycle_vertices(g), expected);
  EXPECT_TRUE(cycle_vertices(path_graph(4)).empty());
}

}  // namespace
}  // namespace hz
