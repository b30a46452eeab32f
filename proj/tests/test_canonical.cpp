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
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "hyperzagreb/canonical.hpp"
#include "hyperzagreb/enumerate.hpp"
#include "hyperzagreb/families.hpp"
#include "hyperzagreb/random.hpp"

namespace hz {
namespace {

// Independent oracle: the lexicographically largest upper-triangle bit string
// over all n! relabelings.
std::uint32_t brute_form(std::size_t n, std::uint32_t mask,
                         const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = 0;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t b = 0; b < pairs.size(); ++b) {
    if (mask >> b & 1u) adj[pairs[b].first][pairs[b].second] = adj[pairs[b].second][pairs[b].first] = 1;
  }
  do {
    std::uint32_t form = 0;
    for (const auto& [i, j] : pairs) form = form << 1 | static_cast<std::uint32_t>(adj[perm[i]][perm[j]]);
    best = std::max(best, form);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph from_mask(std::size_t n, std::uint32_t mask, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < pairs.size(); ++b) {
    if (mask >> b & 1u) edges.emplace_back(pairs[b].first, pairs[b].second);
  }
  return make_graph(n, edges);
}

// code(a) == code(b) exactly when the brute-force forms agree, over every
// labeled graph of order n.
void check_exhaustive(std::size_t n) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::map<std::uint32_t, std::string> form_to_code;
  std::map<std::string, std::uint32_t> code_to_form;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    const auto form = brute_form(n, mask, pairs);
    const auto code = canonical_code(from_mask(n, mask, pairs)).bytes();
    auto [f, f_new] = form_to_code.emplace(form, code);
    if (!f_new) {
      ASSERT_EQ(f->second, code) << "isomorphic graphs got different codes, n=" << n;
    }
    auto [c, c_new] = code_to_form.emplace(code, form);
    if (!c_new) {
      ASSERT_EQ(c->second, form) << "non-isomorphic graphs share a code, n=" << n;
    }
  }
}

TEST(Canonical, MatchesBruteForceUpToOrder6) {
  for (std::size_t n = 1; n <= 6; ++n) check_exhaustive(n);
}

TEST(Canonical, ClassCountsUpToOrder6) {
  // graphs on n unlabeled vertices: 1, 2, 4, 11, 34, 156
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    }
    std::set<std::string> codes;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      codes.insert(canonical_code(from_mask(n, mask, pairs)).bytes());
    }
    EXPECT_EQ(codes.size(), expected[n - 1]) << "n=" << n;
  }
}

Graph shuffled(const Graph& g, Rng& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

TEST(Canonical, InvariantUnderRelabeling) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph t = random_tree(uniform(rng, 1, 40), rng);
    EXPECT_EQ(canonical_code(t), canonical_code(shuffled(t, rng)));
    const Graph u = random_unicyclic(uniform(rng, 3, 40), rng);
    EXPECT_EQ(canonical_code(u), canonical_code(shuffled(u, rng)));
    const std::size_t n = uniform(rng, 1, 10);
    const Graph g = random_connected(n, uniform(rng, 0, n), rng);
    EXPECT_EQ(canonical_code(g), canonical_code(shuffled(g, rng)));
  }
}

TEST(Canonical, SeparatesOrder7Classes) {
  // every tree and unicyclic class of order 7 gets its own code, and the
  // codes of the two classes never collide
  std::set<CanonicalCode> codes;
  std::size_t count = 0;
  trees(7).for_each([&](const Graph& g) {
    codes.insert(canonical_code(g));
    ++count;
  });
  unicyclic_graphs(7).for_each([&](const Graph& g) {
    codes.insert(canonical_code(g));
    ++count;
  });
  EXPECT_EQ(count, 11u + 33u);
  EXPECT_EQ(codes.size(), count);
}

TEST(Canonical, CodeStartsWithOrder) {
  const auto code = canonical_code(star_graph(5)).bytes();
  ASSERT_GE(code.size(), 5u);
  EXPECT_EQ(static_cast<unsigned char>(code[3]), 5u);
  EXPECT_LT(canonical_code(star_graph(4)), canonical_code(star_graph(5)));
}

TEST(Canonical, IsomorphicHelper) {
  EXPECT_TRUE(isomorphic(tree_t_family(4, 7), tree_t_family(2, 7)));
  EXPECT_FALSE(isomorphic(tree_t_family(4, 8), tree_t_family(2, 8)));
  EXPECT_FALSE(isomorphic(path_graph(4), star_graph(4)));
  EXPECT_FALSE(isomorphic(path_graph(4), path_graph(5)));
}

TEST(Canonical, HexIsStable) {
  const auto code = canonical_code(cycle_graph(3));
  EXPECT_EQ(code.hex().size(), 2 * code.bytes().size());
  EXPECT_EQ(code.hex(), canonical_code(cycle_graph(3)).hex());
}

}  // namespace
}  // namespace hz
