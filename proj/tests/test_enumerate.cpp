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

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hyperzagreb/canonical.hpp"
#include "hyperzagreb/enumerate.hpp"

namespace hz {
namespace {

std::size_t count_of(GraphStream s) {
  return s.for_each([](const Graph&) {});
}

TEST(Enumerate, FreeTreeCounts) {
  // OEIS A000055
  const std::vector<std::size_t> expected{1,  1,   1,   2,   3,   6,    11,   23,
                                          47, 106, 235, 551, 1301, 3159, 7741};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    EXPECT_EQ(count_of(trees(n)), expected[n - 1]) << "n=" << n;
  }
}

TEST(Enumerate, UnicyclicCounts) {
  // OEIS A001429, n = 3..12
  const std::vector<std::size_t> expected{1, 2, 5, 13, 33, 89, 240, 657, 1806, 5026};
  for (std::size_t n = 3; n < 3 + expected.size(); ++n) {
    EXPECT_EQ(count_of(unicyclic_graphs(n)), expected[n - 3]) << "n=" << n;
  }
  EXPECT_THROW(unicyclic_graphs(2), std::invalid_argument);
}

TEST(Enumerate, CycleLengthWindowsPartition) {
  for (std::size_t n = 4; n <= 10; ++n) {
    std::size_t total = 0;
    for (std::size_t m = 3; m <= n; ++m) {
      unicyclic_graphs(n, m, m).for_each([&](const Graph& g) {
        EXPECT_EQ(cycle_vertices(g).size(), m);
        ++total;
      });
    }
    EXPECT_EQ(total, count_of(unicyclic_graphs(n)));
  }
}

TEST(Enumerate, RootedTreeCounts) {
  // OEIS A000081
  const std::vector<std::size_t> expected{1, 1, 2, 4, 9, 20, 48, 115};
  for (std::size_t k = 1; k <= expected.size(); ++k) {
    EXPECT_EQ(rooted_tree_sequences(k).size(), expected[k - 1]) << "order=" << k;
  }
}

TEST(Enumerate, StreamsArePureAndDistinct) {
  for (std::size_t n = 1; n <= 11; ++n) {
    std::set<CanonicalCode> codes;
    trees(n).for_each([&](const Graph& g) {
      ASSERT_EQ(g.order(), n);
      EXPECT_TRUE(is_tree(g));
      EXPECT_TRUE(codes.insert(canonical_code(g)).second);
    });
  }
  for (std::size_t n = 3; n <= 10; ++n) {
    std::set<CanonicalCode> codes;
    unicyclic_graphs(n).for_each([&](const Graph& g) {
      ASSERT_EQ(g.order(), n);
      EXPECT_TRUE(is_unicyclic(g));
      EXPECT_TRUE(codes.insert(canonical_code(g)).second);
    });
  }
}

TEST(Enumerate, Deterministic) {
  const auto dump = [](GraphStream s) {
    std::ostringstream out;
    write_graph6(s, out);
    return out.str();
  };
  EXPECT_EQ(dump(trees(10)), dump(trees(10)));
  EXPECT_EQ(dump(unicyclic_graphs(9)), dump(unicyclic_graphs(9)));
}

TEST(Enumerate, WriteGraph6Lines) {
  auto s = trees(7);
  std::ostringstream out;
  EXPECT_EQ(write_graph6(s, out), 11u);
  const auto graphs = decode_graph6_lines(out.str());
  ASSERT_EQ(graphs.size(), 11u);
  for (const auto& g : graphs) EXPECT_TRUE(is_tree(g));
}

TEST(Enumerate, AgreesWithLabeledOracle) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (GraphClass cls : {GraphClass::kTree, GraphClass::kUnicyclic}) {
      if (cls == GraphClass::kUnicyclic && n < 3) continue;
      const auto oracle = labeled_oracle(n, cls);
      std::set<CanonicalCode> from_oracle;
      for (const auto& g : oracle.classes) {
        EXPECT_TRUE(in_class(g, cls));
        from_oracle.insert(canonical_code(g));
      }
      EXPECT_EQ(from_oracle.size(), oracle.classes.size());
      std::set<CanonicalCode> from_stream;
      class_stream(cls, n).for_each([&](const Graph& g) { from_stream.insert(canonical_code(g)); });
      EXPECT_EQ(from_stream, from_oracle) << to_string(cls) << " n=" << n;
    }
  }
}

TEST(Enumerate, OracleLabeledCounts) {
  // Cayley: n^(n-2) labeled trees
  EXPECT_EQ(labeled_oracle(5, GraphClass::kTree).labeled_count, 125u);
  EXPECT_EQ(labeled_oracle(6, GraphClass::kTree).labeled_count, 1296u);
  // labeled connected unicyclic graphs (OEIS A057500)
  EXPECT_EQ(labeled_oracle(4, GraphClass::kUnicyclic).labeled_count, 15u);
  EXPECT_EQ(labeled_oracle(5, GraphClass::kUnicyclic).labeled_count, 222u);
  EXPECT_EQ(labeled_oracle(4, GraphClass::kUnicyclic).classes.size(), 2u);
  EXPECT_TRUE(labeled_oracle(2, GraphClass::kUnicyclic).classes.empty());
}

TEST(Enumerate, OracleDomain) {
  EXPECT_THROW(labeled_oracle(0, GraphClass::kTree), std::domain_error);
  EXPECT_THROW(labeled_oracle(kOracleMaxOrder + 1, GraphClass::kTree), std::domain_error);
}

}  // namespace
}  // namespace hz
