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
#include <string>
#include <vector>

#include "hyperzagreb/families.hpp"
#include "hyperzagreb/report.hpp"
#include "hyperzagreb/verify.hpp"

namespace hz {
namespace {

bool has_note(const VerdictReport& r, const std::string& needle) {
  return std::any_of(r.notes.begin(), r.notes.end(),
                     [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

TEST(TopK, KeepsWholeTieGroups) {
  TopK top(2);
  const Graph g = path_graph(2);
  for (IndexValue v : {5, 9, 7, 7, 7, 1}) top.offer(v, g);
  const auto e = top.entries();
  ASSERT_EQ(e.size(), 4u);
  EXPECT_EQ(e[0].hm, 9u);
  EXPECT_EQ(e[0].rank, 1u);
  for (std::size_t i = 1; i < 4; ++i) {
    EXPECT_EQ(e[i].hm, 7u);
    EXPECT_EQ(e[i].rank, 2u);
  }
  EXPECT_EQ(top.seen(), 6u);
}

TEST(TopK, MergeIsOrderIndependent) {
  const auto collect = [](const std::vector<IndexValue>& values) {
    std::vector<IndexValue> out;
    TopK a(3), b(3);
    for (std::size_t i = 0; i < values.size(); ++i) {
      (i % 2 ? a : b).offer(values[i], path_graph(2));
    }
    a.merge(b);
    for (const auto& e : a.entries()) out.push_back(e.hm);
    return out;
  };
  const std::vector<IndexValue> v{3, 8, 8, 2, 10, 6, 8, 1};
  std::vector<IndexValue> r = v;
  std::reverse(r.begin(), r.end());
  EXPECT_EQ(collect(v), collect(r));
  EXPECT_EQ(collect(v), (std::vector<IndexValue>{10, 8, 8, 8}));
}

TEST(Rank, StarLeadsTrees) {
  auto s = trees(5);
  const auto top = rank(s, 1);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_EQ(top[0].hm, 100u);
  EXPECT_EQ(top[0].family_match(), "S_n");
  GraphStream empty([] { return std::optional<Graph>(); });
  EXPECT_THROW(rank(empty, 3), std::invalid_argument);
}

TEST(Rank, AliasesAreListed) {
  // at n = 7 the fourth broom coincides with T^2_7
  auto s = trees(7);
  const auto top = rank(s, 3);
  ASSERT_GE(top.size(), 3u);
  EXPECT_TRUE(top[2].matches("T^2_n"));
  EXPECT_TRUE(top[2].matches("T^4_n"));
}

TEST(VerifyTrees, PassesFromSix) {
  for (std::size_t n : {6u, 10u, 13u}) {
    const auto r = verify_trees(n, 1);
    EXPECT_EQ(r.verdict, Verdict::kPass) << n;
    EXPECT_TRUE(r.ordering_holds);
    ASSERT_GE(r.observed.size(), 4u);
    EXPECT_EQ(r.observed[0].hm, closed_form("S_n").evaluate(n));
  }
}

TEST(VerifyTrees, TenHasExpectedValues) {
  const auto r = verify_trees(10, 1);
  ASSERT_EQ(r.expected.size(), 4u);
  EXPECT_EQ(r.expected[0].hm, 900u);
  EXPECT_EQ(r.expected[3].hm, 500u);
  EXPECT_EQ(r.classes, 106u);
  ASSERT_TRUE(r.next_value.has_value());
  EXPECT_LT(*r.next_value, 500u);
}

TEST(VerifyTrees, FiveIsReportOnly) {
  const auto r = verify_trees(5, 1);
  EXPECT_EQ(r.verdict, Verdict::kReportOnly);
  EXPECT_FALSE(r.ordering_holds);
  EXPECT_THROW(verify_trees(4, 1), std::domain_error);
}

TEST(VerifyUnicyclic, BelowFloorIsReportOnly) {
  const auto r = verify_unicyclic(10, 2);
  EXPECT_EQ(r.verdict, Verdict::kReportOnly);
  EXPECT_EQ(r.classes, 657u);
  ASSERT_FALSE(r.observed.empty());
  EXPECT_EQ(r.observed[0].hm, 958u);
}

TEST(VerifyUnicyclic, FifteenExposesExtraFamily) {
  const auto r = verify_unicyclic(15, 2);
  EXPECT_EQ(r.verdict, Verdict::kFail);
  EXPECT_FALSE(r.ordering_holds);
  ASSERT_TRUE(r.amended_holds.has_value());
  EXPECT_TRUE(*r.amended_holds);
  const auto it = std::find_if(r.observed.begin(), r.observed.end(),
                               [](const RankEntry& e) { return e.matches("C_3(1,T^1_{n-3})"); });
  ASSERT_NE(it, r.observed.end());
  EXPECT_EQ(it->hm, 2188u);
  EXPECT_EQ(it->rank, 7u);
  EXPECT_TRUE(has_note(r, "C_3(1,T^1_{n-3})"));

  bool tie_2170 = false;
  for (const auto& t : r.ties) {
    if (t.hm != 2170) continue;
    tie_2170 = true;
    ASSERT_EQ(t.members.size(), 2u);
    EXPECT_NE(std::find(t.members.begin(), t.members.end(), "C_3(T^3_{n-2})"), t.members.end());
    EXPECT_NE(std::find(t.members.begin(), t.members.end(), "C_3(P_3,n-5)"), t.members.end());
  }
  EXPECT_TRUE(tie_2170);
}

TEST(VerifyUnicyclic, AmendedChainStrictAtSixteen) {
  const auto r = verify_unicyclic(16, 2);
  EXPECT_EQ(r.verdict, Verdict::kFail);
  EXPECT_EQ(r.amended_holds, true);
  EXPECT_TRUE(r.ties.empty() || r.ties.front().hm < closed_form("C_3(T^3_{n-2})").evaluate(16));
}

TEST(VerifyUnicyclic, PerCycleLengthMaxima) {
  const auto r = verify_unicyclic(9, 1);
  ASSERT_EQ(r.per_cycle_length.size(), 7u);
  for (const auto& s : r.per_cycle_length) {
    EXPECT_EQ(s.max_hm, cm_star_hm(s.m, 9)) << s.m;
    EXPECT_EQ(s.maximizers, 1u);
  }
}

TEST(VerifyUnicyclic, ThreadCountDoesNotChangeOutput) {
  EXPECT_EQ(to_text(verify_unicyclic(11, 1)), to_text(verify_unicyclic(11, 4)));
}

TEST(Threshold, TreesFromSix) {
  const auto t = discover_threshold(GraphClass::kTree, 5, 12, 1);
  EXPECT_EQ(t.first_holding, 6u);
  EXPECT_EQ(t.holds_from, 6u);
  EXPECT_THROW(discover_threshold(GraphClass::kTree, 4, 9, 1), std::domain_error);
}

TEST(Threshold, AmendedUnicyclicFromFifteen) {
  const auto t = discover_threshold(GraphClass::kUnicyclic, 13, 16, 2);
  EXPECT_FALSE(t.first_holding.has_value());
  EXPECT_EQ(t.amended_holds_from, 15u);
}

TEST(LemmaSuite, AllPropertiesHold) {
  const auto r = lemma_suite(0, 500);
  EXPECT_TRUE(r.ok()) << to_text(r);
  EXPECT_EQ(r.properties.size(), 10u);
  EXPECT_EQ(r.property("pendant-shift").checked, 500u);
  EXPECT_EQ(r.property("reduction").detail, "0 steps needed the direct fallback");
  EXPECT_THROW(r.property("nope"), std::out_of_range);
  EXPECT_THROW(lemma_suite(0, 0), std::domain_error);
}

TEST(LemmaSuite, SeedIsReproducible) {
  EXPECT_EQ(to_text(lemma_suite(42, 200)), to_text(lemma_suite(42, 200)));
}

TEST(Audit, CatalogMatchesDirectComputation) {
  const auto a = closed_form_audit(15, 30);
  EXPECT_TRUE(a.ok()) << to_text(a);
  EXPECT_EQ(a.rows.size(), catalog().size());
  EXPECT_EQ(a.coefficient_check.literal, 2614u);
  EXPECT_EQ(a.coefficient_check.corrected, 2638u);
  EXPECT_EQ(a.coefficient_check.family_row, 2638u);
  EXPECT_THROW(closed_form_audit(5, 30), std::domain_error);
  EXPECT_THROW(closed_form_audit(20, 19), std::domain_error);
}

}  // namespace
}  // namespace hz
