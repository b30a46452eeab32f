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

#include <string>

#include "hyperzagreb/report.hpp"

namespace hz {
namespace {

TEST(Report, RankingJson) {
  auto s = trees(6);
  const auto top = rank(s, 2);
  const Json j = rank_to_json(top);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["rank"], 1);
  EXPECT_EQ(j[0]["hm"], 180);
  EXPECT_EQ(j[0]["family_match"], "S_n");
  EXPECT_EQ(j[0]["graph6"], encode_graph6(top[0].graph));
  EXPECT_TRUE(j[0]["aliases"].is_array());
}

TEST(Report, RankingTextAndCsv) {
  auto s = trees(6);
  const auto top = rank(s, 1);
  EXPECT_EQ(rank_to_text(top).rfind("rank.1: hm=180 family=S_n graph6=", 0), 0u);
  const auto csv = rank_to_csv(top);
  EXPECT_EQ(csv.rfind("rank,hm,family_match,graph6,code\n1,180,S_n,", 0), 0u);
}

TEST(Report, CsvQuotesGraph6WithComma) {
  EXPECT_EQ(detail::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(detail::csv_field("q\"r"), "\"q\"\"r\"");
  EXPECT_EQ(detail::csv_field("plain"), "plain");
}

TEST(Report, VerdictJsonKeys) {
  const Json j = to_json(verify_trees(8, 1));
  for (const char* key : {"n", "class", "classes", "verdict", "ordering_holds", "expected",
                          "observed", "next_value", "ties", "notes"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["class"], "trees");
}

TEST(Report, VerdictTextIsStable) {
  const auto a = to_text(verify_trees(9, 1));
  EXPECT_EQ(a, to_text(verify_trees(9, 1)));
  EXPECT_NE(a.find("verdict: pass\n"), std::string::npos);
  EXPECT_NE(a.find("expected.1: S_n 648\n"), std::string::npos);
}

TEST(Report, ThresholdText) {
  const auto t = discover_threshold(GraphClass::kTree, 5, 7, 1);
  const auto text = to_text(t);
  EXPECT_NE(text.find("threshold.first_holding: 6\n"), std::string::npos);
  EXPECT_NE(text.find("threshold.label: discovered\n"), std::string::npos);
  EXPECT_EQ(to_json(t)["holds"]["5"], false);
}

TEST(Report, AuditText) {
  const auto text = to_text(closed_form_audit(15, 16));
  EXPECT_NE(text.find("family.S_n: EQUAL checked=2 source=tree-chain\n"), std::string::npos);
  EXPECT_NE(text.find("cycle_coefficient.literal_disagrees: true\n"), std::string::npos);
  EXPECT_NE(text.find("ok: true\n"), std::string::npos);
}

}  // namespace
}  // namespace hz
