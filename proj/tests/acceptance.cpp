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


// Acceptance run: one PASS/FAIL line per criterion, exact integer checks
// throughout. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperzagreb.hpp"

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome audit_chains() {
  const auto a = hz::closed_form_audit(15, 45);
  std::size_t rows = 0;
  std::size_t bad = 0;
  std::ostringstream why;
  for (const auto& r : a.rows) {
    if (r.source != hz::CatalogSource::kTreeChain && r.source != hz::CatalogSource::kUnicyclicChain) {
      continue;
    }
    ++rows;
    if (r.mismatches != 0 || r.checked != 31) {
      ++bad;
      why << ' ' << r.key;
    }
  }
  std::ostringstream d;
  d << rows << " chain formulas x 31 orders, " << bad << " mismatching" << why.str();
  return {rows == 12 && bad == 0, d.str()};
}

Outcome point_value() {
  const auto a = hz::hyper_zagreb(hz::build_member("C_3(P_3,n-5)", 15));
  const auto b = hz::hyper_zagreb(hz::build_member("C_3(T^3_{n-2})", 15));
  const bool distinct = !hz::isomorphic(hz::build_member("C_3(P_3,n-5)", 15),
                                        hz::build_member("C_3(T^3_{n-2})", 15));
  return {a == 2170 && b == 2170 && distinct,
          "C_3(P_3,10) = " + std::to_string(a) + ", C_3(T^3_13) = " + std::to_string(b) +
              (distinct ? ", non-isomorphic" : ", isomorphic")};
}

Outcome tree_rankings() {
  bool pass = true;
  std::ostringstream d;
  for (std::size_t n = 10; n <= 15; ++n) {
    const auto r = hz::verify_trees(n);
    const bool ok = r.verdict == hz::Verdict::kPass && r.next_value &&
                    r.expected.back().hm && *r.next_value < *r.expected.back().hm;
    pass = pass && ok;
    d << (n > 10 ? "; " : "") << "n=" << n << ' ' << r.classes << " classes "
      << (ok ? "ok" : "FAILED");
  }
  return {pass, d.str()};
}

Outcome unicyclic_rankings() {
  const auto r15 = hz::verify_unicyclic(15);
  const auto r16 = hz::verify_unicyclic(16);
  const bool pass = r15.verdict != hz::Verdict::kFail && r16.verdict == hz::Verdict::kPass;
  std::ostringstream d;
  d << "n=15 " << r15.classes << " classes verdict " << hz::to_string(r15.verdict) << ", n=16 "
    << r16.classes << " classes verdict " << hz::to_string(r16.verdict);
  const auto extra = [](const hz::VerdictReport& r) -> std::string {
    for (const auto& e : r.observed) {
      if (e.matches("C_3(1,T^1_{n-3})")) {
        return "C_3(1,T^1_{n-3}) = " + std::to_string(e.hm) + " at rank " + std::to_string(e.rank);
      }
    }
    return "none";
  };
  if (!pass) {
    d << "; stated chain omits " << extra(r15) << " (n=15) and " << extra(r16)
      << " (n=16); with it inserted the chain holds: n=15 "
      << (r15.amended_holds.value_or(false) ? "yes" : "no") << ", n=16 "
      << (r16.amended_holds.value_or(false) ? "yes" : "no");
  }
  return {pass, d.str()};
}

Outcome generator_certification() {
  bool pass = true;
  std::ostringstream d;
  for (hz::GraphClass cls : {hz::GraphClass::kTree, hz::GraphClass::kUnicyclic}) {
    for (std::size_t n = cls == hz::GraphClass::kTree ? 1 : 3; n <= hz::kOracleMaxOrder; ++n) {
      const auto oracle = hz::labeled_oracle(n, cls);
      std::vector<hz::CanonicalCode> a;
      for (const auto& g : oracle.classes) a.push_back(hz::canonical_code(g));
      std::vector<hz::CanonicalCode> b;
      hz::class_stream(cls, n).for_each([&](const hz::Graph& g) { b.push_back(hz::canonical_code(g)); });
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      const bool unique = std::adjacent_find(b.begin(), b.end()) == b.end();
      if (a != b || !unique) {
        pass = false;
        d << to_string(cls) << " n=" << n << " differs; ";
      }
    }
  }
  if (pass) d << "trees and unicyclic graphs n <= " << hz::kOracleMaxOrder << " in bijection";
  return {pass, d.str()};
}

Outcome property_suite() {
  const auto r = hz::lemma_suite(0, 10000);
  const std::vector<std::string> required{"pendant-shift", "join-vs-identify",
                                          "cycle-star-monotone", "tree-max", "unicyclic-max",
                                          "girth-max"};
  bool pass = r.property("pendant-shift").checked == 10000;
  std::ostringstream d;
  for (const auto& name : required) {
    const auto& p = r.property(name);
    pass = pass && p.ok();
    d << name << ' ' << p.checked << '/' << p.violations << "; ";
  }
  return {pass, d.str() + "(checked/violations)"};
}

Outcome coefficient_regression() {
  const auto a = hz::closed_form_audit(15, 45);
  const auto& c = a.coefficient_check;
  const bool pass = c.literal == 2614 && c.family_row == 2638 && c.corrected == 2638 &&
                    c.literal_disagrees() && c.corrected_agrees();
  return {pass, "C_4(11): literal " + std::to_string(c.literal) + ", corrected " +
                    std::to_string(c.corrected) + ", family row " + std::to_string(c.family_row) +
                    ", direct " + std::to_string(c.direct)};
}

Outcome tree_threshold() {
  const auto a = hz::discover_threshold(hz::GraphClass::kTree, 5, 15);
  const auto b = hz::discover_threshold(hz::GraphClass::kTree, 5, 15, 1);
  const bool same = hz::to_text(a) == hz::to_text(b);
  const bool found = a.first_holding.has_value();
  return {same && found,
          "smallest n >= 5 with the top-4 tree ordering: " +
              (found ? std::to_string(*a.first_holding) : std::string("none")) +
              " (discovered), holds through 15 from " +
              (a.holds_from ? std::to_string(*a.holds_from) : std::string("none")) +
              (same ? ", repeat run identical" : ", repeat run differs")};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{
      audit_chains,          point_value,          tree_rankings,           unicyclic_rankings,
      generator_certification, property_suite, coefficient_regression, tree_threshold};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
