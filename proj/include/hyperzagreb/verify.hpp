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

#ifndef HYPERZAGREB_VERIFY_HPP
#define HYPERZAGREB_VERIFY_HPP

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "hyperzagreb/canonical.hpp"
#include "hyperzagreb/codec.hpp"
#include "hyperzagreb/enumerate.hpp"
#include "hyperzagreb/families.hpp"
#include "hyperzagreb/graph.hpp"
#include "hyperzagreb/random.hpp"
#include "hyperzagreb/transforms.hpp"

namespace hz {

// ---------------------------------------------------------------------------
// Ranking

struct RankEntry {
  std::size_t rank = 0;  // 1-based; tied entries share a rank
  IndexValue hm = 0;
  CanonicalCode code;
  std::vector<std::string> family_matches;  // catalog order
  Graph graph;

  std::optional<std::string> family_match() const {
    if (family_matches.empty()) return std::nullopt;
    return family_matches.front();
  }
  bool matches(std::string_view key) const {
    return std::find(family_matches.begin(), family_matches.end(), key) != family_matches.end();
  }
  /// Family key if any, otherwise the graph6 string.
  std::string label() const {
    return family_matches.empty() ? encode_graph6(graph) : family_matches.front();
  }
};

/// Keeps every graph whose HM is at least the k-th largest value offered so
/// far, so a tie at the boundary is never cut. The retained set does not
/// depend on offer order, which makes merge() associative.
class TopK {
 public:
  explicit TopK(std::size_t k) : k_(k) {
    if (k == 0) throw std::invalid_argument("top-k needs k >= 1");
  }

  std::size_t k() const { return k_; }
  std::size_t seen() const { return seen_; }

  void offer(IndexValue hm, const Graph& g) {
    ++seen_;
    if (held_ >= k_ && hm < groups_.rbegin()->first) return;
    groups_[hm].push_back(g);
    ++held_;
    trim();
  }

  void merge(const TopK& other) {
    const std::size_t seen = seen_ + other.seen_;
    for (const auto& [hm, graphs] : other.groups_) {
      for (const auto& g : graphs) offer(hm, g);
    }
    seen_ = seen;
  }

  /// Entries by HM descending, ties by canonical code ascending.
  std::vector<RankEntry> entries() const {
    std::vector<RankEntry> out;
    std::size_t rank = 1;
    for (const auto& [hm, graphs] : groups_) {
      std::vector<RankEntry> group;
      for (const auto& g : graphs) group.push_back(RankEntry{rank, hm, canonical_code(g), {}, g});
      std::sort(group.begin(), group.end(),
                [](const RankEntry& a, const RankEntry& b) { return a.code < b.code; });
      rank += group.size();
      for (auto& e : group) out.push_back(std::move(e));
    }
    return out;
  }

 private:
  void trim() {
    while (groups_.size() > 1) {
      const auto last = std::prev(groups_.end());
      if (held_ - last->second.size() < k_) break;
      held_ -= last->second.size();
      groups_.erase(last);
    }
  }

  std::size_t k_;
  std::size_t seen_ = 0;
  std::size_t held_ = 0;
  std::map<IndexValue, std::vector<Graph>, std::greater<>> groups_;
};

/// Canonical codes of every named family member of one order: the catalog
/// entries plus T^4_n, which the catalog lacks a closed form for.
class FamilyIndex {
 public:
  explicit FamilyIndex(std::size_t n) {
    for (const auto& e : catalog()) {
      if (n >= e.poly.valid_n_min) codes_.emplace_back(canonical_code(e.make(n)), e.key);
    }
    if (n >= family_minimum(FamilyKind::kTreeT4)) {
      codes_.emplace_back(canonical_code(tree_t_family(4, n)), "T^4_n");
    }
  }

  std::vector<std::string> matches(const CanonicalCode& code) const {
    std::vector<std::string> out;
    for (const auto& [c, key] : codes_) {
      if (c == code) out.push_back(key);
    }
    return out;
  }

 private:
  std::vector<std::pair<CanonicalCode, std::string>> codes_;
};

inline void label_families(std::vector<RankEntry>& entries) {
  std::map<std::size_t, FamilyIndex> by_order;
  for (auto& e : entries) {
    auto it = by_order.find(e.graph.order());
    if (it == by_order.end()) it = by_order.emplace(e.graph.order(), FamilyIndex(e.graph.order())).first;
    e.family_matches = it->second.matches(e.code);
  }
}

/// Top-k of a stream by HM with full tie groups (the list can exceed k).
inline std::vector<RankEntry> rank(GraphStream& stream, std::size_t k) {
  TopK top(k);
  stream.for_each([&](const Graph& g) { top.offer(hyper_zagreb(g), g); });
  if (top.seen() == 0) throw std::invalid_argument("rank: empty stream");
  auto out = top.entries();
  label_families(out);
  return out;
}

struct CycleLengthStat {
  std::size_t m = 0;
  std::size_t classes = 0;
  IndexValue max_hm = 0;
  std::size_t maximizers = 0;
  std::string maximizer;  // family key or graph6 of the smallest-code maximizer
};

struct ClassScan {
  std::size_t n = 0;
  GraphClass cls = GraphClass::kTree;
  std::size_t classes = 0;
  std::vector<RankEntry> top;
  std::vector<CycleLengthStat> per_cycle_length;  // unicyclic only
};

inline std::size_t default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Exhaustive top-k over a whole class. Unicyclic scans are split by cycle
/// length across `threads` workers and merged in cycle-length order.
inline ClassScan scan_class(GraphClass cls, std::size_t n, std::size_t k,
                            std::size_t threads = default_threads()) {
  ClassScan scan{n, cls, 0, {}, {}};
  if (cls == GraphClass::kTree) {
    if (n == 0) throw std::domain_error("trees need n >= 1");
    TopK top(k);
    scan.classes = trees(n).for_each([&](const Graph& g) { top.offer(hyper_zagreb(g), g); });
    scan.top = top.entries();
    label_families(scan.top);
    return scan;
  }
  if (n < 3) throw std::domain_error("unicyclic graphs need n >= 3");

  const std::size_t cycle_lengths = n - 2;
  std::vector<TopK> tops(cycle_lengths, TopK(k));
  std::vector<TopK> maxima(cycle_lengths, TopK(1));
  std::atomic<std::size_t> next{0};
  const auto work = [&]() {
    for (std::size_t i = next++; i < cycle_lengths; i = next++) {
      auto stream = unicyclic_graphs(n, i + 3, i + 3);
      stream.for_each([&](const Graph& g) {
        const IndexValue hm = hyper_zagreb(g);
        tops[i].offer(hm, g);
        maxima[i].offer(hm, g);
      });
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(threads, cycle_lengths));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  TopK all(k);
  for (std::size_t i = 0; i < cycle_lengths; ++i) {
    all.merge(tops[i]);
    auto best = maxima[i].entries();
    label_families(best);
    CycleLengthStat stat;
    stat.m = i + 3;
    stat.classes = tops[i].seen();
    stat.max_hm = best.front().hm;
    stat.maximizers = best.size();
    stat.maximizer = best.front().label();
    scan.per_cycle_length.push_back(stat);
    scan.classes += stat.classes;
  }
  scan.top = all.entries();
  label_families(scan.top);
  return scan;
}

// ---------------------------------------------------------------------------
// Ranking verdicts

enum class Verdict { kPass, kFail, kTieNoted, kReportOnly };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kTieNoted: return "tie-noted";
    case Verdict::kReportOnly: return "report-only";
  }
  return "?";
}

struct ExpectedRow {
  std::string key;
  std::optional<IndexValue> hm;  // absent when n is below the family floor
};

struct TieGroup {
  IndexValue hm = 0;
  std::vector<std::string> members;
};

struct VerdictReport {
  std::size_t n = 0;
  GraphClass cls = GraphClass::kTree;
  std::vector<ExpectedRow> expected;
  std::vector<RankEntry> observed;
  Verdict verdict = Verdict::kReportOnly;
  bool ordering_holds = false;  // computed even when report-only
  std::optional<IndexValue> next_value;  // first value below the expected chain
  std::vector<TieGroup> ties;
  std::vector<std::string> notes;
  std::size_t classes = 0;
  std::vector<CycleLengthStat> per_cycle_length;
  std::optional<bool> amended_holds;  // unicyclic only

  /// Exit-status view: report-only is not a failure.
  bool ok() const { return verdict != Verdict::kFail; }
};

inline constexpr std::size_t kTreeVerdictFloor = 6;
inline constexpr std::size_t kUnicyclicVerdictFloor = 15;

inline const std::vector<std::string>& tree_chain() {
  static const std::vector<std::string> keys{"S_n", "T^1_n", "T^2_n", "T^3_n"};
  return keys;
}

inline const std::vector<std::string>& unicyclic_chain() {
  static const std::vector<std::string> keys{
      "C_3(n-3)",     "C_3(1,n-4)",   "C_3(T^1_{n-2})", "C_4(n-4)",
      "C_3(2,n-5)",   "C_3(1,1,n-5)", "C_3(T^2_{n-2})", "C_3(T^3_{n-2})"};
  return keys;
}

/// Equal-HM partners that are allowed to share a rank with an expected
/// family at a given order.
inline std::vector<std::string> documented_tie_partners(GraphClass cls, std::size_t n,
                                                        std::string_view key) {
  if (cls == GraphClass::kUnicyclic && n == 15 && key == "C_3(T^3_{n-2})") {
    return {"C_3(P_3,n-5)"};
  }
  return {};
}

namespace detail {

inline std::vector<ExpectedRow> expected_rows(const std::vector<std::string>& chain,
                                              std::size_t n) {
  std::vector<ExpectedRow> out;
  for (const auto& key : chain) {
    const auto& poly = closed_form(key);
    out.push_back({key, n >= poly.valid_n_min ? std::optional(poly.evaluate(n)) : std::nullopt});
  }
  return out;
}

struct ChainCheck {
  bool holds = true;
  bool tie_noted = false;
  std::vector<std::string> notes;
  std::optional<IndexValue> next_value;
};

using ValueGroups = std::vector<std::pair<IndexValue, std::vector<const RankEntry*>>>;

inline ValueGroups value_groups(const std::vector<RankEntry>& observed) {
  ValueGroups groups;
  for (const auto& e : observed) {
    if (groups.empty() || groups.back().first != e.hm) groups.push_back({e.hm, {}});
    groups.back().second.push_back(&e);
  }
  return groups;
}

// Group i of the observed values must hold exactly the i-th expected family,
// plus documented tie partners, at the closed-form value.
inline ChainCheck check_chain(GraphClass cls, std::size_t n, const std::vector<RankEntry>& observed,
                              const std::vector<ExpectedRow>& expected) {
  const auto groups = value_groups(observed);
  ChainCheck c;
  const auto fail = [&](std::string why) {
    c.holds = false;
    c.notes.push_back(std::move(why));
  };
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& exp = expected[i];
    const std::string at = "rank " + std::to_string(i + 1) + " (" + exp.key + "): ";
    if (!exp.hm) {
      fail(at + "family not defined at this order");
      continue;
    }
    if (i >= groups.size()) {
      fail(at + "fewer distinct values than expected ranks");
      continue;
    }
    const auto& [hm, members] = groups[i];
    if (hm != *exp.hm) {
      fail(at + "observed value " + std::to_string(hm) + ", closed form gives " +
           std::to_string(*exp.hm));
    }
    bool found = false;
    for (const auto* e : members) found = found || e->matches(exp.key);
    if (!found) fail(at + "expected family not among the graphs with value " + std::to_string(hm));
    const auto partners = documented_tie_partners(cls, n, exp.key);
    for (const auto* e : members) {
      if (e->matches(exp.key)) continue;
      bool documented = false;
      for (const auto& p : partners) documented = documented || e->matches(p);
      if (documented) {
        c.tie_noted = true;
        c.notes.push_back(at + "documented tie with " + e->label());
      } else {
        fail(at + "unexpected graph " + e->label() + " has value " + std::to_string(hm));
      }
    }
  }
  if (groups.size() > expected.size()) c.next_value = groups[expected.size()].first;
  return c;
}

inline VerdictReport verify_chain(GraphClass cls, std::size_t n,
                                  const std::vector<std::string>& chain, bool report_only,
                                  std::size_t k, std::size_t threads) {
  VerdictReport r;
  r.n = n;
  r.cls = cls;
  r.expected = expected_rows(chain, n);
  auto scan = scan_class(cls, n, k, threads);
  r.observed = std::move(scan.top);
  r.classes = scan.classes;
  r.per_cycle_length = std::move(scan.per_cycle_length);

  for (const auto& [hm, members] : value_groups(r.observed)) {
    if (members.size() < 2) continue;
    TieGroup t{hm, {}};
    for (const auto* e : members) t.members.push_back(e->label());
    r.ties.push_back(std::move(t));
  }
  auto check = check_chain(cls, n, r.observed, r.expected);
  r.ordering_holds = check.holds;
  r.next_value = check.next_value;
  r.notes = std::move(check.notes);
  if (report_only) {
    r.verdict = Verdict::kReportOnly;
  } else if (!check.holds) {
    r.verdict = Verdict::kFail;
  } else {
    r.verdict = check.tie_noted ? Verdict::kTieNoted : Verdict::kPass;
  }
  return r;
}

}  // namespace detail

/// Top-4 trees against S_n > T^1_n > T^2_n > T^3_n. Orders below 6, where
/// T^2_n does not exist, are report-only.
inline VerdictReport verify_trees(std::size_t n, std::size_t threads = default_threads()) {
  if (n < 5) throw std::domain_error("verify_trees needs n >= 5");
  // two extra slots so the first value below the chain survives a boundary tie
  return detail::verify_chain(GraphClass::kTree, n, tree_chain(), n < kTreeVerdictFloor,
                              tree_chain().size() + 2, threads);
}

/// The unicyclic chain with C_3(1,T^1_{n-3}) inserted at rank 7, where
/// exhaustive ranking places it.
inline const std::vector<std::string>& amended_unicyclic_chain() {
  static const std::vector<std::string> keys = [] {
    auto k = unicyclic_chain();
    k.insert(k.begin() + 6, "C_3(1,T^1_{n-3})");
    return k;
  }();
  return keys;
}

/// Top-8 unicyclic graphs against the eight-family chain. Orders below 15
/// are report-only. The amended nine-family chain is checked alongside and
/// recorded separately; it never changes the verdict.
inline VerdictReport verify_unicyclic(std::size_t n, std::size_t threads = default_threads()) {
  if (n < 3) throw std::domain_error("verify_unicyclic needs n >= 3");
  const auto& amended = amended_unicyclic_chain();
  auto r = detail::verify_chain(GraphClass::kUnicyclic, n, unicyclic_chain(),
                                n < kUnicyclicVerdictFloor, amended.size() + 2, threads);
  const auto check =
      detail::check_chain(r.cls, n, r.observed, detail::expected_rows(amended, n));
  r.amended_holds = check.holds;
  r.notes.push_back(std::string("amended chain with C_3(1,T^1_{n-3}) at rank 7: ") +
                    (check.holds ? "holds" : "does not hold"));
  r.notes.push_back("rank 8 family: the triangle carrying T^3 of order n-2");
  return r;
}

struct ThresholdReport {
  GraphClass cls = GraphClass::kTree;
  std::size_t n_lo = 0;
  std::size_t n_hi = 0;
  std::vector<std::pair<std::size_t, bool>> holds;
  std::optional<std::size_t> first_holding;  // smallest n in range where the ordering holds
  std::optional<std::size_t> holds_from;     // smallest n from which it holds up to n_hi
  std::vector<std::pair<std::size_t, bool>> amended;  // unicyclic only
  std::optional<std::size_t> amended_holds_from;
};

/// Discovered data: where the class's expected ordering starts to hold,
/// from reports for consecutive orders.
inline ThresholdReport threshold_from(const std::vector<VerdictReport>& reports) {
  if (reports.empty()) throw std::domain_error("threshold needs at least one report");
  ThresholdReport t;
  t.cls = reports.front().cls;
  t.n_lo = reports.front().n;
  t.n_hi = reports.back().n;
  for (const auto& r : reports) {
    t.holds.emplace_back(r.n, r.ordering_holds);
    if (r.ordering_holds && !t.first_holding) t.first_holding = r.n;
    if (r.amended_holds) t.amended.emplace_back(r.n, *r.amended_holds);
  }
  for (auto it = t.holds.rbegin(); it != t.holds.rend() && it->second; ++it) t.holds_from = it->first;
  for (auto it = t.amended.rbegin(); it != t.amended.rend() && it->second; ++it) {
    t.amended_holds_from = it->first;
  }
  return t;
}

inline ThresholdReport discover_threshold(GraphClass cls, std::size_t n_lo, std::size_t n_hi,
                                          std::size_t threads = default_threads()) {
  if (n_lo < 5 || n_hi < n_lo) throw std::domain_error("threshold range must satisfy 5 <= lo <= hi");
  std::vector<VerdictReport> reports;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    reports.push_back(cls == GraphClass::kTree ? verify_trees(n, threads)
                                               : verify_unicyclic(n, threads));
  }
  return threshold_from(reports);
}

// ---------------------------------------------------------------------------
// Monotonicity properties

struct PropertyResult {
  std::string name;
  std::string description;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::optional<std::pair<std::string, std::string>> counterexample;  // graph6 pair
  std::string detail;

  bool ok() const { return violations == 0 && checked > 0; }
};

struct LemmaSuiteReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<PropertyResult> properties;

  bool ok() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyResult& p) { return p.ok(); });
  }
  const PropertyResult& property(std::string_view name) const {
    for (const auto& p : properties) {
      if (p.name == name) return p;
    }
    throw std::out_of_range("no property named " + std::string(name));
  }
};

namespace detail {

inline void record(PropertyResult& p, bool holds, const Graph& a, const Graph& b) {
  ++p.checked;
  if (holds) return;
  ++p.violations;
  if (!p.counterexample) p.counterexample.emplace(encode_graph6(a), encode_graph6(b));
}

inline std::vector<Graph> collect(GraphStream s) {
  std::vector<Graph> out;
  s.for_each([&](const Graph& g) { out.push_back(g); });
  return out;
}

inline PropertyResult shift_random(std::uint64_t seed, std::size_t trials) {
  PropertyResult p{"pendant-shift", "moving a pendant tree to a vertex meeting the degree and "
                   "neighbor-sum conditions never lowers HM; equality iff both are tight",
                   0, 0, std::nullopt, {}};
  Rng rng(seed);
  std::size_t attempts = 0;
  std::size_t tight = 0;
  const std::size_t cap = 100 * trials;
  while (p.checked < trials && attempts < cap) {
    ++attempts;
    const std::size_t n = uniform(rng, 2, 9);
    const Graph g = random_connected(n, uniform(rng, 0, n), rng);
    const auto u = static_cast<Vertex>(uniform(rng, 0, n - 1));
    auto w = static_cast<Vertex>(uniform(rng, 0, n - 2));
    if (w >= u) ++w;
    const Graph h = random_tree(uniform(rng, 2, 6), rng);
    const auto z = static_cast<Vertex>(uniform(rng, 0, h.order() - 1));
    const auto res = apply_shift({g, u, w, h, z});
    if (!res.conditions.hold()) continue;
    const IndexValue hm1 = hyper_zagreb(res.g1);
    const IndexValue hm2 = hyper_zagreb(res.g2);
    const bool both = res.conditions.both_tight();
    tight += both;
    record(p, hm2 >= hm1 && ((hm2 == hm1) == both), res.g1, res.g2);
  }
  p.detail = std::to_string(attempts) + " draws, " + std::to_string(tight) + " with both conditions tight";
  if (p.checked < trials) p.detail += "; stopped early, too few draws met the conditions";
  return p;
}

inline PropertyResult join_identify_exhaustive(std::size_t max_order) {
  PropertyResult p{"join-vs-identify", "identifying two tree vertices and adding a pendant beats joining "
                   "them by an edge when both joined degrees are at least 2",
                   0, 0, std::nullopt, {}};
  std::vector<Graph> all;
  for (std::size_t k = 1; k <= max_order; ++k) {
    for (auto& g : collect(trees(k))) all.push_back(std::move(g));
  }
  std::size_t skipped = 0;
  for (const auto& g1 : all) {
    for (const auto& g2 : all) {
      for (Vertex u = 0; u < g1.order(); ++u) {
        for (Vertex v = 0; v < g2.order(); ++v) {
          const auto r = join_or_identify(g1, u, g2, v);
          if (!r.applicable) {
            ++skipped;
            continue;
          }
          record(p, hyper_zagreb(r.identified) > hyper_zagreb(r.joined), r.joined, r.identified);
        }
      }
    }
  }
  p.detail = std::to_string(all.size()) + " trees, " + std::to_string(skipped) +
             " attachment choices skipped as inapplicable";
  return p;
}

inline PropertyResult cycle_star_monotone(std::size_t max_n) {
  PropertyResult p{"cycle-star-monotone", "HM(C_m(n-m)) strictly decreases in m for 4 <= m <= n",
                   0, 0, std::nullopt, {}};
  for (std::size_t n = 4; n <= max_n; ++n) {
    for (std::size_t m = 4; m <= n; ++m) {
      record(p, cm_star_hm(m, n) < cm_star_hm(m - 1, n), cm_star(m - 1, n), cm_star(m, n));
    }
  }
  return p;
}

inline PropertyResult cycle_star_direct(std::size_t max_n) {
  PropertyResult p{"cycle-star-closed-form", "the closed form for HM(C_m(n-m)) equals direct computation",
                   0, 0, std::nullopt, {}};
  for (std::size_t n = 3; n <= max_n; ++n) {
    for (std::size_t m = 3; m <= n; ++m) {
      const Graph g = cm_star(m, n);
      record(p, cm_star_hm(m, n) == hyper_zagreb(g), g, g);
    }
  }
  return p;
}

inline PropertyResult tree_max(std::size_t max_n) {
  PropertyResult p{"tree-max", "the star is the unique tree of maximum HM", 0, 0,
                   std::nullopt, {}};
  for (std::size_t n = 2; n <= max_n; ++n) {
    auto s = trees(n);
    const auto top = rank(s, 1);
    const Graph star = star_graph(n);
    record(p, top.size() == 1 && isomorphic(top.front().graph, star), top.front().graph, star);
  }
  return p;
}

inline Graph collapse_all_stars(const Graph& g) {
  Graph cur = g;
  const auto s = cycle_structure(g);
  for (std::size_t i = 0; i < s.length(); ++i) cur = collapse_to_star(cur, s, i);
  return cur;
}

inline PropertyResult star_collapse(std::size_t max_n) {
  PropertyResult p{"star-collapse", "replacing every hanging tree by a star of the same order "
                   "never lowers HM; equality iff all were stars already",
                   0, 0, std::nullopt, {}};
  for (std::size_t n = 3; n <= max_n; ++n) {
    unicyclic_graphs(n).for_each([&](const Graph& g) {
      const Graph c = collapse_all_stars(g);
      const IndexValue a = hyper_zagreb(g);
      const IndexValue b = hyper_zagreb(c);
      record(p, a <= b && ((a == b) == cycle_structure(g).star_form), g, c);
    });
  }
  return p;
}

inline PropertyResult merge_exhaustive(std::size_t max_n) {
  PropertyResult p{"adjacent-merge", "merging adjacent star attachments under the degree hypothesis "
                   "strictly raises HM", 0, 0, std::nullopt, {}};
  for (std::size_t n = 5; n <= max_n; ++n) {
    unicyclic_graphs(n).for_each([&](const Graph& g) {
      const auto s = cycle_structure(g);
      if (!s.star_form) return;
      for (std::size_t a = 0; a < s.length(); ++a) {
        for (std::size_t b = 0; b < s.length(); ++b) {
          if (a == b || merge_violation(g, s, a, b)) continue;
          const auto merged = merge_adjacent(g, a, b);
          const Graph& out = std::get<Graph>(merged);
          record(p, hyper_zagreb(out) > hyper_zagreb(g), g, out);
        }
      }
    });
  }
  return p;
}

inline PropertyResult girth_max(std::size_t max_n) {
  PropertyResult p{"girth-max", "among unicyclic graphs with girth m, C_m(n-m) is the unique "
                   "HM maximum", 0, 0, std::nullopt, {}};
  for (std::size_t n = 3; n <= max_n; ++n) {
    unicyclic_graphs(n).for_each([&](const Graph& g) {
      const std::size_t m = cycle_vertices(g).size();
      const IndexValue bound = cm_star_hm(m, n);
      const IndexValue hm = hyper_zagreb(g);
      const Graph best = cm_star(m, n);
      record(p, hm <= bound && ((hm == bound) == isomorphic(g, best)), g, best);
    });
  }
  return p;
}

inline PropertyResult reduction_chain(std::size_t max_n) {
  PropertyResult p{"reduction", "every unicyclic graph reduces to C_m(n-m) through strictly "
                   "HM-increasing steps", 0, 0, std::nullopt, {}};
  std::size_t direct = 0;
  for (std::size_t n = 3; n <= max_n; ++n) {
    unicyclic_graphs(n).for_each([&](const Graph& g) {
      const auto chain = reduce_to_single_attachment(g);
      bool ok = isomorphic(chain.back().graph, cm_star(cycle_vertices(g).size(), n));
      for (std::size_t i = 1; i < chain.size(); ++i) {
        ok = ok && chain[i].hm > chain[i - 1].hm;
        direct += chain[i].kind == StepKind::kDirectShift;
      }
      record(p, ok, g, chain.back().graph);
    });
  }
  p.detail = std::to_string(direct) + " steps needed the direct fallback";
  return p;
}

inline PropertyResult unicyclic_head(std::size_t max_n) {
  PropertyResult p{"unicyclic-max", "C_3(n-3) is the unique unicyclic graph of maximum HM", 0, 0,
                   std::nullopt, {}};
  for (std::size_t n = 4; n <= max_n; ++n) {
    auto s = unicyclic_graphs(n);
    const auto top = rank(s, 1);
    const Graph best = cm_star(3, n);
    record(p, top.size() == 1 && isomorphic(top.front().graph, best), top.front().graph, best);
  }
  return p;
}

}  // namespace detail

/// Randomized and exhaustive checks of every monotonicity statement the
/// rankings rest on. Only the first property consumes the seed.
inline LemmaSuiteReport lemma_suite(std::uint64_t seed, std::size_t trials) {
  if (trials == 0) throw std::domain_error("lemma_suite needs trials >= 1");
  LemmaSuiteReport r{seed, trials, {}};
  r.properties.push_back(detail::shift_random(seed, trials));
  r.properties.push_back(detail::join_identify_exhaustive(6));
  r.properties.push_back(detail::merge_exhaustive(10));
  r.properties.push_back(detail::cycle_star_monotone(50));
  r.properties.push_back(detail::cycle_star_direct(50));
  r.properties.push_back(detail::tree_max(12));
  r.properties.push_back(detail::star_collapse(10));
  r.properties.push_back(detail::girth_max(10));
  r.properties.push_back(detail::reduction_chain(10));
  r.properties.push_back(detail::unicyclic_head(10));
  return r;
}

// ---------------------------------------------------------------------------
// Closed-form audit

struct AuditRow {
  std::string key;
  CatalogSource source = CatalogSource::kTreeChain;
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::optional<std::tuple<std::size_t, IndexValue, IndexValue>> first_mismatch;  // n, direct, poly
};

struct CycleFormCheck {
  std::size_t m = 4;
  std::size_t n = 15;
  IndexValue direct = 0;
  IndexValue family_row = 0;  // C_4(n-4) closed form
  IndexValue corrected = 0;  // 16(m-2) coefficient
  IndexValue literal = 0;    // 4(m-2) coefficient

  bool corrected_agrees() const { return corrected == direct && corrected == family_row; }
  bool literal_disagrees() const { return literal != family_row; }
};

struct AuditReport {
  std::size_t n_lo = 0;
  std::size_t n_hi = 0;
  std::vector<AuditRow> rows;
  std::size_t cycle_form_checked = 0;
  std::size_t cycle_form_mismatches = 0;
  CycleFormCheck coefficient_check;

  bool ok() const {
    return cycle_form_mismatches == 0 && coefficient_check.corrected_agrees() && coefficient_check.literal_disagrees() &&
           std::all_of(rows.begin(), rows.end(), [](const AuditRow& r) { return r.mismatches == 0; });
  }
};

inline std::size_t max_catalog_floor() {
  std::size_t f = 0;
  for (const auto& e : catalog()) f = std::max(f, e.poly.valid_n_min);
  return f;
}

inline CycleFormCheck cycle_form_check(std::size_t m, std::size_t n) {
  CycleFormCheck c;
  c.m = m;
  c.n = n;
  c.direct = hyper_zagreb(cm_star(m, n));
  c.family_row = m == 4 ? closed_form("C_4(n-4)").evaluate(n) : c.direct;
  c.corrected = cm_star_hm(m, n);
  c.literal = cm_star_hm_literal(m, n);
  return c;
}

/// Direct HM of every catalog member against its polynomial for each n in
/// [n_lo, n_hi], the C_m(n-m) closed form for every m, and the fixed
/// m = 4, n = 15 comparison of the two cycle-term coefficients.
inline AuditReport closed_form_audit(std::size_t n_lo, std::size_t n_hi) {
  if (n_lo < max_catalog_floor()) {
    throw std::domain_error("closed_form_audit needs n_lo >= " + std::to_string(max_catalog_floor()));
  }
  if (n_hi < n_lo) throw std::domain_error("closed_form_audit: empty range");
  AuditReport r;
  r.n_lo = n_lo;
  r.n_hi = n_hi;
  for (const auto& e : catalog()) {
    AuditRow row{e.key, e.source, 0, 0, std::nullopt};
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
      const IndexValue direct = hyper_zagreb(e.make(n));
      const IndexValue poly = e.poly.evaluate(n);
      ++row.checked;
      if (direct != poly) {
        ++row.mismatches;
        if (!row.first_mismatch) row.first_mismatch.emplace(n, direct, poly);
      }
    }
    r.rows.push_back(std::move(row));
  }
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    for (std::size_t m = 3; m <= n; ++m) {
      ++r.cycle_form_checked;
      r.cycle_form_mismatches += cm_star_hm(m, n) != hyper_zagreb(cm_star(m, n));
    }
  }
  r.coefficient_check = cycle_form_check(4, 15);
  return r;
}

}  // namespace hz

#endif  // HYPERZAGREB_VERIFY_HPP
