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

#ifndef HYPERZAGREB_REPORT_HPP
#define HYPERZAGREB_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include "hyperzagreb/codec.hpp"
#include "hyperzagreb/verify.hpp"
#include "json.hpp"

// Serialization of rankings and reports. The text form is one "key: value"
// per line with no timestamps, so equal inputs give byte-identical output.

namespace hz {

using Json = nlohmann::ordered_json;

namespace detail {

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

inline std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Rankings

inline Json to_json(const RankEntry& e) {
  Json j;
  j["rank"] = e.rank;
  j["hm"] = e.hm;
  j["family_match"] = e.family_match() ? Json(*e.family_match()) : Json(nullptr);
  j["aliases"] = e.family_matches.size() > 1
                     ? Json(std::vector<std::string>(e.family_matches.begin() + 1,
                                                     e.family_matches.end()))
                     : Json::array();
  j["graph6"] = encode_graph6(e.graph);
  j["code"] = e.code.hex();
  return j;
}

inline Json rank_to_json(const std::vector<RankEntry>& entries) {
  Json a = Json::array();
  for (const auto& e : entries) a.push_back(to_json(e));
  return a;
}

inline std::string rank_to_text(const std::vector<RankEntry>& entries) {
  std::ostringstream out;
  for (const auto& e : entries) {
    out << "rank." << e.rank << ": hm=" << e.hm
        << " family=" << (e.family_match() ? detail::join(e.family_matches, "=") : "-")
        << " graph6=" << encode_graph6(e.graph) << '\n';
  }
  return out.str();
}

inline std::string rank_to_csv(const std::vector<RankEntry>& entries) {
  std::ostringstream out;
  out << "rank,hm,family_match,graph6,code\n";
  for (const auto& e : entries) {
    out << e.rank << ',' << e.hm << ',' << detail::csv_field(e.family_match().value_or("")) << ','
        << detail::csv_field(encode_graph6(e.graph)) << ',' << e.code.hex() << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Verdicts

inline Json to_json(const VerdictReport& r) {
  Json j;
  j["n"] = r.n;
  j["class"] = to_string(r.cls);
  j["classes"] = r.classes;
  j["verdict"] = to_string(r.verdict);
  j["ordering_holds"] = r.ordering_holds;
  j["amended_holds"] = r.amended_holds ? Json(*r.amended_holds) : Json(nullptr);
  Json expected = Json::array();
  for (const auto& e : r.expected) {
    expected.push_back({{"key", e.key}, {"hm", e.hm ? Json(*e.hm) : Json(nullptr)}});
  }
  j["expected"] = expected;
  j["observed"] = rank_to_json(r.observed);
  j["next_value"] = r.next_value ? Json(*r.next_value) : Json(nullptr);
  Json ties = Json::array();
  for (const auto& t : r.ties) ties.push_back({{"hm", t.hm}, {"members", t.members}});
  j["ties"] = ties;
  Json per_m = Json::array();
  for (const auto& s : r.per_cycle_length) {
    per_m.push_back({{"m", s.m},
                     {"classes", s.classes},
                     {"max_hm", s.max_hm},
                     {"maximizers", s.maximizers},
                     {"maximizer", s.maximizer}});
  }
  j["per_cycle_length"] = per_m;
  j["notes"] = r.notes;
  return j;
}

inline std::string to_text(const VerdictReport& r) {
  std::ostringstream out;
  out << "class: " << to_string(r.cls) << '\n'
      << "n: " << r.n << '\n'
      << "classes: " << r.classes << '\n'
      << "verdict: " << to_string(r.verdict) << '\n'
      << "ordering_holds: " << detail::yes_no(r.ordering_holds) << '\n';
  if (r.amended_holds) out << "amended_holds: " << detail::yes_no(*r.amended_holds) << '\n';
  for (std::size_t i = 0; i < r.expected.size(); ++i) {
    const auto& e = r.expected[i];
    out << "expected." << i + 1 << ": " << e.key << ' '
        << (e.hm ? std::to_string(*e.hm) : std::string("undefined")) << '\n';
  }
  for (const auto& e : r.observed) {
    out << "observed." << e.rank << ": " << e.hm << ' ' << e.label() << '\n';
  }
  out << "next_value: " << (r.next_value ? std::to_string(*r.next_value) : std::string("none"))
      << '\n';
  for (const auto& t : r.ties) out << "tie: " << t.hm << ' ' << detail::join(t.members, " | ") << '\n';
  for (const auto& s : r.per_cycle_length) {
    out << "cycle_length." << s.m << ": classes=" << s.classes << " max=" << s.max_hm
        << " maximizers=" << s.maximizers << " maximizer=" << s.maximizer << '\n';
  }
  for (const auto& note : r.notes) out << "note: " << note << '\n';
  return out.str();
}

inline Json to_json(const ThresholdReport& t) {
  Json j;
  j["class"] = to_string(t.cls);
  j["n_lo"] = t.n_lo;
  j["n_hi"] = t.n_hi;
  Json holds = Json::object();
  for (const auto& [n, h] : t.holds) holds[std::to_string(n)] = h;
  j["holds"] = holds;
  j["first_holding"] = t.first_holding ? Json(*t.first_holding) : Json(nullptr);
  j["holds_from"] = t.holds_from ? Json(*t.holds_from) : Json(nullptr);
  if (!t.amended.empty()) {
    Json amended = Json::object();
    for (const auto& [n, h] : t.amended) amended[std::to_string(n)] = h;
    j["amended"] = amended;
    j["amended_holds_from"] = t.amended_holds_from ? Json(*t.amended_holds_from) : Json(nullptr);
  }
  j["label"] = "discovered";
  return j;
}

inline std::string to_text(const ThresholdReport& t) {
  std::ostringstream out;
  out << "threshold.class: " << to_string(t.cls) << '\n'
      << "threshold.range: " << t.n_lo << ".." << t.n_hi << '\n';
  for (const auto& [n, h] : t.holds) out << "threshold.holds." << n << ": " << detail::yes_no(h) << '\n';
  out << "threshold.first_holding: "
      << (t.first_holding ? std::to_string(*t.first_holding) : std::string("none")) << '\n'
      << "threshold.holds_from: "
      << (t.holds_from ? std::to_string(*t.holds_from) : std::string("none")) << '\n';
  for (const auto& [n, h] : t.amended) out << "threshold.amended." << n << ": " << detail::yes_no(h) << '\n';
  if (!t.amended.empty()) {
    out << "threshold.amended_holds_from: "
        << (t.amended_holds_from ? std::to_string(*t.amended_holds_from) : std::string("none"))
        << '\n';
  }
  out << "threshold.label: discovered\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Property suite and audit

inline Json to_json(const LemmaSuiteReport& r) {
  Json j;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["ok"] = r.ok();
  Json props = Json::array();
  for (const auto& p : r.properties) {
    Json q;
    q["name"] = p.name;
    q["description"] = p.description;
    q["checked"] = p.checked;
    q["violations"] = p.violations;
    q["counterexample"] = p.counterexample
                              ? Json::array({p.counterexample->first, p.counterexample->second})
                              : Json(nullptr);
    q["detail"] = p.detail;
    props.push_back(q);
  }
  j["properties"] = props;
  return j;
}

inline std::string to_text(const LemmaSuiteReport& r) {
  std::ostringstream out;
  out << "seed: " << r.seed << '\n' << "trials: " << r.trials << '\n';
  for (const auto& p : r.properties) {
    out << "property." << p.name << ": checked=" << p.checked << " violations=" << p.violations;
    if (p.counterexample) {
      out << " counterexample=" << p.counterexample->first << ',' << p.counterexample->second;
    }
    out << '\n';
    if (!p.detail.empty()) out << "property." << p.name << ".detail: " << p.detail << '\n';
  }
  out << "ok: " << detail::yes_no(r.ok()) << '\n';
  return out.str();
}

inline Json to_json(const AuditReport& r) {
  Json j;
  j["n_lo"] = r.n_lo;
  j["n_hi"] = r.n_hi;
  j["ok"] = r.ok();
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json q;
    q["key"] = row.key;
    q["source"] = to_string(row.source);
    q["checked"] = row.checked;
    q["mismatches"] = row.mismatches;
    if (row.first_mismatch) {
      const auto& [n, direct, poly] = *row.first_mismatch;
      q["first_mismatch"] = {{"n", n}, {"direct", direct}, {"poly", poly}};
    } else {
      q["first_mismatch"] = nullptr;
    }
    rows.push_back(q);
  }
  j["rows"] = rows;
  j["cycle_form"] = {{"checked", r.cycle_form_checked}, {"mismatches", r.cycle_form_mismatches}};
  j["cycle_coefficient"] = {{"m", r.coefficient_check.m},
                            {"n", r.coefficient_check.n},
                            {"direct", r.coefficient_check.direct},
                            {"family_row", r.coefficient_check.family_row},
                            {"corrected", r.coefficient_check.corrected},
                            {"literal", r.coefficient_check.literal},
                            {"corrected_agrees", r.coefficient_check.corrected_agrees()},
                            {"literal_disagrees", r.coefficient_check.literal_disagrees()}};
  return j;
}

inline std::string to_text(const AuditReport& r) {
  std::ostringstream out;
  out << "range: " << r.n_lo << ".." << r.n_hi << '\n';
  for (const auto& row : r.rows) {
    out << "family." << row.key << ": " << (row.mismatches == 0 ? "EQUAL" : "MISMATCH")
        << " checked=" << row.checked << " source=" << to_string(row.source);
    if (row.first_mismatch) {
      const auto& [n, direct, poly] = *row.first_mismatch;
      out << " first_mismatch=n" << n << ":direct" << direct << ":poly" << poly;
    }
    out << '\n';
  }
  out << "cycle_form: checked=" << r.cycle_form_checked
      << " mismatches=" << r.cycle_form_mismatches << '\n'
      << "cycle_coefficient: m=" << r.coefficient_check.m << " n=" << r.coefficient_check.n << " direct=" << r.coefficient_check.direct
      << " family_row=" << r.coefficient_check.family_row << " corrected=" << r.coefficient_check.corrected
      << " literal=" << r.coefficient_check.literal << '\n'
      << "cycle_coefficient.corrected_agrees: " << detail::yes_no(r.coefficient_check.corrected_agrees()) << '\n'
      << "cycle_coefficient.literal_disagrees: " << detail::yes_no(r.coefficient_check.literal_disagrees())
      << '\n'
      << "ok: " << detail::yes_no(r.ok()) << '\n';
  return out.str();
}

}  // namespace hz

#endif  // HYPERZAGREB_REPORT_HPP
