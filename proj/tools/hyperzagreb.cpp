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

// hyperzagreb: compute, build, enumerate, rank and verify from the shell.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 unknown family
// key, 4 domain error, 5 I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "hyperzagreb.hpp"

namespace {

enum Exit { kOk = 0, kVerifyFail = 1, kParse = 2, kUnknownKey = 3, kDomain = 4, kIo = 5 };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

std::size_t parse_count(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  if (pos != s.size() || s.empty() || s[0] == '-') throw UsageError("not a number: '" + s + "'");
  return static_cast<std::size_t>(v);
}

// "lo..hi" inclusive, or a bare n
Range parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const auto n = parse_count(s);
    return {n, n};
  }
  Range r{parse_count(s.substr(0, dots)), parse_count(s.substr(dots + 2))};
  if (r.hi < r.lo) throw UsageError("empty range '" + s + "'");
  return r;
}

hz::GraphClass parse_class(const std::string& s) {
  if (s == "trees") return hz::GraphClass::kTree;
  if (s == "unicyclic") return hz::GraphClass::kUnicyclic;
  throw UsageError("unknown class '" + s + "' (expected trees or unicyclic)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return ss.str();
}

hz::InputFormat parse_input_format(const std::string& s) {
  if (s == "auto") return hz::InputFormat::kAuto;
  if (s == "edgelist") return hz::InputFormat::kEdgeList;
  return hz::InputFormat::kGraph6;
}

struct Options {
  std::string format = "text";
  std::string out;
  std::string input_format = "auto";
  std::uint64_t seed = 0;
  std::size_t trials = 10000;
  std::size_t threads = hz::default_threads();
  std::size_t k = 8;
};

// Writes to --out when given, otherwise stdout.
void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw IoError("cannot open '" + opt.out + "' for writing");
  f << text;
  if (!f) throw IoError("write to '" + opt.out + "' failed");
}

std::string dump(const hz::Json& j) { return j.dump(2) + "\n"; }

hz::Graph load_graph(const Options& opt, const std::string& path) {
  return hz::read_graph(read_file(path), parse_input_format(opt.input_format));
}

// ---------------------------------------------------------------------------

int cmd_compute(const Options& opt, const std::string& path) {
  const hz::Graph g = load_graph(opt, path);
  const auto hm = hz::hyper_zagreb(g);
  const auto c = hz::classical_indices(g);
  const bool identity =
      hm == hz::detail::checked_add(c.forgotten, hz::detail::checked_mul(2, c.second_zagreb));
  if (opt.format == "json") {
    hz::Json j{{"order", g.order()},          {"size", g.size()},
               {"hm", hm},                    {"m1", c.first_zagreb},
               {"m2", c.second_zagreb},       {"f", c.forgotten},
               {"identity_holds", identity},  {"graph6", hz::encode_graph6(g)}};
    emit(opt, dump(j));
  } else if (opt.format == "csv") {
    std::ostringstream out;
    out << "order,size,hm,m1,m2,f,identity_holds\n"
        << g.order() << ',' << g.size() << ',' << hm << ',' << c.first_zagreb << ','
        << c.second_zagreb << ',' << c.forgotten << ',' << (identity ? "true" : "false") << '\n';
    emit(opt, out.str());
  } else {
    std::ostringstream out;
    out << "order: " << g.order() << '\n'
        << "size: " << g.size() << '\n'
        << "hm: " << hm << '\n'
        << "m1: " << c.first_zagreb << '\n'
        << "m2: " << c.second_zagreb << '\n'
        << "f: " << c.forgotten << '\n'
        << "identity: HM = F + 2*M2 " << (identity ? "holds" : "FAILS") << '\n';
    emit(opt, out.str());
  }
  return identity ? kOk : kVerifyFail;
}

int cmd_family_list(const Options& opt) {
  if (opt.format == "json") {
    hz::Json a = hz::Json::array();
    for (const auto& e : hz::catalog()) {
      a.push_back({{"key", e.key},
                   {"class", hz::to_string(e.graph_class)},
                   {"source", hz::to_string(e.source)},
                   {"closed_form", e.poly.to_string()},
                   {"min_n", e.poly.valid_n_min},
                   {"description", e.description}});
    }
    emit(opt, dump(a));
    return kOk;
  }
  std::ostringstream out;
  for (const auto& e : hz::catalog()) {
    out << e.key << ": " << e.poly.to_string() << " (n >= " << e.poly.valid_n_min << ", "
        << hz::to_string(e.graph_class) << ", " << hz::to_string(e.source) << ")\n";
  }
  emit(opt, out.str());
  return kOk;
}

int cmd_family(const Options& opt, const std::string& key, std::size_t n) {
  const auto& entry = hz::catalog_entry(key);
  const hz::Graph g = hz::build_member(key, n);
  const auto direct = hz::hyper_zagreb(g);
  const auto poly = entry.poly.evaluate(n);
  const char* flag = direct == poly ? "EQUAL" : "MISMATCH";
  if (opt.format == "json") {
    emit(opt, dump(hz::Json{{"key", entry.key},
                            {"n", n},
                            {"graph6", hz::encode_graph6(g)},
                            {"hm", direct},
                            {"closed_form", entry.poly.to_string()},
                            {"closed_form_value", poly},
                            {"status", flag}}));
  } else {
    std::ostringstream out;
    out << "key: " << entry.key << '\n'
        << "n: " << n << '\n'
        << "graph6: " << hz::encode_graph6(g) << '\n'
        << "hm: " << direct << '\n'
        << "closed_form: " << entry.poly.to_string() << " = " << poly << '\n'
        << "status: " << flag << '\n';
    emit(opt, out.str());
  }
  return direct == poly ? kOk : kVerifyFail;
}

int cmd_enumerate(const Options& opt, const std::string& cls_name, std::size_t n) {
  const auto cls = parse_class(cls_name);
  if (n == 0 || (cls == hz::GraphClass::kUnicyclic && n < 3)) {
    throw std::domain_error(std::string(hz::to_string(cls)) + " of order " + std::to_string(n) +
                            " do not exist");
  }
  auto stream = hz::class_stream(cls, n);
  std::size_t count = 0;
  if (opt.out.empty()) {
    count = hz::write_graph6(stream, std::cout);
    std::cerr << "count: " << count << '\n';
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw IoError("cannot open '" + opt.out + "' for writing");
    count = hz::write_graph6(stream, f);
    f.flush();
    if (!f) throw IoError("write to '" + opt.out + "' failed");
    std::cout << "count: " << count << '\n';
  }
  return kOk;
}

int cmd_rank(const Options& opt, const std::string& cls_name, std::size_t n) {
  const auto cls = parse_class(cls_name);
  if (opt.k == 0) throw std::domain_error("-k must be at least 1");
  const auto scan = hz::scan_class(cls, n, opt.k, opt.threads);
  if (opt.format == "json") {
    emit(opt, dump(hz::Json{{"class", hz::to_string(cls)},
                            {"n", n},
                            {"classes", scan.classes},
                            {"entries", hz::rank_to_json(scan.top)}}));
  } else if (opt.format == "csv") {
    emit(opt, hz::rank_to_csv(scan.top));
  } else {
    emit(opt, "class: " + std::string(hz::to_string(cls)) + "\nn: " + std::to_string(n) +
                  "\nclasses: " + std::to_string(scan.classes) + "\n" +
                  hz::rank_to_text(scan.top));
  }
  return kOk;
}

int cmd_verify(const Options& opt, const std::string& what, const std::string& range_text) {
  if (what == "lemmas") {
    const auto r = hz::lemma_suite(opt.seed, opt.trials);
    emit(opt, opt.format == "json" ? dump(hz::to_json(r)) : hz::to_text(r));
    return r.ok() ? kOk : kVerifyFail;
  }
  if (what == "closed-forms") {
    const Range range = parse_range(range_text.empty() ? "15..45" : range_text);
    const auto r = hz::closed_form_audit(range.lo, range.hi);
    emit(opt, opt.format == "json" ? dump(hz::to_json(r)) : hz::to_text(r));
    return r.ok() ? kOk : kVerifyFail;
  }
  const auto cls = parse_class(what);
  if (range_text.empty()) throw UsageError("verify " + what + " needs an order or range");
  const Range range = parse_range(range_text);
  std::vector<hz::VerdictReport> reports;
  for (std::size_t n = range.lo; n <= range.hi; ++n) {
    reports.push_back(cls == hz::GraphClass::kTree ? hz::verify_trees(n, opt.threads)
                                                   : hz::verify_unicyclic(n, opt.threads));
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  const auto threshold = hz::threshold_from(reports);
  if (opt.format == "json") {
    hz::Json j;
    hz::Json arr = hz::Json::array();
    for (const auto& r : reports) arr.push_back(hz::to_json(r));
    j["reports"] = arr;
    j["threshold"] = hz::to_json(threshold);
    j["ok"] = ok;
    emit(opt, dump(j));
  } else {
    std::string text;
    for (const auto& r : reports) text += hz::to_text(r) + "\n";
    text += hz::to_text(threshold);
    text += std::string("ok: ") + (ok ? "true" : "false") + "\n";
    emit(opt, text);
  }
  return ok ? kOk : kVerifyFail;
}

std::string graph_text(const hz::Graph& g) {
  return hz::encode_graph6(g) + " hm=" + std::to_string(hz::hyper_zagreb(g));
}

hz::Json graph_json(const hz::Graph& g) {
  return {{"graph6", hz::encode_graph6(g)}, {"hm", hz::hyper_zagreb(g)}};
}

int cmd_transform_reduce(const Options& opt, const std::string& path) {
  const auto chain = hz::reduce_to_single_attachment(load_graph(opt, path));
  if (opt.format == "json") {
    hz::Json a = hz::Json::array();
    for (const auto& s : chain) {
      auto j = graph_json(s.graph);
      j["step"] = hz::to_string(s.kind);
      a.push_back(j);
    }
    emit(opt, dump(a));
  } else {
    std::ostringstream out;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      out << "step." << i << ": " << hz::to_string(chain[i].kind) << ' '
          << graph_text(chain[i].graph) << '\n';
    }
    emit(opt, out.str());
  }
  return kOk;
}

int cmd_transform_merge(const Options& opt, const std::string& path, std::size_t source,
                        std::size_t target) {
  const hz::Graph g = load_graph(opt, path);
  const auto result = hz::merge_adjacent(g, source, target);
  if (const auto* why = std::get_if<hz::Inapplicable>(&result)) {
    emit(opt, opt.format == "json"
                  ? dump(hz::Json{{"applicable", false}, {"reason", why->reason}})
                  : "applicable: false\nreason: " + why->reason + "\n");
    return kOk;
  }
  const auto& out_graph = std::get<hz::Graph>(result);
  if (opt.format == "json") {
    emit(opt, dump(hz::Json{{"applicable", true}, {"before", graph_json(g)},
                            {"after", graph_json(out_graph)}}));
  } else {
    emit(opt, "applicable: true\nbefore: " + graph_text(g) + "\nafter: " + graph_text(out_graph) +
                  "\n");
  }
  return kOk;
}

int cmd_transform_coalesce(const Options& opt, const std::string& g_path, std::size_t u,
                           const std::string& h_path, std::size_t z) {
  const hz::Graph out_graph = hz::coalesce(load_graph(opt, g_path), static_cast<hz::Vertex>(u),
                                           load_graph(opt, h_path), static_cast<hz::Vertex>(z));
  emit(opt, opt.format == "json" ? dump(graph_json(out_graph)) : graph_text(out_graph) + "\n");
  return kOk;
}

int cmd_transform_shift(const Options& opt, const std::string& g_path, std::size_t u,
                        std::size_t w, const std::string& h_path, std::size_t z) {
  const auto r = hz::apply_shift({load_graph(opt, g_path), static_cast<hz::Vertex>(u),
                                  static_cast<hz::Vertex>(w), load_graph(opt, h_path),
                                  static_cast<hz::Vertex>(z)});
  const auto& c = r.conditions;
  if (opt.format == "json") {
    emit(opt, dump(hz::Json{{"at_u", graph_json(r.g1)},
                            {"at_w", graph_json(r.g2)},
                            {"degree_condition", c.degree},
                            {"neighbor_sum_condition", c.neighbor_sum},
                            {"degree_tight", c.degree_tight},
                            {"neighbor_sum_tight", c.neighbor_sum_tight}}));
  } else {
    std::ostringstream out;
    out << "at_u: " << graph_text(r.g1) << '\n'
        << "at_w: " << graph_text(r.g2) << '\n'
        << "degree_condition: " << (c.degree ? "true" : "false")
        << (c.degree_tight ? " (tight)" : "") << '\n'
        << "neighbor_sum_condition: " << (c.neighbor_sum ? "true" : "false")
        << (c.neighbor_sum_tight ? " (tight)" : "") << '\n';
    emit(opt, out.str());
  }
  return kOk;
}

int cmd_transform_join(const Options& opt, const std::string& a_path, std::size_t u,
                       const std::string& b_path, std::size_t v) {
  const auto r = hz::join_or_identify(load_graph(opt, a_path), static_cast<hz::Vertex>(u),
                                      load_graph(opt, b_path), static_cast<hz::Vertex>(v));
  if (opt.format == "json") {
    emit(opt, dump(hz::Json{{"applicable", r.applicable},
                            {"joined", graph_json(r.joined)},
                            {"identified", graph_json(r.identified)}}));
  } else {
    emit(opt, std::string("applicable: ") + (r.applicable ? "true" : "false") +
                  "\njoined: " + graph_text(r.joined) + "\nidentified: " +
                  graph_text(r.identified) + "\n");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyper-Zagreb index toolkit"};
  app.require_subcommand(1);
  Options opt;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", opt.out, "write output to this file");
    sub->add_option("--input-format", opt.input_format, "input graph format")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
    sub->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
  };

  std::string path, path2, key, cls, what, range, n_text;
  std::size_t n = 0, a = 0, b = 0;
  bool list = false;

  auto* compute = app.add_subcommand("compute", "HM, M1, M2 and F of a graph file");
  add_common(compute);
  compute->add_option("file", path, "edge list or graph6 file")->required();

  auto* family = app.add_subcommand("family", "build a catalog family member");
  add_common(family);
  family->add_flag("--list", list, "list catalog keys");
  family->add_option("key", key, "catalog key");
  family->add_option("n", n_text, "order");

  auto* enumerate = app.add_subcommand("enumerate", "write every class member as graph6");
  add_common(enumerate);
  enumerate->add_option("class", cls, "trees or unicyclic")->required();
  enumerate->add_option("n", n, "order")->required();

  auto* rank = app.add_subcommand("rank", "top-k by HM with full tie groups");
  add_common(rank);
  rank->add_option("class", cls, "trees or unicyclic")->required();
  rank->add_option("n", n, "order")->required();
  rank->add_option("-k", opt.k, "entries to keep");

  auto* verify = app.add_subcommand("verify", "check rankings, properties or closed forms");
  add_common(verify);
  verify->add_option("what", what, "trees, unicyclic, lemmas or closed-forms")
      ->required()
      ->check(CLI::IsMember({"trees", "unicyclic", "lemmas", "closed-forms"}));
  verify->add_option("range", range, "order n or inclusive range lo..hi");
  verify->add_option("--seed", opt.seed, "random seed");
  verify->add_option("--trials", opt.trials, "random trials")->check(CLI::PositiveNumber);

  auto* transform = app.add_subcommand("transform", "apply an HM-monotone rewrite");
  add_common(transform);
  transform->require_subcommand(1);
  transform->fallthrough();
  auto* reduce = transform->add_subcommand("reduce", "reduce a unicyclic graph to C_m(n-m)");
  reduce->add_option("file", path)->required();
  auto* merge = transform->add_subcommand("merge", "merge pendants of adjacent cycle positions");
  merge->add_option("file", path)->required();
  merge->add_option("source", a, "cycle position")->required();
  merge->add_option("target", b, "cycle position")->required();
  auto* coalesce = transform->add_subcommand("coalesce", "identify u of G with z of H");
  std::size_t c = 0;
  coalesce->add_option("G", path, "host graph file")->required();
  coalesce->add_option("u", a)->required();
  coalesce->add_option("H", path2, "attached graph file")->required();
  coalesce->add_option("z", b)->required();
  auto* shift = transform->add_subcommand("shift", "hang H at u and at w and compare");
  shift->add_option("G", path, "host graph file")->required();
  shift->add_option("u", a)->required();
  shift->add_option("w", c)->required();
  shift->add_option("H", path2, "pendant graph file")->required();
  shift->add_option("z", b)->required();
  auto* join = transform->add_subcommand("join", "join by an edge versus identify");
  join->add_option("g1", path)->required();
  join->add_option("u", a)->required();
  join->add_option("g2", path2)->required();
  join->add_option("v", b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*compute) return cmd_compute(opt, path);
    if (*family) {
      if (list) return cmd_family_list(opt);
      if (key.empty() || n_text.empty()) throw UsageError("family needs KEY N or --list");
      return cmd_family(opt, key, parse_count(n_text));
    }
    if (*enumerate) return cmd_enumerate(opt, cls, n);
    if (*rank) return cmd_rank(opt, cls, n);
    if (*verify) return cmd_verify(opt, what, range);
    if (*reduce) return cmd_transform_reduce(opt, path);
    if (*merge) return cmd_transform_merge(opt, path, a, b);
    if (*coalesce) return cmd_transform_coalesce(opt, path, a, path2, b);
    if (*shift) return cmd_transform_shift(opt, path, a, c, path2, b);
    if (*join) return cmd_transform_join(opt, path, a, path2, b);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const hz::FormatError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const hz::FamilyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == hz::FamilyErrorKind::kUnknownKey ? kUnknownKey : kDomain;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    // GraphError, domain_error, overflow_error and friends
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}
