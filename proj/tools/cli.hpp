// Copyright 2026 The strongclique Authors
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

// Command implementations for the strongclique CLI. Kept apart from main()
// so tests can run commands against string streams.

#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "strongclique/strongclique.hpp"

namespace strongclique::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitUndecided = 2;

/// One graph read from the inputs, or the reason it could not be read.
struct InputGraph {
  std::string id;
  std::optional<Graph> graph;
  std::string error;
};

enum class Format { auto_detect, graph6, edgelist };

inline Format parse_format(const std::string& s) {
  if (s == "auto") return Format::auto_detect;
  if (s == "graph6" || s == "g6") return Format::graph6;
  if (s == "edgelist" || s == "edges") return Format::edgelist;
  throw InputError("unknown format \"" + s + "\"");
}

/// Edge lists open with an "n m" header; graph6 records never contain
/// whitespace.
inline Format detect_format(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    long x = 0;
    return tokens.size() == 2 && detail::parse_int(tokens[0], x) && detail::parse_int(tokens[1], x) ? Format::edgelist
                                                                                                      : Format::graph6;
  }
  return Format::graph6;
}

inline void read_graphs(const std::string& text, const std::string& name, Format format,
                        std::vector<InputGraph>& out) {
  if (format == Format::auto_detect) format = detect_format(text);
  if (format == Format::edgelist) {
    InputGraph item{name, std::nullopt, {}};
    try {
      item.graph = parse_edge_list(text);
    } catch (const InputError& e) {
      item.error = e.what();
    }
    out.push_back(std::move(item));
    return;
  }
  std::istringstream in(text);
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    const std::string_view record = detail::trim_line_end(line);
    if (record.empty() || record.front() == '#') continue;
    InputGraph item{name + ":" + std::to_string(line_no), std::nullopt, {}};
    try {
      item.graph = parse_graph6(record);
    } catch (const InputError& e) {
      item.error = e.what();
    }
    out.push_back(std::move(item));
  }
}

inline std::string slurp(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return slurp(in);
}

/// Reads every graph from `paths` ("-" or nothing means stdin).
inline std::vector<InputGraph> collect_inputs(const std::vector<std::string>& paths, Format format, std::istream& in) {
  std::vector<InputGraph> out;
  if (paths.empty()) {
    read_graphs(slurp(in), "stdin", format, out);
    return out;
  }
  for (const std::string& p : paths) {
    if (p == "-") {
      read_graphs(slurp(in), "stdin", format, out);
      continue;
    }
    try {
      read_graphs(read_file(p), p, format, out);
    } catch (const InputError& e) {
      out.push_back({p, std::nullopt, e.what()});
    }
  }
  return out;
}

/// A graph given on the command line: an existing file, a family name
/// understood by gen_named, or a graph6 record.
inline Graph resolve_graph(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    std::vector<InputGraph> items;
    read_graphs(read_file(spec), spec, Format::auto_detect, items);
    if (items.size() != 1) throw InputError(spec + " must hold exactly one graph");
    if (!items[0].graph) throw InputError(items[0].error);
    return *items[0].graph;
  }
  try {
    return gen_named(spec);
  } catch (const InputError&) {
  }
  try {
    return parse_graph6(spec);
  } catch (const InputError& e) {
    throw InputError("\"" + spec + "\" is not a file, a known graph name, or a graph6 record: " + e.what());
  }
}

inline std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

/// Runs `work(i)` for i in [0, count) on `threads` workers.
template <class Work>
void parallel_for(std::size_t count, int threads, Work work) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) work(i);
    });
  for (std::thread& th : pool) th.join();
}

struct AnalyzeOptions {
  std::vector<std::string> inputs;
  std::string format = "auto";
  std::string method = "auto";
  bool pretty = false;
  bool chi_prime = false;
  int threads = 1;
};

inline int cmd_analyze(const AnalyzeOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  ReportOptions ropt;
  ropt.method = parse_method(opt.method);
  ropt.chi_prime = opt.chi_prime;
  const std::vector<InputGraph> items = collect_inputs(opt.inputs, parse_format(opt.format), in);
  std::vector<std::string> lines(items.size()), errors(items.size());
  std::vector<char> undecided(items.size(), 0);
  parallel_for(items.size(), opt.threads, [&](std::size_t i) {
    const InputGraph& item = items[i];
    if (!item.graph) {
      errors[i] = item.error;
      return;
    }
    try {
      const AnalysisReport r = analyze(*item.graph, item.id, ropt);
      undecided[i] = !r.decided();
      lines[i] = dump(to_json(r), opt.pretty);
    } catch (const InputError& e) {
      errors[i] = e.what();
    }
  });
  int code = kExitOk;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!errors[i].empty()) {
      err << "error: " << items[i].id << ": " << errors[i] << '\n';
      code = kExitInputError;
      continue;
    }
    out << lines[i] << '\n';
    if (undecided[i] && code == kExitOk) code = kExitUndecided;
  }
  return code;
}

inline Json verdict_json(const LocalizabilityVerdict& v) {
  Json j;
  j["localizable"] = v.localizable;
  j["certificate"] = v.certificate ? to_json(*v.certificate) : Json(nullptr);
  if (v.refutation) {
    Json r = detail::refutation_json(*v.refutation);
    r.erase("name");
    r.erase("kind");
    j["refutation"] = r;
  } else {
    j["refutation"] = nullptr;
  }
  return j;
}

struct RecognizeOptions {
  std::string graph_class;
  std::vector<std::string> inputs;
  std::string format = "auto";
  bool pretty = false;
};

inline int cmd_recognize(const RecognizeOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const Method method = parse_method(opt.graph_class);
  if (method == Method::oracle || method == Method::auto_select)
    throw InputError("--class must be triangle-free, c4-free, cubic or line");
  int code = kExitOk;
  for (const InputGraph& item : collect_inputs(opt.inputs, parse_format(opt.format), in)) {
    if (!item.graph) {
      err << "error: " << item.id << ": " << item.error << '\n';
      code = kExitInputError;
      continue;
    }
    Json j{{"input_id", item.id}, {"class", opt.graph_class}};
    try {
      const Json v = verdict_json(detail::run_method(method, *item.graph, OracleConfig::from_env()));
      j.update(v);
    } catch (const InputError& e) {
      j["error"] = "precondition";
      j["violation"] = e.what();
      code = kExitInputError;
    }
    out << dump(j, opt.pretty) << '\n';
  }
  return code;
}

/// Property checks behind `generate --verify`. Each failed check is an
/// error; notes go to `err`.
class Verifier {
 public:
  explicit Verifier(std::ostream& err) : err_(err) {}

  void check(bool ok, const std::string& what) {
    err_ << (ok ? "verified: " : "FAILED: ") << what << '\n';
    if (!ok) failed_ = true;
  }
  void note(const std::string& what) { err_ << "note: " << what << '\n'; }
  bool failed() const { return failed_; }

 private:
  std::ostream& err_;
  bool failed_ = false;
};

struct GenerateOptions {
  std::string family;
  std::vector<std::string> args;
  std::string format = "graph6";
  bool verify = false;
  bool lenient = false;
};

inline int int_arg(const std::vector<std::string>& args, std::size_t i, const std::string& name) {
  if (i >= args.size()) throw InputError("missing argument " + name);
  long v = 0;
  if (!detail::parse_int(args[i], v) || v < 0 || v > 1'000'000)
    throw InputError(name + " must be a non-negative integer, got \"" + args[i] + "\"");
  return static_cast<int>(v);
}

inline const std::string& str_arg(const std::vector<std::string>& args, std::size_t i, const std::string& name) {
  if (i >= args.size()) throw InputError("missing argument " + name);
  return args[i];
}

inline int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err) {
  const OracleConfig cfg = OracleConfig::from_env();
  const std::string& fam = opt.family;
  const auto& a = opt.args;
  Verifier vf(err);
  auto under_cap = [&](const Graph& g) {
    if (g.order() <= cfg.max_vertices) return true;
    vf.note("order " + std::to_string(g.order()) + " exceeds the oracle cap; oracle checks skipped");
    return false;
  };

  if (fam == "sat-gadget") {
    const CnfFormula f = parse_dimacs(read_file(str_arg(a, 0, "FILE.cnf")));
    const SatGraph sg = gen_sat_graph(f, !opt.lenient);
    if (opt.verify && under_cap(sg.graph)) {
      const bool sat = is_satisfiable(f);
      vf.check(is_well_covered(sg.graph, cfg).holds == !sat,
               std::string("formula is ") + (sat ? "satisfiable and the graph is not" : "unsatisfiable and the graph is") +
                   " well-covered");
      bool strong = true;
      for (int i = 1; i <= f.num_vars; ++i) {
        const Vertex x = SatGraph::literal_vertex(static_cast<int>(f.clauses.size()), i);
        strong = strong && is_strong_clique(sg.graph, VertexSet(sg.graph.order(), {x, x + 1}), cfg).strong;
      }
      vf.check(strong, "every literal pair {x, ~x} is a strong clique");
      vf.check(is_weakly_chordal(sg.graph), "graph is weakly chordal");
    }
    if (vf.failed()) return kExitInputError;
    out << "# sat gadget: " << f.clauses.size() << " clauses, " << f.num_vars << " variables\n";
    for (std::size_t v = 0; v < sg.labels.size(); ++v) out << "# " << v << ' ' << sg.labels[v] << '\n';
    out << write_edge_list(sg.graph);
    return kExitOk;
  }

  Graph g;
  if (fam == "Fn") {
    const int n = int_arg(a, 0, "N");
    g = gen_Fn(n);
    if (opt.verify) {
      vf.check(regular_degree(g) == 3 && is_connected(g), "connected and cubic");
      vf.check(is_localizable_cubic(g).localizable, "cubic recognizer accepts");
      if (under_cap(g)) {
        bool strong = true;
        for (const auto& t : triangles(g))
          strong = strong && is_strong_clique(g, VertexSet(g.order(), {t[0], t[1], t[2]}), cfg).strong;
        vf.check(strong && static_cast<int>(triangles(g).size()) * 3 == g.order(),
                 "every vertex lies in exactly one triangle, and every triangle is a strong clique");
        vf.check(is_localizable_oracle(g, cfg).localizable, "oracle confirms localizable");
      }
    }
  } else if (fam == "corona-counterexample") {
    g = gen_corona_counterexample(int_arg(a, 0, "LEN"));
    if (opt.verify && under_cap(g)) {
      vf.check(is_localizable_oracle(g, cfg).localizable, "localizable");
      vf.check(is_co_well_covered(g, cfg).holds, "co-well-covered");
      vf.check(!find_strong_independent_set(g, cfg), "no strong independent set");
    }
  } else if (fam == "zaare") {
    const Graph base = resolve_graph(str_arg(a, 0, "GRAPH"));
    g = gen_zaare_counterexample(base);
    if (opt.verify && under_cap(g)) {
      vf.check(is_localizable_oracle(g, cfg).localizable, "localizable");
      vf.check(is_co_well_covered(g, cfg).holds, "co-well-covered");
      const bool three = chromatic_number(base) <= 3;
      vf.check(is_localizable_oracle(complement(g), cfg).localizable == three,
               std::string("complement is ") + (three ? "" : "not ") + "localizable, matching chi(G) " +
                   (three ? "<= 3" : "> 3"));
    }
  } else if (fam == "kcolor") {
    const Graph base = resolve_graph(str_arg(a, 0, "GRAPH"));
    const int k = int_arg(a, 1, "K");
    g = gen_kcolor_gadget(base, k, cfg);
    if (opt.verify && under_cap(g)) {
      bool sizes = true;
      for (const VertexSet& c : maximal_cliques(g, cfg)) sizes = sizes && c.size() == k;
      vf.check(sizes, "every maximal clique has size k");
      const Graph co = complement(g);
      const bool k_localizable =
          is_localizable_oracle(co, cfg).localizable && independent_domination_number(co, cfg) == k;
      vf.check(k_localizable == (chromatic_number(base) <= k), "complement is k-localizable iff G is k-colorable");
    }
  } else if (fam == "complement-line") {
    const Graph h = resolve_graph(str_arg(a, 0, "GRAPH"));
    g = gen_complement_line(h);
    if (opt.verify && under_cap(g)) {
      const auto k = regular_degree(h);
      if (k && is_triangle_free(h)) {
        const bool class_one = chromatic_index(h) == *k;
        vf.check(is_localizable_oracle(g, cfg).localizable == class_one,
                 std::string("localizable iff chi'(H) = k (chi'(H) ") + (class_one ? "=" : ">") + " k)");
      } else {
        vf.note("H is not triangle-free and regular; the chromatic-index criterion does not apply");
      }
    }
  } else if (fam == "named") {
    g = gen_named(str_arg(a, 0, "NAME"));
  } else {
    throw InputError("unknown family \"" + fam +
                     "\"; expected Fn, corona-counterexample, zaare, sat-gadget, kcolor, complement-line or named");
  }
  if (vf.failed()) return kExitInputError;
  out << (parse_format(opt.format) == Format::edgelist ? write_edge_list(g) : write_graph6(g) + "\n");
  return kExitOk;
}

inline CliquePartition parse_partition(const std::string& text, int n) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed partition JSON: ") + e.what());
  }
  if (!j.is_array()) throw InputError("partition must be a JSON array of vertex arrays");
  CliquePartition p;
  for (const Json& part : j) {
    if (!part.is_array()) throw InputError("partition must be a JSON array of vertex arrays");
    VertexSet s(n);
    for (const Json& v : part) {
      if (!v.is_number_integer() || v.get<long>() < 0 || v.get<long>() >= n)
        throw InputError("partition member " + v.dump() + " is not a vertex of the graph");
      const Vertex x = v.get<Vertex>();
      if (s.contains(x)) throw InputError("not a partition: vertex " + std::to_string(x) + " repeated in a part");
      s.insert(x);
    }
    p.parts.push_back(std::move(s));
  }
  return p;
}

inline int cmd_verify_partition(const std::string& graph, const std::string& partition, bool pretty,
                                std::ostream& out) {
  const Graph g = resolve_graph(graph);
  const std::string text = std::filesystem::is_regular_file(partition) ? read_file(partition) : partition;
  const CliquePartition p = parse_partition(text, g.order());
  const PartitionCheck check = verify_strong_partition(g, p);
  Json parts = Json::array();
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    Json entry{{"part", to_json(p.parts[i])}, {"strong", check.parts[i].strong}};
    if (check.parts[i].witness) entry["witness"] = to_json(*check.parts[i].witness)["value"];
    parts.push_back(std::move(entry));
  }
  out << dump(Json{{"valid", check.valid}, {"parts", parts}}, pretty) << '\n';
  return kExitOk;
}

inline int cmd_convert(const std::string& from, const std::string& to, const std::vector<std::string>& inputs,
                       std::istream& in, std::ostream& out, std::ostream& err) {
  const Format target = parse_format(to);
  if (target == Format::auto_detect) throw InputError("--to must be graph6 or edgelist");
  int code = kExitOk;
  bool first = true;
  for (const InputGraph& item : collect_inputs(inputs, parse_format(from), in)) {
    if (!item.graph) {
      err << "error: " << item.id << ": " << item.error << '\n';
      code = kExitInputError;
      continue;
    }
    if (target == Format::edgelist) {
      if (!first) out << '\n';
      out << write_edge_list(*item.graph);
    } else {
      out << write_graph6(*item.graph) << '\n';
    }
    first = false;
  }
  return code;
}

/// Entry point shared by main() and the tests.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Well-coveredness and localizability of graphs"};
  app.require_subcommand(1);
  app.footer(
      "Graphs are read as graph6 records (one per line) or as an edge list with an \"n m\" header.\n"
      "c4-free always means free of induced 4-cycles.\n"
      "STRONGCLIQUE_ORACLE_CAP sets the largest order handled by the exact oracles (default 24).\n"
      "Exit codes: 0 all decided, 2 some graph undecided, 1 input error.");

  AnalyzeOptions an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report invariants and localizability, one JSON line per graph");
  analyze_cmd->add_option("inputs", an.inputs, "Input files, '-' for stdin (default)");
  analyze_cmd->add_option("--format", an.format, "auto, graph6 or edgelist")->capture_default_str();
  analyze_cmd->add_option("--method", an.method, "auto, oracle, triangle-free, c4-free, cubic or line")
      ->capture_default_str();
  analyze_cmd->add_flag("--pretty", an.pretty, "Indent the JSON");
  analyze_cmd->add_flag("--chi-prime", an.chi_prime, "Also compute the chromatic index");
  analyze_cmd->add_option("--threads", an.threads, "Worker threads; output order is unchanged")
      ->check(CLI::Range(1, 256));

  RecognizeOptions rc;
  auto* recognize_cmd = app.add_subcommand("recognize", "Run one polynomial recognizer");
  recognize_cmd->add_option("--class", rc.graph_class, "triangle-free, c4-free, cubic or line")->required();
  recognize_cmd->add_option("inputs", rc.inputs, "Input files, '-' for stdin (default)");
  recognize_cmd->add_option("--format", rc.format, "auto, graph6 or edgelist")->capture_default_str();
  recognize_cmd->add_flag("--pretty", rc.pretty, "Indent the JSON");

  GenerateOptions gn;
  auto* generate_cmd = app.add_subcommand("generate", "Emit a graph family or gadget");
  generate_cmd->add_option("family", gn.family,
                           "Fn N | corona-counterexample LEN | zaare GRAPH | sat-gadget FILE.cnf | kcolor GRAPH K | "
                           "complement-line GRAPH | named NAME")
      ->required();
  generate_cmd->add_option("args", gn.args, "Family parameters");
  generate_cmd->add_option("--format", gn.format, "graph6 or edgelist")->capture_default_str();
  generate_cmd->add_flag("--verify", gn.verify, "Check the family's properties before emitting");
  generate_cmd->add_flag("--lenient", gn.lenient, "sat-gadget: allow clauses with complementary literals");

  std::string vp_graph, vp_partition;
  bool vp_pretty = false;
  auto* verify_cmd = app.add_subcommand("verify-partition", "Check that a clique partition consists of strong cliques");
  verify_cmd->add_option("graph", vp_graph, "Graph file, graph name, or graph6 record")->required();
  verify_cmd->add_option("partition", vp_partition, "JSON file or literal, e.g. [[0,1],[2]]")->required();
  verify_cmd->add_flag("--pretty", vp_pretty, "Indent the JSON");

  std::string cv_from = "auto", cv_to;
  std::vector<std::string> cv_inputs;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between graph6 and edge lists");
  convert_cmd->add_option("--from", cv_from, "auto, graph6 or edgelist")->capture_default_str();
  convert_cmd->add_option("--to", cv_to, "graph6 or edgelist")->required();
  convert_cmd->add_option("inputs", cv_inputs, "Input files, '-' for stdin (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(an, in, out, err);
    if (*recognize_cmd) return cmd_recognize(rc, in, out, err);
    if (*generate_cmd) return cmd_generate(gn, out, err);
    if (*verify_cmd) return cmd_verify_partition(vp_graph, vp_partition, vp_pretty, out);
    if (*convert_cmd) return cmd_convert(cv_from, cv_to, cv_inputs, in, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const OracleScaleError& e) {
    err << "error: " << e.what() << "; raise STRONGCLIQUE_ORACLE_CAP or use a polynomial recognizer\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace strongclique::cli
