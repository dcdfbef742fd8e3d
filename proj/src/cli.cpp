#include "kbg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kbg/decide.hpp"
#include "kbg/io.hpp"
#include "kbg/isomorphism.hpp"
#include "kbg/twins.hpp"
#include "kbg/verify.hpp"

namespace kbg {

namespace {

using nlohmann::json;

struct Record {
  int line = 0;
  Graph graph;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

std::vector<Record> load_records(const std::string& path, bool edge_list_format, std::istream& in) {
  std::string text = slurp(path, in);
  std::vector<Record> records;
  if (edge_list_format) {
    records.push_back(Record{1, parse_edge_list(text)});
    return records;
  }
  int line = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw(text.data() + pos, (nl == std::string::npos ? text.size() : nl) - pos);
    pos = (nl == std::string::npos) ? text.size() : nl + 1;
    ++line;
    while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ')) raw.remove_suffix(1);
    if (raw.empty()) continue;
    try {
      records.push_back(Record{line, parse_graph6(raw)});
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line);
    }
  }
  if (records.empty()) throw ParseError("no graph records in input", 1);
  return records;
}

std::string side_to_string(const VertexSet& s) {
  std::string out;
  for (int v = s.first(); v >= 0; v = s.next(v)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

json side_to_json(const VertexSet& s) { return json(s.members()); }

json behavior_to_json(const Behavior& b) {
  json j;
  if (b.verdict == Verdict::Diverges) {
    j["verdict"] = "diverges";
  } else {
    j["verdict"] = "converges";
    j["limit"] = (*b.limit == LimitGraph::K1) ? "K1" : "K3";
    j["steps"] = *b.steps;
  }
  return j;
}

std::string behavior_to_text(const Behavior& b) {
  if (b.verdict == Verdict::Diverges) return "diverges";
  std::ostringstream os;
  os << "converges limit=" << (*b.limit == LimitGraph::K1 ? "K1" : "K3") << " steps=" << *b.steps;
  return os.str();
}

int cmd_bicliques(const std::vector<Record>& records, bool as_json, std::ostream& out) {
  json all = json::array();
  for (const Record& r : records) {
    BicliqueFamily family = enumerate_all_bicliques(r.graph);
    if (as_json) {
      json item;
      item["line"] = r.line;
      item["graph6"] = to_graph6(r.graph);
      item["count"] = family.size();
      json list = json::array();
      for (const Biclique& b : family.items)
        list.push_back({{"a", side_to_json(b.side_a)}, {"b", side_to_json(b.side_b)}});
      item["bicliques"] = std::move(list);
      all.push_back(std::move(item));
    } else {
      if (records.size() > 1) out << "# line " << r.line << "\n";
      for (const Biclique& b : family.items)
        out << side_to_string(b.side_a) << " | " << side_to_string(b.side_b) << "\n";
      out << "total: " << family.size() << "\n";
    }
  }
  if (as_json) out << all.dump(2) << "\n";
  return 0;
}

int cmd_kb(const std::vector<Record>& records, bool as_json, std::ostream& out) {
  json all = json::array();
  for (const Record& r : records) {
    KBResult res = kb(r.graph);
    if (as_json) {
      json item;
      item["line"] = r.line;
      item["graph6"] = to_graph6(r.graph);
      item["kb_graph6"] = to_graph6(res.graph);
      json legend = json::array();
      for (const Biclique& b : res.family.items)
        legend.push_back({{"a", side_to_json(b.side_a)}, {"b", side_to_json(b.side_b)}});
      item["legend"] = std::move(legend);
      all.push_back(std::move(item));
    } else {
      if (records.size() > 1) out << "# line " << r.line << "\n";
      out << to_graph6(res.graph) << "\n";
      for (size_t i = 0; i < res.family.items.size(); ++i) {
        const Biclique& b = res.family.items[i];
        out << "  " << i << ": " << side_to_string(b.side_a) << " | " << side_to_string(b.side_b)
            << "\n";
      }
    }
  }
  if (as_json) out << all.dump(2) << "\n";
  return 0;
}

struct IterationRow {
  int step;
  int vertices;
  std::optional<long long> bicliques;
};

struct IterationRun {
  std::vector<IterationRow> rows;
  std::string outcome_kind;  // converged / diverges-budget / diverges-seven / undecided
  std::string outcome_text;
};

IterationRun run_iteration(const Graph& g, int max_steps, int vertex_budget, bool shortcut) {
  IterationRun run;
  Graph cur = g;
  run.rows.push_back({0, cur.vertex_count(), std::nullopt});
  if (cur.vertex_count() == 1) {
    run.outcome_kind = "converged";
    run.outcome_text = "converges limit=K1 steps=0";
    return run;
  }
  for (int step = 1; step <= max_steps; ++step) {
    EnumResult res = enumerate_bicliques(cur, EnumLimits{static_cast<long long>(vertex_budget), std::nullopt});
    if (std::holds_alternative<EnumAborted>(res)) {
      run.outcome_kind = "diverges-budget";
      run.outcome_text = "diverges (vertex budget " + std::to_string(vertex_budget) +
                         " exceeded at step " + std::to_string(step) + ")";
      return run;
    }
    BicliqueFamily family = std::get<BicliqueFamily>(std::move(res));
    run.rows.back().bicliques = static_cast<long long>(family.size());
    if (shortcut && family.size() >= 7) {
      run.outcome_kind = "diverges-seven";
      run.outcome_text = "diverges (" + std::to_string(family.size()) + " bicliques at step " +
                         std::to_string(step - 1) + ")";
      return run;
    }
    Graph next = intersection_graph(family);
    run.rows.push_back({step, next.vertex_count(), std::nullopt});
    bool fixpoint = next.vertex_count() == cur.vertex_count() &&
                    next.vertex_count() <= kIsoTierLimit && are_isomorphic(cur, next);
    if (fixpoint || next.vertex_count() == 1) {
      int at = fixpoint ? step - 1 : step;
      std::string limit = next.vertex_count() == 1 ? "K1" : "K3";
      run.outcome_kind = "converged";
      run.outcome_text = "converges limit=" + limit + " steps=" + std::to_string(at);
      return run;
    }
    cur = std::move(next);
  }
  run.outcome_kind = "undecided";
  run.outcome_text = "undecided after " + std::to_string(max_steps) + " steps";
  return run;
}

int cmd_iterate(const std::vector<Record>& records, int steps, int budget, bool no_shortcut,
                bool as_json, std::ostream& out) {
  json all = json::array();
  for (const Record& r : records) {
    if (budget < r.graph.vertex_count())
      throw std::runtime_error("budget below the input vertex count");
    IterationRun run = run_iteration(r.graph, steps, budget, !no_shortcut);
    if (as_json) {
      json item;
      item["line"] = r.line;
      item["graph6"] = to_graph6(r.graph);
      json rows = json::array();
      for (const IterationRow& row : run.rows) {
        json jr{{"step", row.step}, {"vertices", row.vertices}};
        if (row.bicliques) jr["bicliques"] = *row.bicliques;
        rows.push_back(std::move(jr));
      }
      item["steps"] = std::move(rows);
      item["outcome"] = {{"kind", run.outcome_kind}, {"text", run.outcome_text}};
      all.push_back(std::move(item));
    } else {
      if (records.size() > 1) out << "# line " << r.line << "\n";
      out << "step vertices bicliques\n";
      for (const IterationRow& row : run.rows) {
        out << row.step << " " << row.vertices << " ";
        if (row.bicliques)
          out << *row.bicliques;
        else
          out << "-";
        out << "\n";
      }
      out << run.outcome_text << "\n";
    }
  }
  if (as_json) out << all.dump(2) << "\n";
  return 0;
}

int cmd_decide(const std::vector<Record>& records, const std::string& method, bool as_json,
               std::ostream& out, std::ostream& err) {
  Method m = Method::Linear;
  if (method == "quartic") m = Method::Quartic;
  if (method == "oracle") m = Method::Oracle;
  json all = json::array();
  for (const Record& r : records) {
    Behavior b;
    try {
      b = decide(r.graph, m);
    } catch (const DisconnectedError&) {
      err << "line " << r.line << ": graph is disconnected\n";
      return 3;
    }
    if (as_json) {
      json item = behavior_to_json(b);
      item["line"] = r.line;
      item["graph6"] = to_graph6(r.graph);
      item["method"] = method;
      all.push_back(std::move(item));
    } else {
      if (records.size() > 1) out << "# line " << r.line << "\n";
      out << behavior_to_text(b) << "\n";
    }
  }
  if (as_json) out << all.dump(2) << "\n";
  return 0;
}

int cmd_twins(const std::vector<Record>& records, bool reduce, bool as_json, std::ostream& out) {
  json all = json::array();
  for (const Record& r : records) {
    TwinReduction tw = twin_reduce(r.graph);
    if (as_json) {
      json item;
      item["line"] = r.line;
      item["graph6"] = to_graph6(r.graph);
      item["classes"] = json(tw.classes);
      item["representatives"] = json(tw.representatives);
      item["reduced_graph6"] = to_graph6(tw.reduced);
      all.push_back(std::move(item));
    } else {
      if (records.size() > 1) out << "# line " << r.line << "\n";
      if (reduce) {
        out << to_graph6(tw.reduced) << "\n";
      } else {
        for (const std::vector<int>& cls : tw.classes) {
          out << "{";
          for (size_t i = 0; i < cls.size(); ++i) out << (i ? " " : "") << cls[i];
          out << "}";
        }
        out << "\n";
      }
    }
  }
  if (as_json) out << all.dump(2) << "\n";
  return 0;
}

json report_to_json(const RunReport& report) {
  json j;
  j["schema"] = report.schema;
  j["max_n"] = report.max_n;
  j["labeled_scanned"] = report.labeled_scanned;
  j["connected_scanned"] = report.connected_scanned;
  j["divergent"] = report.divergent;
  j["convergent"] = report.convergent;
  json per_n = json::array();
  for (const PerNStats& s : report.per_n)
    per_n.push_back({{"n", s.n},
                     {"labeled", s.labeled},
                     {"connected", s.connected},
                     {"divergent", s.divergent},
                     {"convergent", s.convergent}});
  j["per_n"] = std::move(per_n);
  json violations = json::array();
  for (const Violation& v : report.violations)
    violations.push_back(
        {{"n", v.n}, {"graph6", v.graph6}, {"property", v.property}, {"detail", v.detail}});
  j["violations"] = std::move(violations);
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

int cmd_verify(int max_n, int jobs, bool as_json, std::ostream& out) {
  RunReport report = exhaustive_verify(VerifyOptions{max_n, jobs});
  if (as_json) {
    out << report_to_json(report).dump(2) << "\n";
  } else {
    for (const PerNStats& s : report.per_n)
      out << "n=" << s.n << ": labeled " << s.labeled << ", connected " << s.connected
          << ", divergent " << s.divergent << ", convergent " << s.convergent << "\n";
    out << "graphs scanned: " << report.labeled_scanned << " (" << report.connected_scanned
        << " connected)\n";
    if (report.connected_scanned > 0)
      out << "divergent fraction: "
          << static_cast<double>(report.divergent) / static_cast<double>(report.connected_scanned)
          << "\n";
    for (const Violation& v : report.violations)
      out << "VIOLATION n=" << v.n << " graph6=" << v.graph6 << " property=" << v.property << ": "
          << v.detail << "\n";
    out << "violations: " << report.violations.size() << "\n";
    out << (report.passed() ? "PASS" : "FAIL") << "\n";
  }
  return report.passed() ? 0 : 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"biclique graph operator toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output");

  std::string input;
  bool edge_list_format = false;
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "graph6 file (one record per line), or - for stdin")
        ->required();
    cmd->add_flag("--edges", edge_list_format, "input is an edge list: \"n m\" then m \"u v\" lines");
  };

  CLI::App* c_bicliques = app.add_subcommand("bicliques", "list every maximal induced biclique");
  add_input(c_bicliques);

  CLI::App* c_kb = app.add_subcommand("kb", "emit KB(G) as graph6 with a biclique legend");
  add_input(c_kb);

  CLI::App* c_iterate = app.add_subcommand("iterate", "iterate KB and print the trajectory");
  add_input(c_iterate);
  int steps = 8, budget = 200;
  bool no_shortcut = false;
  c_iterate->add_option("--steps", steps, "maximum number of KB applications")
      ->check(CLI::NonNegativeNumber);
  c_iterate->add_option("--budget", budget, "vertex budget; growth past it means divergence")
      ->check(CLI::PositiveNumber);
  c_iterate->add_flag("--no-shortcut", no_shortcut,
                      "keep iterating instead of stopping at 7 bicliques");

  CLI::App* c_decide = app.add_subcommand("decide", "classify as convergent or divergent");
  add_input(c_decide);
  std::string method = "linear";
  c_decide->add_option("--method", method, "linear, quartic or oracle")
      ->check(CLI::IsMember({"linear", "quartic", "oracle"}));

  CLI::App* c_twins = app.add_subcommand("twins", "print the false-twin classes");
  add_input(c_twins);
  CLI::App* c_reduce = app.add_subcommand("reduce", "emit Tw(G) as graph6");
  add_input(c_reduce);

  CLI::App* c_verify = app.add_subcommand("verify", "exhaustive property sweep over small graphs");
  int max_n = 7, jobs = 0;
  c_verify->add_option("--max-n", max_n, "sweep all graphs with up to this many vertices (1..7)")
      ->check(CLI::Range(1, 7));
  c_verify->add_option("--jobs", jobs, "worker threads (default: hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (c_verify->parsed()) return cmd_verify(max_n, jobs, as_json, out);

    std::vector<Record> records = load_records(input, edge_list_format, in);
    if (c_bicliques->parsed()) return cmd_bicliques(records, as_json, out);
    if (c_kb->parsed()) return cmd_kb(records, as_json, out);
    if (c_iterate->parsed()) return cmd_iterate(records, steps, budget, no_shortcut, as_json, out);
    if (c_decide->parsed()) return cmd_decide(records, method, as_json, out, err);
    if (c_twins->parsed()) return cmd_twins(records, false, as_json, out);
    if (c_reduce->parsed()) return cmd_twins(records, true, as_json, out);
  } catch (const ParseError& e) {
    err << "line " << (e.line > 0 ? e.line : 1) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand handled\n";
  return 1;
}

}  // namespace kbg
