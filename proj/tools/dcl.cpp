#include "dcl/graph.hpp"
#include "dcl/ledger.hpp"
#include "dcl/oracle.hpp"
#include "dcl/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using nlohmann::json;
using namespace dcl;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::optional<i64> r;
  std::optional<i64> t;
  std::string n;
  std::string mode = "strict";
  bool relaxed = false;
  std::string format = "json";
  std::string output;
  std::string ledger_path;
  std::optional<i64> inject;
  std::optional<i64> subgraph;
  bool full = false;
  bool hash_only = false;
  std::string input;
  std::string fixture;
  std::optional<int> fn;
  u64 cap = kDefaultCycleCap;
  u64 vertex_cap = kDefaultVertexCap;
  u64 budget = kDefaultSearchBudget;
};

bool usage_error(ErrorCode code) {
  switch (code) {
  case ErrorCode::SinkFailure:
  case ErrorCode::InvariantBreach:
  case ErrorCode::ArithmeticOverflow:
    return false;
  default:
    return true;
  }
}

Params params_of(const RunConfig &c) {
  ParamRequest req;
  req.r = c.r;
  req.t = c.t;
  if (!c.n.empty()) req.n = parse_i128(c.n);
  req.mode = parse_mode(c.mode);
  req.relaxed = c.relaxed;
  return validate_params(req);
}

json envelope(std::string_view command) { return {{"schema", kReportSchema}, {"command", command}}; }

// Writes to --output when given, stdout otherwise.
void emit(const RunConfig &c, const std::function<void(std::ostream &)> &write) {
  if (c.output.empty()) {
    write(std::cout);
    std::cout.flush();
    if (!std::cout) throw Error(ErrorCode::SinkFailure, "cannot write to standard output");
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw Error(ErrorCode::SinkFailure, "cannot open " + c.output);
  write(out);
  out.flush();
  if (!out) throw Error(ErrorCode::SinkFailure, "write failed: " + c.output);
}

void emit_json(const RunConfig &c, const json &j) {
  emit(c, [&](std::ostream &out) { out << j.dump(2) << '\n'; });
}

int cmd_catalog(const RunConfig &c) {
  auto p = params_of(c);
  auto summary = catalog_summary(p);
  if (c.format == "csv") {
    emit(c, [&](std::ostream &out) {
      out << "set,first,last,step,size\n";
      for (const auto &r : summary["ranges"])
        out << r["set"].get<std::string>() << ',' << r["first"] << ',' << r["last"] << ',' << r["step"] << ','
            << r["size"] << '\n';
    });
    return kOk;
  }
  auto j = envelope("catalog");
  j.update(summary);
  emit_json(c, j);
  return kOk;
}

json claim(std::string_view name, i128 claimed, i128 computed) {
  return {{"name", name}, {"claimed", json_int(claimed)}, {"computed", json_int(computed)}, {"holds", claimed == computed}};
}

int cmd_verify(const RunConfig &c) {
  auto p = params_of(c);
  auto entries = ledger_entries(p);
  if (c.inject) entries.push_back({*c.inject, -1, {}});
  auto ledger = CycleLedger::from_entries(std::move(entries));

  auto totals = count_totals(p);
  auto summed = count_totals_by_descriptor(p);
  auto bound = bound_report(p);
  const i128 formal = p.mode == Mode::Strict ? 0 : 2;

  json claims = json::array();
  claims.push_back(claim("edgesMinusVertices", i128{36} * p.t - formal, totals.excess()));
  claims.push_back(claim("vertices", p.n, totals.vertices));
  claims.push_back(claim("cycleRank", independent_cycle_total(p), totals.cycle_rank));
  claims.push_back(claim("edgesBySummation", totals.edges, summed.edges));
  claims.push_back(claim("verticesBySummation", totals.vertices, summed.vertices));
  claims.push_back(claim("n_t", bound.n_t_closed_form, bound.n_t_summed));
  claims.push_back(claim("lowerBound", p.n + i128{36} * p.t - formal, totals.edges));

  bool ok = ledger.distinct();
  for (const auto &cl : claims) ok = ok && cl["holds"].get<bool>();

  json fidelity = json::array();
  for (auto kind : {SubgraphKind::ThreeCycleOdd, SubgraphKind::ThreeCycleEven, SubgraphKind::ThreeCycleShift,
                    SubgraphKind::TenChord})
    fidelity.push_back(to_json(table_fidelity(kind)));

  if (!c.ledger_path.empty()) {
    std::ofstream out(c.ledger_path, std::ios::binary);
    if (!out) throw Error(ErrorCode::SinkFailure, "cannot open " + c.ledger_path);
    write_ledger_csv(ledger, out);
    if (!out.flush()) throw Error(ErrorCode::SinkFailure, "write failed: " + c.ledger_path);
  }

  if (c.format == "csv") {
    emit(c, [&](std::ostream &out) { write_totals_csv(totals, out); });
  } else {
    auto j = envelope("verify");
    j["params"] = to_json(p);
    j["verified"] = ok;
    j["ledger"] = to_json(ledger, false);
    j["totals"] = to_json(totals);
    j["checks"] = claims;
    j["bound"] = to_json(bound);
    j["tableFidelity"] = fidelity;
    emit_json(c, j);
  }
  if (!ok) {
    std::cerr << "verification failed";
    if (!ledger.distinct()) std::cerr << ": " << ledger.collisions.size() << " length collision(s)";
    std::cerr << '\n';
  }
  return ok ? kOk : kFailed;
}

std::string default_export_path(const Params &p, const std::string &scope) {
  const char *dir = std::getenv("DCL_OUTPUT_DIR");
  std::filesystem::path base = dir && *dir ? dir : ".";
  std::string name = "dcl-t" + std::to_string(p.t) + "-" + std::string(mode_name(p.mode)) + "-" + scope + ".edgelist";
  return (base / name).string();
}

int cmd_export(const RunConfig &c) {
  if (c.full == c.subgraph.has_value()) throw Error(ErrorCode::BadInput, "export needs exactly one of --full or --subgraph");
  auto p = params_of(c);
  std::optional<SubgraphDescriptor> descriptor;
  if (c.subgraph) {
    if (*c.subgraph == 0) {
      descriptor = SubgraphDescriptor{0, SubgraphKind::TailPath, static_cast<i64>(p.tail_length()), 0};
    } else {
      descriptor = classify_index(p.t, *c.subgraph);
      if (!descriptor) throw Error(ErrorCode::BadInput, "no subgraph with index " + std::to_string(*c.subgraph));
    }
  }

  std::string path;
  std::ofstream file;
  if (!c.hash_only) {
    path = c.output.empty() ? default_export_path(p, c.full ? "full" : "subgraph" + std::to_string(*c.subgraph))
                            : c.output;
    file.open(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::SinkFailure, "cannot open " + path);
  }
  TextEdgeSink sink(c.hash_only ? nullptr : &file);
  auto summary = descriptor ? stream_subgraph(p, *descriptor, sink) : stream_edges(p, sink);

  auto j = envelope("export");
  j["params"] = to_json(p);
  j["file"] = c.hash_only ? json(nullptr) : json(path);
  j["summary"] = to_json(summary);
  if (descriptor) {
    auto contrib = contribution(*descriptor, p.t, p.mode);
    j["expected"] = {{"vertices", json_int(contrib.vertices + 1)}, {"edges", json_int(contrib.edges)},
                     {"independentCycles", contrib.independent_cycles}};
  } else {
    j["expected"] = to_json(count_totals(p));
  }
  std::cout << j.dump(2) << '\n';
  return kOk;
}

Graph fixture(const std::string &name) {
  Graph g;
  auto add = [&](std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    for (auto [a, b] : edges) g.add_edge(a, b);
  };
  if (name == "triangle") {
    g.vertex_count = 3;
    add({{0, 1}, {1, 2}, {0, 2}});
  } else if (name == "k4") {
    g.vertex_count = 4;
    add({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  } else if (name == "triangle_c4") {
    g.vertex_count = 6;
    add({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {0, 5}});
  } else {
    throw Error(ErrorCode::BadInput, "unknown fixture: " + name);
  }
  return g;
}

int cmd_oracle(const RunConfig &c) {
  int sources = (c.fn ? 1 : 0) + (c.input.empty() ? 0 : 1) + (c.fixture.empty() ? 0 : 1);
  if (sources != 1) throw Error(ErrorCode::BadInput, "oracle needs exactly one of --fn, --input, --fixture");

  if (c.fn) {
    auto result = max_edges_distinct_cycles(*c.fn, c.budget);
    auto j = envelope("oracle");
    j["extremal"] = to_json(result);
    if (c.format == "csv") {
      emit(c, [&](std::ostream &out) { out << "n,maxEdges,exhaustive\n" << result.n << ',' << result.max_edges << ',' << (result.exhaustive ? "true" : "false") << '\n'; });
    } else {
      emit_json(c, j);
    }
    if (!result.exhaustive) std::cerr << "search budget exhausted; result is a lower bound\n";
    return result.exhaustive ? kOk : kFailed;
  }

  Graph g;
  json source;
  if (!c.input.empty()) {
    std::ifstream in(c.input, std::ios::binary);
    if (!in) throw Error(ErrorCode::BadInput, "cannot open " + c.input);
    auto file = read_edge_list(in, c.vertex_cap);
    g = std::move(file.graph);
    source = {{"input", c.input}, {"header", file.header}};
  } else {
    g = fixture(c.fixture);
    source = {{"fixture", c.fixture}};
  }
  if (!g.is_simple()) throw Error(ErrorCode::BadInput, "input graph has loops or parallel edges");

  auto spectrum = enumerate_cycles(g, c.cap);
  auto verdict = has_distinct_cycle_lengths(g, c.cap);
  if (c.format == "csv") {
    emit(c, [&](std::ostream &out) {
      out << "length,count\n";
      std::map<u64, u64> histogram;
      for (auto len : spectrum.lengths) ++histogram[len];
      for (auto [len, count] : histogram) out << len << ',' << count << '\n';
    });
  } else {
    auto j = envelope("oracle");
    j["source"] = source;
    j["graph"] = {{"vertices", g.vertex_count}, {"edges", g.edges.size()}};
    j["spectrum"] = to_json(spectrum);
    j["verdict"] = to_json(verdict);
    emit_json(c, j);
  }
  if (spectrum.truncated) std::cerr << "cycle cap reached; spectrum truncated\n";
  return verdict.kind == DistinctVerdict::Kind::Yes ? kOk : kFailed;
}

void add_params(CLI::App *cmd, RunConfig &c) {
  auto *r = cmd->add_option("--r", c.r, "Instance index; t = 1260r + 169");
  auto *t = cmd->add_option("--t", c.t, "Odd construction parameter");
  r->excludes(t);
  cmd->add_option("--n", c.n, "Vertex budget (default n_t)");
  cmd->add_option("--mode", c.mode, "Accounting mode")->check(CLI::IsMember({"strict", "simple"}));
  cmd->add_flag("--relaxed", c.relaxed, "Accept any odd t >= 801 whose index sets stay disjoint");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Distinct-cycle-length construction auditor"};
  app.require_subcommand(1);
  RunConfig c;

  auto *catalog = app.add_subcommand("catalog", "Descriptor counts per kind and index-set bounds");
  add_params(catalog, c);
  catalog->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
  catalog->add_option("--output", c.output, "Report file (default stdout)");

  auto *verify = app.add_subcommand("verify", "Ledger distinctness, totals, bounds and table fidelity");
  add_params(verify, c);
  verify->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--output", c.output, "Report file (default stdout)");
  verify->add_option("--ledger", c.ledger_path, "Also write the full ledger as CSV");
  verify->add_option("--inject", c.inject, "Add a synthetic ledger entry of this length (source -1)");

  auto *exporter = app.add_subcommand("export", "Stream an edge list");
  add_params(exporter, c);
  exporter->add_option("--format", c.format)->check(CLI::IsMember({"edgelist"}));
  exporter->add_option("--output", c.output, "Edge-list file (default $DCL_OUTPUT_DIR or .)");
  exporter->add_option("--subgraph", c.subgraph, "Export one subgraph by index");
  exporter->add_flag("--full", c.full, "Export the whole graph");
  exporter->add_flag("--hash-only", c.hash_only, "Count and checksum without writing a file");

  auto *oracle = app.add_subcommand("oracle", "Cycle spectrum of a graph, or exhaustive f(n)");
  oracle->add_option("--input", c.input, "Edge-list file");
  oracle->add_option("--fixture", c.fixture)->check(CLI::IsMember({"triangle", "k4", "triangle_c4"}));
  oracle->add_option("--fn", c.fn, "Exhaustive f(n) for 3 <= n <= 8");
  oracle->add_option("--cap", c.cap, "Maximum cycles to enumerate");
  oracle->add_option("--vertex-cap", c.vertex_cap, "Maximum vertices read from --input");
  oracle->add_option("--budget", c.budget, "Candidate checks for --fn");
  oracle->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
  oracle->add_option("--output", c.output, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(c);
    if (verify->parsed()) return cmd_verify(c);
    if (exporter->parsed()) return cmd_export(c);
    return cmd_oracle(c);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage_error(e.code()) ? kUsage : kFailed;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
}
