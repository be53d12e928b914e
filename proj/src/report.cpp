#include "dcl/report.hpp"

#include <cstdio>
#include <map>
#include <ostream>

namespace dcl {

using nlohmann::json;

namespace {

json poly_json(const Poly &poly, char param_name) {
  return {{"constant", poly.constant}, {"t", poly.t}, {std::string(1, param_name), poly.param},
          {"text", to_string(poly, param_name)}};
}

std::string hex64(u64 value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

} // namespace

json json_int(i128 value) {
  if (fits_i64(value)) return static_cast<i64>(value);
  return to_string(value);
}

json to_json(const Params &params) {
  json j{{"t", params.t},
         {"n", json_int(params.n)},
         {"n_t", json_int(params.n_t)},
         {"tail_length", json_int(params.tail_length())},
         {"mode", mode_name(params.mode)},
         {"relaxed", params.relaxed}};
  j["r"] = params.r ? json(*params.r) : json(nullptr);
  return j;
}

json to_json(const Totals &totals) {
  return {{"vertices", json_int(totals.vertices)},
          {"edges", json_int(totals.edges)},
          {"cycleRank", json_int(totals.cycle_rank)},
          {"components", json_int(totals.components)},
          {"mode", mode_name(totals.mode)},
          {"edgesMinusVertices", json_int(totals.excess())}};
}

json to_json(const BoundReport &r) {
  return {{"t", r.t},
          {"n", json_int(r.n)},
          {"mode", mode_name(r.mode)},
          {"lowerBound", json_int(r.lower_bound)},
          {"ratio", r.ratio},
          {"shiBound", json_int(r.shi_bound)},
          {"borosUpperCoefficient", r.boros_upper_coefficient},
          {"borosUpperEstimate", r.boros_upper_estimate},
          {"limitConstant", r.limit_constant},
          {"n_t", {{"closedForm", json_int(r.n_t_closed_form)}, {"summed", json_int(r.n_t_summed)},
                   {"offset", json_int(r.n_t_summed - r.n_t_closed_form)}}}};
}

json to_json(const CycleLedger &ledger, bool include_entries) {
  json j;
  j["verdict"] = ledger.distinct() ? "Distinct" : "Collisions";
  j["entryCount"] = ledger.entries.size();
  json collisions = json::array();
  for (const auto &c : ledger.collisions) {
    json sources = json::array(), legs = json::array();
    for (const auto &m : c.members) {
      sources.push_back(m.source);
      legs.push_back(to_string(m.legs));
    }
    collisions.push_back({{"length", c.length}, {"sources", sources}, {"legs", legs}});
  }
  j["collisions"] = collisions;
  if (include_entries) {
    json entries = json::array();
    for (const auto &e : ledger.entries)
      entries.push_back({{"length", e.length}, {"source", e.source}, {"legs", to_string(e.legs)}});
    j["entries"] = entries;
  }
  return j;
}

json to_json(const FidelityReport &report) {
  json rows = json::array();
  json mismatches = json::array();
  for (const auto &row : report.rows) {
    json r{{"row", row.row + 1},
           {"claimed", poly_json(row.claimed, report.param_name)},
           {"derived", poly_json(row.derived, report.param_name)},
           {"legs", to_string(row.legs)},
           {"match", row.match}};
    if (!row.match) mismatches.push_back(r);
    rows.push_back(std::move(r));
  }
  return {{"family", kind_name(report.kind)},
          {"rows", report.rows.size()},
          {"matches", report.matches},
          {"mismatches", mismatches},
          {"table", rows}};
}

json to_json(const StreamSummary &s) {
  return {{"scope", s.scope},
          {"vertices", s.vertices},
          {"edges", s.edges},
          {"formalVertices", s.formal_vertices},
          {"formalEdges", s.formal_edges},
          {"totalVertices", s.total_vertices()},
          {"totalEdges", s.total_edges()},
          {"checksum", hex64(s.checksum)}};
}

json to_json(const CycleSpectrum &s) {
  std::map<u64, u64> histogram;
  for (u64 len : s.lengths) ++histogram[len];
  json hist = json::array();
  for (auto [len, count] : histogram) hist.push_back({{"length", len}, {"count", count}});
  return {{"cycleCount", s.cycle_count}, {"truncated", s.truncated}, {"lengths", s.lengths}, {"histogram", hist}};
}

json to_json(const DistinctVerdict &v) {
  json j{{"distinct", verdict_name(v.kind)}, {"cyclesSeen", v.cycles_seen}};
  if (v.witness) j["witness"] = {v.witness->first, v.witness->second};
  return j;
}

json to_json(const Graph &g) {
  json edges = json::array();
  for (const auto &e : g.edges) edges.push_back({e.u, e.v});
  return {{"vertices", g.vertex_count}, {"edges", edges}};
}

json to_json(const ExtremalResult &r) {
  return {{"n", r.n},
          {"maxEdges", r.max_edges},
          {"exhaustive", r.exhaustive},
          {"witness", to_json(r.witness)},
          {"classesPerEdgeCount", r.classes_per_edge_count},
          {"candidatesChecked", r.candidates_checked}};
}

json catalog_summary(const Params &params) {
  std::map<std::string, u64> counts;
  u64 total = 0, formal = 0;
  for_each_subgraph(params, [&](const SubgraphDescriptor &d) {
    ++counts[std::string(kind_name(d.kind))];
    ++total;
    if (d.formal()) ++formal;
  });
  json ranges = json::array();
  for (const auto &r : catalog_ranges(params.t))
    ranges.push_back({{"set", r.label}, {"first", r.first}, {"last", r.last}, {"step", r.step}, {"size", r.size()}});
  json per_kind = json::object();
  for (const auto &[kind, count] : counts) per_kind[kind] = count;
  return {{"params", to_json(params)},
          {"descriptors", total},
          {"expectedDescriptors", 24 * params.t + 7993},
          {"formalDescriptors", formal},
          {"perKind", per_kind},
          {"ranges", ranges}};
}

void write_ledger_csv(const CycleLedger &ledger, std::ostream &out) {
  out << "length,source,legs\n";
  for (const auto &e : ledger.entries) out << e.length << ',' << e.source << ',' << to_string(e.legs) << '\n';
}

void write_totals_csv(const Totals &totals, std::ostream &out) {
  out << "vertices,edges,cycleRank,components,mode\n"
      << to_string(totals.vertices) << ',' << to_string(totals.edges) << ',' << to_string(totals.cycle_rank) << ','
      << to_string(totals.components) << ',' << mode_name(totals.mode) << '\n';
}

} // namespace dcl
