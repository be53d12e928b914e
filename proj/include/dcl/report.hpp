#pragma once

#include "dcl/graph.hpp"
#include "dcl/ledger.hpp"
#include "dcl/oracle.hpp"

#include <json.hpp>

#include <iosfwd>

namespace dcl {

inline constexpr const char *kReportSchema = "dcl-report/1";

/// Exact integers are JSON numbers when they fit in 64 bits, decimal
/// strings otherwise.
nlohmann::json json_int(i128 value);

nlohmann::json to_json(const Params &params);
nlohmann::json to_json(const Totals &totals);
nlohmann::json to_json(const BoundReport &report);
nlohmann::json to_json(const CycleLedger &ledger, bool include_entries = true);
nlohmann::json to_json(const FidelityReport &report);
nlohmann::json to_json(const StreamSummary &summary);
nlohmann::json to_json(const CycleSpectrum &spectrum);
nlohmann::json to_json(const DistinctVerdict &verdict);
nlohmann::json to_json(const ExtremalResult &result);
nlohmann::json to_json(const Graph &graph);

/// Descriptor counts per kind plus the first and last index of every
/// listed index set.
nlohmann::json catalog_summary(const Params &params);

/// "length,source,legs" with one row per entry, canonical order.
void write_ledger_csv(const CycleLedger &ledger, std::ostream &out);

/// "vertices,edges,cycleRank,components,mode" and one row.
void write_totals_csv(const Totals &totals, std::ostream &out);

} // namespace dcl
