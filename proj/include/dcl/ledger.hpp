#pragma once

#include "dcl/catalog.hpp"

#include <string>
#include <vector>

namespace dcl {

/// The two hub edges a cycle uses. Every cycle of a chorded subgraph passes
/// through the hub, so it is named by the pair of hub-legs it leaves and
/// returns on. Chord numbers are 1-based.
struct HubLegs {
  enum class Kind { FullCycle, Ascending, Descending, ChordPair };
  Kind kind = Kind::FullCycle;
  int first = 0;  // chord number (Ascending, Descending, ChordPair)
  int second = 0; // second chord number (ChordPair)

  friend bool operator==(const HubLegs &, const HubLegs &) = default;
  friend auto operator<=>(const HubLegs &, const HubLegs &) = default;
};

std::string to_string(const HubLegs &legs);

struct SpecCycle {
  i64 length = 0;
  HubLegs legs;
};

/// (d+2 choose 2): cycles in a cycle carrying d chord paths from one hub.
i64 chord_cycle_count(i64 chords);

/// Every cycle of the chorded subgraph, duplicates kept. Order: full cycle,
/// then per chord its ascending and descending cycle, then chord pairs.
std::vector<SpecCycle> cycles_of_spec(const ChordedCycleSpec &spec);

struct LedgerEntry {
  i64 length = 0;
  i64 source = 0; // subgraph index
  HubLegs legs;

  friend bool operator==(const LedgerEntry &, const LedgerEntry &) = default;
  friend auto operator<=>(const LedgerEntry &, const LedgerEntry &) = default;
};

struct Collision {
  i64 length = 0;
  std::vector<LedgerEntry> members; // two or more
};

struct CycleLedger {
  std::vector<LedgerEntry> entries; // ascending length, ties by source
  std::vector<Collision> collisions;

  bool distinct() const { return collisions.empty(); }

  /// Sorts into canonical order and records every collision.
  static CycleLedger from_entries(std::vector<LedgerEntry> entries);
};

/// Ledger contributions of a single descriptor (empty for the tail, and for
/// B_1/B_2 in simple mode).
std::vector<LedgerEntry> ledger_entries(const SubgraphDescriptor &descriptor, i64 t, Mode mode);

std::vector<LedgerEntry> ledger_entries(const Params &params);

CycleLedger build_ledger(const Params &params);

struct Contribution {
  i128 vertices = 0; // excluding the shared hub
  i128 edges = 0;
  i64 independent_cycles = 0;
};

/// Vertices and edges one descriptor adds on top of the hub.
Contribution contribution(const SubgraphDescriptor &descriptor, i64 t, Mode mode);

struct Totals {
  i128 vertices = 0;
  i128 edges = 0;
  i128 cycle_rank = 0;
  i128 components = 0;
  Mode mode = Mode::Strict;

  i128 excess() const { return edges - vertices; }

  friend bool operator==(const Totals &, const Totals &) = default;
};

/// Exact totals from closed-form sums over each index block; cheap for any
/// r up to 10^6.
Totals count_totals(const Params &params);

/// Same totals by visiting every descriptor. O(t); used to cross-check.
Totals count_totals_by_descriptor(const Params &params);

/// Sum of per-subgraph cycle ranks from family sizes alone: 1 per plain
/// cycle, 2 per single-chord subgraph, 11 per TenChord.
i128 independent_cycle_total(const Params &params);

/// n + floor((sqrt(8n - 23) + 1) / 2), computed with an integer square root.
i128 shi_bound(i128 n);

struct BoundReport {
  i64 t = 0;
  i128 n = 0;
  Mode mode = Mode::Strict;
  i128 lower_bound = 0; // n + 36t (strict) or n + 36t - 2 (simple)
  double ratio = 0;     // (lower_bound - n) / sqrt(n)
  i128 shi_bound = 0;
  double boros_upper_coefficient = 1.98;
  double boros_upper_estimate = 0; // n + 1.98 sqrt(n), leading term only
  double limit_constant = 0;       // sqrt(2 + 2/5)
  i128 n_t_closed_form = 0;
  i128 n_t_summed = 0; // strict-mode vertex total at tail length 0
};

BoundReport bound_report(const Params &params);

/// A cycle length of a family as an integer polynomial in (t, parameter).
struct SymbolicCycle {
  Poly length;
  HubLegs legs;
};

std::vector<SymbolicCycle> symbolic_cycles(SubgraphKind kind);

/// Cycle lengths as listed in the construction's own tables.
const std::vector<Poly> &claimed_lengths(SubgraphKind kind);

struct FidelityRow {
  std::size_t row = 0; // position in the transcribed table
  Poly claimed;
  Poly derived;
  HubLegs legs;
  bool match = false;
};

struct FidelityReport {
  SubgraphKind kind;
  char param_name = 'i';
  std::vector<FidelityRow> rows;
  std::size_t matches = 0;

  std::size_t mismatches() const { return rows.size() - matches; }
};

/// Compares derived lengths with the transcribed table. Rows are paired by
/// exact match first; leftovers pair in sorted order so every mismatch shows
/// both polynomials.
FidelityReport table_fidelity(SubgraphKind kind);

FidelityReport compare_table(SubgraphKind kind, const std::vector<Poly> &claimed);

} // namespace dcl
