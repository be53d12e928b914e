#include "dcl/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace dcl {

namespace {

// Shared by the numeric and symbolic routes: the legs and value of every
// cycle formed by two hub-legs.
template <class V, class ChordRange>
void combine_legs(const V &cycle, const ChordRange &chords, auto &&emit) {
  using K = HubLegs::Kind;
  emit(HubLegs{K::FullCycle, 0, 0}, cycle);
  int k = 0;
  for (const auto &[path, attach] : chords) {
    ++k;
    emit(HubLegs{K::Ascending, k, 0}, path + attach);
    emit(HubLegs{K::Descending, k, 0}, path + cycle - attach);
  }
  for (std::size_t a = 0; a < chords.size(); ++a)
    for (std::size_t b = a + 1; b < chords.size(); ++b) {
      const auto &[pa, aa] = chords[a];
      const auto &[pb, ab] = chords[b];
      emit(HubLegs{K::ChordPair, static_cast<int>(a + 1), static_cast<int>(b + 1)}, pa + pb + ab - aa);
    }
}

// Sum of i over [first, last].
i128 series(i128 first, i128 last) {
  if (last < first) return 0;
  return checked_mul(first + last, last - first + 1) / 2;
}

struct Block {
  i128 vertices = 0;
  i128 edges = 0;
};

Block plain_block(i128 first, i128 last) {
  if (last < first) return {};
  i128 count = last - first + 1;
  i128 edges = series(first, last);
  return {checked_sub(edges, count), edges};
}

Block family_block(SubgraphKind kind, i64 t) {
  auto [lo, hi] = family_param_range(kind, t);
  // Per-member vertex and edge counts are linear in the parameter, so the
  // family total is count * (value(lo) + value(hi)) / 2.
  auto at = [&](i64 param) {
    auto c = contribution(SubgraphDescriptor{0, kind, 0, param}, t, Mode::Strict);
    return Block{c.vertices, c.edges};
  };
  Block a = at(lo), b = at(hi);
  i128 count = hi - lo + 1;
  return {checked_mul(count, a.vertices + b.vertices) / 2, checked_mul(count, a.edges + b.edges) / 2};
}

Poly tp(i64 t_coef, i64 param_coef, i64 constant) { return Poly{constant, t_coef, param_coef}; }

std::vector<Poly> ten_chord_table() {
  // Transcribed row by row, as (t, i, constant).
  static constexpr i64 rows[66][3] = {
      {27, 1, -57},  {28, 1, 7},    {29, 1, 210},  {30, 1, 0},    {31, 1, 1},    {32, 1, 0},
      {33, 1, 0},    {34, 1, -5},   {35, 1, 3},    {36, 1, 3},    {37, 1, 742},  {38, 2, -51},
      {38, 2, 216},  {40, 2, 209},  {40, 2, 0},    {42, 2, 0},    {42, 2, -1},   {44, 2, -6},
      {44, 2, -3},   {46, 2, 5},    {46, 2, 744},  {48, 3, 158},  {49, 3, 215},  {50, 3, 209},
      {51, 3, -1},   {52, 3, -1},   {53, 3, -7},   {54, 3, -4},   {55, 3, -1},   {56, 3, 746},
      {59, 4, 157},  {59, 4, 215},  {61, 4, 208},  {61, 4, -2},   {63, 4, -7},   {63, 4, -5},
      {65, 4, -2},   {65, 4, 740},  {69, 5, 157},  {70, 5, 214},  {71, 5, 207},  {72, 5, -8},
      {73, 5, -5},   {74, 5, -3},   {75, 5, 739},  {80, 6, 156},  {80, 6, 213},  {82, 6, 201},
      {82, 6, -6},   {84, 6, -3},   {84, 6, 738},  {90, 7, 155},  {91, 7, 207},  {92, 7, 203},
      {93, 7, -4},   {94, 7, 738},  {101, 8, 149}, {101, 8, 209}, {103, 8, 205}, {103, 8, 737},
      {111, 9, 151}, {112, 9, 211}, {113, 9, 946}, {122, 10, 153}, {122, 10, 952}, {132, 11, 894},
  };
  std::vector<Poly> out;
  for (const auto &r : rows) out.push_back(tp(r[0], r[1], r[2]));
  return out;
}

} // namespace

std::string to_string(const HubLegs &legs) {
  using K = HubLegs::Kind;
  switch (legs.kind) {
  case K::FullCycle: return "cycle";
  case K::Ascending: return "chord" + std::to_string(legs.first) + "+asc";
  case K::Descending: return "chord" + std::to_string(legs.first) + "+desc";
  case K::ChordPair: return "chord" + std::to_string(legs.first) + "+chord" + std::to_string(legs.second);
  }
  return "?";
}

i64 chord_cycle_count(i64 chords) {
  if (chords < 0) throw Error(ErrorCode::BadInput, "negative chord count");
  return (chords + 2) * (chords + 1) / 2;
}

std::vector<SpecCycle> cycles_of_spec(const ChordedCycleSpec &spec) {
  spec.validate();
  std::vector<std::pair<i64, i64>> chords;
  for (const auto &c : spec.chords) chords.emplace_back(c.path, c.attach);
  std::vector<SpecCycle> out;
  out.reserve(static_cast<std::size_t>(chord_cycle_count(static_cast<i64>(chords.size()))));
  combine_legs(spec.cycle_length, chords, [&](HubLegs legs, i64 length) { out.push_back({length, legs}); });
  return out;
}

CycleLedger CycleLedger::from_entries(std::vector<LedgerEntry> entries) {
  CycleLedger ledger;
  std::sort(entries.begin(), entries.end());
  for (std::size_t a = 0; a < entries.size();) {
    std::size_t b = a + 1;
    while (b < entries.size() && entries[b].length == entries[a].length) ++b;
    if (b - a > 1)
      ledger.collisions.push_back({entries[a].length, {entries.begin() + a, entries.begin() + b}});
    a = b;
  }
  ledger.entries = std::move(entries);
  return ledger;
}

std::vector<LedgerEntry> ledger_entries(const SubgraphDescriptor &d, i64 t, Mode mode) {
  switch (d.kind) {
  case SubgraphKind::TailPath: return {};
  case SubgraphKind::PlainCycle:
    if (d.formal() && mode == Mode::Simple) return {};
    return {LedgerEntry{static_cast<i64>(d.length), d.index, {}}};
  default: {
    std::vector<LedgerEntry> out;
    for (const auto &c : cycles_of_spec(chorded_spec(d, t))) out.push_back({c.length, d.index, c.legs});
    return out;
  }
  }
}

std::vector<LedgerEntry> ledger_entries(const Params &params) {
  std::vector<LedgerEntry> out;
  out.reserve(static_cast<std::size_t>(93 * params.t));
  for_each_subgraph(params, [&](const SubgraphDescriptor &d) {
    auto part = ledger_entries(d, params.t, params.mode);
    out.insert(out.end(), part.begin(), part.end());
  });
  return out;
}

CycleLedger build_ledger(const Params &params) { return CycleLedger::from_entries(ledger_entries(params)); }

Contribution contribution(const SubgraphDescriptor &d, i64 t, Mode mode) {
  switch (d.kind) {
  case SubgraphKind::TailPath:
    if (d.length < 0) throw Error(ErrorCode::NotMaterializable, "negative tail length");
    return {d.length, d.length, 0};
  case SubgraphKind::PlainCycle:
    if (d.formal() && mode == Mode::Simple) return {};
    return {d.length - 1, d.length, 1};
  default: {
    auto spec = chorded_spec(d, t);
    Contribution c{spec.cycle_length - 1, spec.cycle_length, 1 + static_cast<i64>(spec.chords.size())};
    for (const auto &chord : spec.chords) {
      c.vertices += chord.path - 1;
      c.edges += chord.path;
    }
    return c;
  }
  }
}

Totals count_totals(const Params &params) {
  const i128 t = params.t;
  Totals totals;
  totals.mode = params.mode;
  totals.vertices = 1; // hub
  auto add = [&](Block b) {
    totals.vertices = checked_add(totals.vertices, b.vertices);
    totals.edges = checked_add(totals.edges, b.edges);
  };

  add(plain_block(params.mode == Mode::Strict ? 1 : 3, 21 * t - 1));
  for (i128 single : {22 * t - 1, 24 * t, 26 * t, 27 * t}) add(plain_block(single, single));
  add(plain_block(28 * t - 798, 28 * t + 64));
  static constexpr i64 kIntervals[9][2] = {
      {29, -734}, {30, -531}, {31, -741}, {32, -740}, {33, -741},
      {34, -741}, {35, -746}, {36, -738}, {37, -738},
  };
  static constexpr i64 kUpper[9] = {267, 57, 58, 57, 57, 52, 60, 60, 799};
  for (int k = 0; k < 9; ++k)
    add(plain_block(kIntervals[k][0] * t + kIntervals[k][1], kIntervals[k][0] * t + kUpper[k]));
  for (auto kind : {SubgraphKind::ThreeCycleOdd, SubgraphKind::ThreeCycleEven,
                    SubgraphKind::ThreeCycleShift, SubgraphKind::TenChord})
    add(family_block(kind, params.t));
  add(Block{params.tail_length(), params.tail_length()});

  totals.components = 1;
  totals.cycle_rank = totals.edges - totals.vertices + totals.components;
  return totals;
}

Totals count_totals_by_descriptor(const Params &params) {
  Totals totals;
  totals.mode = params.mode;
  totals.vertices = 1;
  for_each_subgraph(params, [&](const SubgraphDescriptor &d) {
    auto c = contribution(d, params.t, params.mode);
    totals.vertices = checked_add(totals.vertices, c.vertices);
    totals.edges = checked_add(totals.edges, c.edges);
  });
  totals.components = 1;
  totals.cycle_rank = totals.edges - totals.vertices + totals.components;
  return totals;
}

i128 independent_cycle_total(const Params &params) {
  const i128 t = params.t;
  i128 listed = 0;
  for (const auto &range : catalog_ranges(params.t)) listed += range.size();
  i128 odd = t, even = (t - 1) / 2, shift = (t - 1) / 2, ten = t - 799;
  i128 plain = listed - 1 - odd - even - shift - ten;
  if (params.mode == Mode::Simple) plain -= 2;
  return plain + 2 * (odd + even + shift) + 11 * ten;
}

i128 shi_bound(i128 n) {
  if (n < 3) throw Error(ErrorCode::OutOfRange, "Shi bound needs n >= 3");
  i128 root = isqrt(checked_sub(checked_mul(8, n), 23));
  return n + (root + 1) / 2;
}

BoundReport bound_report(const Params &params) {
  BoundReport report;
  report.t = params.t;
  report.n = params.n;
  report.mode = params.mode;
  const i128 gain = 36 * static_cast<i128>(params.t) - (params.mode == Mode::Simple ? 2 : 0);
  report.lower_bound = checked_add(params.n, gain);
  const long double root_n = std::sqrt(static_cast<long double>(params.n));
  report.ratio = static_cast<double>(static_cast<long double>(gain) / root_n);
  report.shi_bound = shi_bound(params.n);
  report.boros_upper_estimate = static_cast<double>(static_cast<long double>(params.n) + 1.98L * root_n);
  report.limit_constant = std::sqrt(2.0 + 2.0 / 5.0);
  report.n_t_closed_form = params.n_t;
  Params boundary = params;
  boundary.mode = Mode::Strict;
  boundary.n = params.n_t;
  report.n_t_summed = count_totals(boundary).vertices;
  return report;
}

std::vector<SymbolicCycle> symbolic_cycles(SubgraphKind kind) {
  const SymbolicFamily &family = family_geometry(kind);
  std::vector<std::pair<HalfPoly, HalfPoly>> chords;
  for (const auto &c : family.chords) chords.emplace_back(c.path, c.attach);
  std::vector<SymbolicCycle> out;
  combine_legs(family.cycle, chords, [&](HubLegs legs, HalfPoly value) {
    auto exact = value.exact();
    if (!exact)
      throw Error(ErrorCode::InvariantBreach,
                  std::string(kind_name(kind)) + " cycle " + to_string(legs) + " has a half-integer coefficient");
    out.push_back({*exact, legs});
  });
  return out;
}

const std::vector<Poly> &claimed_lengths(SubgraphKind kind) {
  static const std::vector<Poly> odd = {tp(21, 2, 1), tp(23, 2, 0), tp(25, 2, 0)};
  static const std::vector<Poly> even = {tp(21, 2, 0), tp(22, 2, 1), tp(25, 2, 1)};
  static const std::vector<Poly> shift = {tp(23, 2, 1), tp(24, 2, 2), tp(26, 2, 2)};
  static const std::vector<Poly> ten = ten_chord_table();
  switch (kind) {
  case SubgraphKind::ThreeCycleOdd: return odd;
  case SubgraphKind::ThreeCycleEven: return even;
  case SubgraphKind::ThreeCycleShift: return shift;
  case SubgraphKind::TenChord: return ten;
  default: throw Error(ErrorCode::NotChorded, std::string(kind_name(kind)) + " has no cycle table");
  }
}

FidelityReport compare_table(SubgraphKind kind, const std::vector<Poly> &claimed) {
  FidelityReport report{kind, family_geometry(kind).param_name, {}, 0};
  auto derived = symbolic_cycles(kind);
  std::vector<bool> used(derived.size(), false);
  std::vector<std::size_t> unmatched_rows;

  report.rows.resize(claimed.size());
  for (std::size_t r = 0; r < claimed.size(); ++r) {
    report.rows[r].row = r;
    report.rows[r].claimed = claimed[r];
    auto it = std::find_if(derived.begin(), derived.end(), [&](const SymbolicCycle &c) {
      return !used[&c - derived.data()] && c.length == claimed[r];
    });
    if (it == derived.end()) {
      unmatched_rows.push_back(r);
      continue;
    }
    used[it - derived.begin()] = true;
    report.rows[r].derived = it->length;
    report.rows[r].legs = it->legs;
    report.rows[r].match = true;
    ++report.matches;
  }

  std::vector<std::size_t> leftovers;
  for (std::size_t k = 0; k < derived.size(); ++k)
    if (!used[k]) leftovers.push_back(k);
  std::sort(leftovers.begin(), leftovers.end(),
            [&](std::size_t a, std::size_t b) { return derived[a].length < derived[b].length; });
  std::sort(unmatched_rows.begin(), unmatched_rows.end(),
            [&](std::size_t a, std::size_t b) { return claimed[a] < claimed[b]; });
  for (std::size_t k = 0; k < unmatched_rows.size() && k < leftovers.size(); ++k) {
    auto &row = report.rows[unmatched_rows[k]];
    row.derived = derived[leftovers[k]].length;
    row.legs = derived[leftovers[k]].legs;
  }
  return report;
}

FidelityReport table_fidelity(SubgraphKind kind) { return compare_table(kind, claimed_lengths(kind)); }

} // namespace dcl
