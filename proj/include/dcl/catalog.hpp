#pragma once

#include "dcl/types.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dcl {

/// Accounting mode for the degenerate members B_1 (a loop) and B_2 (a
/// doubled edge). Strict counts them formally; simple drops them.
enum class Mode { Strict, Simple };

std::string_view mode_name(Mode mode);
Mode parse_mode(std::string_view text);

struct ParamRequest {
  std::optional<i64> r;
  std::optional<i64> t;
  std::optional<i128> n; // defaults to n_t
  Mode mode = Mode::Strict;
  bool relaxed = false;
};

struct Params {
  std::optional<i64> r;
  i64 t = 0;
  i128 n = 0;
  i128 n_t = 0;
  Mode mode = Mode::Strict;
  bool relaxed = false;

  /// Edges of the tail path B_0. In simple mode the tail also absorbs the
  /// vertex that B_2 would have contributed, so the graph keeps n vertices.
  i128 tail_length() const { return n - n_t + (mode == Mode::Simple ? 1 : 0); }
};

/// 540 t^2 + (175811 t + 7989) / 2, exact. Throws InvariantBreach if the
/// half-integer part does not pair up (even t).
i128 n_t_closed_form(i64 t);

i64 instance_t(i64 r);

Params validate_params(const ParamRequest &request);

enum class SubgraphKind {
  TailPath,
  PlainCycle,
  ThreeCycleOdd,   // B_{21t+2j+1}
  ThreeCycleEven,  // B_{21t+2j}
  ThreeCycleShift, // B_{23t+2j+1}
  TenChord,        // B_{27t+i-57}
};

std::string_view kind_name(SubgraphKind kind);
bool is_chorded(SubgraphKind kind);

struct SubgraphDescriptor {
  i64 index = 0;
  SubgraphKind kind = SubgraphKind::PlainCycle;
  i128 length = 0; // tail or plain-cycle length; unused for chorded kinds
  i64 param = 0;   // family-local j (three-cycle kinds) or i (TenChord)

  /// B_1 and B_2: cycles of length 1 and 2, not realizable in a simple graph.
  bool formal() const { return kind == SubgraphKind::PlainCycle && length < 3; }

  friend bool operator==(const SubgraphDescriptor &, const SubgraphDescriptor &) = default;
};

/// One listed index set: first, first + step, ..., last.
struct IndexRange {
  std::string label;
  i64 first = 0;
  i64 last = 0;
  i64 step = 1;

  i64 size() const { return last < first ? 0 : (last - first) / step + 1; }
};

/// The fifteen index sets of the construction (eleven intervals, three
/// arithmetic families, and {26t}), in listing order.
std::vector<IndexRange> catalog_ranges(i64 t);

/// Largest index that any set can contain (37t + 799).
inline i64 max_catalog_index(i64 t) { return 37 * t + 799; }

/// Kind of B_index, or nullopt if the index is not listed. The tail length
/// is left at 0; see for_each_subgraph.
std::optional<SubgraphDescriptor> classify_index(i64 t, i64 index);

/// Visits every listed descriptor in ascending index order without storing
/// the catalog.
template <class Fn>
void for_each_subgraph(const Params &params, Fn &&fn) {
  const i64 last = max_catalog_index(params.t);
  for (i64 index = 0; index <= last; ++index) {
    auto d = classify_index(params.t, index);
    if (!d) continue;
    if (d->kind == SubgraphKind::TailPath) d->length = params.tail_length();
    fn(static_cast<const SubgraphDescriptor &>(*d));
  }
}

std::vector<SubgraphDescriptor> enumerate_subgraphs(const Params &params);

/// Inclusive family-local parameter range for a chorded kind.
std::pair<i64, i64> family_param_range(SubgraphKind kind, i64 t);

// Linear expressions c + a*t + b*param with integer coefficients.
struct Poly {
  i64 constant = 0;
  i64 t = 0;
  i64 param = 0;

  i128 eval(i64 t_value, i64 param_value) const {
    return static_cast<i128>(constant) + static_cast<i128>(t) * t_value +
           static_cast<i128>(param) * param_value;
  }

  friend Poly operator+(Poly a, Poly b) {
    return {a.constant + b.constant, a.t + b.t, a.param + b.param};
  }
  friend Poly operator-(Poly a, Poly b) {
    return {a.constant - b.constant, a.t - b.t, a.param - b.param};
  }
  friend bool operator==(const Poly &, const Poly &) = default;
  friend auto operator<=>(const Poly &, const Poly &) = default;
};

std::string to_string(const Poly &poly, char param_name);

/// A linear expression stored as twice its value, so (17t - 1)/2 and friends
/// stay exact until evaluation.
struct HalfPoly {
  Poly twice;

  i64 eval(i64 t_value, i64 param_value) const;
  /// The integer polynomial, if every doubled coefficient is even.
  std::optional<Poly> exact() const;

  friend HalfPoly operator+(HalfPoly a, HalfPoly b) { return {a.twice + b.twice}; }
  friend HalfPoly operator-(HalfPoly a, HalfPoly b) { return {a.twice - b.twice}; }
};

struct SymbolicChord {
  HalfPoly path;   // edges from hub to the cycle
  HalfPoly attach; // edges along the cycle from the hub to the landing vertex
};

/// Geometry of a chorded family as functions of (t, family parameter).
struct SymbolicFamily {
  SubgraphKind kind;
  char param_name;
  HalfPoly index;
  HalfPoly cycle;
  std::vector<SymbolicChord> chords;
};

const SymbolicFamily &family_geometry(SubgraphKind kind);

struct Chord {
  i64 path = 0;   // p_k
  i64 attach = 0; // a_k

  friend bool operator==(const Chord &, const Chord &) = default;
};

/// A cycle of `cycle_length` edges through the hub, plus chord paths from
/// the hub landing on the cycle.
struct ChordedCycleSpec {
  i64 cycle_length = 0;
  std::vector<Chord> chords;

  /// Throws InvariantBreach unless 0 < a_1 < ... < a_d < L and all p_k >= 2.
  void validate() const;

  friend bool operator==(const ChordedCycleSpec &, const ChordedCycleSpec &) = default;
};

ChordedCycleSpec chorded_spec(const SubgraphDescriptor &descriptor, i64 t);

} // namespace dcl
