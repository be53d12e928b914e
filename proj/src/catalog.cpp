#include "dcl/catalog.hpp"

#include <algorithm>
#include <numeric>

namespace dcl {

namespace {

// Caps t so that every index, cycle length and attachment fits in i64.
constexpr i64 kMaxT = 1'000'000'000'000'000;

constexpr HalfPoly half(i64 constant, i64 t, i64 param) { return {{constant, t, param}}; }

SymbolicFamily make_ten_chord() {
  // Chord path lengths are (P t + 1)/2; attachments (A_t t + A_c)/2 + k i.
  constexpr i64 P[10] = {17, 19, 19, 21, 21, 23, 23, 25, 25, 27};
  constexpr i64 At[10] = {37, 57, 77, 97, 117, 137, 157, 177, 197, 217};
  constexpr i64 Ac[10] = {-115, -103, 315, 313, 313, 311, 309, 297, 301, 305};
  SymbolicFamily f{SubgraphKind::TenChord, 'i', half(-114, 54, 2), half(1788, 264, 22), {}};
  for (int k = 0; k < 10; ++k)
    f.chords.push_back({half(1, P[k], 0), half(Ac[k], At[k], 2 * (k + 1))});
  return f;
}

bool sets_intersect(const IndexRange &a, const IndexRange &b) {
  if (a.size() == 0 || b.size() == 0) return false;
  i64 lo = std::max(a.first, b.first);
  i64 hi = std::min(a.last, b.last);
  if (lo > hi) return false;
  // First member of a at or above lo, then scan one period of the lcm.
  i64 x = a.first + ((lo - a.first + a.step - 1) / a.step) * a.step;
  i64 period = std::lcm(a.step, b.step);
  for (i64 k = 0; k < period / a.step && x <= hi; ++k, x += a.step)
    if ((x - b.first) % b.step == 0) return true;
  return false;
}

} // namespace

std::string_view mode_name(Mode mode) { return mode == Mode::Strict ? "strict" : "simple"; }

Mode parse_mode(std::string_view text) {
  if (text == "strict") return Mode::Strict;
  if (text == "simple") return Mode::Simple;
  throw Error(ErrorCode::BadInput, "unknown mode '" + std::string(text) + "'");
}

i128 n_t_closed_form(i64 t) {
  i128 odd_part = checked_add(checked_mul(175811, t), 7989);
  if (odd_part % 2 != 0)
    throw Error(ErrorCode::InvariantBreach, "n_t is not an integer for t = " + std::to_string(t));
  return checked_add(checked_mul(540, checked_mul(t, t)), odd_part / 2);
}

i64 instance_t(i64 r) {
  if (r < 1) throw Error(ErrorCode::NotPaperForm, "r must be >= 1, got " + std::to_string(r));
  i128 t = checked_add(checked_mul(1260, r), 169);
  if (t > kMaxT) throw Error(ErrorCode::ArithmeticOverflow, "r too large");
  return static_cast<i64>(t);
}

std::vector<IndexRange> catalog_ranges(i64 t) {
  return {
      {"0..21t-1", 0, 21 * t - 1, 1},
      {"27t..28t+64", 27 * t, 28 * t + 64, 1},
      {"29t-734..29t+267", 29 * t - 734, 29 * t + 267, 1},
      {"30t-531..30t+57", 30 * t - 531, 30 * t + 57, 1},
      {"31t-741..31t+58", 31 * t - 741, 31 * t + 58, 1},
      {"32t-740..32t+57", 32 * t - 740, 32 * t + 57, 1},
      {"33t-741..33t+57", 33 * t - 741, 33 * t + 57, 1},
      {"34t-741..34t+52", 34 * t - 741, 34 * t + 52, 1},
      {"35t-746..35t+60", 35 * t - 746, 35 * t + 60, 1},
      {"36t-738..36t+60", 36 * t - 738, 36 * t + 60, 1},
      {"37t-738..37t+799", 37 * t - 738, 37 * t + 799, 1},
      {"21t+2j+1 (0<=j<=t-1)", 21 * t + 1, 23 * t - 1, 2},
      {"21t+2j (0<=j<=(t-1)/2)", 21 * t, 22 * t - 1, 2},
      {"23t+2j+1 (0<=j<=(t-1)/2)", 23 * t + 1, 24 * t, 2},
      {"26t", 26 * t, 26 * t, 1},
  };
}

Params validate_params(const ParamRequest &request) {
  if (request.r.has_value() == request.t.has_value())
    throw Error(ErrorCode::BadInput, "exactly one of r and t must be given");

  Params p;
  p.r = request.r;
  p.mode = request.mode;
  p.relaxed = request.relaxed;
  p.t = request.r ? instance_t(*request.r) : *request.t;
  const i64 t = p.t;

  if (t > kMaxT) throw Error(ErrorCode::ArithmeticOverflow, "t too large");
  if (t % 2 == 0) throw Error(ErrorCode::EvenT, "t = " + std::to_string(t) + " is even");
  if (t <= 0) throw Error(ErrorCode::TooSmallT, "t must be positive");

  if (!p.relaxed) {
    if (t % 1260 != 169 || t < 1429)
      throw Error(ErrorCode::NotPaperForm,
                  "t = " + std::to_string(t) + " is not of the form 1260r+169 with r >= 1");
    if (!p.r) p.r = (t - 169) / 1260;
  } else if (t < 801) {
    throw Error(ErrorCode::TooSmallT, "relaxed mode needs t >= 801, got " + std::to_string(t));
  }

  auto ranges = catalog_ranges(t);
  for (const auto &range : ranges)
    if (range.size() <= 0 || range.first < 0)
      throw Error(ErrorCode::TooSmallT, "index set " + range.label + " is empty");
  for (std::size_t a = 0; a < ranges.size(); ++a)
    for (std::size_t b = a + 1; b < ranges.size(); ++b)
      if (sets_intersect(ranges[a], ranges[b]))
        throw Error(ErrorCode::TooSmallT,
                    "index sets " + ranges[a].label + " and " + ranges[b].label + " overlap");

  for (auto kind : {SubgraphKind::ThreeCycleOdd, SubgraphKind::ThreeCycleEven,
                    SubgraphKind::ThreeCycleShift, SubgraphKind::TenChord}) {
    auto [lo, hi] = family_param_range(kind, t);
    if (lo > hi) throw Error(ErrorCode::TooSmallT, std::string(kind_name(kind)) + " family is empty");
    // Every geometric quantity is linear in the parameter, so the endpoints
    // decide the whole family.
    for (i64 param : {lo, hi}) {
      SubgraphDescriptor d{0, kind, 0, param};
      chorded_spec(d, t);
    }
  }

  p.n_t = n_t_closed_form(t);
  p.n = request.n.value_or(p.n_t);
  if (p.n < p.n_t)
    throw Error(ErrorCode::BudgetTooSmall,
                "n = " + to_string(p.n) + " is below n_t = " + to_string(p.n_t));
  return p;
}

std::string_view kind_name(SubgraphKind kind) {
  switch (kind) {
  case SubgraphKind::TailPath: return "TailPath";
  case SubgraphKind::PlainCycle: return "PlainCycle";
  case SubgraphKind::ThreeCycleOdd: return "ThreeCycleOdd";
  case SubgraphKind::ThreeCycleEven: return "ThreeCycleEven";
  case SubgraphKind::ThreeCycleShift: return "ThreeCycleShift";
  case SubgraphKind::TenChord: return "TenChord";
  }
  return "Unknown";
}

bool is_chorded(SubgraphKind kind) {
  return kind != SubgraphKind::TailPath && kind != SubgraphKind::PlainCycle;
}

std::optional<SubgraphDescriptor> classify_index(i64 t, i64 index) {
  using K = SubgraphKind;
  auto plain = [&] { return SubgraphDescriptor{index, K::PlainCycle, index, 0}; };
  if (index < 0 || index > max_catalog_index(t)) return std::nullopt;
  if (index == 0) return SubgraphDescriptor{0, K::TailPath, 0, 0};
  if (index <= 21 * t - 1) return plain();

  const i64 half_family = (t - 3) / 2;
  if (index <= 23 * t - 1) {
    i64 offset = index - 21 * t;
    if (offset % 2 == 1) return SubgraphDescriptor{index, K::ThreeCycleOdd, 0, (offset - 1) / 2};
    i64 j = offset / 2;
    if (j <= half_family) return SubgraphDescriptor{index, K::ThreeCycleEven, 0, j};
    if (j == half_family + 1) return plain(); // 22t-1: listed, no family member
    return std::nullopt;
  }
  if (index >= 23 * t + 1 && index <= 24 * t) {
    i64 offset = index - 23 * t;
    if (offset % 2 == 0) return std::nullopt;
    i64 j = (offset - 1) / 2;
    if (j <= half_family) return SubgraphDescriptor{index, K::ThreeCycleShift, 0, j};
    return plain(); // 24t
  }
  if (index == 26 * t) return plain();
  if (index >= 27 * t && index <= 28 * t + 64) {
    if (index >= 27 * t + 1 && index <= 28 * t - 799)
      return SubgraphDescriptor{index, K::TenChord, 0, index - 27 * t + 57};
    return plain();
  }
  // Remaining intervals 29t-734 .. 37t+799, all plain cycles.
  static constexpr i64 kIntervals[9][4] = {
      {29, -734, 29, 267}, {30, -531, 30, 57}, {31, -741, 31, 58},
      {32, -740, 32, 57},  {33, -741, 33, 57}, {34, -741, 34, 52},
      {35, -746, 35, 60},  {36, -738, 36, 60}, {37, -738, 37, 799},
  };
  for (const auto &iv : kIntervals)
    if (index >= iv[0] * t + iv[1] && index <= iv[2] * t + iv[3]) return plain();
  return std::nullopt;
}

std::vector<SubgraphDescriptor> enumerate_subgraphs(const Params &params) {
  std::vector<SubgraphDescriptor> out;
  out.reserve(static_cast<std::size_t>(24 * params.t + 7993));
  for_each_subgraph(params, [&](const SubgraphDescriptor &d) { out.push_back(d); });
  return out;
}

std::pair<i64, i64> family_param_range(SubgraphKind kind, i64 t) {
  switch (kind) {
  case SubgraphKind::ThreeCycleOdd: return {0, t - 1};
  case SubgraphKind::ThreeCycleEven:
  case SubgraphKind::ThreeCycleShift: return {0, (t - 3) / 2};
  case SubgraphKind::TenChord: return {58, t - 742};
  default: throw Error(ErrorCode::NotChorded, std::string(kind_name(kind)) + " has no family parameter");
  }
}

std::string to_string(const Poly &poly, char param_name) {
  std::string out;
  auto term = [&](i64 coef, const std::string &sym) {
    if (coef == 0) return;
    if (!out.empty()) out += coef < 0 ? "-" : "+";
    else if (coef < 0) out += "-";
    i64 mag = coef < 0 ? -coef : coef;
    if (mag != 1 || sym.empty()) out += std::to_string(mag);
    out += sym;
  };
  term(poly.t, "t");
  term(poly.param, std::string(1, param_name));
  term(poly.constant, "");
  return out.empty() ? "0" : out;
}

i64 HalfPoly::eval(i64 t_value, i64 param_value) const {
  i128 v = twice.eval(t_value, param_value);
  if (v % 2 != 0)
    throw Error(ErrorCode::InvariantBreach, "half-integer value for t = " + std::to_string(t_value) +
                                                ", parameter = " + std::to_string(param_value));
  return static_cast<i64>(v / 2);
}

std::optional<Poly> HalfPoly::exact() const {
  if (twice.constant % 2 || twice.t % 2 || twice.param % 2) return std::nullopt;
  return Poly{twice.constant / 2, twice.t / 2, twice.param / 2};
}

const SymbolicFamily &family_geometry(SubgraphKind kind) {
  static const SymbolicFamily odd{SubgraphKind::ThreeCycleOdd, 'j', half(2, 42, 4), half(0, 50, 4),
                                  {{half(1, 19, 2), half(1, 23, 2)}}};
  static const SymbolicFamily even{SubgraphKind::ThreeCycleEven, 'j', half(0, 42, 4), half(2, 50, 4),
                                   {{half(0, 18, 2), half(0, 24, 2)}}};
  static const SymbolicFamily shift{SubgraphKind::ThreeCycleShift, 'j', half(2, 46, 4), half(4, 52, 4),
                                    {{half(1, 21, 2), half(1, 25, 2)}}};
  static const SymbolicFamily ten = make_ten_chord();
  switch (kind) {
  case SubgraphKind::ThreeCycleOdd: return odd;
  case SubgraphKind::ThreeCycleEven: return even;
  case SubgraphKind::ThreeCycleShift: return shift;
  case SubgraphKind::TenChord: return ten;
  default: throw Error(ErrorCode::NotChorded, std::string(kind_name(kind)) + " is not a chorded family");
  }
}

void ChordedCycleSpec::validate() const {
  if (cycle_length < 3)
    throw Error(ErrorCode::InvariantBreach, "cycle length " + std::to_string(cycle_length) + " < 3");
  i64 previous = 0;
  for (std::size_t k = 0; k < chords.size(); ++k) {
    const Chord &c = chords[k];
    if (c.path < 2)
      throw Error(ErrorCode::InvariantBreach, "chord " + std::to_string(k + 1) + " has path length " +
                                                  std::to_string(c.path) + " < 2");
    if (c.attach <= previous || c.attach >= cycle_length)
      throw Error(ErrorCode::InvariantBreach,
                  "chord " + std::to_string(k + 1) + " attachment " + std::to_string(c.attach) +
                      " is not strictly between " + std::to_string(previous) + " and " +
                      std::to_string(cycle_length));
    previous = c.attach;
  }
}

ChordedCycleSpec chorded_spec(const SubgraphDescriptor &descriptor, i64 t) {
  const SymbolicFamily &family = family_geometry(descriptor.kind);
  auto [lo, hi] = family_param_range(descriptor.kind, t);
  if (descriptor.param < lo || descriptor.param > hi)
    throw Error(ErrorCode::InvariantBreach, std::string(kind_name(descriptor.kind)) + " parameter " +
                                                std::to_string(descriptor.param) + " outside [" +
                                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  ChordedCycleSpec spec;
  spec.cycle_length = family.cycle.eval(t, descriptor.param);
  for (const auto &chord : family.chords)
    spec.chords.push_back({chord.path.eval(t, descriptor.param), chord.attach.eval(t, descriptor.param)});
  spec.validate();
  return spec;
}

} // namespace dcl
