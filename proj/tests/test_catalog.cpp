#include "doctest.h"

#include "dcl/catalog.hpp"
#include "naive_oracles.hpp"

using namespace dcl;

namespace {

Params instance(i64 r) { return validate_params({.r = r}); }

Params relaxed(i64 t) { return validate_params({.t = t, .relaxed = true}); }

ErrorCode code_of(const ParamRequest &request) {
  try {
    validate_params(request);
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected validate_params to throw");
  return ErrorCode::BadInput;
}

std::string describe(const SubgraphDescriptor &d) {
  switch (d.kind) {
  case SubgraphKind::TailPath: return "tail";
  case SubgraphKind::PlainCycle: return "plain";
  case SubgraphKind::ThreeCycleOdd: return "odd:" + std::to_string(d.param);
  case SubgraphKind::ThreeCycleEven: return "even:" + std::to_string(d.param);
  case SubgraphKind::ThreeCycleShift: return "shift:" + std::to_string(d.param);
  case SubgraphKind::TenChord: return "ten:" + std::to_string(d.param);
  }
  return "?";
}

} // namespace

TEST_CASE("validate_params accepts the first instance") {
  auto p = validate_params({.r = 1, .n = i128{1228323094}});
  CHECK(p.t == 1429);
  CHECK(p.n_t == 1228323094);
  CHECK(p.n == p.n_t);
  CHECK(p.tail_length() == 0);
  CHECK(*p.r == 1);

  // The same instance named by t.
  auto q = validate_params({.t = 1429});
  CHECK(q.r == 1);
  CHECK(q.n_t == p.n_t);
}

TEST_CASE("n_t closed form at r = 1, 2, 3") {
  // 540 t^2 + (175811 t + 7989)/2 by hand-checked integer arithmetic.
  CHECK(n_t_closed_form(1429) == 1228323094);
  CHECK(n_t_closed_form(2689) == 4140971224);
  CHECK(n_t_closed_form(3949) == i128{540} * 3949 * 3949 + (i128{175811} * 3949 + 7989) / 2);
  CHECK_THROWS_AS(n_t_closed_form(1430), Error);
}

TEST_CASE("validate_params error paths") {
  CHECK(code_of({.t = 1430}) == ErrorCode::EvenT);
  CHECK(code_of({.t = 1430, .relaxed = true}) == ErrorCode::EvenT);
  CHECK(code_of({.r = 1, .n = i128{1000}}) == ErrorCode::BudgetTooSmall);
  CHECK(code_of({.t = 1431}) == ErrorCode::NotPaperForm);
  CHECK(code_of({.t = 169}) == ErrorCode::NotPaperForm);
  CHECK(code_of({.r = 0}) == ErrorCode::NotPaperForm);
  CHECK(code_of({.t = 799, .relaxed = true}) == ErrorCode::TooSmallT);
  CHECK(code_of({.t = 9, .relaxed = true}) == ErrorCode::TooSmallT);
  CHECK(code_of({.r = 1, .t = 1429}) == ErrorCode::BadInput);
  CHECK(code_of({}) == ErrorCode::BadInput);
}

TEST_CASE("relaxed mode accepts odd t >= 801") {
  auto p = relaxed(801);
  CHECK(p.t == 801);
  CHECK_FALSE(p.r.has_value());
  CHECK(p.n_t == n_t_closed_form(801));
  CHECK(relaxed(1429).t == 1429);
}

TEST_CASE("large r stays exact") {
  auto p = instance(1'000'000);
  CHECK(p.t == 1'260'000'169);
  CHECK(p.n_t > i128{1} << 64);
  CHECK(p.n_t == i128{540} * p.t * p.t + (i128{175811} * p.t + 7989) / 2);
}

TEST_CASE("catalog spot checks at t = 1429") {
  auto p = validate_params({.r = 1, .n = i128{1228323094} + 17});
  auto d0 = classify_index(p.t, 0);
  REQUIRE(d0);
  CHECK(d0->kind == SubgraphKind::TailPath);

  auto all = enumerate_subgraphs(p);
  REQUIRE(all.front().index == 0);
  CHECK(all.front().kind == SubgraphKind::TailPath);
  CHECK(all.front().length == 17);

  auto at = [&](i64 index) {
    auto d = classify_index(p.t, index);
    REQUIRE(d);
    return *d;
  };
  CHECK(at(37154).kind == SubgraphKind::PlainCycle); // 26t
  CHECK(at(37154).length == 37154);
  CHECK(at(38584).kind == SubgraphKind::TenChord);
  CHECK(at(38584).param == 58);
  CHECK(at(38583).kind == SubgraphKind::PlainCycle); // 27t
  CHECK(at(31437).kind == SubgraphKind::PlainCycle); // 22t-1, leftover of the even family
  CHECK(at(24 * 1429).kind == SubgraphKind::PlainCycle);
  CHECK(at(21 * 1429).kind == SubgraphKind::ThreeCycleEven);
  CHECK(at(21 * 1429 + 1).kind == SubgraphKind::ThreeCycleOdd);
  CHECK(at(23 * 1429 + 1).kind == SubgraphKind::ThreeCycleShift);
  CHECK(at(1).formal());
  CHECK(at(2).formal());
  CHECK_FALSE(at(3).formal());
  CHECK_FALSE(classify_index(p.t, 24 * 1429 + 1));
  CHECK_FALSE(classify_index(p.t, 37 * 1429 + 800));
}

TEST_CASE("catalog counts per kind") {
  for (i64 t : {i64{1429}, i64{2689}, i64{801}}) {
    auto p = t == 801 ? relaxed(t) : validate_params({.t = t});
    auto all = enumerate_subgraphs(p);
    CHECK(static_cast<i64>(all.size()) == 24 * t + 7993);
    std::map<SubgraphKind, i64> counts;
    for (const auto &d : all) ++counts[d.kind];
    CHECK(counts[SubgraphKind::TailPath] == 1);
    CHECK(counts[SubgraphKind::ThreeCycleOdd] == t);
    CHECK(counts[SubgraphKind::ThreeCycleEven] == (t - 1) / 2);
    CHECK(counts[SubgraphKind::ThreeCycleShift] == (t - 1) / 2);
    CHECK(counts[SubgraphKind::TenChord] == t - 799);
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](const auto &a, const auto &b) { return a.index < b.index; }));

    i64 listed = 0;
    for (const auto &r : catalog_ranges(t)) listed += r.size();
    CHECK(listed == 24 * t + 7993);
  }
}

TEST_CASE("catalog equals the literal set construction") {
  for (i64 t : {i64{801}, i64{803}, i64{1429}}) {
    auto p = t == 1429 ? validate_params({.t = t}) : relaxed(t);
    auto reference = naive::reference_catalog(t);
    auto all = enumerate_subgraphs(p);
    REQUIRE(all.size() == reference.size());
    auto it = reference.begin();
    for (const auto &d : all) {
      CHECK(d.index == it->first);
      CHECK(describe(d) == it->second);
      ++it;
    }
  }
}

TEST_CASE("enumeration is deterministic") {
  auto p = instance(1);
  CHECK(enumerate_subgraphs(p) == enumerate_subgraphs(p));
}

TEST_CASE("chorded_spec examples") {
  using K = SubgraphKind;
  auto odd = chorded_spec({0, K::ThreeCycleOdd, 0, 0}, 1429);
  CHECK(odd.cycle_length == 35725);
  REQUIRE(odd.chords.size() == 1);
  CHECK(odd.chords[0].path == 13576);
  CHECK(odd.chords[0].attach == 16434);

  auto ten = chorded_spec({38584, K::TenChord, 0, 58}, 1429);
  CHECK(ten.cycle_length == 190160);
  CHECK(ten.chords.size() == 10);
  CHECK(ten.chords[0].path == (17 * 1429 + 1) / 2);
  CHECK(ten.chords[0].attach == (37 * 1429 - 115) / 2 + 58);
  CHECK(ten.chords[9].attach == (217 * 1429 + 305) / 2 + 580);

  // A tiny odd t the validator would reject; formulas still apply.
  auto even = chorded_spec({0, K::ThreeCycleEven, 0, 0}, 9);
  CHECK(even.cycle_length == 226);
  CHECK(even.chords[0].path == 81);
  CHECK(even.chords[0].attach == 108);

  auto shift = chorded_spec({0, K::ThreeCycleShift, 0, 3}, 1429);
  CHECK(shift.cycle_length == 26 * 1429 + 8);
  CHECK(shift.chords[0].path == (21 * 1429 + 7) / 2);
  CHECK(shift.chords[0].attach == (25 * 1429 + 7) / 2);
}

TEST_CASE("chorded_spec errors") {
  using K = SubgraphKind;
  CHECK_THROWS_AS(chorded_spec({5, K::PlainCycle, 5, 0}, 1429), Error);
  CHECK_THROWS_AS(chorded_spec({0, K::TailPath, 0, 0}, 1429), Error);
  try {
    chorded_spec({0, K::TenChord, 0, 57}, 1429);
    FAIL("expected InvariantBreach");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::InvariantBreach);
  }
  try {
    chorded_spec({0, K::PlainCycle, 5, 0}, 1429);
    FAIL("expected NotChorded");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NotChorded);
  }

  ChordedCycleSpec bad{10, {{3, 5}, {3, 5}}};
  CHECK_THROWS_AS(bad.validate(), Error);
  ChordedCycleSpec short_path{10, {{1, 5}}};
  CHECK_THROWS_AS(short_path.validate(), Error);
  ChordedCycleSpec past_end{10, {{2, 10}}};
  CHECK_THROWS_AS(past_end.validate(), Error);
}

TEST_CASE("every chorded member satisfies the spec invariants at r = 1, 2") {
  for (i64 r : {1, 2}) {
    auto p = instance(r);
    i64 checked = 0;
    for_each_subgraph(p, [&](const SubgraphDescriptor &d) {
      if (!is_chorded(d.kind)) return;
      auto spec = chorded_spec(d, p.t); // validates
      auto index = family_geometry(d.kind).index.eval(p.t, d.param);
      CHECK(index == d.index);
      ++checked;
      (void)spec;
    });
    CHECK(checked == p.t + (p.t - 1) + (p.t - 799));
  }
}

TEST_CASE("polynomial text") {
  CHECK(to_string(Poly{-57, 27, 1}, 'i') == "27t+i-57");
  CHECK(to_string(Poly{0, 30, 1}, 'i') == "30t+i");
  CHECK(to_string(Poly{894, 132, 11}, 'i') == "132t+11i+894");
  CHECK(to_string(Poly{}, 'j') == "0");
}
