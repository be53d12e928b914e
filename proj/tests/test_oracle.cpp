#include "doctest.h"

#include "dcl/ledger.hpp"
#include "dcl/oracle.hpp"
#include "naive_oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace dcl;

namespace {

Graph make(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  Graph g;
  g.vertex_count = n;
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

Graph complete(Vertex n) {
  Graph g;
  g.vertex_count = n;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

std::set<Edge> edge_set(const std::vector<Vertex> &cycle) {
  std::set<Edge> out;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    Vertex a = cycle[k], b = cycle[(k + 1) % cycle.size()];
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

bool is_cycle_of(const Graph &g, const std::vector<Vertex> &cycle) {
  if (cycle.size() < 3) return false;
  std::set<Vertex> seen(cycle.begin(), cycle.end());
  if (seen.size() != cycle.size()) return false;
  std::set<Edge> edges(g.edges.begin(), g.edges.end());
  for (const auto &e : edge_set(cycle))
    if (!edges.count(e)) return false;
  return true;
}

} // namespace

TEST_CASE("small spectra") {
  auto tri = enumerate_cycles(make(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(tri.lengths == std::vector<u64>{3});
  CHECK_FALSE(tri.truncated);

  auto k4 = enumerate_cycles(complete(4));
  CHECK(k4.lengths == std::vector<u64>{3, 3, 3, 3, 4, 4, 4});
  CHECK(k4.lengths == naive::cycle_lengths(complete(4)));

  auto forest = enumerate_cycles(make(5, {{0, 1}, {1, 2}, {3, 4}}));
  CHECK(forest.cycle_count == 0);

  CHECK(enumerate_cycles(complete(5)).lengths == naive::cycle_lengths(complete(5)));
  CHECK(enumerate_cycles(complete(6)).cycle_count == 197);
}

TEST_CASE("truncation") {
  auto s = enumerate_cycles(complete(6), 5);
  CHECK(s.truncated);
  CHECK(s.cycle_count == 5);
  CHECK(s.lengths.size() == 5);
  auto exact = enumerate_cycles(complete(4), 7);
  CHECK_FALSE(exact.truncated);
  CHECK(exact.cycle_count == 7);
  CHECK_THROWS_AS(enumerate_cycles(complete(4), 0), Error);

  auto v = has_distinct_cycle_lengths(make(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 0}}), 1);
  CHECK(v.kind == DistinctVerdict::Kind::Unknown);
}

TEST_CASE("non-simple input is rejected") {
  Graph loop = make(2, {{0, 0}, {0, 1}});
  CHECK_THROWS_AS(enumerate_cycles(loop), Error);
  Graph parallel = make(2, {{0, 1}, {0, 1}});
  CHECK_THROWS_AS(enumerate_cycles(parallel), Error);
}

TEST_CASE("distinctness verdicts") {
  auto tri_c4 = make(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 0}});
  CHECK(has_distinct_cycle_lengths(tri_c4).kind == DistinctVerdict::Kind::Yes);

  auto k4 = complete(4);
  auto v = has_distinct_cycle_lengths(k4);
  REQUIRE(v.kind == DistinctVerdict::Kind::No);
  REQUIRE(v.witness);
  const auto &[a, b] = *v.witness;
  CHECK(a.size() == b.size());
  CHECK(is_cycle_of(k4, a));
  CHECK(is_cycle_of(k4, b));
  CHECK(edge_set(a) != edge_set(b));
}

TEST_CASE("witnesses expand through contracted chains") {
  // Two 4-cycles through a theta: paths of length 2, 2 and 2 between 0 and 1.
  auto theta = make(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
  auto v = has_distinct_cycle_lengths(theta);
  REQUIRE(v.kind == DistinctVerdict::Kind::No);
  CHECK(is_cycle_of(theta, v.witness->first));
  CHECK(is_cycle_of(theta, v.witness->second));
  CHECK(v.witness->first.size() == 4);
}

TEST_CASE("enumerator agrees with the edge-subset checker on random graphs") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = naive::random_graph(rng, 10, 16);
    auto fast = enumerate_cycles(g);
    CHECK(fast.lengths == naive::cycle_lengths(g));
    bool naive_distinct = naive::distinct_lengths(g);
    auto verdict = has_distinct_cycle_lengths(g);
    CHECK((verdict.kind == DistinctVerdict::Kind::Yes) == naive_distinct);
  }
}

TEST_CASE("enumerator handles pendant trees and isolated cycles") {
  // A triangle with a pendant path, a separate 5-cycle, and an isolated vertex.
  auto g = make(11, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}});
  CHECK(enumerate_cycles(g).lengths == std::vector<u64>{3, 5});
}

TEST_CASE("ThreeCycleEven(0) at t = 1429 has distinct lengths") {
  SubgraphDescriptor d{21 * 1429, SubgraphKind::ThreeCycleEven, 0, 0};
  auto g = materialize_subgraph(d, 1429);
  auto v = has_distinct_cycle_lengths(g);
  CHECK(v.kind == DistinctVerdict::Kind::Yes);
  CHECK(v.cycles_seen == 3);
  CHECK(enumerate_cycles(g).lengths == std::vector<u64>{21 * 1429, 22 * 1429 + 1, 25 * 1429 + 1});
}

TEST_CASE("materialized chorded specs match cycles_of_spec") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 60; ++trial) {
    ChordedCycleSpec s;
    s.cycle_length = 3 + static_cast<i64>(rng() % 300);
    for (i64 a = 1; a < s.cycle_length && s.chords.size() < 12; ++a)
      if (rng() % 11 == 0) s.chords.push_back({2 + static_cast<i64>(rng() % 30), a});
    auto g = materialize_spec(s);
    std::vector<u64> expected;
    for (const auto &c : cycles_of_spec(s)) expected.push_back(static_cast<u64>(c.length));
    std::sort(expected.begin(), expected.end());
    auto spectrum = enumerate_cycles(g);
    CHECK(spectrum.lengths == expected);
    CHECK(static_cast<i64>(spectrum.cycle_count) == chord_cycle_count(static_cast<i64>(s.chords.size())));
  }
}

TEST_CASE("canonical codes identify isomorphic graphs") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    std::vector<std::uint8_t> rows(n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() % 2) {
          rows[a] |= static_cast<std::uint8_t>(1u << b);
          rows[b] |= static_cast<std::uint8_t>(1u << a);
        }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::uint8_t> relabeled(n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (rows[a] >> b & 1u) relabeled[perm[a]] |= static_cast<std::uint8_t>(1u << perm[b]);
    CHECK(canonical_code(rows) == canonical_code(relabeled));
  }
  // P4 and the star K_{1,3} have the same size but differ.
  std::vector<std::uint8_t> path{0b0010, 0b0101, 0b1010, 0b0100};
  std::vector<std::uint8_t> star{0b1110, 0b0001, 0b0001, 0b0001};
  CHECK(canonical_code(path) != canonical_code(star));
}

TEST_CASE("exhaustive f(n) for tiny n") {
  // Golden values: the labeled brute force agrees for n <= 6.
  const int golden[] = {0, 0, 0, 3, 4, 6, 7};
  int previous = 0;
  for (int n = 3; n <= 6; ++n) {
    auto r = max_edges_distinct_cycles(n);
    CHECK(r.exhaustive);
    CHECK(r.max_edges == golden[n]);
    CHECK(r.max_edges == naive::max_edges_by_labeled_search(n));
    CHECK(r.max_edges >= previous);
    CHECK(r.max_edges >= n);
    CHECK(r.witness.vertex_count == static_cast<Vertex>(n));
    CHECK(static_cast<int>(r.witness.edges.size()) == r.max_edges);
    CHECK(naive::distinct_lengths(r.witness));
    previous = r.max_edges;
  }
}

TEST_CASE("exhaustive f(7) and f(8) golden values") {
  // f(7) matched the labeled brute force in a one-off run (about 8 minutes,
  // too slow to repeat here).
  auto seven = max_edges_distinct_cycles(7);
  CHECK(seven.exhaustive);
  CHECK(seven.max_edges == 8);
  auto eight = max_edges_distinct_cycles(8);
  CHECK(eight.exhaustive);
  CHECK(eight.max_edges == 10);
  CHECK(has_distinct_cycle_lengths(eight.witness).kind == DistinctVerdict::Kind::Yes);
}

TEST_CASE("extremal search limits") {
  CHECK_THROWS_AS(max_edges_distinct_cycles(2), Error);
  CHECK_THROWS_AS(max_edges_distinct_cycles(9), Error);
  auto r = max_edges_distinct_cycles(6, 10);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.candidates_checked == 10);
  CHECK(r.max_edges < 7);
  CHECK(naive::distinct_lengths(r.witness));
}

TEST_CASE("Shi's formula against exhaustive f(n)") {
  // The quoted lower bound exceeds the true maximum for small n; recorded as
  // a finding rather than asserted away.
  std::vector<int> exceeded;
  for (int n = 3; n <= 6; ++n) {
    auto r = max_edges_distinct_cycles(n);
    if (shi_bound(n) > r.max_edges) exceeded.push_back(n);
  }
  CHECK(exceeded == std::vector<int>{3, 4, 5, 6});
}
