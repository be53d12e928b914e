#pragma once

#include "dcl/graph.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace dcl {

constexpr u64 kDefaultCycleCap = 1'000'000;

struct CycleSpectrum {
  std::vector<u64> lengths; // sorted ascending, one entry per cycle
  u64 cycle_count = 0;
  bool truncated = false; // more than `cap` cycles exist
};

/// A cycle found by CycleEnumerator. `vertices()` expands it on demand.
struct FoundCycle {
  enum class Shape { Isolated, Loop, Walk };
  Shape shape = Shape::Walk;
  u64 length = 0;
  std::size_t id = 0;                            // Isolated: component; Loop: chain
  std::size_t start = 0;                         // Walk: skeleton node
  std::vector<std::pair<std::size_t, bool>> walk; // Walk: (chain, traversed forward)
};

/// Output-sensitive simple-cycle enumeration for undirected simple graphs.
///
/// The graph is peeled to its 2-core and every maximal run of degree-2
/// vertices is contracted into one weighted skeleton edge. Components with
/// no branch vertex are single cycles. On the skeleton each cycle is found
/// from its smallest node, extending only to nodes that can still reach the
/// start without reusing the path, so every search branch ends in a cycle;
/// of the two orientations only the one whose first skeleton edge has the
/// smaller id is reported. Cost is polynomial per cycle, independent of how
/// long the contracted chains are.
class CycleEnumerator {
public:
  /// Throws BadInput if the graph has loops or parallel edges.
  explicit CycleEnumerator(const Graph &graph);

  /// Calls `visit` once per cycle until it returns false.
  void for_each(const std::function<bool(const FoundCycle &)> &visit) const;

  /// The cycle as a closed vertex sequence (first vertex not repeated).
  std::vector<Vertex> vertices(const FoundCycle &cycle) const;

  std::size_t skeleton_nodes() const { return node_vertex_.size(); }
  std::size_t skeleton_edges() const { return chains_.size(); }

private:
  struct Chain {
    std::size_t from = 0; // skeleton node
    std::size_t to = 0;
    u64 weight = 0;
    std::vector<Vertex> interior; // from -> to order
  };

  bool reachable(std::size_t from, std::size_t start, std::size_t banned_chain,
                 const std::vector<char> &on_path) const;

  std::vector<Vertex> node_vertex_;
  std::vector<Chain> chains_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_; // (chain, other node)
  std::vector<std::vector<Vertex>> isolated_;
};

CycleSpectrum enumerate_cycles(const Graph &graph, u64 cap = kDefaultCycleCap);

struct DistinctVerdict {
  enum class Kind { Yes, No, Unknown };
  Kind kind = Kind::Yes;
  u64 cycles_seen = 0;
  /// For No: two different cycles of the same length.
  std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> witness;
};

std::string_view verdict_name(DistinctVerdict::Kind kind);

DistinctVerdict has_distinct_cycle_lengths(const Graph &graph, u64 cap = kDefaultCycleCap);

constexpr int kMinExtremalN = 3;
constexpr int kMaxExtremalN = 8;
constexpr u64 kDefaultSearchBudget = 50'000'000;

struct ExtremalResult {
  int n = 0;
  int max_edges = 0;
  Graph witness;
  bool exhaustive = false;
  std::vector<u64> classes_per_edge_count; // isomorphism classes with the property
  u64 candidates_checked = 0;
};

/// Exact f(n) for 3 <= n <= 8. Graphs with distinct cycle lengths are
/// closed under edge deletion, so the search grows the family one edge at a
/// time, keeping one canonical representative per isomorphism class; the
/// last non-empty level is the maximum. `budget` caps candidate checks; if
/// it runs out the result is the best level completed and exhaustive=false.
ExtremalResult max_edges_distinct_cycles(int n, u64 budget = kDefaultSearchBudget);

/// Canonical code of a graph on n <= 8 vertices given as adjacency rows:
/// the minimum upper-triangle bit pattern over all labelings that respect an
/// isomorphism-invariant refinement of the degree partition.
std::uint32_t canonical_code(const std::vector<std::uint8_t> &rows);

} // namespace dcl
