#pragma once

#include "dcl/catalog.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dcl {

using Vertex = std::uint32_t;

struct VertexLabel {
  enum class Role { Hub, CycleVertex, PathVertex, TailVertex };
  std::optional<i64> subgraph; // empty for the hub
  Role role = Role::Hub;
  int chord = 0;     // 1-based, PathVertex only
  i64 position = 0;  // along the cycle, chord path, or tail; 1-based

  friend bool operator==(const VertexLabel &, const VertexLabel &) = default;
};

std::string to_string(const VertexLabel &label);

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge &, const Edge &) = default;
  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Explicit undirected graph. Ids are dense 0..vertex_count-1; materialized
/// subgraphs put the hub at 0. `labels` is empty for graphs read from files.
struct Graph {
  Vertex vertex_count = 0;
  std::vector<Edge> edges; // u < v, except loops (u == v) in malformed input
  std::vector<VertexLabel> labels;

  /// No loops and no parallel edges.
  bool is_simple() const;
  std::vector<std::uint32_t> degrees() const;
  /// Adds an edge, normalizing so u <= v.
  void add_edge(Vertex a, Vertex b);
};

constexpr u64 kDefaultVertexCap = 10'000'000;

/// Local id arithmetic for one subgraph: hub 0, then cycle vertices by
/// position, then chord paths by chord then position. A tail path uses
/// positions 1..length.
class SubgraphLayout {
public:
  static SubgraphLayout of(const SubgraphDescriptor &descriptor, i64 t);
  static SubgraphLayout of_spec(const ChordedCycleSpec &spec, i64 source = 0);

  u64 vertex_count() const; // including the hub
  u64 edge_count() const;

  u64 id_of(const VertexLabel &label) const;
  VertexLabel label_of(u64 id) const;

  /// Visits local edges (a, b) in canonical order: cycle by position, then
  /// each chord path from the hub outward.
  template <class Fn> void for_each_edge(Fn &&fn) const {
    if (tail_) {
      for (u64 q = 0; q < static_cast<u64>(cycle_length_); ++q) fn(q, q + 1);
      return;
    }
    const u64 L = static_cast<u64>(cycle_length_);
    fn(u64{0}, u64{1});
    for (u64 q = 1; q + 1 < L; ++q) fn(q, q + 1);
    fn(L - 1, u64{0});
    for (std::size_t k = 0; k < chords_.size(); ++k) {
      const u64 base = offsets_[k];
      const u64 internal = static_cast<u64>(chords_[k].path) - 1;
      fn(u64{0}, base + 1);
      for (u64 q = 1; q < internal; ++q) fn(base + q, base + q + 1);
      fn(base + internal, static_cast<u64>(chords_[k].attach));
    }
  }

  i64 source() const { return source_; }

private:
  i64 source_ = 0;
  bool tail_ = false;
  i64 cycle_length_ = 0; // tail length when tail_
  std::vector<Chord> chords_;
  std::vector<u64> offsets_; // id before chord k's first path vertex
};

/// Explicit graph of a chorded spec. Throws TooLarge above `vertex_cap`.
Graph materialize_spec(const ChordedCycleSpec &spec, i64 source = 0, u64 vertex_cap = kDefaultVertexCap);

/// Explicit graph of one descriptor. Plain cycles need length >= 3.
Graph materialize_subgraph(const SubgraphDescriptor &descriptor, i64 t, u64 vertex_cap = kDefaultVertexCap);

/// Receives the text edge list line by line.
class EdgeSink {
public:
  virtual ~EdgeSink() = default;
  virtual void header(std::string_view line) = 0;
  virtual void edge(u64 u, u64 v) = 0;
  virtual void finish() {}
  virtual u64 digest() const = 0;
};

/// Formats edges as "u v\n" and hashes the exact bytes (FNV-1a, 64-bit).
/// With a null stream it only hashes and counts.
class TextEdgeSink final : public EdgeSink {
public:
  explicit TextEdgeSink(std::ostream *out);
  ~TextEdgeSink() override;

  void header(std::string_view line) override;
  void edge(u64 u, u64 v) override;
  void finish() override;
  u64 digest() const override { return hash_; }
  u64 edges_written() const { return edges_; }

private:
  void append(std::string_view bytes);
  void flush();

  std::ostream *out_;
  std::string buffer_;
  u64 hash_;
  u64 edges_ = 0;
};

struct StreamSummary {
  u64 vertices = 0; // streamed, including the hub
  u64 edges = 0;    // streamed
  u64 checksum = 0;
  u64 formal_vertices = 0; // strict mode: B_1/B_2, counted but not streamed
  u64 formal_edges = 0;
  std::string scope;

  u64 total_vertices() const { return vertices + formal_vertices; }
  u64 total_edges() const { return edges + formal_edges; }
};

/// Streams all of G in ascending descriptor order with O(1) memory per
/// descriptor. Ids: hub 0, then each descriptor's local ids shifted past
/// the previous ones.
StreamSummary stream_edges(const Params &params, EdgeSink &sink);

/// Streams a single subgraph using its local ids.
StreamSummary stream_subgraph(const Params &params, const SubgraphDescriptor &descriptor, EdgeSink &sink);

struct EdgeListFile {
  std::map<std::string, std::string> header;
  Graph graph;
};

/// Reads the text edge-list format. Lines starting with '#' are headers;
/// "key=value" headers are kept. A "vertices=" header fixes the vertex count.
EdgeListFile read_edge_list(std::istream &in, u64 vertex_cap = kDefaultVertexCap);

void write_edge_list(const Graph &graph, std::ostream &out, std::string_view scope);

} // namespace dcl
