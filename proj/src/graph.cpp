#include "dcl/graph.hpp"
#include "dcl/ledger.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>

namespace dcl {

namespace {

constexpr u64 kFnvOffset = 14695981039346656037ULL;
constexpr u64 kFnvPrime = 1099511628211ULL;
constexpr std::size_t kFlushBytes = 1 << 16;
constexpr std::string_view kFormatLine = "# dcl-edgelist 1";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

void write_header(EdgeSink &sink, const std::string &key, const std::string &value) {
  sink.header("# " + key + "=" + value);
}

u64 to_u64(i128 value, const char *what) {
  if (value < 0 || value > static_cast<i128>(INT64_MAX))
    throw Error(ErrorCode::TooLarge, std::string(what) + " does not fit the edge-list id range");
  return static_cast<u64>(value);
}

} // namespace

std::string to_string(const VertexLabel &label) {
  using R = VertexLabel::Role;
  std::string src = label.subgraph ? "B" + std::to_string(*label.subgraph) : "";
  switch (label.role) {
  case R::Hub: return "hub";
  case R::CycleVertex: return src + ".cycle." + std::to_string(label.position);
  case R::PathVertex: return src + ".chord" + std::to_string(label.chord) + "." + std::to_string(label.position);
  case R::TailVertex: return src + ".tail." + std::to_string(label.position);
  }
  return "?";
}

bool Graph::is_simple() const {
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k].u == sorted[k].v) return false;
    if (k > 0 && sorted[k] == sorted[k - 1]) return false;
  }
  return true;
}

std::vector<std::uint32_t> Graph::degrees() const {
  std::vector<std::uint32_t> deg(vertex_count, 0);
  for (const auto &e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

void Graph::add_edge(Vertex a, Vertex b) { edges.push_back({std::min(a, b), std::max(a, b)}); }

SubgraphLayout SubgraphLayout::of(const SubgraphDescriptor &d, i64 t) {
  SubgraphLayout layout;
  layout.source_ = d.index;
  switch (d.kind) {
  case SubgraphKind::TailPath:
    if (d.length < 0) throw Error(ErrorCode::NotMaterializable, "tail path of negative length");
    layout.tail_ = true;
    layout.cycle_length_ = static_cast<i64>(to_u64(d.length, "tail length"));
    return layout;
  case SubgraphKind::PlainCycle:
    if (d.length < 3)
      throw Error(ErrorCode::Degenerate, "B_" + std::to_string(d.index) + " is a cycle of length " +
                                             to_string(d.length) + ", not a simple graph");
    layout.cycle_length_ = static_cast<i64>(d.length);
    return layout;
  default:
    return of_spec(chorded_spec(d, t), d.index);
  }
}

SubgraphLayout SubgraphLayout::of_spec(const ChordedCycleSpec &spec, i64 source) {
  spec.validate();
  SubgraphLayout layout;
  layout.source_ = source;
  layout.cycle_length_ = spec.cycle_length;
  layout.chords_ = spec.chords;
  u64 next = static_cast<u64>(spec.cycle_length) - 1;
  for (const auto &c : spec.chords) {
    layout.offsets_.push_back(next);
    next += static_cast<u64>(c.path) - 1;
  }
  return layout;
}

u64 SubgraphLayout::vertex_count() const {
  if (tail_) return static_cast<u64>(cycle_length_) + 1;
  u64 count = static_cast<u64>(cycle_length_);
  for (const auto &c : chords_) count += static_cast<u64>(c.path) - 1;
  return count;
}

u64 SubgraphLayout::edge_count() const {
  u64 count = static_cast<u64>(cycle_length_);
  for (const auto &c : chords_) count += static_cast<u64>(c.path);
  return count;
}

u64 SubgraphLayout::id_of(const VertexLabel &label) const {
  using R = VertexLabel::Role;
  if (label.role == R::Hub) return 0;
  if (label.subgraph != source_)
    throw Error(ErrorCode::BadInput, "label " + to_string(label) + " belongs to another subgraph");
  auto bad = [&] { return Error(ErrorCode::BadInput, "label " + to_string(label) + " is out of bounds"); };
  switch (label.role) {
  case R::TailVertex:
    if (!tail_ || label.position < 1 || label.position > cycle_length_) throw bad();
    return static_cast<u64>(label.position);
  case R::CycleVertex:
    if (tail_ || label.position < 1 || label.position >= cycle_length_) throw bad();
    return static_cast<u64>(label.position);
  case R::PathVertex: {
    if (label.chord < 1 || static_cast<std::size_t>(label.chord) > chords_.size()) throw bad();
    const auto k = static_cast<std::size_t>(label.chord - 1);
    if (label.position < 1 || label.position >= chords_[k].path) throw bad();
    return offsets_[k] + static_cast<u64>(label.position);
  }
  default: throw bad();
  }
}

VertexLabel SubgraphLayout::label_of(u64 id) const {
  using R = VertexLabel::Role;
  if (id >= vertex_count()) throw Error(ErrorCode::BadInput, "vertex id " + std::to_string(id) + " out of range");
  if (id == 0) return {};
  if (tail_) return {source_, R::TailVertex, 0, static_cast<i64>(id)};
  if (id < static_cast<u64>(cycle_length_)) return {source_, R::CycleVertex, 0, static_cast<i64>(id)};
  // offsets_ is increasing; the owning chord is the last offset below id.
  auto it = std::lower_bound(offsets_.begin(), offsets_.end(), id) - 1;
  auto k = static_cast<int>(it - offsets_.begin());
  return {source_, R::PathVertex, k + 1, static_cast<i64>(id - *it)};
}

Graph materialize_spec(const ChordedCycleSpec &spec, i64 source, u64 vertex_cap) {
  auto layout = SubgraphLayout::of_spec(spec, source);
  if (layout.vertex_count() > vertex_cap)
    throw Error(ErrorCode::TooLarge, std::to_string(layout.vertex_count()) +
                                         " vertices exceed the materialization cap; use streaming export");
  Graph g;
  g.vertex_count = static_cast<Vertex>(layout.vertex_count());
  g.labels.reserve(g.vertex_count);
  for (u64 id = 0; id < g.vertex_count; ++id) g.labels.push_back(layout.label_of(id));
  g.edges.reserve(layout.edge_count());
  layout.for_each_edge([&](u64 a, u64 b) { g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)); });
  return g;
}

Graph materialize_subgraph(const SubgraphDescriptor &descriptor, i64 t, u64 vertex_cap) {
  if (descriptor.kind != SubgraphKind::PlainCycle && descriptor.kind != SubgraphKind::TailPath)
    return materialize_spec(chorded_spec(descriptor, t), descriptor.index, vertex_cap);
  auto layout = SubgraphLayout::of(descriptor, t);
  if (layout.vertex_count() > vertex_cap)
    throw Error(ErrorCode::TooLarge, std::to_string(layout.vertex_count()) +
                                         " vertices exceed the materialization cap; use streaming export");
  Graph g;
  g.vertex_count = static_cast<Vertex>(layout.vertex_count());
  for (u64 id = 0; id < g.vertex_count; ++id) g.labels.push_back(layout.label_of(id));
  layout.for_each_edge([&](u64 a, u64 b) { g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)); });
  return g;
}

TextEdgeSink::TextEdgeSink(std::ostream *out) : out_(out), hash_(kFnvOffset) { buffer_.reserve(kFlushBytes + 64); }

TextEdgeSink::~TextEdgeSink() {
  try {
    flush();
  } catch (...) {
  }
}

void TextEdgeSink::append(std::string_view bytes) {
  for (unsigned char c : bytes) {
    hash_ ^= c;
    hash_ *= kFnvPrime;
  }
  if (out_) {
    buffer_.append(bytes);
    if (buffer_.size() >= kFlushBytes) flush();
  }
}

void TextEdgeSink::flush() {
  if (!out_ || buffer_.empty()) return;
  out_->write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
  buffer_.clear();
  if (!*out_)
    throw Error(ErrorCode::SinkFailure, "write failed after " + std::to_string(edges_) + " edges");
}

void TextEdgeSink::header(std::string_view line) {
  append(line);
  append("\n");
}

void TextEdgeSink::edge(u64 u, u64 v) {
  char line[48];
  char *p = std::to_chars(line, line + 20, u).ptr;
  *p++ = ' ';
  p = std::to_chars(p, p + 20, v).ptr;
  *p++ = '\n';
  append(std::string_view(line, static_cast<std::size_t>(p - line)));
  ++edges_;
}

void TextEdgeSink::finish() {
  flush();
  if (out_) {
    out_->flush();
    if (!*out_) throw Error(ErrorCode::SinkFailure, "flush failed after " + std::to_string(edges_) + " edges");
  }
}

StreamSummary stream_edges(const Params &params, EdgeSink &sink) {
  const Totals totals = count_totals(params);
  StreamSummary summary;
  summary.scope = "full";
  if (params.mode == Mode::Strict) {
    summary.formal_vertices = 1; // B_2's second vertex; B_1 is a loop at the hub
    summary.formal_edges = 3;
  }
  const u64 expected_vertices = to_u64(totals.vertices, "vertex count") - summary.formal_vertices;
  const u64 expected_edges = to_u64(totals.edges, "edge count") - summary.formal_edges;

  sink.header(kFormatLine);
  write_header(sink, "t", std::to_string(params.t));
  write_header(sink, "n", to_string(params.n));
  write_header(sink, "mode", std::string(mode_name(params.mode)));
  write_header(sink, "scope", summary.scope);
  write_header(sink, "vertices", std::to_string(expected_vertices));
  write_header(sink, "edges", std::to_string(expected_edges));
  if (summary.formal_edges) {
    write_header(sink, "formal_vertices", std::to_string(summary.formal_vertices));
    write_header(sink, "formal_edges", std::to_string(summary.formal_edges));
  }

  u64 next_id = 1;
  u64 edges = 0;
  for_each_subgraph(params, [&](const SubgraphDescriptor &d) {
    if (d.formal()) return;
    auto layout = SubgraphLayout::of(d, params.t);
    const u64 base = next_id - 1;
    layout.for_each_edge([&](u64 a, u64 b) {
      u64 ga = a == 0 ? 0 : base + a;
      u64 gb = b == 0 ? 0 : base + b;
      if (ga > gb) std::swap(ga, gb);
      sink.edge(ga, gb);
      ++edges;
    });
    next_id += layout.vertex_count() - 1;
  });
  sink.finish();

  summary.vertices = next_id;
  summary.edges = edges;
  summary.checksum = sink.digest();
  if (summary.vertices != expected_vertices || summary.edges != expected_edges)
    throw Error(ErrorCode::InvariantBreach, "streamed counts disagree with count_totals");
  return summary;
}

StreamSummary stream_subgraph(const Params &params, const SubgraphDescriptor &descriptor, EdgeSink &sink) {
  auto layout = SubgraphLayout::of(descriptor, params.t);
  StreamSummary summary;
  summary.scope = "subgraph:" + std::to_string(descriptor.index);
  sink.header(kFormatLine);
  write_header(sink, "t", std::to_string(params.t));
  write_header(sink, "n", to_string(params.n));
  write_header(sink, "mode", std::string(mode_name(params.mode)));
  write_header(sink, "scope", summary.scope);
  write_header(sink, "kind", std::string(kind_name(descriptor.kind)));
  write_header(sink, "vertices", std::to_string(layout.vertex_count()));
  write_header(sink, "edges", std::to_string(layout.edge_count()));
  layout.for_each_edge([&](u64 a, u64 b) {
    sink.edge(std::min(a, b), std::max(a, b));
    ++summary.edges;
  });
  sink.finish();
  summary.vertices = layout.vertex_count();
  summary.checksum = sink.digest();
  return summary;
}

EdgeListFile read_edge_list(std::istream &in, u64 vertex_cap) {
  EdgeListFile file;
  std::string line;
  u64 max_id = 0;
  bool any_edge = false;
  u64 line_no = 0;
  auto bad = [&](const std::string &why) {
    return Error(ErrorCode::BadInput, "line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = trim(line);
    if (s.empty()) continue;
    if (s.front() == '#') {
      s = trim(s.substr(1));
      auto eq = s.find('=');
      if (eq != std::string_view::npos)
        file.header[std::string(trim(s.substr(0, eq)))] = std::string(trim(s.substr(eq + 1)));
      continue;
    }
    u64 u = 0, v = 0;
    auto r1 = std::from_chars(s.data(), s.data() + s.size(), u);
    if (r1.ec != std::errc()) throw bad("expected 'u v'");
    std::string_view rest = trim(std::string_view(r1.ptr, static_cast<std::size_t>(s.data() + s.size() - r1.ptr)));
    auto r2 = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (r2.ec != std::errc() || r2.ptr != rest.data() + rest.size()) throw bad("expected 'u v'");
    if (std::max(u, v) >= vertex_cap) throw Error(ErrorCode::TooLarge, "vertex id exceeds the cap");
    max_id = std::max({max_id, u, v});
    any_edge = true;
    file.graph.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  u64 count = any_edge ? max_id + 1 : 0;
  if (auto it = file.header.find("vertices"); it != file.header.end()) {
    u64 declared = 0;
    auto r = std::from_chars(it->second.data(), it->second.data() + it->second.size(), declared);
    if (r.ec != std::errc()) throw Error(ErrorCode::BadInput, "bad vertices header");
    if (declared < count) throw Error(ErrorCode::BadInput, "edge endpoint beyond declared vertex count");
    if (declared > vertex_cap) throw Error(ErrorCode::TooLarge, "declared vertex count exceeds the cap");
    count = declared;
  }
  file.graph.vertex_count = static_cast<Vertex>(count);
  return file;
}

void write_edge_list(const Graph &graph, std::ostream &out, std::string_view scope) {
  TextEdgeSink sink(&out);
  sink.header(kFormatLine);
  sink.header("# scope=" + std::string(scope));
  sink.header("# vertices=" + std::to_string(graph.vertex_count));
  sink.header("# edges=" + std::to_string(graph.edges.size()));
  for (const auto &e : graph.edges) sink.edge(e.u, e.v);
  sink.finish();
}

} // namespace dcl
