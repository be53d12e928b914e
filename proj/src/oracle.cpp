#include "dcl/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <map>
#include <unordered_map>

namespace dcl {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

} // namespace

CycleEnumerator::CycleEnumerator(const Graph &graph) {
  if (!graph.is_simple()) throw Error(ErrorCode::BadInput, "cycle enumeration needs a simple graph");
  const std::size_t n = graph.vertex_count;
  const std::size_t m = graph.edges.size();

  // Compressed adjacency: (neighbor, edge id).
  std::vector<std::size_t> start(n + 1, 0);
  for (const auto &e : graph.edges) {
    ++start[e.u + 1];
    ++start[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) start[v + 1] += start[v];
  std::vector<std::pair<Vertex, std::size_t>> adj(2 * m);
  {
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (std::size_t id = 0; id < m; ++id) {
      const auto &e = graph.edges[id];
      adj[fill[e.u]++] = {e.v, id};
      adj[fill[e.v]++] = {e.u, id};
    }
  }

  // Peel to the 2-core.
  std::vector<std::uint32_t> degree(n);
  std::vector<char> in_core(n, 1);
  std::vector<Vertex> queue;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = static_cast<std::uint32_t>(start[v + 1] - start[v]);
    if (degree[v] <= 1) {
      in_core[v] = 0;
      queue.push_back(static_cast<Vertex>(v));
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    for (std::size_t k = start[v]; k < start[v + 1]; ++k) {
      Vertex u = adj[k].first;
      if (in_core[u] && --degree[u] <= 1) {
        in_core[u] = 0;
        queue.push_back(u);
      }
    }
  }

  std::vector<std::size_t> node_of(n, kNone);
  for (std::size_t v = 0; v < n; ++v)
    if (in_core[v] && degree[v] >= 3) {
      node_of[v] = node_vertex_.size();
      node_vertex_.push_back(static_cast<Vertex>(v));
    }
  adjacency_.resize(node_vertex_.size());

  std::vector<char> edge_used(m, 0);
  std::vector<char> visited(n, 0);
  // Next core edge out of `v` other than `arrived`.
  auto next_edge = [&](Vertex v, std::size_t arrived) -> std::pair<Vertex, std::size_t> {
    for (std::size_t k = start[v]; k < start[v + 1]; ++k)
      if (adj[k].second != arrived && in_core[adj[k].first]) return adj[k];
    throw Error(ErrorCode::InvariantBreach, "2-core vertex without a second edge");
  };

  for (std::size_t node = 0; node < node_vertex_.size(); ++node) {
    const Vertex v = node_vertex_[node];
    visited[v] = 1;
    for (std::size_t k = start[v]; k < start[v + 1]; ++k) {
      auto [u, e] = adj[k];
      if (!in_core[u] || edge_used[e]) continue;
      Chain chain;
      chain.from = node;
      chain.weight = 1;
      edge_used[e] = 1;
      Vertex cur = u;
      std::size_t arrived = e;
      while (node_of[cur] == kNone) {
        visited[cur] = 1;
        chain.interior.push_back(cur);
        auto [next, f] = next_edge(cur, arrived);
        edge_used[f] = 1;
        ++chain.weight;
        cur = next;
        arrived = f;
      }
      chain.to = node_of[cur];
      const std::size_t id = chains_.size();
      if (chain.from != chain.to) {
        adjacency_[chain.from].push_back({id, chain.to});
        adjacency_[chain.to].push_back({id, chain.from});
      }
      chains_.push_back(std::move(chain));
    }
  }

  // Core components without branch vertices are plain cycles.
  for (std::size_t v = 0; v < n; ++v) {
    if (!in_core[v] || visited[v]) continue;
    std::vector<Vertex> cycle{static_cast<Vertex>(v)};
    visited[v] = 1;
    auto [cur, arrived] = next_edge(static_cast<Vertex>(v), kNone);
    while (cur != v) {
      visited[cur] = 1;
      cycle.push_back(cur);
      auto step = next_edge(cur, arrived);
      cur = step.first;
      arrived = step.second;
    }
    isolated_.push_back(std::move(cycle));
  }
}

bool CycleEnumerator::reachable(std::size_t from, std::size_t start, std::size_t banned_chain,
                                const std::vector<char> &on_path) const {
  std::vector<char> seen(node_vertex_.size(), 0);
  std::vector<std::size_t> frontier{from};
  seen[from] = 1;
  while (!frontier.empty()) {
    std::size_t v = frontier.back();
    frontier.pop_back();
    for (auto [c, w] : adjacency_[v]) {
      if (c == banned_chain) continue;
      if (w == start) return true;
      if (w < start || on_path[w] || seen[w]) continue;
      seen[w] = 1;
      frontier.push_back(w);
    }
  }
  return false;
}

void CycleEnumerator::for_each(const std::function<bool(const FoundCycle &)> &visit) const {
  for (std::size_t id = 0; id < isolated_.size(); ++id)
    if (!visit(FoundCycle{FoundCycle::Shape::Isolated, isolated_[id].size(), id, 0, {}})) return;
  for (std::size_t id = 0; id < chains_.size(); ++id)
    if (chains_[id].from == chains_[id].to)
      if (!visit(FoundCycle{FoundCycle::Shape::Loop, chains_[id].weight, id, 0, {}})) return;

  struct Frame {
    std::size_t node;
    std::size_t next;
    std::size_t arrived;
  };
  const std::size_t nodes = node_vertex_.size();
  std::vector<char> on_path(nodes, 0);
  std::vector<Frame> frames;
  FoundCycle found;
  found.shape = FoundCycle::Shape::Walk;

  for (std::size_t s = 0; s < nodes; ++s) {
    found.start = s;
    found.walk.clear();
    u64 weight = 0;
    on_path[s] = 1;
    frames.assign(1, Frame{s, 0, kNone});
    while (!frames.empty()) {
      Frame &f = frames.back();
      const std::size_t v = f.node;
      if (f.next == adjacency_[v].size()) {
        if (v != s) {
          on_path[v] = 0;
          weight -= chains_[found.walk.back().first].weight;
          found.walk.pop_back();
        }
        frames.pop_back();
        continue;
      }
      auto [c, w] = adjacency_[v][f.next++];
      if (c == f.arrived) continue;
      const bool forward = chains_[c].from == v;
      if (w == s) {
        if (found.walk.empty() || found.walk.front().first > c) continue;
        found.walk.emplace_back(c, forward);
        found.length = weight + chains_[c].weight;
        const bool go_on = visit(found);
        found.walk.pop_back();
        if (!go_on) {
          on_path.assign(nodes, 0);
          return;
        }
        continue;
      }
      if (w < s || on_path[w] || !reachable(w, s, c, on_path)) continue;
      on_path[w] = 1;
      found.walk.emplace_back(c, forward);
      weight += chains_[c].weight;
      frames.push_back(Frame{w, 0, c});
    }
    on_path[s] = 0;
  }
}

std::vector<Vertex> CycleEnumerator::vertices(const FoundCycle &cycle) const {
  switch (cycle.shape) {
  case FoundCycle::Shape::Isolated: return isolated_[cycle.id];
  case FoundCycle::Shape::Loop: {
    const Chain &chain = chains_[cycle.id];
    std::vector<Vertex> out{node_vertex_[chain.from]};
    out.insert(out.end(), chain.interior.begin(), chain.interior.end());
    return out;
  }
  case FoundCycle::Shape::Walk: break;
  }
  std::vector<Vertex> out{node_vertex_[cycle.start]};
  for (std::size_t k = 0; k < cycle.walk.size(); ++k) {
    auto [c, forward] = cycle.walk[k];
    const Chain &chain = chains_[c];
    if (forward) out.insert(out.end(), chain.interior.begin(), chain.interior.end());
    else out.insert(out.end(), chain.interior.rbegin(), chain.interior.rend());
    if (k + 1 < cycle.walk.size()) out.push_back(node_vertex_[forward ? chain.to : chain.from]);
  }
  return out;
}

CycleSpectrum enumerate_cycles(const Graph &graph, u64 cap) {
  if (cap < 1) throw Error(ErrorCode::BadInput, "cycle cap must be >= 1");
  CycleEnumerator enumerator(graph);
  CycleSpectrum spectrum;
  enumerator.for_each([&](const FoundCycle &c) {
    if (spectrum.cycle_count == cap) {
      spectrum.truncated = true;
      return false;
    }
    spectrum.lengths.push_back(c.length);
    ++spectrum.cycle_count;
    return true;
  });
  std::sort(spectrum.lengths.begin(), spectrum.lengths.end());
  return spectrum;
}

std::string_view verdict_name(DistinctVerdict::Kind kind) {
  switch (kind) {
  case DistinctVerdict::Kind::Yes: return "Yes";
  case DistinctVerdict::Kind::No: return "No";
  case DistinctVerdict::Kind::Unknown: return "Unknown";
  }
  return "?";
}

DistinctVerdict has_distinct_cycle_lengths(const Graph &graph, u64 cap) {
  if (cap < 1) throw Error(ErrorCode::BadInput, "cycle cap must be >= 1");
  CycleEnumerator enumerator(graph);
  DistinctVerdict verdict;
  std::unordered_map<u64, FoundCycle> first_of_length;
  enumerator.for_each([&](const FoundCycle &c) {
    if (verdict.cycles_seen == cap) {
      verdict.kind = DistinctVerdict::Kind::Unknown;
      return false;
    }
    ++verdict.cycles_seen;
    auto [it, inserted] = first_of_length.try_emplace(c.length, c);
    if (inserted) return true;
    verdict.kind = DistinctVerdict::Kind::No;
    verdict.witness.emplace(enumerator.vertices(it->second), enumerator.vertices(c));
    return false;
  });
  return verdict;
}

namespace {

using Rows = std::vector<std::uint8_t>;

int pair_bit(int a, int b, int n) { return a * n - a * (a + 1) / 2 + (b - a - 1); }

Rows decode(std::uint32_t code, int n) {
  Rows rows(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (code >> pair_bit(a, b, n) & 1u) {
        rows[a] |= static_cast<std::uint8_t>(1u << b);
        rows[b] |= static_cast<std::uint8_t>(1u << a);
      }
  return rows;
}

// Records the lengths of cycles closed by a new edge a-b, i.e. a-b paths
// plus one. Fails on the first length already present.
bool add_closing_lengths(const Rows &rows, int at, int target, unsigned visited, int edges,
                         std::uint32_t &mask) {
  unsigned next = rows[at] & ~visited;
  while (next) {
    int w = std::countr_zero(next);
    next &= next - 1;
    if (w == target) {
      std::uint32_t bit = 1u << (edges + 2);
      if (mask & bit) return false;
      mask |= bit;
      continue;
    }
    if (!add_closing_lengths(rows, w, target, visited | 1u << w, edges + 1, mask)) return false;
  }
  return true;
}

} // namespace

std::uint32_t canonical_code(const Rows &rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = std::popcount(static_cast<unsigned>(rows[v]));

  // Refine by sorted neighbor colors until the partition is stable.
  int classes = 0;
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> around;
      for (int w = 0; w < n; ++w)
        if (rows[v] >> w & 1u) around.push_back(color[w]);
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    if (static_cast<int>(distinct.size()) == classes) break;
    classes = static_cast<int>(distinct.size());
  }

  std::vector<int> slot_color(n);
  {
    std::vector<int> sorted = color;
    std::sort(sorted.begin(), sorted.end());
    slot_color = sorted;
  }

  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  std::vector<int> position(n, -1);
  unsigned used = 0;
  auto assign = [&](auto &&self, int slot) -> void {
    if (slot == n) {
      std::uint32_t code = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (rows[a] >> b & 1u) {
            int pa = position[a], pb = position[b];
            code |= 1u << pair_bit(std::min(pa, pb), std::max(pa, pb), n);
          }
      best = std::min(best, code);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used >> v & 1u || color[v] != slot_color[slot]) continue;
      used |= 1u << v;
      position[v] = slot;
      self(self, slot + 1);
      used &= ~(1u << v);
    }
  };
  assign(assign, 0);
  return best;
}

ExtremalResult max_edges_distinct_cycles(int n, u64 budget) {
  if (n < kMinExtremalN || n > kMaxExtremalN)
    throw Error(ErrorCode::OutOfRange, "exhaustive search supports 3 <= n <= 8, got " + std::to_string(n));
  ExtremalResult result;
  result.n = n;
  result.exhaustive = true;

  // canonical code -> bitmask of cycle lengths present
  std::map<std::uint32_t, std::uint32_t> level{{0u, 0u}};
  result.classes_per_edge_count.push_back(1);
  for (;;) {
    std::map<std::uint32_t, std::uint32_t> next;
    bool out_of_budget = false;
    for (const auto &[code, mask] : level) {
      Rows rows = decode(code, n);
      for (int a = 0; a < n && !out_of_budget; ++a)
        for (int b = a + 1; b < n; ++b) {
          if (rows[a] >> b & 1u) continue;
          if (result.candidates_checked == budget) {
            out_of_budget = true;
            break;
          }
          ++result.candidates_checked;
          std::uint32_t grown = mask;
          if (!add_closing_lengths(rows, a, b, 1u << a, 0, grown)) continue;
          Rows bigger = rows;
          bigger[a] |= static_cast<std::uint8_t>(1u << b);
          bigger[b] |= static_cast<std::uint8_t>(1u << a);
          next.emplace(canonical_code(bigger), grown);
        }
      if (out_of_budget) break;
    }
    if (out_of_budget) {
      result.exhaustive = false;
      break;
    }
    if (next.empty()) break;
    level = std::move(next);
    result.classes_per_edge_count.push_back(level.size());
  }

  result.max_edges = static_cast<int>(result.classes_per_edge_count.size()) - 1;
  const std::uint32_t witness = level.begin()->first;
  result.witness.vertex_count = static_cast<Vertex>(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (witness >> pair_bit(a, b, n) & 1u) result.witness.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
  return result;
}

} // namespace dcl
