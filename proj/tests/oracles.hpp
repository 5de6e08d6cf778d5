#pragma once

// Reference implementations used to cross-check the library: exhaustive
// simple-path and cycle enumeration over raw coordinate tuples. These
// deliberately avoid the library's id encoding, adjacency indexes and
// search routines.

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mag/digraph.hpp"
#include "mag/mag.hpp"
#include "mag/subdet.hpp"
#include "mag/traversal.hpp"

namespace oracle {

using Tuple = std::vector<mag::ElemIndex>;
using TupleEdge = std::pair<Tuple, Tuple>;

inline std::vector<TupleEdge> edges_of(const mag::Mag& m) {
  std::vector<TupleEdge> out;
  out.reserve(m.edge_count());
  for (const mag::MagEdge& e : m.edges()) {
    out.emplace_back(e.origin.coords, e.destination.coords);
  }
  return out;
}

/// Edge-incident vertices and adjacency, indexed by tuple order.
struct Graph {
  std::vector<Tuple> verts;  // sorted, distinct
  std::map<Tuple, std::size_t> index;
  std::vector<std::vector<std::size_t>> adj;

  static Graph build(const std::vector<TupleEdge>& edges) {
    Graph g;
    for (const TupleEdge& e : edges) {
      g.index.emplace(e.first, 0);
      g.index.emplace(e.second, 0);
    }
    for (auto& [t, i] : g.index) {
      i = g.verts.size();
      g.verts.push_back(t);
    }
    g.adj.resize(g.verts.size());
    for (const TupleEdge& e : edges) {
      std::size_t a = g.index.at(e.first);
      std::size_t b = g.index.at(e.second);
      bool dup = false;
      for (std::size_t x : g.adj[a]) dup = dup || x == b;
      if (!dup) g.adj[a].push_back(b);
    }
    return g;
  }
};

namespace detail {

inline void shortest_simple_path(const Graph& g, std::size_t cur, std::size_t target,
                                 std::vector<bool>& visited, std::uint64_t len,
                                 std::optional<std::uint64_t>& best) {
  if (cur == target) {
    if (!best || len < *best) best = len;
    return;
  }
  if (best && len + 1 >= *best) return;  // cannot improve
  for (std::size_t next : g.adj[cur]) {
    if (visited[next]) continue;
    visited[next] = true;
    shortest_simple_path(g, next, target, visited, len + 1, best);
    visited[next] = false;
  }
}

inline void shortest_cycle_from(const Graph& g, std::size_t root, std::size_t cur,
                                std::vector<bool>& visited, std::uint64_t len,
                                std::optional<std::uint64_t>& best) {
  if (best && len + 1 >= *best) return;
  for (std::size_t next : g.adj[cur]) {
    if (next == root) {
      if (!best || len + 1 < *best) best = len + 1;
      continue;
    }
    if (visited[next]) continue;
    visited[next] = true;
    shortest_cycle_from(g, root, next, visited, len + 1, best);
    visited[next] = false;
  }
}

}  // namespace detail

/// Minimal length over all simple paths from one tuple to another; 0 when
/// they are equal, nullopt when no path exists (or a tuple is not
/// edge-incident).
inline std::optional<std::uint64_t> distance(const Graph& g, const Tuple& from,
                                             const Tuple& to) {
  if (from == to) return 0;
  auto af = g.index.find(from);
  auto at = g.index.find(to);
  if (af == g.index.end() || at == g.index.end()) return std::nullopt;
  std::optional<std::uint64_t> best;
  std::vector<bool> visited(g.verts.size(), false);
  visited[af->second] = true;
  detail::shortest_simple_path(g, af->second, at->second, visited, 0, best);
  return best;
}

/// Minimal length over all simple cycles; nullopt when acyclic.
inline std::optional<std::uint64_t> girth(const Graph& g) {
  std::optional<std::uint64_t> best;
  for (std::size_t s = 0; s < g.verts.size(); ++s) {
    std::vector<bool> visited(g.verts.size(), false);
    visited[s] = true;
    detail::shortest_cycle_from(g, s, s, visited, 0, best);
  }
  return best;
}

inline Tuple project(const Tuple& t, std::span<const mag::AspectIndex> kept) {
  Tuple out;
  out.reserve(kept.size());
  for (mag::AspectIndex n : kept) out.push_back(t[n]);
  return out;
}

/// Every composite vertex of the shape, enumerated by odometer.
inline std::vector<Tuple> all_vertices(const mag::AspectList& aspects) {
  std::vector<Tuple> out;
  Tuple cur(aspects.order(), 0);
  const mag::VertexId total = aspects.vertex_count();
  for (mag::VertexId i = 0; i < total; ++i) {
    out.push_back(cur);
    for (std::size_t n = 0; n < cur.size(); ++n) {
      if (++cur[n] < aspects.size(n)) break;
      cur[n] = 0;
    }
  }
  return out;
}

struct WeakSpec {
  bool sub = false;
  Tuple coords;  // full tuple, or kept coordinates when sub
};

/// Weak distance by definition: the minimum, over all representatives of
/// each sub-determined endpoint, of the simple-path distance (0 when the
/// two representatives coincide).
inline std::optional<std::uint64_t> weak_distance(const mag::Mag& m,
                                                  std::span<const mag::AspectIndex> kept,
                                                  const WeakSpec& from, const WeakSpec& to) {
  const Graph g = Graph::build(edges_of(m));
  const std::vector<Tuple> universe = all_vertices(m.aspects());
  std::vector<Tuple> from_reps, to_reps;
  for (const Tuple& t : universe) {
    if (from.sub ? project(t, kept) == from.coords : t == from.coords) {
      from_reps.push_back(t);
    }
    if (to.sub ? project(t, kept) == to.coords : t == to.coords) {
      to_reps.push_back(t);
    }
  }
  std::optional<std::uint64_t> best;
  for (const Tuple& u : from_reps) {
    for (const Tuple& v : to_reps) {
      const auto d = distance(g, u, v);
      if (d && (!best || *d < *best)) best = *d;
    }
  }
  return best;
}

/// Walk classifier over digraph ids, mirroring the class lattice but
/// implemented directly against the digraph view.
inline mag::WalkKind classify_digraph_walk(const mag::DigraphView& g,
                                           std::span<const mag::VertexId> ids) {
  if (ids.empty()) return mag::WalkKind::invalid;
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
    if (!g.has_edge(ids[i], ids[i + 1])) return mag::WalkKind::invalid;
  }
  if (ids.size() == 1) return mag::WalkKind::path;
  const bool closed = ids.front() == ids.back();
  auto distinct = [](std::vector<mag::VertexId> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (closed && distinct({ids.begin(), ids.end() - 1})) return mag::WalkKind::cycle;
  if (!closed && distinct({ids.begin(), ids.end()})) return mag::WalkKind::path;
  std::vector<std::pair<mag::VertexId, mag::VertexId>> steps;
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) steps.emplace_back(ids[i], ids[i + 1]);
  std::sort(steps.begin(), steps.end());
  if (std::adjacent_find(steps.begin(), steps.end()) == steps.end()) {
    return closed ? mag::WalkKind::closed_trail : mag::WalkKind::trail;
  }
  return mag::WalkKind::walk;
}

}  // namespace oracle
