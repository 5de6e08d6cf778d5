#include "mag/traversal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace mag {

namespace {

struct BfsState {
  std::unordered_map<VertexId, std::uint64_t> dist;
  std::unordered_map<VertexId, VertexId> parent;  // absent for sources
};

// Multi-source BFS over the composite-vertices digraph. Sources must be
// sorted ascending; neighbors are visited in ascending id order, so the
// parent of every vertex is deterministic.
BfsState bfs(const Mag& m, std::span<const VertexId> sources) {
  BfsState s;
  std::deque<VertexId> queue;
  for (VertexId src : sources) {
    if (s.dist.emplace(src, 0).second) queue.push_back(src);
  }
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    const std::uint64_t du = s.dist[u];
    for (VertexId v : m.out_neighbors(u)) {
      if (s.dist.emplace(v, du + 1).second) {
        s.parent.emplace(v, u);
        queue.push_back(v);
      }
    }
  }
  return s;
}

Walk reconstruct(const Mag& m, const BfsState& s, VertexId target) {
  std::vector<VertexId> ids{target};
  for (auto it = s.parent.find(target); it != s.parent.end(); it = s.parent.find(ids.back())) {
    ids.push_back(it->second);
  }
  std::reverse(ids.begin(), ids.end());
  Walk w;
  w.vertices.reserve(ids.size());
  for (VertexId id : ids) w.vertices.push_back(m.aspects().decode(id));
  return w;
}

std::vector<VertexId> encode_and_validate(const Mag& m,
                                          std::span<const CompositeVertex> seq) {
  if (seq.empty()) throw InvalidWalkError("a walk needs at least one composite vertex");
  std::vector<VertexId> ids;
  ids.reserve(seq.size());
  for (const CompositeVertex& v : seq) ids.push_back(m.aspects().encode(v));
  return ids;
}

WalkKind classify_ids(const Mag& m, std::span<const VertexId> ids, std::string* reason) {
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
    if (!m.has_edge_ids(ids[i], ids[i + 1])) {
      if (reason) {
        *reason = "step " + std::to_string(i + 1) + ": " +
                  m.aspects().format_vertex(m.aspects().decode(ids[i])) + " -> " +
                  m.aspects().format_vertex(m.aspects().decode(ids[i + 1])) +
                  " is not an edge";
      }
      return WalkKind::invalid;
    }
  }
  if (ids.size() == 1) return WalkKind::path;  // zero-length path

  const bool closed = ids.front() == ids.back();

  std::unordered_set<VertexId> vertex_set(ids.begin(), ids.end());
  const bool vertices_distinct = vertex_set.size() == ids.size();
  if (closed) {
    std::unordered_set<VertexId> interior(ids.begin(), ids.end() - 1);
    if (interior.size() == ids.size() - 1) return WalkKind::cycle;
  } else if (vertices_distinct) {
    return WalkKind::path;
  }

  std::vector<std::pair<VertexId, VertexId>> steps;
  steps.reserve(ids.size() - 1);
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) steps.emplace_back(ids[i], ids[i + 1]);
  std::sort(steps.begin(), steps.end());
  const bool edges_distinct = std::adjacent_find(steps.begin(), steps.end()) == steps.end();
  if (edges_distinct) return closed ? WalkKind::closed_trail : WalkKind::trail;
  return WalkKind::walk;
}

void require_valid_walk(const Mag& m, std::span<const VertexId> ids) {
  std::string reason;
  if (classify_ids(m, ids, &reason) == WalkKind::invalid) throw InvalidWalkError(reason);
}

}  // namespace

bool is_trail_kind(WalkKind k) {
  return k == WalkKind::trail || k == WalkKind::closed_trail || k == WalkKind::path ||
         k == WalkKind::cycle;
}

const char* to_string(WalkKind k) {
  switch (k) {
    case WalkKind::invalid: return "invalid";
    case WalkKind::walk: return "walk";
    case WalkKind::trail: return "trail";
    case WalkKind::closed_trail: return "closed-trail";
    case WalkKind::path: return "path";
    case WalkKind::cycle: return "cycle";
  }
  return "invalid";
}

WalkClass classify_walk(const Mag& m, std::span<const CompositeVertex> seq) {
  const std::vector<VertexId> ids = encode_and_validate(m, seq);
  WalkClass out;
  out.kind = classify_ids(m, ids, &out.reason);
  return out;
}

std::vector<VertexId> walk_to_digraph(const Mag& m, const Walk& w) {
  std::vector<VertexId> ids = encode_and_validate(m, w.vertices);
  require_valid_walk(m, ids);
  return ids;
}

Walk digraph_walk_to_mag(const Mag& m, std::span<const VertexId> ids) {
  if (ids.empty()) throw InvalidWalkError("a walk needs at least one vertex id");
  Walk w;
  w.vertices.reserve(ids.size());
  for (VertexId id : ids) w.vertices.push_back(m.aspects().decode(id));
  require_valid_walk(m, ids);
  return w;
}

Walk project_walk(const Mag& m, const SubDetermination& zeta, const Walk& w) {
  const std::vector<VertexId> ids = encode_and_validate(m, w.vertices);
  require_valid_walk(m, ids);
  Walk out;
  out.vertices.push_back(sub_vertex(zeta, w.vertices.front()));
  for (std::size_t i = 1; i < w.vertices.size(); ++i) {
    CompositeVertex s = sub_vertex(zeta, w.vertices[i]);
    // A step whose endpoints collapse to the same sub-determined vertex
    // would be a self-loop in the projection; it is skipped entirely.
    if (s != out.vertices.back()) out.vertices.push_back(std::move(s));
  }
  return out;
}

std::optional<Walk> shortest_path(const Mag& m, const CompositeVertex& from,
                                  const CompositeVertex& to) {
  const VertexId src = m.aspects().encode(from);
  const VertexId dst = m.aspects().encode(to);
  if (src == dst) return Walk{{from}};
  const VertexId sources[] = {src};
  const BfsState s = bfs(m, sources);
  if (!s.dist.contains(dst)) return std::nullopt;
  return reconstruct(m, s, dst);
}

namespace {

void check_endpoint(const Mag& m, const SubDetermination& zeta, const WeakEndpoint& ep) {
  if (ep.subdetermined) {
    if (ep.coords.order() != zeta.sub_order()) {
      throw BadSubVertexError("sub-determined endpoint has " +
                              std::to_string(ep.coords.order()) +
                              " coordinates, expected " + std::to_string(zeta.sub_order()));
    }
    std::size_t k = 0;
    for (AspectIndex n : zeta.kept()) {
      if (ep.coords.coords[k] >= m.aspects().size(n)) {
        throw OutOfBoundsError("coordinate " + std::to_string(ep.coords.coords[k]) +
                               " out of range for aspect \"" + m.aspects().name(n) + "\"");
      }
      ++k;
    }
  } else {
    m.aspects().check_vertex(ep.coords);
  }
}

// Expands a sub-determined vertex to a full representative with every
// dropped coordinate set to zero.
CompositeVertex default_representative(const SubDetermination& zeta,
                                       const CompositeVertex& sub) {
  CompositeVertex full;
  full.coords.assign(zeta.full_order(), 0);
  std::size_t k = 0;
  for (AspectIndex n : zeta.kept()) full.coords[n] = sub.coords[k++];
  return full;
}

bool in_class(const SubDetermination& zeta, const WeakEndpoint& ep,
              const CompositeVertex& full) {
  if (!ep.subdetermined) return ep.coords == full;
  return sub_vertex(zeta, full) == ep.coords;
}

}  // namespace

std::optional<Walk> weak_shortest_path(const Mag& m, const SubDetermination& zeta,
                                       const WeakEndpoint& from, const WeakEndpoint& to) {
  if (zeta.full_order() != m.order()) {
    throw LengthMismatchError("sub-determination is for order " +
                              std::to_string(zeta.full_order()) + ", graph has order " +
                              std::to_string(m.order()));
  }
  if (!from.subdetermined && !to.subdetermined) {
    throw BadSubVertexError("a weak shortest path needs at least one sub-determined endpoint");
  }
  check_endpoint(m, zeta, from);
  check_endpoint(m, zeta, to);

  // Intersecting endpoint classes: a shared representative is a zero-length path.
  if (from.subdetermined && to.subdetermined) {
    if (from.coords == to.coords) {
      return Walk{{default_representative(zeta, from.coords)}};
    }
  } else if (from.subdetermined) {
    if (sub_vertex(zeta, to.coords) == from.coords) return Walk{{to.coords}};
  } else {
    if (sub_vertex(zeta, from.coords) == to.coords) return Walk{{from.coords}};
  }

  // Any path of length >= 1 starts at a vertex with an outgoing edge and
  // ends at one with an incoming edge, so representatives outside the
  // edge-incident set cannot improve the search.
  std::vector<VertexId> sources;
  if (from.subdetermined) {
    for (VertexId id : m.incident_vertices()) {
      if (in_class(zeta, from, m.aspects().decode(id))) sources.push_back(id);
    }
  } else {
    sources.push_back(m.aspects().encode(from.coords));
  }
  if (sources.empty()) return std::nullopt;

  const BfsState s = bfs(m, sources);

  std::optional<VertexId> best;
  std::uint64_t best_dist = 0;
  auto consider = [&](VertexId id) {
    auto it = s.dist.find(id);
    if (it == s.dist.end()) return;
    if (!best || it->second < best_dist || (it->second == best_dist && id < *best)) {
      best = id;
      best_dist = it->second;
    }
  };
  if (to.subdetermined) {
    for (VertexId id : m.incident_vertices()) {
      if (in_class(zeta, to, m.aspects().decode(id))) consider(id);
    }
  } else {
    consider(m.aspects().encode(to.coords));
  }
  if (!best) return std::nullopt;
  return reconstruct(m, s, *best);
}

std::optional<std::uint64_t> girth(const Mag& m) {
  std::optional<std::uint64_t> best;
  for (VertexId u : m.incident_vertices()) {
    const VertexId sources[] = {u};
    const BfsState s = bfs(m, sources);
    // A cycle through u closes over one of u's incoming edges (z, u).
    for (VertexId z : m.in_neighbors(u)) {
      auto it = s.dist.find(z);
      if (it == s.dist.end()) continue;
      const std::uint64_t len = it->second + 1;
      if (!best || len < *best) best = len;
    }
  }
  return best;
}

}  // namespace mag
