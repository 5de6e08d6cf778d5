#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mag/mag.hpp"
#include "mag/subdet.hpp"

namespace mag {

/// A walk given by its composite-vertex sequence; the edges are implied by
/// consecutive pairs. A single vertex is a zero-length walk.
struct Walk {
  std::vector<CompositeVertex> vertices;

  std::size_t length() const noexcept {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }

  friend bool operator==(const Walk&, const Walk&) = default;
};

enum class WalkKind { invalid, walk, trail, closed_trail, path, cycle };

/// True for every kind whose edges are all distinct.
bool is_trail_kind(WalkKind k);

struct WalkClass {
  WalkKind kind = WalkKind::invalid;
  std::string reason;  // set when kind == invalid
};

const char* to_string(WalkKind k);

/// Classifies a vertex sequence against a graph. Returns invalid (with a
/// reason) when some consecutive pair is not an edge; otherwise the most
/// specific of: cycle (closed, interior vertices distinct), path (all
/// vertices distinct; includes the single-vertex case), closed_trail /
/// trail (all edges distinct), walk. Throws on out-of-bounds vertices and
/// on an empty sequence.
WalkClass classify_walk(const Mag& m, std::span<const CompositeVertex> seq);

/// Walk mapped vertex-by-vertex onto digraph ids. Validates the walk.
std::vector<VertexId> walk_to_digraph(const Mag& m, const Walk& w);

/// Digraph id walk mapped back onto composite vertices. Validates the walk.
Walk digraph_walk_to_mag(const Mag& m, std::span<const VertexId> ids);

/// Projects a walk onto the sub-determined graph: every vertex through the
/// sub-determination, with steps whose endpoints collapse to the same
/// sub-determined vertex removed. The result is always a valid walk on
/// sub_mag(m, zeta), possibly a single vertex with no edges.
Walk project_walk(const Mag& m, const SubDetermination& zeta, const Walk& w);

/// Minimal-length path from one composite vertex to another, found by
/// breadth-first search over the composite-vertices digraph with sorted
/// adjacency, so ties resolve toward lower successor ids. from == to
/// yields the zero-length path. nullopt when unreachable.
std::optional<Walk> shortest_path(const Mag& m, const CompositeVertex& from,
                                  const CompositeVertex& to);

/// One endpoint of a weak shortest path: either an exact composite vertex
/// (all p coordinates) or a sub-determined one (coordinates of the kept
/// aspects only, standing for its whole equivalence class).
struct WeakEndpoint {
  static WeakEndpoint exact(CompositeVertex v) { return {false, std::move(v)}; }
  static WeakEndpoint any_of(CompositeVertex sub) { return {true, std::move(sub)}; }

  bool subdetermined = false;
  CompositeVertex coords;
};

/// Minimal-length path where sub-determined endpoints range over their
/// equivalence classes (multi-source and/or multi-target search). At least
/// one endpoint must be sub-determined. When the two endpoint classes
/// intersect the distance is zero and a shared representative is returned.
std::optional<Walk> weak_shortest_path(const Mag& m, const SubDetermination& zeta,
                                       const WeakEndpoint& from, const WeakEndpoint& to);

/// Length of the shortest cycle; nullopt when the graph is acyclic.
std::optional<std::uint64_t> girth(const Mag& m);

}  // namespace mag
