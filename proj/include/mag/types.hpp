#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "mag/errors.hpp"

namespace mag {

using ElemIndex = std::uint32_t;   // element position within one aspect
using AspectIndex = std::size_t;   // aspect position, 0-based
using VertexId = std::uint64_t;    // dense composite-vertex id (mixed radix)

enum class Direction { in, out };
enum class Side { origin, destination };

/// A composite vertex: one element index per aspect, in aspect order.
struct CompositeVertex {
  std::vector<ElemIndex> coords;

  CompositeVertex() = default;
  explicit CompositeVertex(std::vector<ElemIndex> c) : coords(std::move(c)) {}
  CompositeVertex(std::initializer_list<ElemIndex> c) : coords(c) {}

  std::size_t order() const noexcept { return coords.size(); }
  ElemIndex operator[](AspectIndex n) const { return coords[n]; }

  friend bool operator==(const CompositeVertex&, const CompositeVertex&) = default;
  friend auto operator<=>(const CompositeVertex&, const CompositeVertex&) = default;
};

/// A directed edge, i.e. a 2p-tuple split into its origin and destination
/// composite vertices.
struct MagEdge {
  CompositeVertex origin;
  CompositeVertex destination;

  MagEdge() = default;
  MagEdge(CompositeVertex o, CompositeVertex d)
      : origin(std::move(o)), destination(std::move(d)) {}

  friend bool operator==(const MagEdge&, const MagEdge&) = default;
  friend auto operator<=>(const MagEdge&, const MagEdge&) = default;
};

/// Origin composite vertex of an edge.
inline const CompositeVertex& pi_o(const MagEdge& e) noexcept { return e.origin; }

/// Destination composite vertex of an edge.
inline const CompositeVertex& pi_d(const MagEdge& e) noexcept { return e.destination; }

/// Single element of an edge: the n-th origin element when side is origin,
/// the n-th destination element otherwise. Aspect positions are 0-based.
inline ElemIndex pi_n(const MagEdge& e, AspectIndex n, Side side) {
  const CompositeVertex& v = side == Side::origin ? e.origin : e.destination;
  if (n >= v.order()) {
    throw BadAspectIndexError("aspect position " + std::to_string(n) +
                              " out of range for order " + std::to_string(v.order()));
  }
  return v.coords[n];
}

}  // namespace mag
