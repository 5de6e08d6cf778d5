#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "mag/aspects.hpp"
#include "mag/types.hpp"

namespace mag {

/// A multiaspect graph H = (A, E): an aspect list plus a set of directed
/// edges over its composite vertices. Self-loops are rejected at build
/// time; duplicate input edges are dropped and counted.
///
/// Immutable after construction. Out-adjacency is indexed eagerly by
/// origin vertex id; the reverse index is built lazily on the first
/// in-degree / in-adjacency query, under internal synchronization, so all
/// accessors are safe for concurrent use.
class Mag {
 public:
  Mag(AspectList aspects, const std::vector<MagEdge>& edges);

  Mag(const Mag& other);
  Mag& operator=(const Mag& other);
  Mag(Mag&&) noexcept = default;
  Mag& operator=(Mag&&) noexcept = default;

  const AspectList& aspects() const noexcept { return aspects_; }
  std::size_t order() const noexcept { return aspects_.order(); }

  /// Deduplicated edges, in first-insertion order.
  const std::vector<MagEdge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t duplicates_dropped() const noexcept { return duplicates_; }
  VertexId composite_vertex_count() const noexcept { return aspects_.vertex_count(); }

  bool contains_edge(const MagEdge& e) const;
  bool has_edge_ids(VertexId from, VertexId to) const;

  /// Number of edges originating at (out) or destined to (in) u.
  std::size_t composite_degree(const CompositeVertex& u, Direction d) const;

  /// Number of edges whose origin (out) or destination (in) element of
  /// aspect n equals x.
  std::size_t aspect_degree(AspectIndex n, ElemIndex x, Direction d) const;

  /// True iff the edge (u, v) is in E(H). Directed: u origin, v destination.
  bool composite_adjacent(const CompositeVertex& u, const CompositeVertex& v) const;

  /// True iff some edge contains both x and y among its two aspect-n
  /// elements. With x == y this degenerates to x appearing on either side
  /// of some edge, so an element can be adjacent to itself.
  bool aspect_adjacent(AspectIndex n, ElemIndex x, ElemIndex y) const;

  /// True iff e1 and e2 (both required to be in E(H)) are incident to a
  /// common composite vertex.
  bool edges_adjacent(const MagEdge& e1, const MagEdge& e2) const;

  /// Sorted destination ids of edges leaving id; empty for non-origins.
  std::span<const VertexId> out_neighbors(VertexId id) const;

  /// Sorted origin ids of edges entering id; triggers the lazy reverse index.
  std::span<const VertexId> in_neighbors(VertexId id) const;

  /// Sorted, distinct ids of composite vertices incident to at least one edge.
  const std::vector<VertexId>& incident_vertices() const noexcept { return incident_; }

 private:
  using AdjMap = std::unordered_map<VertexId, std::vector<VertexId>>;

  struct ReverseIndex {
    std::once_flag once;
    AdjMap adj;
  };

  const AdjMap& in_adjacency() const;

  AspectList aspects_;
  std::vector<MagEdge> edges_;
  std::size_t duplicates_ = 0;
  AdjMap out_adj_;
  std::vector<VertexId> incident_;
  std::vector<std::vector<std::size_t>> aspect_out_deg_;  // [aspect][element]
  std::vector<std::vector<std::size_t>> aspect_in_deg_;
  std::unique_ptr<ReverseIndex> reverse_;
};

}  // namespace mag
