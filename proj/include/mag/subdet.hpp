#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mag/mag.hpp"

namespace mag {

/// A nonempty proper sublist of aspect positions, in their original order.
/// Canonically encoded as a bitmask in [1, 2^p - 2] where bit n marks the
/// (0-based) aspect position n as kept. Orders up to 63 are supported.
class SubDetermination {
 public:
  SubDetermination(std::uint64_t mask, std::size_t order);

  static SubDetermination from_kept(std::span<const AspectIndex> kept, std::size_t order);

  std::uint64_t mask() const noexcept { return mask_; }
  std::size_t full_order() const noexcept { return order_; }
  std::size_t sub_order() const noexcept { return kept_.size(); }
  std::span<const AspectIndex> kept() const noexcept { return kept_; }
  bool keeps(AspectIndex n) const noexcept { return n < order_ && (mask_ >> n & 1) != 0; }

  friend bool operator==(const SubDetermination&, const SubDetermination&) = default;

 private:
  std::uint64_t mask_;
  std::size_t order_;
  std::vector<AspectIndex> kept_;  // ascending
};

/// All 2^p - 2 sub-determinations of an order-p graph, in ascending
/// bitmask order. Empty for p = 1.
std::vector<SubDetermination> enumerate_subdeterminations(std::size_t order);

/// Projection of a composite vertex onto the kept aspect positions.
CompositeVertex sub_vertex(const SubDetermination& zeta, const CompositeVertex& u);

/// Coordinate-wise projection of an edge. Returns nullopt when the two
/// endpoints project to the same sub-determined vertex, i.e. the image
/// would be a self-loop and is excluded from the sub-determined edge set.
std::optional<MagEdge> sub_edge(const SubDetermination& zeta, const MagEdge& e);

/// Aspect list restricted to the kept positions, order preserved.
AspectList sub_aspects(const AspectList& aspects, const SubDetermination& zeta);

/// "(b,*)" rendering of a sub-determined vertex: labels in kept positions,
/// '*' in dropped ones.
std::string format_sub_vertex(const AspectList& aspects, const SubDetermination& zeta,
                              const CompositeVertex& sub);

struct SubMagResult {
  Mag mag;
  std::size_t dropped_self_loops = 0;
  std::size_t merged_edges = 0;
};

/// The sub-determined graph: kept aspects plus the projected edge set,
/// with self-loop images dropped and duplicate images merged. The counts
/// satisfy mag.edge_count() + dropped_self_loops + merged_edges ==
/// source.edge_count().
SubMagResult sub_mag(const Mag& source, const SubDetermination& zeta);

/// Sub-determination keeping only the first aspect: the classical
/// aggregated directed graph. Requires order >= 2.
SubMagResult aggregate(const Mag& source);

}  // namespace mag
