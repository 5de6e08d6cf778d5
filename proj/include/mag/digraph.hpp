#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mag/mag.hpp"

namespace mag {

/// The directed graph over composite vertices that a graph is isomorphic
/// to: ids in [0, vertex_count()) under the mixed-radix encoding, one
/// digraph edge per graph edge.
///
/// A non-owning view: adjacency is served by the underlying Mag, whose
/// lifetime must cover the view's. Only vertices incident to edges are
/// materialized in the adjacency maps; vertex_count() still reports the
/// full product of aspect sizes.
class DigraphView {
 public:
  explicit DigraphView(const Mag& source) : mag_(&source) {}

  const Mag& source() const noexcept { return *mag_; }

  VertexId vertex_count() const noexcept { return mag_->composite_vertex_count(); }
  std::size_t edge_count() const noexcept { return mag_->edge_count(); }

  bool has_edge(VertexId from, VertexId to) const { return mag_->has_edge_ids(from, to); }
  std::span<const VertexId> out_neighbors(VertexId id) const { return mag_->out_neighbors(id); }
  std::span<const VertexId> in_neighbors(VertexId id) const { return mag_->in_neighbors(id); }
  const std::vector<VertexId>& incident_vertices() const { return mag_->incident_vertices(); }

  VertexId encode(const CompositeVertex& u) const { return mag_->aspects().encode(u); }
  CompositeVertex decode(VertexId id) const { return mag_->aspects().decode(id); }

  /// Digraph edges as id pairs, sorted ascending.
  std::vector<std::pair<VertexId, VertexId>> sorted_edges() const;

 private:
  const Mag* mag_;
};

inline DigraphView to_digraph(const Mag& source) { return DigraphView(source); }

inline VertexId encode(const Mag& m, const CompositeVertex& u) {
  return m.aspects().encode(u);
}

inline CompositeVertex decode(const Mag& m, VertexId id) { return m.aspects().decode(id); }

/// The edge bijection between a graph and its composite-vertices digraph,
/// in both directions. Neither direction requires membership in E(H); the
/// mapping is defined on the whole edge space.
std::pair<VertexId, VertexId> edge_to_digraph(const Mag& m, const MagEdge& e);
MagEdge digraph_edge_to_mag(const Mag& m, std::pair<VertexId, VertexId> s);

enum class ExportFormat { dot, edgelist };

/// Deterministic digraph export. Vertices are labeled "(elem1,elem2,...)".
/// DOT lists every composite vertex in id order followed by the edges in
/// sorted id order; the edgelist emits one "src<TAB>dst" line per edge in
/// the same order.
void export_digraph(const Mag& m, ExportFormat format, std::ostream& os);

/// Per-aspect element bijections witnessing an isomorphism between two
/// graphs of the same shape: maps[n][i] is the index in the second graph's
/// aspect n of the image of element i of the first graph's aspect n.
struct MagIsomorphismWitness {
  std::vector<std::vector<ElemIndex>> maps;
};

enum class IsoStatus { isomorphic, not_isomorphic, budget_exceeded };

struct IsoOptions {
  /// Maximum number of candidate mapping tuples to test before giving up.
  std::uint64_t max_candidates = 1'000'000;
};

struct IsoResult {
  IsoStatus status = IsoStatus::not_isomorphic;
  std::optional<MagIsomorphismWitness> witness;
  std::uint64_t candidates_tested = 0;
};

/// True iff the witness has the right shape, each map is a bijection, and
/// it carries every edge of h onto an edge of k.
bool check_witness(const Mag& h, const Mag& k, const MagIsomorphismWitness& w);

/// Decides isomorphism between two graphs. Mismatched order, aspect sizes
/// or edge counts are rejected without search; otherwise the per-aspect
/// permutations are enumerated exhaustively (smallest aspects outermost)
/// up to the candidate budget. budget_exceeded means undecided, never
/// "not isomorphic".
IsoResult mags_isomorphic(const Mag& h, const Mag& k, const IsoOptions& options = {});

}  // namespace mag
