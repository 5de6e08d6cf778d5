#include "mag/digraph.hpp"

#include <algorithm>
#include <ostream>

namespace mag {

std::vector<std::pair<VertexId, VertexId>> DigraphView::sorted_edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(mag_->edge_count());
  for (const MagEdge& e : mag_->edges()) {
    out.emplace_back(encode(e.origin), encode(e.destination));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<VertexId, VertexId> edge_to_digraph(const Mag& m, const MagEdge& e) {
  return {m.aspects().encode(e.origin), m.aspects().encode(e.destination)};
}

MagEdge digraph_edge_to_mag(const Mag& m, std::pair<VertexId, VertexId> s) {
  return MagEdge(m.aspects().decode(s.first), m.aspects().decode(s.second));
}

void export_digraph(const Mag& m, ExportFormat format, std::ostream& os) {
  const AspectList& aspects = m.aspects();
  const DigraphView g(m);
  const auto edges = g.sorted_edges();

  auto label = [&](VertexId id) { return aspects.format_vertex(aspects.decode(id)); };

  if (format == ExportFormat::dot) {
    os << "digraph {\n";
    for (VertexId id = 0; id < g.vertex_count(); ++id) {
      os << "  \"" << label(id) << "\";\n";
    }
    for (const auto& [a, b] : edges) {
      os << "  \"" << label(a) << "\" -> \"" << label(b) << "\";\n";
    }
    os << "}\n";
  } else {
    for (const auto& [a, b] : edges) {
      os << label(a) << '\t' << label(b) << '\n';
    }
  }
  if (!os) throw IoError("failed to write digraph export");
}

}  // namespace mag
