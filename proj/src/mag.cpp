#include "mag/mag.hpp"

#include <algorithm>
#include <unordered_set>

namespace mag {

namespace {

struct IdPairHash {
  std::size_t operator()(const std::pair<VertexId, VertexId>& p) const noexcept {
    // splitmix64 over the combined halves
    std::uint64_t x = p.first * 0x9e3779b97f4a7c15ULL ^ (p.second + 0x7f4a7c15u);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

bool sorted_contains(std::span<const VertexId> v, VertexId x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

Mag::Mag(AspectList aspects, const std::vector<MagEdge>& edges)
    : aspects_(std::move(aspects)), reverse_(std::make_unique<ReverseIndex>()) {
  const std::size_t p = aspects_.order();
  aspect_out_deg_.resize(p);
  aspect_in_deg_.resize(p);
  for (std::size_t n = 0; n < p; ++n) {
    aspect_out_deg_[n].assign(aspects_.size(n), 0);
    aspect_in_deg_[n].assign(aspects_.size(n), 0);
  }

  std::unordered_set<std::pair<VertexId, VertexId>, IdPairHash> seen;
  seen.reserve(edges.size());
  edges_.reserve(edges.size());
  for (const MagEdge& e : edges) {
    aspects_.check_vertex(e.origin);
    aspects_.check_vertex(e.destination);
    if (e.origin == e.destination) {
      throw SelfLoopError("self-loop edge at " + aspects_.format_vertex(e.origin));
    }
    const VertexId o = aspects_.encode(e.origin);
    const VertexId d = aspects_.encode(e.destination);
    if (!seen.emplace(o, d).second) {
      ++duplicates_;
      continue;
    }
    edges_.push_back(e);
    out_adj_[o].push_back(d);
    incident_.push_back(o);
    incident_.push_back(d);
    for (std::size_t n = 0; n < p; ++n) {
      ++aspect_out_deg_[n][e.origin.coords[n]];
      ++aspect_in_deg_[n][e.destination.coords[n]];
    }
  }
  for (auto& [id, dests] : out_adj_) std::sort(dests.begin(), dests.end());
  std::sort(incident_.begin(), incident_.end());
  incident_.erase(std::unique(incident_.begin(), incident_.end()), incident_.end());
}

Mag::Mag(const Mag& other)
    : aspects_(other.aspects_),
      edges_(other.edges_),
      duplicates_(other.duplicates_),
      out_adj_(other.out_adj_),
      incident_(other.incident_),
      aspect_out_deg_(other.aspect_out_deg_),
      aspect_in_deg_(other.aspect_in_deg_),
      reverse_(std::make_unique<ReverseIndex>()) {}

Mag& Mag::operator=(const Mag& other) {
  if (this != &other) {
    Mag tmp(other);
    *this = std::move(tmp);
  }
  return *this;
}

const Mag::AdjMap& Mag::in_adjacency() const {
  std::call_once(reverse_->once, [this] {
    for (const MagEdge& e : edges_) {
      reverse_->adj[aspects_.encode(e.destination)].push_back(aspects_.encode(e.origin));
    }
    for (auto& [id, origins] : reverse_->adj) std::sort(origins.begin(), origins.end());
  });
  return reverse_->adj;
}

bool Mag::contains_edge(const MagEdge& e) const {
  aspects_.check_vertex(e.origin);
  aspects_.check_vertex(e.destination);
  return has_edge_ids(aspects_.encode(e.origin), aspects_.encode(e.destination));
}

bool Mag::has_edge_ids(VertexId from, VertexId to) const {
  auto it = out_adj_.find(from);
  return it != out_adj_.end() && sorted_contains(it->second, to);
}

std::size_t Mag::composite_degree(const CompositeVertex& u, Direction d) const {
  aspects_.check_vertex(u);
  const VertexId id = aspects_.encode(u);
  return d == Direction::out ? out_neighbors(id).size() : in_neighbors(id).size();
}

std::size_t Mag::aspect_degree(AspectIndex n, ElemIndex x, Direction d) const {
  if (x >= aspects_.size(n)) {  // size() also bounds-checks n
    throw OutOfBoundsError("element index " + std::to_string(x) +
                           " out of range for aspect \"" + aspects_.name(n) + "\"");
  }
  return d == Direction::out ? aspect_out_deg_[n][x] : aspect_in_deg_[n][x];
}

bool Mag::composite_adjacent(const CompositeVertex& u, const CompositeVertex& v) const {
  aspects_.check_vertex(u);
  aspects_.check_vertex(v);
  return has_edge_ids(aspects_.encode(u), aspects_.encode(v));
}

bool Mag::aspect_adjacent(AspectIndex n, ElemIndex x, ElemIndex y) const {
  const std::size_t tau = aspects_.size(n);
  if (x >= tau || y >= tau) {
    throw OutOfBoundsError("element index out of range for aspect \"" +
                           aspects_.name(n) + "\"");
  }
  for (const MagEdge& e : edges_) {
    const ElemIndex a = e.origin.coords[n];
    const ElemIndex b = e.destination.coords[n];
    if ((x == a || x == b) && (y == a || y == b)) return true;
  }
  return false;
}

bool Mag::edges_adjacent(const MagEdge& e1, const MagEdge& e2) const {
  if (!contains_edge(e1)) {
    throw EdgeNotInMagError("edge " + aspects_.format_vertex(e1.origin) + " -> " +
                            aspects_.format_vertex(e1.destination) + " is not in the graph");
  }
  if (!contains_edge(e2)) {
    throw EdgeNotInMagError("edge " + aspects_.format_vertex(e2.origin) + " -> " +
                            aspects_.format_vertex(e2.destination) + " is not in the graph");
  }
  const VertexId ends1[2] = {aspects_.encode(e1.origin), aspects_.encode(e1.destination)};
  const VertexId ends2[2] = {aspects_.encode(e2.origin), aspects_.encode(e2.destination)};
  for (VertexId a : ends1) {
    for (VertexId b : ends2) {
      if (a == b) return true;
    }
  }
  return false;
}

std::span<const VertexId> Mag::out_neighbors(VertexId id) const {
  auto it = out_adj_.find(id);
  if (it == out_adj_.end()) return {};
  return it->second;
}

std::span<const VertexId> Mag::in_neighbors(VertexId id) const {
  const AdjMap& in = in_adjacency();
  auto it = in.find(id);
  if (it == in.end()) return {};
  return it->second;
}

}  // namespace mag
