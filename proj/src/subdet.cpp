#include "mag/subdet.hpp"

#include <algorithm>
#include <sstream>

namespace mag {

SubDetermination::SubDetermination(std::uint64_t mask, std::size_t order)
    : mask_(mask), order_(order) {
  if (order < 1) throw EmptyAspectError("sub-determination of an order-0 graph");
  if (order > 63) {
    throw CapacityError("sub-determination masks support orders up to 63, got " +
                        std::to_string(order));
  }
  const std::uint64_t full = (std::uint64_t{1} << order) - 1;
  if (mask < 1 || mask > full - 1) {
    throw BadSubVertexError("sub-determination mask " + std::to_string(mask) +
                            " is not a nonempty proper subset of " + std::to_string(order) +
                            " aspects");
  }
  for (std::size_t n = 0; n < order; ++n) {
    if (mask >> n & 1) kept_.push_back(n);
  }
}

SubDetermination SubDetermination::from_kept(std::span<const AspectIndex> kept,
                                             std::size_t order) {
  if (order > 63) {
    throw CapacityError("sub-determination masks support orders up to 63, got " +
                        std::to_string(order));
  }
  std::uint64_t mask = 0;
  for (AspectIndex n : kept) {
    if (n >= order) {
      throw BadAspectIndexError("kept aspect position " + std::to_string(n) +
                                " out of range for order " + std::to_string(order));
    }
    mask |= std::uint64_t{1} << n;
  }
  return SubDetermination(mask, order);
}

std::vector<SubDetermination> enumerate_subdeterminations(std::size_t order) {
  if (order < 1) throw EmptyAspectError("sub-determination of an order-0 graph");
  if (order > 63) throw CapacityError("cannot enumerate sub-determinations beyond order 63");
  std::vector<SubDetermination> out;
  if (order == 1) return out;  // 2^1 - 2 = 0 ways
  const std::uint64_t full = (std::uint64_t{1} << order) - 1;
  out.reserve(full - 1);
  for (std::uint64_t mask = 1; mask <= full - 1; ++mask) {
    out.emplace_back(mask, order);
  }
  return out;
}

CompositeVertex sub_vertex(const SubDetermination& zeta, const CompositeVertex& u) {
  if (u.order() != zeta.full_order()) {
    throw LengthMismatchError("composite vertex has " + std::to_string(u.order()) +
                              " coordinates, expected " + std::to_string(zeta.full_order()));
  }
  CompositeVertex s;
  s.coords.reserve(zeta.sub_order());
  for (AspectIndex n : zeta.kept()) s.coords.push_back(u.coords[n]);
  return s;
}

std::optional<MagEdge> sub_edge(const SubDetermination& zeta, const MagEdge& e) {
  CompositeVertex o = sub_vertex(zeta, e.origin);
  CompositeVertex d = sub_vertex(zeta, e.destination);
  if (o == d) return std::nullopt;
  return MagEdge(std::move(o), std::move(d));
}

AspectList sub_aspects(const AspectList& aspects, const SubDetermination& zeta) {
  std::vector<AspectDecl> decls;
  decls.reserve(zeta.sub_order());
  for (AspectIndex n : zeta.kept()) decls.push_back(aspects.decls()[n]);
  return AspectList(std::move(decls));
}

std::string format_sub_vertex(const AspectList& aspects, const SubDetermination& zeta,
                              const CompositeVertex& sub) {
  if (sub.order() != zeta.sub_order()) {
    throw LengthMismatchError("sub-determined vertex has " + std::to_string(sub.order()) +
                              " coordinates, expected " + std::to_string(zeta.sub_order()));
  }
  std::ostringstream os;
  os << '(';
  std::size_t k = 0;
  for (std::size_t n = 0; n < zeta.full_order(); ++n) {
    if (n) os << ',';
    if (zeta.keeps(n)) {
      os << aspects.label(n, sub.coords[k]);
      ++k;
    } else {
      os << '*';
    }
  }
  os << ')';
  return os.str();
}

SubMagResult sub_mag(const Mag& source, const SubDetermination& zeta) {
  if (zeta.full_order() != source.order()) {
    throw LengthMismatchError("sub-determination is for order " +
                              std::to_string(zeta.full_order()) + ", graph has order " +
                              std::to_string(source.order()));
  }
  std::vector<MagEdge> projected;
  projected.reserve(source.edge_count());
  std::size_t dropped = 0;
  for (const MagEdge& e : source.edges()) {
    if (auto image = sub_edge(zeta, e)) {
      projected.push_back(std::move(*image));
    } else {
      ++dropped;
    }
  }
  Mag mag(sub_aspects(source.aspects(), zeta), projected);
  const std::size_t merged = mag.duplicates_dropped();
  return SubMagResult{std::move(mag), dropped, merged};
}

SubMagResult aggregate(const Mag& source) {
  if (source.order() < 2) {
    throw OrderTooLowError("aggregation requires order >= 2; an order-1 graph is already "
                           "a directed graph");
  }
  return sub_mag(source, SubDetermination(1, source.order()));
}

}  // namespace mag
