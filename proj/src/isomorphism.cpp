#include <algorithm>
#include <numeric>

#include "mag/digraph.hpp"

namespace mag {

namespace {

// Applies the per-aspect maps to every edge of h and looks the image up in
// k; stops at the first miss. |E(h)| == |E(k)| and bijective maps make the
// one-directional check sufficient.
bool maps_carry_edges(const Mag& h, const Mag& k,
                      const std::vector<std::vector<ElemIndex>>& maps) {
  const std::size_t p = h.order();
  CompositeVertex o, d;
  o.coords.resize(p);
  d.coords.resize(p);
  for (const MagEdge& e : h.edges()) {
    for (std::size_t n = 0; n < p; ++n) {
      o.coords[n] = maps[n][e.origin.coords[n]];
      d.coords[n] = maps[n][e.destination.coords[n]];
    }
    if (!k.has_edge_ids(k.aspects().encode(o), k.aspects().encode(d))) return false;
  }
  return true;
}

bool same_shape(const Mag& h, const Mag& k) {
  if (h.order() != k.order()) return false;
  for (std::size_t n = 0; n < h.order(); ++n) {
    if (h.aspects().size(n) != k.aspects().size(n)) return false;
  }
  return true;
}

}  // namespace

bool check_witness(const Mag& h, const Mag& k, const MagIsomorphismWitness& w) {
  if (!same_shape(h, k) || h.edge_count() != k.edge_count()) return false;
  if (w.maps.size() != h.order()) return false;
  for (std::size_t n = 0; n < h.order(); ++n) {
    const std::size_t tau = h.aspects().size(n);
    if (w.maps[n].size() != tau) return false;
    std::vector<bool> hit(tau, false);
    for (ElemIndex image : w.maps[n]) {
      if (image >= tau || hit[image]) return false;
      hit[image] = true;
    }
  }
  return maps_carry_edges(h, k, w.maps);
}

IsoResult mags_isomorphic(const Mag& h, const Mag& k, const IsoOptions& options) {
  IsoResult result;
  if (!same_shape(h, k) || h.edge_count() != k.edge_count()) {
    result.status = IsoStatus::not_isomorphic;
    return result;
  }

  const std::size_t p = h.order();

  // Permute small aspects in the outer loops so early mismatches cut off
  // the largest factors of the candidate space.
  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return h.aspects().size(a) < h.aspects().size(b);
  });

  std::vector<std::vector<ElemIndex>> maps(p);
  for (std::size_t n = 0; n < p; ++n) {
    maps[n].resize(h.aspects().size(n));
    std::iota(maps[n].begin(), maps[n].end(), 0);
  }

  bool exhausted_budget = false;

  // Depth-first enumeration of per-aspect permutations; each complete
  // tuple of maps counts as one candidate.
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == p) {
      if (result.candidates_tested >= options.max_candidates) {
        exhausted_budget = true;
        return false;
      }
      ++result.candidates_tested;
      return maps_carry_edges(h, k, maps);
    }
    std::vector<ElemIndex>& perm = maps[order[depth]];
    std::sort(perm.begin(), perm.end());
    do {
      if (self(self, depth + 1)) return true;
      if (exhausted_budget) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };

  if (search(search, 0)) {
    result.status = IsoStatus::isomorphic;
    result.witness = MagIsomorphismWitness{maps};
    if (!check_witness(h, k, *result.witness)) {
      // maps_carry_edges already passed; a failure here would be a bug.
      throw MagError("internal error: isomorphism witness failed validation");
    }
  } else {
    result.status = exhausted_budget ? IsoStatus::budget_exceeded : IsoStatus::not_isomorphic;
  }
  return result;
}

}  // namespace mag
