#include "mag/distance.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>
#include <unordered_map>

namespace mag {

namespace {

using Cell = std::optional<std::uint64_t>;

// Hop distances from src to every id in cols, by BFS over out-adjacency.
std::vector<Cell> bfs_row(const Mag& m, VertexId src, const std::vector<VertexId>& cols) {
  std::unordered_map<VertexId, std::uint64_t> dist;
  std::deque<VertexId> queue;
  dist.emplace(src, 0);
  queue.push_back(src);
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    const std::uint64_t du = dist[u];
    for (VertexId v : m.out_neighbors(u)) {
      if (dist.emplace(v, du + 1).second) queue.push_back(v);
    }
  }
  std::vector<Cell> row;
  row.reserve(cols.size());
  for (VertexId c : cols) {
    auto it = dist.find(c);
    row.push_back(it == dist.end() ? Cell{} : Cell{it->second});
  }
  return row;
}

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw CapacityError(std::string(what) + " has " + std::to_string(n) +
                        " entries, above the cap of " + std::to_string(cap));
  }
}

std::vector<VertexId> ground_ids(const Mag& m, const DistanceOptions& options) {
  if (!options.include_isolated) return m.incident_vertices();
  check_cap(static_cast<std::size_t>(m.composite_vertex_count()), options.max_index,
            "full composite-vertex set");
  std::vector<VertexId> ids(static_cast<std::size_t>(m.composite_vertex_count()));
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<VertexId>(i);
  return ids;
}

Cell min_cell(Cell a, Cell b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

void classify_square(DistanceReport& r, bool weak, const DistanceOptions& options) {
  check_cap(r.rows(), options.max_classify, "matrix to classify");
  const std::size_t n = r.rows();
  constexpr std::size_t kMaxStored = 16;
  auto record = [&](std::size_t& counter, AxiomViolation v) {
    ++counter;
    if (r.violations.size() < kMaxStored) r.violations.push_back(v);
  };

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Cell d = r.at(x, y);
      if (x == y && d != Cell{0}) record(r.axiom2_violations, {2, x, y, 0});
      if (x != y && d == Cell{0}) record(r.axiom2_violations, {2, x, y, 0});
      if (x < y && d != r.at(y, x)) record(r.axiom3_violations, {3, x, y, 0});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Cell dxy = r.at(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        const Cell dyz = r.at(y, z);
        const Cell sum = (dxy && dyz) ? Cell{*dxy + *dyz} : Cell{};
        if (!sum) continue;  // an infinite bound never constrains
        const Cell dxz = r.at(x, z);
        if (!dxz || *dxz > *sum) record(r.axiom4_violations, {4, x, y, z});
      }
    }
  }

  r.symmetric = r.axiom3_violations == 0;
  if (weak) {
    r.classification = r.symmetric ? DistanceClass::semimetric : DistanceClass::premetric;
  } else {
    r.classification = r.symmetric ? DistanceClass::metric : DistanceClass::quasimetric;
  }
}

}  // namespace

const char* to_string(DistanceClass c) {
  switch (c) {
    case DistanceClass::metric: return "metric";
    case DistanceClass::quasimetric: return "quasimetric";
    case DistanceClass::semimetric: return "semimetric";
    case DistanceClass::premetric: return "premetric";
    case DistanceClass::unclassified: return "unclassified";
  }
  return "unclassified";
}

DistanceReport distance_matrix(const Mag& m, const DistanceOptions& options) {
  const std::vector<VertexId> ids = ground_ids(m, options);
  check_cap(ids.size(), options.max_index, "distance matrix");

  DistanceReport r;
  r.row_labels.reserve(ids.size());
  for (VertexId id : ids) {
    r.row_labels.push_back(m.aspects().format_vertex(m.aspects().decode(id)));
  }
  r.col_labels = r.row_labels;
  r.cells.reserve(ids.size() * ids.size());
  for (VertexId src : ids) {
    auto row = bfs_row(m, src, ids);
    r.cells.insert(r.cells.end(), row.begin(), row.end());
  }
  if (options.classify) classify_square(r, /*weak=*/false, options);
  return r;
}

DistanceReport weak_distance_matrix(const Mag& m, const SubDetermination& zeta,
                                    WeakSide side, const DistanceOptions& options) {
  if (zeta.full_order() != m.order()) {
    throw LengthMismatchError("sub-determination is for order " +
                              std::to_string(zeta.full_order()) + ", graph has order " +
                              std::to_string(m.order()));
  }
  const std::vector<VertexId>& incident = m.incident_vertices();
  check_cap(incident.size(), options.max_index, "edge-incident vertex set");

  // Equivalence classes keyed by sub-determined coordinates, each holding
  // the positions of its edge-incident representatives.
  std::map<CompositeVertex, std::vector<std::size_t>> classes;
  std::vector<CompositeVertex> decoded(incident.size());
  for (std::size_t i = 0; i < incident.size(); ++i) {
    decoded[i] = m.aspects().decode(incident[i]);
    classes[sub_vertex(zeta, decoded[i])].push_back(i);
  }
  if (options.include_isolated) {
    // Every class of the sub-determined vertex space, present or not.
    unsigned __int128 total = 1;
    for (AspectIndex n : zeta.kept()) total *= m.aspects().size(n);
    if (total > options.max_index) {
      throw CapacityError("sub-determined vertex space is above the cap of " +
                          std::to_string(options.max_index));
    }
    CompositeVertex key;
    key.coords.assign(zeta.sub_order(), 0);
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(total); ++i) {
      classes.try_emplace(key);
      for (std::size_t k = 0; k < key.coords.size(); ++k) {
        const std::size_t tau = m.aspects().size(zeta.kept()[k]);
        if (++key.coords[k] < tau) break;
        key.coords[k] = 0;
      }
    }
  }

  std::vector<CompositeVertex> class_keys;
  class_keys.reserve(classes.size());
  for (const auto& [key, reps] : classes) class_keys.push_back(key);
  check_cap(class_keys.size(), options.max_index, "weak distance matrix");

  // Strong all-pairs over the incident set, reduced below by class minima.
  std::vector<std::vector<Cell>> strong;
  strong.reserve(incident.size());
  for (VertexId src : incident) strong.push_back(bfs_row(m, src, incident));

  const std::vector<VertexId> vertex_ids = ground_ids(m, options);
  std::unordered_map<VertexId, std::size_t> incident_pos;
  for (std::size_t i = 0; i < incident.size(); ++i) incident_pos.emplace(incident[i], i);

  auto class_label = [&](const CompositeVertex& key) {
    return format_sub_vertex(m.aspects(), zeta, key);
  };
  auto vertex_label = [&](VertexId id) {
    return m.aspects().format_vertex(m.aspects().decode(id));
  };
  auto class_of_id = [&](VertexId id) { return sub_vertex(zeta, m.aspects().decode(id)); };

  DistanceReport r;
  if (side == WeakSide::both) {
    for (const auto& key : class_keys) r.row_labels.push_back(class_label(key));
    r.col_labels = r.row_labels;
    r.cells.assign(class_keys.size() * class_keys.size(), Cell{});
    for (std::size_t a = 0; a < class_keys.size(); ++a) {
      for (std::size_t b = 0; b < class_keys.size(); ++b) {
        Cell best;
        if (a == b) {
          best = 0;  // any representative reaches itself
        } else {
          for (std::size_t i : classes[class_keys[a]]) {
            for (std::size_t j : classes[class_keys[b]]) {
              best = min_cell(best, strong[i][j]);
            }
          }
        }
        r.cells[a * class_keys.size() + b] = best;
      }
    }
    if (options.classify) classify_square(r, /*weak=*/true, options);
  } else if (side == WeakSide::origin) {
    check_cap(vertex_ids.size(), options.max_index, "weak distance matrix columns");
    for (const auto& key : class_keys) r.row_labels.push_back(class_label(key));
    for (VertexId id : vertex_ids) r.col_labels.push_back(vertex_label(id));
    r.cells.assign(class_keys.size() * vertex_ids.size(), Cell{});
    for (std::size_t a = 0; a < class_keys.size(); ++a) {
      for (std::size_t c = 0; c < vertex_ids.size(); ++c) {
        Cell best;
        if (class_of_id(vertex_ids[c]) == class_keys[a]) {
          best = 0;  // the destination is itself a representative
        } else if (auto it = incident_pos.find(vertex_ids[c]); it != incident_pos.end()) {
          for (std::size_t i : classes[class_keys[a]]) {
            best = min_cell(best, strong[i][it->second]);
          }
        }
        r.cells[a * vertex_ids.size() + c] = best;
      }
    }
  } else {  // WeakSide::destination
    check_cap(vertex_ids.size(), options.max_index, "weak distance matrix rows");
    for (VertexId id : vertex_ids) r.row_labels.push_back(vertex_label(id));
    for (const auto& key : class_keys) r.col_labels.push_back(class_label(key));
    r.cells.assign(vertex_ids.size() * class_keys.size(), Cell{});
    for (std::size_t c = 0; c < vertex_ids.size(); ++c) {
      for (std::size_t b = 0; b < class_keys.size(); ++b) {
        Cell best;
        if (class_of_id(vertex_ids[c]) == class_keys[b]) {
          best = 0;  // the origin is itself a representative
        } else if (auto it = incident_pos.find(vertex_ids[c]); it != incident_pos.end()) {
          for (std::size_t j : classes[class_keys[b]]) {
            best = min_cell(best, strong[it->second][j]);
          }
        }
        r.cells[c * class_keys.size() + b] = best;
      }
    }
  }
  return r;
}

void write_distance_tsv(const DistanceReport& report, std::ostream& os) {
  for (const std::string& c : report.col_labels) os << '\t' << c;
  os << '\n';
  for (std::size_t rix = 0; rix < report.rows(); ++rix) {
    os << report.row_labels[rix];
    for (std::size_t cix = 0; cix < report.cols(); ++cix) {
      const auto cell = report.at(rix, cix);
      os << '\t';
      if (cell) {
        os << *cell;
      } else {
        os << "inf";
      }
    }
    os << '\n';
  }
  if (!os) throw IoError("failed to write distance matrix");
}

}  // namespace mag
