#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mag/subdet.hpp"
#include "mag/traversal.hpp"

namespace mag {

enum class WeakSide { origin, destination, both };

enum class DistanceClass { metric, quasimetric, semimetric, premetric, unclassified };

const char* to_string(DistanceClass c);

struct DistanceOptions {
  /// Largest row/column count before the computation refuses to run.
  std::size_t max_index = 2048;
  /// Include composite vertices with no incident edges (the full vertex
  /// set, or every equivalence class on sub-determined sides).
  bool include_isolated = false;
  /// Run the distance-axiom checks and classify the result. Only square
  /// matrices (strong, or weak with both sides sub-determined) can be
  /// classified.
  bool classify = true;
  /// Largest square matrix the cubic triangle-inequality scan will accept.
  std::size_t max_classify = 512;
};

/// One distance-axiom violation, with the witness row/column indices.
/// Axiom 2 (identity) and 3 (symmetry) carry a pair; axiom 4 (triangle
/// inequality) carries a triple.
struct AxiomViolation {
  int axiom = 0;
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;  // only meaningful for axiom 4
};

/// All-pairs hop distances, nullopt meaning unreachable. Rows index the
/// path origins and columns the destinations; for weak matrices the
/// sub-determined side(s) are indexed by equivalence class.
struct DistanceReport {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::optional<std::uint64_t>> cells;  // row-major

  DistanceClass classification = DistanceClass::unclassified;
  bool symmetric = false;
  std::vector<AxiomViolation> violations;  // capped sample, see violation counts
  std::size_t axiom2_violations = 0;
  std::size_t axiom3_violations = 0;
  std::size_t axiom4_violations = 0;

  std::size_t rows() const noexcept { return row_labels.size(); }
  std::size_t cols() const noexcept { return col_labels.size(); }
  std::optional<std::uint64_t> at(std::size_t r, std::size_t c) const {
    return cells[r * cols() + c];
  }
};

/// Distances between composite vertices (edge-incident ones by default).
/// Classified as metric when symmetric, quasimetric otherwise.
DistanceReport distance_matrix(const Mag& m, const DistanceOptions& options = {});

/// Weak distances: the chosen side(s) are collapsed to equivalence classes
/// under the sub-determination, each cell minimizing over representatives.
/// Only side == both yields a square, classifiable matrix (semimetric when
/// symmetric, premetric otherwise); one-sided reports stay unclassified.
DistanceReport weak_distance_matrix(const Mag& m, const SubDetermination& zeta,
                                    WeakSide side, const DistanceOptions& options = {});

/// Tab-separated rendering: header row of column labels, then one row per
/// origin; unreachable cells print "inf".
void write_distance_tsv(const DistanceReport& report, std::ostream& os);

}  // namespace mag
