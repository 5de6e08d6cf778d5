#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mag/types.hpp"

namespace mag {

/// One named aspect: an ordered list of element labels.
struct AspectDecl {
  std::string name;
  std::vector<std::string> elements;

  friend bool operator==(const AspectDecl&, const AspectDecl&) = default;
};

/// The ordered, immutable list of aspects that defines a graph's shape.
///
/// Element indices are 0-based, assigned in declaration order, and stable.
/// The list also owns the mixed-radix encoding between composite vertices
/// and dense ids in [0, vertex_count()): the first aspect varies fastest,
/// so id = sum over n of coords[n] * prod over m < n of size(m).
class AspectList {
 public:
  /// Validates and takes ownership of the declarations.
  /// Throws EmptyAspectError, DuplicateNameError, BadLabelError, or
  /// CapacityError when the id space would not fit in 64 bits.
  explicit AspectList(std::vector<AspectDecl> aspects);

  std::size_t order() const noexcept { return aspects_.size(); }
  std::size_t size(AspectIndex n) const;  // tau_n
  const std::string& name(AspectIndex n) const;
  const std::string& label(AspectIndex n, ElemIndex i) const;
  std::optional<ElemIndex> find(AspectIndex n, std::string_view label) const;
  const std::vector<AspectDecl>& decls() const noexcept { return aspects_; }

  /// Number of composite vertices, prod of all aspect sizes.
  VertexId vertex_count() const noexcept { return vertex_count_; }

  VertexId encode(const CompositeVertex& u) const;
  CompositeVertex decode(VertexId id) const;

  /// Throws LengthMismatchError / OutOfBoundsError unless u is a valid
  /// composite vertex of this shape.
  void check_vertex(const CompositeVertex& u) const;

  /// "(a1,t2)" rendering with element labels.
  std::string format_vertex(const CompositeVertex& u) const;

  friend bool operator==(const AspectList& a, const AspectList& b) {
    return a.aspects_ == b.aspects_;
  }

 private:
  std::vector<AspectDecl> aspects_;
  std::vector<std::unordered_map<std::string, ElemIndex>> index_;
  std::vector<VertexId> place_;  // place_[n] = prod of sizes of aspects before n
  VertexId vertex_count_ = 1;
};

}  // namespace mag
