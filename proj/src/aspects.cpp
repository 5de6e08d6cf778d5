#include "mag/aspects.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace mag {

namespace {

// Labels double as file and command-line tokens, so they must survive
// whitespace splitting, comma-separated vertex specs, and the '*' wildcard.
void check_label(const std::string& s, const char* what) {
  if (s.empty()) throw BadLabelError(std::string(what) + " must not be empty");
  if (s == "*") throw BadLabelError(std::string(what) + " must not be \"*\"");
  for (unsigned char c : s) {
    if (std::isspace(c) || c == '#' || c == ',') {
      throw BadLabelError(std::string(what) + " \"" + s +
                          "\" contains whitespace, '#' or ','");
    }
  }
}

}  // namespace

AspectList::AspectList(std::vector<AspectDecl> aspects) : aspects_(std::move(aspects)) {
  if (aspects_.empty()) throw EmptyAspectError("a graph needs at least one aspect");

  std::unordered_set<std::string> names;
  index_.reserve(aspects_.size());
  place_.reserve(aspects_.size());
  unsigned __int128 count = 1;
  for (const AspectDecl& a : aspects_) {
    check_label(a.name, "aspect name");
    if (!names.insert(a.name).second) {
      throw DuplicateNameError("duplicate aspect name \"" + a.name + "\"");
    }
    if (a.elements.empty()) {
      throw EmptyAspectError("aspect \"" + a.name + "\" has no elements");
    }
    std::unordered_map<std::string, ElemIndex> idx;
    idx.reserve(a.elements.size());
    for (std::size_t i = 0; i < a.elements.size(); ++i) {
      check_label(a.elements[i], "element label");
      if (!idx.emplace(a.elements[i], static_cast<ElemIndex>(i)).second) {
        throw DuplicateNameError("duplicate element \"" + a.elements[i] +
                                 "\" in aspect \"" + a.name + "\"");
      }
    }
    index_.push_back(std::move(idx));
    place_.push_back(static_cast<VertexId>(count));
    count *= a.elements.size();
    if (count > std::numeric_limits<VertexId>::max()) {
      throw CapacityError("composite-vertex count exceeds the 64-bit id space");
    }
  }
  vertex_count_ = static_cast<VertexId>(count);
}

std::size_t AspectList::size(AspectIndex n) const {
  if (n >= aspects_.size()) {
    throw BadAspectIndexError("aspect position " + std::to_string(n) +
                              " out of range for order " + std::to_string(aspects_.size()));
  }
  return aspects_[n].elements.size();
}

const std::string& AspectList::name(AspectIndex n) const {
  size(n);  // bounds check
  return aspects_[n].name;
}

const std::string& AspectList::label(AspectIndex n, ElemIndex i) const {
  if (i >= size(n)) {
    throw OutOfBoundsError("element index " + std::to_string(i) +
                           " out of range for aspect \"" + aspects_[n].name + "\"");
  }
  return aspects_[n].elements[i];
}

std::optional<ElemIndex> AspectList::find(AspectIndex n, std::string_view label) const {
  size(n);  // bounds check
  auto it = index_[n].find(std::string(label));
  if (it == index_[n].end()) return std::nullopt;
  return it->second;
}

VertexId AspectList::encode(const CompositeVertex& u) const {
  check_vertex(u);
  VertexId id = 0;
  for (std::size_t n = 0; n < u.coords.size(); ++n) {
    id += static_cast<VertexId>(u.coords[n]) * place_[n];
  }
  return id;
}

CompositeVertex AspectList::decode(VertexId id) const {
  if (id >= vertex_count_) {
    throw OutOfBoundsError("vertex id " + std::to_string(id) + " out of range [0, " +
                           std::to_string(vertex_count_) + ")");
  }
  CompositeVertex u;
  u.coords.resize(aspects_.size());
  for (std::size_t n = 0; n < aspects_.size(); ++n) {
    u.coords[n] = static_cast<ElemIndex>((id / place_[n]) % aspects_[n].elements.size());
  }
  return u;
}

void AspectList::check_vertex(const CompositeVertex& u) const {
  if (u.order() != aspects_.size()) {
    throw LengthMismatchError("composite vertex has " + std::to_string(u.order()) +
                              " coordinates, expected " + std::to_string(aspects_.size()));
  }
  for (std::size_t n = 0; n < u.coords.size(); ++n) {
    if (u.coords[n] >= aspects_[n].elements.size()) {
      throw OutOfBoundsError("coordinate " + std::to_string(u.coords[n]) +
                             " out of range for aspect \"" + aspects_[n].name + "\"");
    }
  }
}

std::string AspectList::format_vertex(const CompositeVertex& u) const {
  check_vertex(u);
  std::ostringstream os;
  os << '(';
  for (std::size_t n = 0; n < u.coords.size(); ++n) {
    if (n) os << ',';
    os << aspects_[n].elements[u.coords[n]];
  }
  os << ')';
  return os.str();
}

}  // namespace mag
