#include "mag/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mag {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

Mag parse_mag(std::istream& in) {
  std::vector<AspectDecl> aspects;
  std::vector<MagEdge> edges;
  std::optional<AspectList> shape;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;

    if (tokens[0] == "aspect") {
      if (shape) throw ParseError(lineno, "aspect declaration after edge lines");
      if (tokens.size() < 2) throw ParseError(lineno, "aspect line needs a name");
      if (tokens.size() < 3) {
        throw ParseError(lineno, "aspect \"" + tokens[1] + "\" has no elements");
      }
      aspects.push_back(AspectDecl{tokens[1], {tokens.begin() + 2, tokens.end()}});
      try {
        AspectList probe(aspects);  // names, labels and capacity, with this line's number
      } catch (const MagError& e) {
        throw ParseError(lineno, e.what());
      }
      continue;
    }

    if (tokens[0] == "edge") {
      if (!shape) {
        if (aspects.empty()) throw ParseError(lineno, "edge before any aspect declaration");
        shape.emplace(aspects);
      }
      const std::size_t p = shape->order();
      if (tokens.size() != 1 + 2 * p) {
        throw ParseError(lineno, "edge needs " + std::to_string(2 * p) +
                                     " element tokens, got " +
                                     std::to_string(tokens.size() - 1));
      }
      MagEdge e;
      e.origin.coords.resize(p);
      e.destination.coords.resize(p);
      for (std::size_t n = 0; n < 2 * p; ++n) {
        const std::string& tok = tokens[1 + n];
        const AspectIndex aspect = n % p;
        const auto idx = shape->find(aspect, tok);
        if (!idx) {
          throw ParseError(lineno, "unknown element \"" + tok + "\" for aspect \"" +
                                       shape->name(aspect) + "\"");
        }
        (n < p ? e.origin : e.destination).coords[n % p] = *idx;
      }
      if (e.origin == e.destination) {
        throw ParseError(lineno, "self-loop edge (origin equals destination)");
      }
      edges.push_back(std::move(e));
      continue;
    }

    throw ParseError(lineno, "unknown directive \"" + tokens[0] + "\"");
  }

  if (!shape) {
    if (aspects.empty()) throw ParseError(lineno ? lineno : 1, "no aspect declarations");
    shape.emplace(aspects);
  }
  return Mag(std::move(*shape), edges);
}

Mag parse_mag_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open \"" + path + "\"");
  return parse_mag(in);
}

void serialize_mag(const Mag& m, std::ostream& os) {
  for (const AspectDecl& a : m.aspects().decls()) {
    os << "aspect " << a.name;
    for (const std::string& e : a.elements) os << ' ' << e;
    os << '\n';
  }
  for (const MagEdge& e : m.edges()) {
    os << "edge";
    for (std::size_t n = 0; n < m.order(); ++n) {
      os << ' ' << m.aspects().label(n, e.origin.coords[n]);
    }
    for (std::size_t n = 0; n < m.order(); ++n) {
      os << ' ' << m.aspects().label(n, e.destination.coords[n]);
    }
    os << '\n';
  }
  if (!os) throw IoError("failed to write graph");
}

}  // namespace mag
