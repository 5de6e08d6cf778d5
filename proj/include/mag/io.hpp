#pragma once

#include <iosfwd>
#include <string>

#include "mag/mag.hpp"

namespace mag {

/// Parses the text graph format:
///
///   # comment lines start with '#'
///   aspect <name> <element>...     (one line per aspect, all before edges)
///   edge <token>{2p}               (origin elements, then destination)
///
/// Tokens are whitespace-separated. Duplicate edges are dropped and
/// counted on the returned graph. Throws ParseError with a 1-based line
/// number on any malformed input, including self-loops, unknown labels
/// and arity mismatches.
Mag parse_mag(std::istream& in);

/// Opens and parses a file; IoError when it cannot be read.
Mag parse_mag_file(const std::string& path);

/// Writes a graph in the same format: aspects in order, then edges in
/// insertion order. Parsing the output reproduces the graph exactly.
void serialize_mag(const Mag& m, std::ostream& os);

}  // namespace mag
