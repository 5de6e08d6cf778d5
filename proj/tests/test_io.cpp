#include <doctest.h>

#include <random>
#include <sstream>

#include "mag/io.hpp"
#include "testutil.hpp"

using namespace mag;

namespace {

Mag parse_text(const std::string& text) {
  std::istringstream is(text);
  return parse_mag(is);
}

std::size_t error_line(const std::string& text) {
  try {
    parse_text(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parsing the time-varying example file") {
  const Mag m = parse_text(
      "# comment\n"
      "aspect vertex a1 a2 a3\n"
      "aspect time t1 t2\n"
      "edge a1 t1 a2 t1\n"
      "edge a2 t2 a1 t2\n"
      "edge a1 t2 a3 t2\n");
  const Mag hc = magtest::make_hc();
  CHECK(m.aspects() == hc.aspects());
  CHECK(m.edges() == hc.edges());
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("aspect v a b\nedge a b c\n") == 2);            // arity
  CHECK(error_line("aspect v a b\nedge a q\n") == 2);              // unknown element
  CHECK(error_line("aspect v a b\nedge a a\n") == 2);              // self-loop
  CHECK(error_line("edge a b\n") == 1);                            // edge first
  CHECK(error_line("aspect v a b\nvertex a\n") == 2);              // unknown directive
  CHECK(error_line("aspect v a b\nedge a b\naspect t x\n") == 3);  // aspect after edge
  CHECK(error_line("aspect v\n") == 1);                            // no elements
  CHECK(error_line("aspect v a a\n") == 1);                        // duplicate label
  CHECK(error_line("aspect v a\naspect v b\n") == 2);              // duplicate name
  CHECK(error_line("") == 1);                                      // nothing at all
  CHECK(error_line("# only a comment\n") == 1);
}

TEST_CASE("whitespace and comments are tolerated") {
  const Mag m = parse_text(
      "\n"
      "   # indented comment\n"
      "aspect   v    a   b\n"
      "\n"
      "edge  a   b\n");
  CHECK(m.edge_count() == 1);
}

TEST_CASE("duplicate edges are counted across parsing") {
  const Mag m = parse_text("aspect v a b\nedge a b\nedge a b\n");
  CHECK(m.edge_count() == 1);
  CHECK(m.duplicates_dropped() == 1);
}

TEST_CASE("aspect-only files build edgeless graphs") {
  const Mag m = parse_text("aspect v a b c\naspect t x y\n");
  CHECK(m.order() == 2);
  CHECK(m.edge_count() == 0);
  CHECK(m.composite_vertex_count() == 6);
}

TEST_CASE("serialize and parse round-trips any graph") {
  std::mt19937_64 rng(79);
  for (int i = 0; i < 60; ++i) {
    const Mag m = magtest::random_mag(rng);
    std::ostringstream os;
    serialize_mag(m, os);
    const Mag back = parse_text(os.str());
    CHECK(back.aspects() == m.aspects());
    CHECK(back.edges() == m.edges());
  }
}

TEST_CASE("mutated inputs never escape the error hierarchy") {
  const std::string seed =
      "aspect vertex a1 a2 a3\n"
      "aspect time t1 t2\n"
      "edge a1 t1 a2 t1\n"
      "edge a2 t2 a1 t2\n"
      "edge a1 t2 a3 t2\n";
  std::mt19937_64 rng(83);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int i = 0; i < 1000; ++i) {
    std::string text = seed;
    const int mutations = 1 + static_cast<int>(rng() % 8);
    for (int k = 0; k < mutations; ++k) {
      if (text.empty()) break;
      const std::size_t pos = rng() % text.size();
      switch (rng() % 4) {
        case 0: text[pos] = static_cast<char>(byte(rng)); break;
        case 1: text.erase(pos, rng() % 5); break;
        case 2: text.insert(pos, std::string(1 + rng() % 3, static_cast<char>(byte(rng)))); break;
        default: text = text.substr(0, pos); break;
      }
    }
    try {
      const Mag m = parse_text(text);
      CHECK(m.order() >= 1);
    } catch (const MagError&) {
      // rejected input: fine
    }
  }
}
