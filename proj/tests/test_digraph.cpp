#include <doctest.h>

#include <set>
#include <sstream>

#include "mag/digraph.hpp"
#include "testutil.hpp"

using namespace mag;
using magtest::make_ha;
using magtest::make_hb;
using magtest::make_hc;

TEST_CASE("mixed-radix encoding, first aspect fastest") {
  const AspectList aspects({{"v", {"x", "y", "z"}}, {"l", {"p", "q", "r"}}});
  CHECK(aspects.encode({0, 2}) == 6);
  CHECK(aspects.decode(0) == CompositeVertex{0, 0});
  CHECK_THROWS_AS(aspects.decode(9), OutOfBoundsError);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Mag m = magtest::random_mag(rng);
    for (int k = 0; k < 50; ++k) {
      const VertexId id = rng() % m.composite_vertex_count();
      CHECK(encode(m, decode(m, id)) == id);
    }
  }
}

TEST_CASE("digraph view has the product vertex count and the same edges") {
  const Mag hb = make_hb();
  const DigraphView g = to_digraph(hb);
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 3);

  const Mag ha = make_ha();
  CHECK(to_digraph(ha).vertex_count() == 3);
  CHECK(to_digraph(ha).edge_count() == 3);

  const Mag empty(AspectList({{"a", {"x", "y"}}, {"b", {"u", "v"}}}), {});
  CHECK(to_digraph(empty).vertex_count() == 4);
  CHECK(to_digraph(empty).edge_count() == 0);
}

TEST_CASE("edge mapping is a bijection between edge sets") {
  const Mag hb = make_hb();
  std::set<std::pair<VertexId, VertexId>> image;
  for (const MagEdge& e : hb.edges()) {
    const auto s = edge_to_digraph(hb, e);
    CHECK(s.first == encode(hb, e.origin));
    CHECK(s.second == encode(hb, e.destination));
    CHECK(digraph_edge_to_mag(hb, s) == e);
    image.insert(s);
  }
  CHECK(image.size() == hb.edge_count());
}

TEST_CASE("vertex id space caps at 64 bits") {
  std::vector<AspectDecl> decls;
  for (int n = 0; n < 65; ++n) {
    decls.push_back({"A" + std::to_string(n), {"x", "y"}});
  }
  CHECK_THROWS_AS(AspectList(std::move(decls)), CapacityError);
}

TEST_CASE("membership and counts agree between graph and digraph") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const Mag m = magtest::random_mag(rng);
    const DigraphView g = to_digraph(m);
    CHECK(g.vertex_count() == m.composite_vertex_count());
    CHECK(g.edge_count() == m.edge_count());
    std::set<std::pair<VertexId, VertexId>> truth;
    for (const MagEdge& e : m.edges()) truth.insert(edge_to_digraph(m, e));
    for (int k = 0; k < 200; ++k) {
      const VertexId a = rng() % g.vertex_count();
      const VertexId b = rng() % g.vertex_count();
      CHECK(g.has_edge(a, b) == truth.contains({a, b}));
    }
  }
}

TEST_CASE("adjacency relations carry over to the digraph") {
  std::mt19937_64 rng(13);
  std::vector<Mag> instances{make_ha(), make_hb(), make_hc()};
  magtest::RandomMagConfig cfg;
  cfg.max_order = 3;
  cfg.max_tau = 3;
  for (int i = 0; i < 10; ++i) instances.push_back(magtest::random_mag(rng, cfg));

  for (const Mag& m : instances) {
    const DigraphView g = to_digraph(m);
    const auto digraph_edges = g.sorted_edges();

    // composite vertices: adjacency == digraph edge
    for (VertexId a = 0; a < g.vertex_count(); ++a) {
      for (VertexId b = 0; b < g.vertex_count(); ++b) {
        CHECK(m.composite_adjacent(decode(m, a), decode(m, b)) == g.has_edge(a, b));
      }
    }

    // aspect elements: adjacency == some digraph edge exhibiting both
    for (std::size_t n = 0; n < m.order(); ++n) {
      for (ElemIndex x = 0; x < m.aspects().size(n); ++x) {
        for (ElemIndex y = 0; y < m.aspects().size(n); ++y) {
          bool found = false;
          for (const auto& [r, s] : digraph_edges) {
            const ElemIndex a = decode(m, r).coords[n];
            const ElemIndex b = decode(m, s).coords[n];
            if ((x == a || x == b) && (y == a || y == b)) found = true;
          }
          CHECK(m.aspect_adjacent(n, x, y) == found);
        }
      }
    }

    // edges: adjacency == shared digraph endpoint
    std::size_t mismatches = 0;
    for (const MagEdge& e1 : m.edges()) {
      for (const MagEdge& e2 : m.edges()) {
        const auto s1 = edge_to_digraph(m, e1);
        const auto s2 = edge_to_digraph(m, e2);
        const bool share = s1.first == s2.first || s1.first == s2.second ||
                           s1.second == s2.first || s1.second == s2.second;
        mismatches += m.edges_adjacent(e1, e2) != share;
      }
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("any two valid encodings give isomorphic digraphs") {
  // Alternative id assignment: last aspect fastest. The composed mapping
  // must carry the canonical edge set exactly onto the alternative one.
  auto encode_reversed = [](const Mag& m, const CompositeVertex& u) {
    VertexId id = 0;
    for (std::size_t n = 0; n < m.order(); ++n) {
      id = id * m.aspects().size(n) + u.coords[n];
    }
    return id;
  };

  std::mt19937_64 rng(17);
  std::vector<Mag> instances{make_hb(), make_hc()};
  for (int i = 0; i < 10; ++i) instances.push_back(magtest::random_mag(rng));

  for (const Mag& m : instances) {
    std::set<std::pair<VertexId, VertexId>> canonical, alternative, mapped;
    for (const MagEdge& e : m.edges()) {
      canonical.insert(edge_to_digraph(m, e));
      alternative.emplace(encode_reversed(m, e.origin), encode_reversed(m, e.destination));
    }
    for (const auto& [a, b] : canonical) {
      mapped.emplace(encode_reversed(m, decode(m, a)), encode_reversed(m, decode(m, b)));
    }
    CHECK(mapped == alternative);
  }
}

TEST_CASE("isomorphism checker finds the identity on equal graphs") {
  const Mag hb = make_hb();
  const IsoResult r = mags_isomorphic(hb, hb);
  REQUIRE(r.status == IsoStatus::isomorphic);
  REQUIRE(r.witness.has_value());
  CHECK(check_witness(hb, hb, *r.witness));
  for (const auto& map : r.witness->maps) {
    for (std::size_t i = 0; i < map.size(); ++i) CHECK(map[i] == i);
  }
}

TEST_CASE("isomorphism checker recovers random relabelings") {
  std::mt19937_64 rng(19);
  magtest::RandomMagConfig cfg;
  cfg.max_order = 3;
  cfg.max_tau = 4;
  for (int i = 0; i < 15; ++i) {
    const Mag h = magtest::random_mag(rng, cfg);
    const Mag k = magtest::permuted_copy(rng, h);
    const IsoResult r = mags_isomorphic(h, k, IsoOptions{5'000'000});
    REQUIRE(r.status == IsoStatus::isomorphic);
    CHECK(check_witness(h, k, *r.witness));
  }
}

TEST_CASE("isomorphism checker rejects mismatched shapes without search") {
  const IsoResult r = mags_isomorphic(make_hb(), make_hc());
  CHECK(r.status == IsoStatus::not_isomorphic);
  CHECK(r.candidates_tested == 0);

  // same shape, different edge counts
  const AspectList aspects({{"v", {"a", "b"}}});
  const Mag one(aspects, {{{0}, {1}}});
  const Mag none(aspects, {});
  CHECK(mags_isomorphic(one, none).status == IsoStatus::not_isomorphic);
}

TEST_CASE("isomorphism checker reports an exhausted budget as undecided") {
  std::mt19937_64 rng(29);
  magtest::RandomMagConfig cfg;
  cfg.min_order = 2;
  cfg.max_order = 2;
  cfg.min_tau = 4;
  cfg.max_tau = 4;
  const Mag h = magtest::random_mag(rng, cfg);
  const Mag k = magtest::permuted_copy(rng, h);
  const IsoResult r = mags_isomorphic(h, k, IsoOptions{1});
  if (r.status != IsoStatus::isomorphic) {  // unless the first candidate already fits
    CHECK(r.status == IsoStatus::budget_exceeded);
    CHECK(r.candidates_tested == 1);
  }
}

TEST_CASE("witness validation rejects wrong maps") {
  const Mag hb = make_hb();
  MagIsomorphismWitness wrong;
  wrong.maps = {{1, 0, 2}, {0, 1, 2}};  // swapping a1 and a2 breaks the edge set
  CHECK_FALSE(check_witness(hb, hb, wrong));
  MagIsomorphismWitness malformed;
  malformed.maps = {{0, 0, 2}, {0, 1, 2}};  // not a permutation
  CHECK_FALSE(check_witness(hb, hb, malformed));
}

TEST_CASE("edgelist export is sorted by encoded ids") {
  std::ostringstream os;
  export_digraph(make_ha(), ExportFormat::edgelist, os);
  CHECK(os.str() == "(a1)\t(a2)\n(a1)\t(a3)\n(a2)\t(a1)\n");
}

TEST_CASE("dot export lists every composite vertex then the edges") {
  std::ostringstream os;
  export_digraph(make_hc(), ExportFormat::dot, os);
  CHECK(os.str() ==
        "digraph {\n"
        "  \"(a1,t1)\";\n"
        "  \"(a2,t1)\";\n"
        "  \"(a3,t1)\";\n"
        "  \"(a1,t2)\";\n"
        "  \"(a2,t2)\";\n"
        "  \"(a3,t2)\";\n"
        "  \"(a1,t1)\" -> \"(a2,t1)\";\n"
        "  \"(a1,t2)\" -> \"(a3,t2)\";\n"
        "  \"(a2,t2)\" -> \"(a1,t2)\";\n"
        "}\n");

  std::ostringstream empty;
  export_digraph(Mag(AspectList({{"v", {"x", "y"}}}), {}), ExportFormat::dot, empty);
  CHECK(empty.str() == "digraph {\n  \"(x)\";\n  \"(y)\";\n}\n");
}
