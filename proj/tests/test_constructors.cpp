#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "smooth/canonical.hpp"
#include "smooth/constructors.hpp"
#include "smooth/convexity.hpp"
#include "smooth/patterns.hpp"
#include "smooth/smoothness.hpp"
#include "oracles.hpp"
#include "sweeps.hpp"

using namespace smooth;

namespace {

bool smooth_bit(const Graph& g) { return check_sm_edge(g, apsp(g)).smooth; }

}  // namespace

TEST_CASE("families") {
  CHECK(make_complete(1).vertex_count() == 1);
  CHECK(make_cycle(5).edge_count() == 5);
  CHECK(make_path(4).edge_count() == 3);
  CHECK(make_hypercube(0).vertex_count() == 1);
  CHECK(make_hypercube(3).edge_count() == 12);

  CHECK_THROWS_AS(make_cocktail_party(1), Error);
  Graph party = make_cocktail_party(3);
  CHECK(party.vertex_count() == 6);
  CHECK(party.edge_count() == 12);
  for (Vertex v = 0; v < 6; ++v) CHECK(party.degree(v) == 4);

  // half_cube(3): all four length-2 strings pairwise within Hamming 2.
  Graph hc3 = make_half_cube(3);
  CHECK(oracle::brute_force_isomorphic(hc3, make_complete(4)));
  CHECK(make_half_cube(1).vertex_count() == 1);
  CHECK_THROWS_AS(make_half_cube(13), Error);

  Graph hamming = make_hamming({2, 2, 2});
  CHECK(canonical_form(hamming) == canonical_form(make_hypercube(3)));

  CHECK(make_family("cycle", {6}).edge_count() == 6);
  CHECK_THROWS_AS(make_family("moebius", {5}), Error);

  // FIG4 per its frozen edge list.
  const Graph& fig4 = fixture("FIG4");
  CHECK(fig4.vertex_count() == 7);
  CHECK(fig4.edge_count() == 13);
}

TEST_CASE("cartesian product") {
  ProductResult c4 = cartesian_product(make_complete(2), make_complete(2));
  CHECK(oracle::brute_force_isomorphic(c4.graph, fixture("C4")));

  Graph k2 = make_complete(2);
  Graph q3 = cartesian_product(cartesian_product(k2, k2).graph, k2).graph;
  CHECK(canonical_form(q3) == canonical_form(make_hypercube(3)));

  // Distance law and layer isometry.
  const Graph& g = fixture("FIG4");
  Graph h = make_cycle(5);
  ProductResult prod = cartesian_product(g, h);
  DistMatrix dg = apsp(g), dh = apsp(h), dp = apsp(prod.graph);
  for (Vertex a = 0; a < g.vertex_count(); ++a)
    for (Vertex b = 0; b < h.vertex_count(); ++b)
      for (Vertex a2 = 0; a2 < g.vertex_count(); ++a2)
        for (Vertex b2 = 0; b2 < h.vertex_count(); ++b2)
          CHECK(dp.at(prod.id_of(a, b), prod.id_of(a2, b2)) ==
                dg.at(a, a2) + dh.at(b, b2));

  VertexSet layer(prod.graph.vertex_count());
  for (Vertex b = 0; b < h.vertex_count(); ++b) layer.insert(prod.id_of(2, b));
  CHECK(is_isometric_subgraph(prod.graph, layer));

  // Interval of a product pair is the product of the factor intervals.
  for (auto [a, b, a2, b2] :
       std::vector<std::array<Vertex, 4>>{{0, 0, 4, 3}, {1, 2, 6, 0}, {3, 1, 3, 4}}) {
    VertexSet got = interval(prod.graph, dp, prod.id_of(a, b), prod.id_of(a2, b2));
    VertexSet ia = interval(g, dg, a, a2);
    VertexSet ib = interval(h, dh, b, b2);
    VertexSet expect(prod.graph.vertex_count());
    ia.for_each([&](Vertex x) {
      ib.for_each([&](Vertex y) { expect.insert(prod.id_of(x, y)); });
    });
    CHECK(got == expect);
  }
}

TEST_CASE("strong product") {
  ProductResult k4 = strong_product(make_complete(2), make_complete(2));
  CHECK(oracle::brute_force_isomorphic(k4.graph, make_complete(4)));

  Graph p3 = make_path(3);
  ProductResult king = strong_product(p3, p3);
  DistMatrix dk = apsp(king.graph);
  int diameter = 0;
  for (Vertex a = 0; a < 9; ++a)
    for (Vertex b = 0; b < 9; ++b) diameter = std::max(diameter, (int)dk.at(a, b));
  CHECK(diameter == 2);

  // Distance law.
  const Graph& g = fixture("W4MINUS");
  Graph h = make_path(4);
  ProductResult prod = strong_product(g, h);
  DistMatrix dg = apsp(g), dh = apsp(h), dp = apsp(prod.graph);
  for (Vertex a = 0; a < g.vertex_count(); ++a)
    for (Vertex b = 0; b < h.vertex_count(); ++b)
      for (Vertex a2 = 0; a2 < g.vertex_count(); ++a2)
        for (Vertex b2 = 0; b2 < h.vertex_count(); ++b2)
          CHECK(dp.at(prod.id_of(a, b), prod.id_of(a2, b2)) ==
                std::max(dg.at(a, a2), dh.at(b, b2)));

  // Projections of shortest paths between same-h endpoints are shortest.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Vertex a = rng() % g.vertex_count(), a2 = rng() % g.vertex_count();
    Vertex b = rng() % h.vertex_count();
    if (a == a2) continue;
    Vertex s = prod.id_of(a, b), t = prod.id_of(a2, b);
    // Random geodesic.
    std::vector<Vertex> path{s};
    Vertex cur = s;
    while (cur != t) {
      std::vector<Vertex> nexts;
      for (Vertex nb : prod.graph.neighbors(cur))
        if (dp.at(nb, t) == dp.at(cur, t) - 1) nexts.push_back(nb);
      cur = nexts[rng() % nexts.size()];
      path.push_back(cur);
    }
    CHECK(static_cast<int>(path.size()) - 1 == dg.at(a, a2));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      Vertex pa = prod.coords(path[i]).first;
      Vertex pb = prod.coords(path[i + 1]).first;
      CHECK(pa != pb);            // projection never stalls
      CHECK(g.adjacent(pa, pb));  // so it is a path edge in G
    }
  }

  // G-layer of the strong product is isometric.
  VertexSet layer(prod.graph.vertex_count());
  for (Vertex a = 0; a < g.vertex_count(); ++a) layer.insert(prod.id_of(a, 1));
  CHECK(is_isometric_subgraph(prod.graph, layer));
}

TEST_CASE("lexicographic product") {
  Graph p3 = make_path(3);
  ProductResult lex = lexicographic_product(p3, p3);
  CHECK(contains_induced(lex.graph, fixture("K23")).has_value());
  CHECK_FALSE(smooth_bit(lex.graph));

  // Distance law.
  DistMatrix dp3 = apsp(p3), dl = apsp(lex.graph);
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 0; b < 3; ++b)
      for (Vertex a2 = 0; a2 < 3; ++a2)
        for (Vertex b2 = 0; b2 < 3; ++b2) {
          int expect = a != a2 ? dp3.at(a, a2)
                               : std::min<int>(2, dp3.at(b, b2));
          CHECK(dl.at(lex.id_of(a, b), lex.id_of(a2, b2)) == expect);
        }

  Graph same = lexicographic_product(fixture("FIG2"), make_complete(1)).graph;
  CHECK(canonical_form(same) == canonical_form(fixture("FIG2")));
}

TEST_CASE("product smoothness versus factor smoothness") {
  std::vector<Graph> corpus;
  sweeps::for_each_connected(3, [&](const Graph& g, const DistMatrix&) {
    corpus.push_back(g);
  });
  corpus.push_back(fixture("K23"));
  corpus.push_back(fixture("W4MINUS"));
  for (const Graph& a : corpus)
    for (const Graph& b : corpus) {
      bool factors = smooth_bit(a) && smooth_bit(b);
      CHECK(smooth_bit(cartesian_product(a, b).graph) == factors);
      // For the strong product only the converse direction holds in
      // general (the factors are isometric layers of the product).
      if (smooth_bit(strong_product(a, b).graph)) CHECK(factors);
    }

  // Frozen counterexample to "smooth factors give a smooth strong
  // product": K2 ⊠ K13 picks up an induced K113 across the two layers.
  Graph claw(4, {{0, 3}, {1, 3}, {2, 3}});
  CHECK(smooth_bit(claw));
  Graph prod = strong_product(make_complete(2), claw).graph;
  CHECK(contains_induced(prod, fixture("K113")).has_value());
  CHECK_FALSE(smooth_bit(prod));
  CHECK_FALSE(smooth_bit(strong_product(make_path(3), fixture("W4MINUS")).graph));
}

TEST_CASE("gated amalgam") {
  // Two triangles glued at one vertex: the bowtie.
  Graph k3 = make_complete(3);
  Graph bowtie = gated_amalgam({k3, k3, {0}, {0}});
  CHECK(bowtie.vertex_count() == 5);
  CHECK(bowtie.edge_count() == 6);
  CHECK(smooth_bit(bowtie));

  // Two squares glued along an edge: the domino grid.
  Graph c4 = make_cycle(4);
  Graph domino = gated_amalgam({c4, c4, {0, 1}, {0, 1}});
  CHECK(domino.vertex_count() == 6);
  CHECK(domino.edge_count() == 7);
  CHECK(smooth_bit(domino));

  // Two pentagons along an edge: the glued parts are not gated.
  Graph c5 = make_cycle(5);
  try {
    gated_amalgam({c5, c5, {0, 1}, {0, 1}});
    FAIL("expected NotGated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotGated);
  }

  // Mismatched glue parts.
  try {
    gated_amalgam({c4, k3, {0, 2}, {0, 1}});  // non-edge onto an edge
    FAIL("expected GluePartMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GluePartMismatch);
  }
}

TEST_CASE("scale embeddings") {
  Graph c6 = make_cycle(6);
  EmbeddingMap identity{{0, 1, 2, 3, 4, 5}, 1};
  CHECK(verify_scale_embedding(c6, c6, identity));

  for (int k = 1; k <= 5; ++k) {
    CHECK(verify_scale_embedding(make_half_cube(k), make_hypercube(k),
                                 half_cube_embedding(k)));
  }

  // Perturbing the map must break the scale equation.
  EmbeddingMap broken = half_cube_embedding(4);
  broken.phi[3] ^= 1;
  CHECK_FALSE(verify_scale_embedding(make_half_cube(4), make_hypercube(4), broken));

  // A non-isometric inclusion at scale 1.
  Graph p4 = make_path(4);
  Graph c4 = make_cycle(4);
  EmbeddingMap inclusion{{0, 1, 2, 3}, 1};
  CHECK_FALSE(verify_scale_embedding(p4, c4, inclusion));
}

TEST_CASE("half-cubes and cocktail parties are smooth") {
  for (int k = 1; k <= 5; ++k) CHECK(smooth_bit(make_half_cube(k)));
  for (int m = 2; m <= 4; ++m) CHECK(smooth_bit(make_cocktail_party(m)));
}

TEST_CASE("sampled isometric subgraphs of products of smooth pieces are smooth") {
  std::vector<Graph> pieces{make_complete(3), make_cocktail_party(2), make_half_cube(3)};
  std::mt19937 rng(11);
  int done = 0;
  while (done < 10) {
    const Graph& a = pieces[rng() % pieces.size()];
    const Graph& b = pieces[rng() % pieces.size()];
    Graph prod = cartesian_product(a, b).graph;
    DistMatrix d = apsp(prod);
    VertexSet seed(prod.vertex_count());
    seed.insert(rng() % prod.vertex_count());
    seed.insert(rng() % prod.vertex_count());
    seed.insert(rng() % prod.vertex_count());
    VertexSet hull = convex_hull(prod, d, seed).hull;
    REQUIRE(is_isometric_subgraph(prod, hull));
    Graph sub = induced_subgraph(prod, hull);
    CHECK(smooth_bit(sub));
    ++done;
  }
}
