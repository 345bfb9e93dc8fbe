#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "smooth/constructors.hpp"
#include "smooth/patterns.hpp"
#include "smooth/recognizers.hpp"
#include "smooth/smoothness.hpp"
#include "sweeps.hpp"

using namespace smooth;

TEST_CASE("is_bipartite") {
  CHECK(is_bipartite(make_cycle(6)));
  CHECK_FALSE(is_bipartite(make_cycle(5)));
  CHECK(is_bipartite(fixture("K23")));
}

TEST_CASE("is_partial_cube") {
  Graph c6 = make_cycle(6);
  CHECK(is_partial_cube(c6, apsp(c6)));

  const Graph& k23 = fixture("K23");
  CHECK_FALSE(is_partial_cube(k23, apsp(k23)));

  Graph q4 = make_hypercube(4);
  CHECK(is_partial_cube(q4, apsp(q4)));
}

TEST_CASE("is_chordal") {
  CHECK(is_chordal(fixture("K113")));
  CHECK_FALSE(is_chordal(fixture("C4")));
  CHECK(is_chordal(fixture("FIG4")));
  CHECK(is_chordal(Graph(1, {})));
}

TEST_CASE("is_ptolemaic") {
  const Graph& k113 = fixture("K113");
  CHECK(is_ptolemaic(k113, apsp(k113)));

  const Graph& xhouse = fixture("K113PLUS");
  CHECK(is_ptolemaic(xhouse, apsp(xhouse)));

  const Graph& c5 = fixture("C5");
  CHECK_FALSE(is_ptolemaic(c5, apsp(c5)));
}

TEST_CASE("ptolemaic characterization matches the inequality, n <= 7") {
  sweeps::for_each_connected(7, [](const Graph& g, const DistMatrix& d) {
    CHECK(is_ptolemaic(g, d) == ptolemy_inequality_holds(g, d));
  });
}

TEST_CASE("is_weakly_modular") {
  sweeps::for_each_connected(7, [](const Graph& g, const DistMatrix& d) {
    if (is_chordal(g)) CHECK(is_weakly_modular(g, d));
  });

  Graph c6 = make_cycle(6);
  CHECK_FALSE(is_weakly_modular(c6, apsp(c6)));

  const Graph& fig5 = fixture("FIG5");
  CHECK(is_weakly_modular(fig5, apsp(fig5)));
}

TEST_CASE("is_pseudo_modular") {
  const Graph& fig5 = fixture("FIG5");
  CHECK(is_pseudo_modular(fig5, apsp(fig5)));

  Graph c6 = make_cycle(6);
  CHECK_FALSE(is_pseudo_modular(c6, apsp(c6)));

  Graph k5 = make_complete(5);
  CHECK(is_pseudo_modular(k5, apsp(k5)));
}

TEST_CASE("derived classes on fixtures") {
  const Graph& fig4 = fixture("FIG4");
  DistMatrix d4 = apsp(fig4);
  CHECK(derived_class(fig4, d4, "premedian"));
  CHECK(derived_class(fig4, d4, "bridged"));
  CHECK_FALSE(derived_class(fig4, d4, "weakly_median"));

  const Graph& xhouse = fixture("K113PLUS");
  DistMatrix dx = apsp(xhouse);
  CHECK_FALSE(derived_class(xhouse, dx, "weakly_median"));

  CHECK_THROWS_AS(derived_class(fig4, d4, "median"), Error);
}

TEST_CASE("has_pasch_property") {
  // All trees up to 7 vertices.
  sweeps::for_each_connected(7, [](const Graph& g, const DistMatrix& d) {
    if (g.edge_count() == g.vertex_count() - 1) CHECK(has_pasch_property(g, d));
  });

  const Graph& k23 = fixture("K23");
  CHECK_FALSE(has_pasch_property(k23, apsp(k23)));

  Graph k4 = make_complete(4);
  CHECK(has_pasch_property(k4, apsp(k4)));
}

TEST_CASE("has_monotone_intervals") {
  Graph p5 = make_path(5);
  CHECK(has_monotone_intervals(p5, apsp(p5)));

  Graph c6 = make_cycle(6);
  CHECK(has_monotone_intervals(c6, apsp(c6)));

  const Graph& k23 = fixture("K23");
  CHECK_FALSE(has_monotone_intervals(k23, apsp(k23)));
}

TEST_CASE("step axiom BP is bipartiteness, n <= 7") {
  Graph c6 = make_cycle(6);
  CHECK(check_step_axiom_bp(c6, apsp(c6)));
  Graph k3 = make_complete(3);
  CHECK_FALSE(check_step_axiom_bp(k3, apsp(k3)));

  sweeps::for_each_connected(7, [](const Graph& g, const DistMatrix& d) {
    CHECK(check_step_axiom_bp(g, d) == is_bipartite(g));
  });
}

TEST_CASE("verify_retraction") {
  Graph p3 = make_path(3);
  DistMatrix d = apsp(p3);
  CHECK(verify_retraction(p3, d, {0, 1, 2}));
  CHECK(verify_retraction(p3, d, {1, 1, 1}));
  CHECK_FALSE(verify_retraction(p3, d, {1, 0, 2}));  // swap is not idempotent
  CHECK_THROWS_AS(verify_retraction(p3, d, {0, 1}), Error);
}

TEST_CASE("class hierarchy inclusions, n <= 7") {
  sweeps::for_each_connected(7, [](const Graph& g, const DistMatrix& d) {
    ClassReport r = classify(g, d, /*with_evidence=*/false);
    if (r.quasi_median) CHECK(r.weakly_median);
    if (r.weakly_median) CHECK(r.premedian);
    if (r.premedian) CHECK(r.weakly_modular);
    if (r.bridged) CHECK(r.weakly_bridged);
    if (r.weakly_bridged) CHECK(r.bucolic);
    if (r.bucolic) CHECK(r.premedian);
    if (r.chordal) CHECK(r.bridged);
  });
}

TEST_CASE("bipartite: smooth iff partial cube, n <= 6") {
  sweeps::for_each_connected(6, [](const Graph& g, const DistMatrix& d) {
    if (!is_bipartite(g)) return;
    CHECK(is_partial_cube(g, d) == check_sm_edge(g, d).smooth);
  });
}

TEST_CASE("ptolemaic: smooth iff K113-free, n <= 6") {
  const Graph& k113 = fixture("K113");
  sweeps::for_each_connected(6, [&](const Graph& g, const DistMatrix& d) {
    if (!is_ptolemaic(g, d)) return;
    CHECK(check_sm_edge(g, d).smooth == !contains_induced(g, k113).has_value());
  });
}

TEST_CASE("classify on fixtures carries evidence") {
  const Graph& fig4 = fixture("FIG4");
  ClassReport r = classify(fig4, apsp(fig4));
  CHECK(r.chordal);
  CHECK(r.premedian);
  CHECK_FALSE(r.weakly_median);
  CHECK_FALSE(r.smooth);
  REQUIRE(r.evidence.count("smooth") == 1);
  CHECK(r.evidence.at("smooth").vertices.size() == 5);
  REQUIRE(r.evidence.count("weakly_median") == 1);
  CHECK(r.evidence.at("weakly_median").label == "pattern:K113PLUS");

  const Graph& c4 = fixture("C4");
  ClassReport rc = classify(c4, apsp(c4));
  CHECK_FALSE(rc.chordal);
  CHECK(rc.bipartite);
  CHECK(rc.partial_cube);

  Graph disconnected(3, {{0, 1}});
  CHECK_THROWS_AS(classify(disconnected, apsp(disconnected)), Error);
}
