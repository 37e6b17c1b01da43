#include "doctest.h"
#include "gkm/error.hpp"
#include "gkm/moment_geometry.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gkm;
using testing::corpus_graph;
using testing::corpus_oriented;
using testing::q;
using testing::v2;

namespace {

WeightVector pt(const Rational& a, const Rational& b) { return WeightVector{a, b}; }

}  // namespace

TEST_CASE("same side of a line") {
  CHECK(same_side(v2(1, 1), v2(2, 3), v2(1, 0)));
  CHECK_FALSE(same_side(v2(1, 1), v2(1, -1), v2(1, 0)));
  CHECK(same_side(v2(5, 0), v2(1, -1), v2(1, 0)));
  CHECK(same_side(v2(5, 0), v2(1, 1), v2(1, 0)));
  CHECK_THROWS_AS(same_side(v2(1, 1), v2(1, 1), v2(0, 0)), Error);
}

TEST_CASE("tetragon trichotomy") {
  CHECK(classify_tetragon(v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)) == TetragonClass::Convex);
  CHECK(classify_tetragon(v2(0, 0), pt(q(2), q(3, 2)), v2(0, 2), pt(q(1, 2), q(1))) == TetragonClass::Concave);
  CHECK(classify_tetragon(v2(0, 0), pt(q(2), q(1, 2)), v2(0, 2), v2(2, 2)) == TetragonClass::Crossed);
  CHECK(to_string(TetragonClass::Crossed) == "crossed");
  for (const auto& bad : std::vector<std::array<WeightVector, 4>>{{v2(0, 0), v2(1, 0), v2(2, 0), v2(0, 1)},
                                                                  {v2(0, 0), v2(1, 0), v2(0, 0), v2(0, 1)}}) {
    try {
      classify_tetragon(bad[0], bad[1], bad[2], bad[3]);
      FAIL("expected Degenerate");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Degenerate);
    }
  }
}

TEST_CASE("segment intersection") {
  CHECK(segments_intersect(v2(0, 0), v2(2, 2), v2(0, 2), v2(2, 0)));
  CHECK_FALSE(segments_intersect(v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)));
  CHECK(segments_intersect(v2(0, 0), v2(2, 0), v2(1, 0), v2(1, 5)));
  CHECK_FALSE(segments_intersect(v2(0, 0), v2(1, 0), v2(2, 0), v2(3, 0)));
}

TEST_CASE("cycle shapes") {
  {
    const auto og = corpus_oriented("cp3-k4");
    CHECK(cycle_shape(og, og.graph().index_of("A")).triangular);
  }
  {
    const auto og = corpus_oriented("flag-su3");
    for (std::size_t p : vertices_of_down_degree(og, 1)) {
      const auto s = cycle_shape(og, p);
      CHECK_FALSE(s.triangular);
      CHECK(s.tetragon == TetragonClass::Convex);
    }
  }
  {
    const auto og = corpus_oriented("tol-d");
    const auto s = cycle_shape(og, og.graph().index_of("p1"));
    CHECK_FALSE(s.triangular);
    CHECK(s.tetragon == TetragonClass::Concave);
    CHECK(cycle_shape(og, og.graph().index_of("p2")).tetragon == TetragonClass::Convex);
  }
  {
    const auto og = corpus_oriented("cube-g");
    for (std::size_t p : vertices_of_down_degree(og, 1)) {
      const auto s = cycle_shape(og, p);
      CHECK_FALSE(s.triangular);
      CHECK(s.tetragon == TetragonClass::Convex);
    }
  }
}

TEST_CASE("interior vertices by the weight cone") {
  const auto og = corpus_oriented("cp3-k4");
  CHECK(is_interior_vertex(og, og.graph().index_of("A")));
  CHECK_FALSE(is_interior_vertex(og, og.graph().index_of("D")));
  CHECK(is_interior_vertex(corpus_oriented("tol-d"), corpus_graph("tol-d")->index_of("p1")));
}

TEST_CASE("weight-cone interiority agrees with the hull boundary") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const auto g = corpus_graph(name);
    for (std::size_t v = 0; v < g->vertex_count(); ++v) {
      CAPTURE(g->id(v));
      CHECK(is_interior_vertex(*g, v) == !on_hull_boundary(*g, v));
    }
  }
}

TEST_CASE("hull") {
  const auto g = corpus_graph("tol-d");
  const auto hull = convex_hull(*g);
  std::vector<std::string> ids;
  for (std::size_t v : hull) ids.push_back(g->id(v));
  CHECK(ids == std::vector<std::string>{"o", "p2", "q2", "r"});
  for (std::size_t i = 0; i < hull.size(); ++i) {
    CHECK(orientation(g->mu(hull[i]), g->mu(hull[(i + 1) % hull.size()]), g->mu(hull[(i + 2) % hull.size()])) > 0);
  }
  for (const auto& name : corpus_names()) {
    const auto h = corpus_graph(name);
    CHECK(convex_hull(*h).size() == oracle::extreme_point_count(oracle::plain(*h).mu));
  }
  // A point in the middle of a hull edge is boundary but not extreme.
  const GkmGraph line(2, 0, {{"a", v2(0, 0)}, {"b", v2(2, 0)}, {"c", v2(1, 0)}, {"d", v2(0, 2)}}, {});
  CHECK(convex_hull(line).size() == 3);
  CHECK(on_hull_boundary(line, line.index_of("c")));
}

TEST_CASE("table classification") {
  const auto a = classify_type(corpus_oriented("cp3-k4"));
  CHECK(a.label == 'a');
  CHECK(a.hull_vertices == 3);
  CHECK(a.vertex_count == 4);
  CHECK(a.o_adjacent_r);
  CHECK(a.tetragonal_cycles == 0);

  const auto f = classify_type(corpus_oriented("flag-su3"));
  CHECK(f.label == 'f');
  CHECK(f.hull_vertices == 6);
  CHECK(f.o_adjacent_r);
  CHECK(f.tetragonal_cycles == 2);

  const auto d = classify_type(corpus_oriented("tol-d"));
  CHECK(d.label == 'd');
  CHECK(d.hull_vertices == 4);
  CHECK(d.tetragonal_cycles == 2);

  for (const auto& inst : corpus()) {
    CAPTURE(inst.name);
    CHECK(classify_type(corpus_oriented(inst.name)).label == inst.expected_type);
  }

  CHECK(table_label(3, 4, true, 0) == 'a');
  CHECK(table_label(4, 6, false, 1) == 'c');
  CHECK(table_label(6, 8, false, 3) == 'g');
  CHECK(table_label(5, 6, true, 1) == '?');
  CHECK(table_label(3, 6, true, 2) == '?');
}

TEST_CASE("sign conditions") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const auto og = corpus_oriented(name);
    const auto witnesses = check_sign_conditions(og);
    CHECK_FALSE(witnesses.empty());
    for (const auto& w : witnesses) {
      if (w.rule == "same_side") CHECK((w.c.sign() > 0) == w.same_side);
      if (w.rule == "convex_cycle") CHECK(w.c.sign() > 0);
    }
  }
  const auto tol = check_sign_conditions(corpus_oriented("tol-d"));
  bool opposite = false;
  for (const auto& w : tol) {
    if (w.rule == "same_side" && w.p == "p1" && w.q == "q1") {
      opposite = true;
      CHECK_FALSE(w.same_side);
      CHECK(w.c.sign() < 0);
    }
  }
  CHECK(opposite);
  const auto cube = check_sign_conditions(corpus_oriented("cube-g"));
  CHECK(std::count_if(cube.begin(), cube.end(), [](const SignWitness& w) { return w.rule == "all_convex"; }) == 3);
}
