#include <doctest.h>

#include "kinggraph.hpp"

using namespace qapc;

namespace {

Vertex vx(int r, int c, long long dc, bool connecting = false, int edge = 0) {
  Vertex v;
  v.pos = {r, c};
  v.weight = DeltaWeight(dc);
  v.connecting = connecting;
  v.edge = connecting && edge == 0 ? 2 : edge;
  return v;
}

// two boxes side by side, one vertex each, adjacent across the seam
LatticeGraph two_box_graph() {
  LatticeGraph g;
  g.box_rows = 1;
  g.box_cols = 2;
  g.add_vertex(vx(1, 3, 2));
  g.add_vertex(vx(1, 4, 3));
  return g;
}

} // namespace

TEST_SUITE("kinggraph") {

TEST_CASE("king adjacency is Chebyshev distance one") {
  CHECK(king_adjacent({2, 2}, {2, 3}));
  CHECK(king_adjacent({2, 2}, {3, 3}));
  CHECK(king_adjacent({2, 2}, {1, 1}));
  CHECK(!king_adjacent({2, 2}, {2, 2}));
  CHECK(!king_adjacent({2, 2}, {2, 4}));
  CHECK(!king_adjacent({2, 2}, {4, 3}));
}

TEST_CASE("boxes tile the lattice in fours") {
  CHECK(box_of({0, 0}) == Pos{0, 0});
  CHECK(box_of({3, 3}) == Pos{0, 0});
  CHECK(box_of({4, 3}) == Pos{1, 0});
  CHECK(box_of({7, 11}) == Pos{1, 2});
}

TEST_CASE("duplicate positions are rejected") {
  LatticeGraph g;
  g.box_rows = g.box_cols = 1;
  g.add_vertex(vx(1, 1, 1));
  CHECK_THROWS_AS(g.add_vertex(vx(1, 1, 2)), KingError);
  CHECK(g.find({1, 1}) != nullptr);
  CHECK(g.find({2, 2}) == nullptr);
}

TEST_CASE("validation enforces bounds and connecting placement") {
  LatticeGraph g;
  g.box_rows = g.box_cols = 1;
  g.add_vertex(vx(1, 1, 1));
  CHECK(g.validate().empty());

  LatticeGraph out;
  out.box_rows = out.box_cols = 1;
  out.add_vertex(vx(5, 1, 1));
  CHECK(!out.validate().empty());

  LatticeGraph interior;
  interior.box_rows = interior.box_cols = 1;
  interior.add_vertex(vx(1, 1, 1, true)); // connecting vertices sit on the perimeter
  CHECK(!interior.validate().empty());

  LatticeGraph corner;
  corner.box_rows = corner.box_cols = 1;
  corner.add_vertex(vx(0, 0, 1, true));
  CHECK(!corner.validate().empty());

  LatticeGraph excepted;
  excepted.box_rows = excepted.box_cols = 1;
  Vertex v = vx(0, 0, 1, true);
  v.corner_exception = true;
  excepted.add_vertex(v);
  CHECK(excepted.validate().empty());

  LatticeGraph edge;
  edge.box_rows = edge.box_cols = 1;
  edge.add_vertex(vx(0, 2, 1, true));
  CHECK(edge.validate().empty());
}

TEST_CASE("independence respects king adjacency") {
  LatticeGraph g = two_box_graph();
  CHECK(is_independent(g, {{1, 3}}));
  CHECK(is_independent(g, {}));
  CHECK(!is_independent(g, {{1, 3}, {1, 4}})); // adjacent across the seam
  CHECK_THROWS_AS(is_independent(g, {{0, 0}}), KingError);
}

TEST_CASE("circuit weight pays delta for every unchosen connecting vertex") {
  LatticeGraph g;
  g.box_rows = g.box_cols = 1;
  g.add_vertex(vx(0, 2, 2, true));
  g.add_vertex(vx(2, 2, 3));
  CHECK(circuit_weight(g, {}) == DeltaWeight(1));
  CHECK(circuit_weight(g, {{0, 2}}) == DeltaWeight(2));
  CHECK(circuit_weight(g, {{2, 2}}) == DeltaWeight(4));
  CHECK(circuit_weight(g, {{0, 2}, {2, 2}}) == DeltaWeight(5));
  CHECK(g.connecting_set() == VertexSet{{0, 2}});
}

TEST_CASE("splitting a graph marks the seam as connecting on both parts") {
  LatticeGraph g = two_box_graph();
  std::set<Pos> part1{{0, 0}};
  BoundarySplit b = split_boundary(g, part1);
  CHECK(b.b1 == VertexSet{{1, 3}});
  CHECK(b.b2 == VertexSet{{1, 4}});
  CHECK(b.b == VertexSet{{1, 3}, {1, 4}});

  LatticeGraph g1 = subgraph_of_part(g, part1);
  REQUIRE(g1.find({1, 3}) != nullptr);
  CHECK(g1.find({1, 3})->connecting);
  CHECK(g1.find({1, 4}) == nullptr);
}

TEST_CASE("the split identity holds exactly") {
  LatticeGraph g = two_box_graph();
  std::set<Pos> part1{{0, 0}};
  CHECK(check_weight_lemma(g, part1, {}));
  CHECK(check_weight_lemma(g, part1, {{1, 3}}));
  CHECK(check_weight_lemma(g, part1, {{1, 4}}));
}

} // TEST_SUITE
