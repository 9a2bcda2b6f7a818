#include <doctest.h>

#include "compiler.hpp"
#include "mwis.hpp"

using namespace qapc;

namespace {

// two straight wires side by side, both ends dangling at the grid boundary
Circuit two_wires() {
  Circuit c;
  c.rows = 1;
  c.cols = 2;
  c.place(0, 0, standard_tile(TileKind::WireStraight, 0));
  c.place(0, 1, standard_tile(TileKind::WireStraight, 0));
  return c;
}

Circuit closed_wire(LinForm bias = LinForm(0)) {
  Circuit c;
  c.rows = 1;
  c.cols = 3;
  Tile left = standard_tile(TileKind::Terminator, 0);
  if (!bias.is_zero()) left = decorate(left, value_bias(1, 1, bias));
  c.place(0, 0, left);
  c.place(0, 1, standard_tile(TileKind::WireStraight, 0));
  c.place(0, 2, standard_tile(TileKind::Terminator, 2));
  return c;
}

} // namespace

TEST_SUITE("compiler") {

TEST_CASE("two stitched wires share one facing pair") {
  CompiledCircuit cc = stitch(two_wires(), standard_library());
  CHECK(cc.matched_pairs == 1);
  CHECK(cc.k == 9); // 5 + 5 - 1
  CHECK(cc.w_tilde == LinForm(0));
  CHECK(cc.graph.vertices.size() == 8); // four per straight wire
  CHECK(cc.graph.validate().empty());

  // the matched pair sits diagonally across the box seam and is interior now
  const Vertex *left_end = cc.graph.find({2, 3});
  const Vertex *right_end = cc.graph.find({1, 4});
  REQUIRE(left_end != nullptr);
  REQUIRE(right_end != nullptr);
  CHECK(!left_end->connecting);
  CHECK(!right_end->connecting);
  CHECK(king_adjacent(left_end->pos, right_end->pos));

  // dangling ends remain connecting
  CHECK(cc.graph.connecting_set() == VertexSet{{1, 0}, {2, 7}});

  REQUIRE(cc.measured_w_tilde.has_value());
  CHECK(*cc.measured_w_tilde == LinForm(0));
}

TEST_CASE("closing a circuit removes every connecting vertex") {
  CompiledCircuit cc = stitch(closed_wire(), standard_library(), /*require_closed=*/true);
  CHECK(cc.k == 5); // 1 + 5 + 1 - 2
  CHECK(cc.matched_pairs == 2);
  CHECK(cc.graph.connecting_set().empty());
}

TEST_CASE("open circuits are rejected when closure is demanded") {
  CHECK_THROWS_AS(stitch(two_wires(), standard_library(), true), CompileError);
}

TEST_CASE("malformed circuits never reach the stitcher") {
  Circuit c;
  c.rows = 1;
  c.cols = 2;
  c.place(0, 0, standard_tile(TileKind::Terminator, 0)); // wired right
  c.place(0, 1, standard_tile(TileKind::Terminator, 1)); // wired bottom, left dangles inward
  CHECK_THROWS_AS(stitch(c, standard_library()), CompileError);
}

TEST_CASE("biased tiles are re-certified during stitching") {
  CompiledCircuit cc = stitch(closed_wire(LinForm(3)), standard_library(), true);
  CHECK(cc.k == 5);
  REQUIRE(cc.w_tilde.is_constant());
  CHECK(cc.w_tilde.c >= 0);

  SolveReport rep = brute_mwis(cc.graph);
  CHECK(rep.weight == DeltaWeight(5, LinForm(3))); // the biased row wins at large delta

  CircuitAssignment a = decode_assignment(cc.graph, rep.set);
  CHECK(assignment_consistent(cc.source, a));
  CHECK(a.values.at({0, 0, 1}) == 1);
  CHECK(a.values.at({0, 2, 3}) == 1);
}

TEST_CASE("negative biases flip the optimum to the zero row") {
  CompiledCircuit cc = stitch(closed_wire(LinForm(-2)), standard_library(), true);
  SolveReport rep = brute_mwis(cc.graph);
  CHECK(rep.weight == DeltaWeight(5, LinForm(0)));
  CircuitAssignment a = decode_assignment(cc.graph, rep.set);
  CHECK(assignment_consistent(cc.source, a));
  CHECK(a.values.at({0, 0, 1}) == 0);
}

TEST_CASE("symbolic biases survive to the certificate") {
  CompiledCircuit cc = stitch(closed_wire(LinForm::sym("b")), standard_library(), true);
  CHECK(provably_le(LinForm::sym("b"), cc.w_tilde));
  CHECK(provably_le(-LinForm::sym("b"), cc.w_tilde));
}

TEST_CASE("the split identity holds on a compiled or chain") {
  CompiledCircuit cc = stitch(build_or_chain(2), standard_library());
  REQUIRE(cc.graph.validate().empty());
  std::set<Pos> left_boxes;
  for (const auto &b : cc.graph.boxes())
    if (b.second == 0) left_boxes.insert(b);
  REQUIRE(!left_boxes.empty());
  CHECK(check_weight_lemma(cc.graph, left_boxes, {}));

  SolveReport rep = brute_mwis(cc.graph);
  CHECK(check_weight_lemma(cc.graph, left_boxes, rep.set));
}

TEST_CASE("delta choices stay strictly above their bound") {
  CHECK(choose_delta(Rat(10)) == Rat(11));
  CHECK(choose_delta(Rat(0)) == Rat(1, 10));
  CHECK(choose_delta(Rat(4, 5)) == Rat(22, 25));
  CompiledCircuit cc = stitch(two_wires(), standard_library());
  Rat d = choose_delta(cc, Rat(10));
  CHECK(cc.delta == Rat(11));
  CHECK(d == Rat(11));
}

TEST_CASE("decoding reads reversed edges reversed") {
  // vertical wire between two terminators: edges 4 and 2 meet at the seam
  Circuit c;
  c.rows = 2;
  c.cols = 1;
  Tile top = decorate(standard_tile(TileKind::Terminator, 1), value_bias(4, 1, LinForm(2)));
  c.place(0, 0, top);
  c.place(1, 0, standard_tile(TileKind::Terminator, 3));
  CompiledCircuit cc = stitch(c, standard_library(), true);
  SolveReport rep = brute_mwis(cc.graph);
  CHECK(rep.weight == DeltaWeight(1, LinForm(2)));
  CircuitAssignment a = decode_assignment(cc.graph, rep.set);
  CHECK(assignment_consistent(cc.source, a));
  CHECK(a.values.at({0, 0, 4}) == 1);
  CHECK(a.values.at({1, 0, 2}) == 1);
}

} // TEST_SUITE
