#pragma once

#include "cbop.hpp"

#include <map>
#include <set>
#include <tuple>

namespace qapc {

struct TileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Edge numbering: 1 = right, 2 = top, 3 = left, 4 = bottom, counterclockwise
// from the right edge. Orientations 0..3 rotate a tile clockwise in quarter
// turns; 4..7 mirror horizontally first, then rotate.
inline constexpr int kEdgeCount = 4;

int rotate_edge(int edge);         // one clockwise quarter turn
int orient_edge(int edge, int orientation);

enum class TileKind {
  Variable,
  WireStraight,
  WireCorner,
  Intersection,
  CornerMeet,
  OrGate,
  AndGate,
  Terminator,
  TJunction,
};

const char *tile_kind_name(TileKind k);
TileKind tile_kind_from_name(const std::string &name);

struct TruthTable {
  std::vector<int> wired;             // sorted subset of {1,2,3,4}
  std::set<std::vector<int>> rows;    // each row aligned with wired
};

enum class DecorationKind { Restriction, Bias };

struct Decoration {
  DecorationKind kind = DecorationKind::Restriction;
  std::map<int, int> selector; // edge -> required bit, partial
  LinForm bias;                // Bias only

  bool matches(const std::vector<int> &wired, const std::vector<int> &row) const;
};

// (i,j)-decoration for a tile with one horizontal and one vertical wire:
// horizontal value i, vertical value j. Horizontal means edges 1/3, vertical
// 2/4; the selector pins one representative of each pair.
Decoration xy_restriction(int i, int j);
Decoration xy_bias(int i, int j, LinForm weight);
Decoration value_bias(int edge, int bit, LinForm weight); // 1-bias on a single wire

struct Tile {
  TileKind kind = TileKind::Variable;
  int orientation = 0;
  std::string label;
  TruthTable base;
  std::vector<Decoration> decorations;

  std::set<std::vector<int>> effective_rows() const; // base minus restrictions
  LinForm row_weight(const std::vector<int> &row) const;
  // Restrictions only, as a canonical string; fragments are keyed by this
  // together with kind and orientation.
  std::string restriction_signature() const;
};

Tile standard_tile(TileKind kind, int orientation);
Tile decorate(const Tile &t, const Decoration &d); // throws on dead decorations

struct Circuit {
  int rows = 0, cols = 0;
  std::map<std::pair<int, int>, Tile> tiles;

  void place(int r, int c, Tile t);
  const Tile *at(int r, int c) const;
};

// Empty string when well-formed, else a description of the first violation.
// Wired edges must face wired edges of neighbor tiles; edges facing empty
// cells must be unwired; grid-boundary edges may dangle (open circuit).
std::string circuit_check(const Circuit &c);

// True when additionally no wired edge dangles at the boundary.
bool circuit_closed(const Circuit &c);

struct CircuitNets {
  int count = 0;
  std::map<std::tuple<int, int, int>, int> net_of; // (r, c, edge) -> net id
};

CircuitNets circuit_nets(const Circuit &c);

struct CircuitAssignment {
  std::map<std::tuple<int, int, int>, int> values; // (r, c, edge) -> bit
};

// Exhaustive semantics by backtracking over tiles in row-major order with
// forward checking on nets. Weight of an assignment is the sum of all
// triggered biases. Order of results is deterministic.
std::vector<std::pair<CircuitAssignment, LinForm>>
circuit_valid_assignments(const Circuit &c, int net_cap = 24);

// Chain of (1,1)-restricted OR gates: k dangling input wires at the top, one
// output wire at the right edge; valid assignments have at most one input set
// and the output equal to the sum of the inputs. k = 1 degenerates to a bare
// corner pass-through.
Circuit build_or_chain(int k);

// Chain of (0,0)-restricted AND gates: at most one input is zero, i.e. the
// inputs sum to at least k - 1. Output is their conjunction.
Circuit build_and_chain(int k);

// Demo fixture: three variables under pairwise-OR constraints with weights
// w1..w4 (w4 on the all-ones row), built from an AND gate, a decorated
// crossing, and a corner-meet joining two wire ends. Mirrors the shape used
// throughout the docs.
Circuit or_triple_demo_circuit();

} // namespace qapc
