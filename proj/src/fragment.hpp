#pragma once

#include "kinggraph.hpp"
#include "tile.hpp"

namespace qapc {

struct CompileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical on-edge position of the connecting vertex inside a 4x4 box,
// chosen so facing pairs of adjacent boxes land diagonally adjacent and the
// assignment is stable under quarter-turn rotation:
//   edge 1 -> (2,3), edge 2 -> (0,2), edge 3 -> (1,0), edge 4 -> (3,1)
Pos canonical_conn(int edge);

// Wire values on edges 2 and 3 read reversed: x = 1 iff the connecting
// vertex is NOT in the independent set.
bool edge_reversed(int edge);

// One tile compiled to a weighted subgraph of a single 4x4 box.
struct TileFragment {
  std::string label;
  LatticeGraph graph; // box_rows = box_cols = 1, local coordinates
  // Bias anchor per truth-table row (row aligned with the tile's sorted wired
  // edges): vertex whose weight absorbs that row's bias. Anchors are
  // re-certified after decoration, never trusted.
  std::map<std::vector<int>, Pos> bias_anchors;

  std::map<int, Pos> connecting() const; // edge -> position
};

// Library key for a tile: kind, orientation and the effective rows left by
// its restrictions. Biases do not change the key; they are injected into the
// fragment's anchors at stitch time.
std::string fragment_key(const Tile &t);

struct CompilationCertificate {
  long long k = 0;
  LinForm w_tilde;
};

struct FragmentLibrary {
  std::map<std::string, TileFragment> fragments;
  std::map<std::string, CompilationCertificate> certificates;
};

// All hand-designed fragments (wires, corners, crossings, restricted gates,
// variables, terminators, junctions), each certified on construction.
// Gates compile only in their bottom-entry orientation: with the canonical
// connecting positions, a gate fed through edges 1 and 2 admits no correct
// compilation, so chains route inputs downward and enter gates from below.
const FragmentLibrary &standard_library();

// Uncached copy, re-running every certification (used by the verify command).
FragmentLibrary build_standard_library();

} // namespace qapc
