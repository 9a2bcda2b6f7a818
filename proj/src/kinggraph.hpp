#pragma once

#include "delta.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace qapc {

struct KingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Pos = std::pair<int, int>; // (row, col) in lattice units
using VertexSet = std::set<Pos>;

struct Vertex {
  Pos pos{0, 0};
  DeltaWeight weight;
  bool connecting = false;
  int edge = 0; // tile edge the connecting vertex lies on, 0 otherwise
  bool corner_exception = false;
  std::string label;
};

// king adjacency: Chebyshev distance exactly 1
bool king_adjacent(const Pos &a, const Pos &b);

// Weighted subgraph of a king's-graph lattice organized in 4x4 tile boxes.
// Adjacency is implicit from positions.
struct LatticeGraph {
  int box_rows = 0, box_cols = 0; // lattice spans 4*box_rows x 4*box_cols
  std::vector<Vertex> vertices;

  void add_vertex(Vertex v); // rejects duplicate positions
  const Vertex *find(const Pos &p) const;
  VertexSet connecting_set() const;
  std::set<Pos> boxes() const; // (box row, box col) of every occupied box

  // Checks position bounds and the connecting-vertex placement rule:
  // connecting vertices sit on the perimeter of their box and never in a
  // corner unless they carry the corner-exception flag. Returns a
  // description of the first violation, empty if none.
  std::string validate() const;

private:
  std::map<Pos, size_t> index_;
};

Pos box_of(const Pos &p);

bool is_independent(const LatticeGraph &g, const VertexSet &s); // throws on foreign vertex

// w_circ(S) = sum of member weights + delta per unchosen connecting vertex.
DeltaWeight circuit_weight(const LatticeGraph &g, const VertexSet &s);

struct BoundarySplit {
  VertexSet b1, b2, b;
};

// Vertices of each side adjacent to the other side, for a partition of the
// occupied boxes into part1 and its complement.
BoundarySplit split_boundary(const LatticeGraph &g, const std::set<Pos> &part1);

// Subgraph induced by the boxes of part1; vertices on the shared boundary
// become connecting vertices of the part.
LatticeGraph subgraph_of_part(const LatticeGraph &g, const std::set<Pos> &part1);

// Verifies the split identity
//   w_circ(S, G) = w_circ(S1, G1) + w_circ(S2, G2) - delta * |B \ S|
// exactly, with the boundary vertices counted as connecting on both parts.
bool check_weight_lemma(const LatticeGraph &g, const std::set<Pos> &part1, const VertexSet &s);

} // namespace qapc
