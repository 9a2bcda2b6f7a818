#pragma once

#include "cbop.hpp"
#include "tile.hpp"

namespace qapc {

struct QapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QapInstance {
  int n = 0;
  std::vector<std::vector<Rat>> F, D; // flows f_xy, distances d_ij
  void validate() const;              // square, matching dimension
};

struct Placement {
  std::vector<int> perm; // 0-based: facility x sits at location perm[x]
  bool is_permutation() const;
  int bit(int x, int i) const { return perm[static_cast<size_t>(x)] == i ? 1 : 0; }
};

Rat cost(const QapInstance &inst, const Placement &p);

// One binary variable per matrix entry, one equality constraint per row and
// column, weight = -cost.
BinaryProblem canonical_formulation(const QapInstance &inst);

using WireId = std::pair<int, int>;           // (facility x, location i), 1-based
using WirePair = std::pair<WireId, WireId>;   // lexicographically ordered

struct ReducedCoefficients {
  int n = 0;
  std::vector<std::vector<Rat>> fprime, dprime; // n x n, last row/col zero
  std::map<WireId, Rat> linear;                 // w_xi over x,i in [n-1]
  std::map<WirePair, Rat> pair;                 // w_xi,yj for (x,i) < (y,j), x != y, i != j
  Rat c_I;                                      // weight + cost = c_I on the valid set
};

struct ReducedFormulation {
  BinaryProblem problem; // (n-1)^2 variables, row/col <= 1, total >= n-2
  ReducedCoefficients coeffs;
  VariableMap to_canonical; // the eliminated entries as affine forms
};

// Coefficients come from symbolic substitution: expand -cost over all n^2
// entries, replace last-row/last-column entries by their affine forms,
// reduce squares by idempotence, and drop monomials that vanish under the
// row/column constraints. The weight polynomial carries no constant; the
// dropped constant is recorded negated as c_I.
ReducedFormulation reduced_formulation(const QapInstance &inst);

// Closed-form candidates for the reduced coefficients, used only as a
// cross-check of the substitution. `pair_alt` patches the first distance
// subscript of `pair_printed` from (y,j) to (i,j).
struct ClosedFormCoefficients {
  std::map<WireId, Rat> linear;
  std::map<WirePair, Rat> pair_printed;
  std::map<WirePair, Rat> pair_alt;
};
ClosedFormCoefficients closed_form_coefficients(const QapInstance &inst);

struct NaiveCircuitParams {
  Rat w0, eps;
  std::map<WireId, Rat> wxi;    // w0 - f_xx d_ii
  std::map<WirePair, Rat> wpair; // 2 w0 - f_xy d_ij - f_yx d_ji, unrestricted pairs
};

// eps defaults to 1 on integer instances, else to the reciprocal of the
// smallest denominator above 1 appearing in the inputs.
NaiveCircuitParams naive_params(const QapInstance &inst, const Rat &eps = Rat(0));

// Crossing lattice over all n^2 wires in lexicographic order, the earlier
// wire running horizontally at each crossing; same-facility and same-location
// crossings carry a both-ones restriction, the rest the pair bias; every wire
// starts and ends in a terminator, the top one carrying the wire bias.
Circuit naive_circuit(const QapInstance &inst, const NaiveCircuitParams &params);
Circuit naive_circuit(const QapInstance &inst);

struct ReducedCircuit {
  Circuit circuit;
  Rat delta_bound; // max_(x,i) { |w_xi| + sum_(y,j) |w_xi,yj| }
  ReducedFormulation formulation;
  std::map<WireId, std::pair<int, int>> var_tiles; // wire -> grid cell of its variable tile
};

// The (n-1)^2-wire layout: variable row on top, crossing lattice, one
// restricted-OR chain per facility (row nonempty flags), restricted-AND chain
// across the flags (at most one empty row), U-turn risers feeding every gate
// from below.
ReducedCircuit reduced_circuit(const QapInstance &inst);

Rat theorem2_bound(const ReducedCoefficients &coeffs);

// Reconstructs the eliminated row and column from the reduced bits and
// validates a permutation; a non-permutation is an internal error, not an
// input condition.
Placement decode_placement(const std::vector<int> &reduced_bits, int n);

// Full-matrix variant for the naive pipeline.
Placement placement_from_matrix(const std::vector<int> &pi_bits, int n);

// Reads the reduced bit vector off the variable tiles of a reduced circuit.
std::vector<int> reduced_bits_from_assignment(const ReducedCircuit &rc,
                                              const CircuitAssignment &a);

} // namespace qapc
