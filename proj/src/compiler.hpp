#pragma once

#include "fragment.hpp"

#include <optional>

namespace qapc {

// Comparison regime used when checking a fragment or circuit against the
// correct-compilation properties. Undecorated fragments certify for every
// positive delta; decorated ones only for delta large enough to dominate the
// injected biases, which is the regime every composition theorem operates in.
enum class CertMode { Auto, ForAllDelta, LargeDelta };

struct CertificationFailure : CompileError {
  CertificationFailure(const std::string &msg, int property_, VertexSet witness_)
      : CompileError(msg), property(property_), witness(std::move(witness_)) {}
  int property; // 1 or 2, the violated correct-compilation property
  VertexSet witness;
};

// Exhaustively enumerates independent sets of the fragment (<= 16 vertices),
// groups them by decoded assignment and determines (k, w_tilde) such that
//   valid x:   exists S with w_circ(S) = k delta + w(x), and all S in the
//              class satisfy w_circ(S) <= k delta + w(x)
//   invalid S: w_circ(S) <= (k-1) delta + w_tilde
// Throws CertificationFailure with a witness set when no such pair exists.
CompilationCertificate certify_fragment(const Tile &t, const TileFragment &f,
                                        CertMode mode = CertMode::Auto);

// Adds each bias decoration of the tile to the anchor vertex of the rows it
// selects. Fails when a selected row has no anchor or two selected rows
// sharing an anchor want different biases. The caller re-certifies.
TileFragment inject_biases(const Tile &t, const TileFragment &f);

struct CompiledCircuit {
  Circuit source;
  LatticeGraph graph;
  long long k = 0;
  LinForm w_tilde;                       // sum of per-tile certificates
  std::optional<LinForm> measured_w_tilde; // full-graph enumeration, when feasible
  int matched_pairs = 0;
  Rat delta; // 0 until chosen
};

// Places one certified fragment per tile into its 4x4 box, verifies that the
// only inter-box adjacencies are the facing connecting-vertex pairs of wired
// tile edges (diagonal boxes included in the scan), and computes
//   k = sum k_i - (number of matched facing pairs),   w_tilde = sum w_tilde_i.
// For a closed circuit the pair count equals half the connecting-vertex
// total, recovering k = sum (k_i - |V_con(G_i)|/2). Tiles with biases get
// their fragments re-decorated and re-certified here.
CompiledCircuit stitch(const Circuit &c, const FragmentLibrary &lib,
                       bool require_closed = false);

// delta strictly above the bound: bound * (1 + margin), default margin 1/10;
// a zero bound yields the margin itself.
Rat choose_delta(const Rat &bound, const Rat &margin = Rat(1, 10));

// Same, recording the choice in the compiled circuit.
Rat choose_delta(CompiledCircuit &cc, const Rat &bound, const Rat &margin = Rat(1, 10));

// Reads wire values off an independent set: value 1 on edges 1/4 iff the
// connecting vertex is in the set, reversed on edges 2/3. Consistency across
// facing edges is the caller's check.
CircuitAssignment decode_assignment(const LatticeGraph &g, const VertexSet &s);

// True when every facing pair of wired edges decodes to equal values and
// every tile row is one of its effective rows; used to accept solver output.
bool assignment_consistent(const Circuit &c, const CircuitAssignment &a);

} // namespace qapc
