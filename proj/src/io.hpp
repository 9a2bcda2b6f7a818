#pragma once

#include "compiler.hpp"
#include "mwis.hpp"
#include "oracle.hpp"
#include "qap.hpp"

#include <cstdint>
#include <optional>

namespace qapc {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parse failure with 1-based location of the offending token.
struct ParseError : IoError {
  ParseError(const std::string &msg, int line_, int col_)
      : IoError("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
  int line, col;
};

struct InstanceParseOptions {
  bool swap_matrices = false;       // read D before F
  bool allow_float_as_rational = false; // accept decimal literals, converted exactly
};

// Whitespace-separated token stream: n, then n^2 flow entries row-major, then
// n^2 distance entries. '#' starts a comment running to end of line.
QapInstance parse_instance(const std::string &text, const InstanceParseOptions &opts = {});

std::string instance_to_json(const QapInstance &inst);
QapInstance instance_from_json(const std::string &text);

std::string problem_to_json(const BinaryProblem &p);
BinaryProblem problem_from_json(const std::string &text);

std::string circuit_to_json(const Circuit &c);
Circuit circuit_from_json(const std::string &text);

// Weights resolved numerically at the given delta; positions in lattice units.
std::string graph_to_json(const LatticeGraph &g, const Rat &delta);

struct GraphFile {
  LatticeGraph graph; // loaded weights live in the bias, delta coefficient 0
  Rat delta;
  Rat radius;
};
GraphFile graph_from_json(const std::string &text);

// Certificates are embedded; a matching content hash lets a reload skip
// re-certification, anything else is re-certified fragment by fragment.
std::string library_to_json(const FragmentLibrary &lib);
FragmentLibrary library_from_json(const std::string &text, bool *hash_matched = nullptr);

std::string solve_report_to_json(const SolveReport &rep, bool include_timing = true);
std::string oracle_to_json(const OracleResult &res);

// Deterministic 64-bit generator for seeded instance generation.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next();
  // uniform in [0, bound), bound >= 1
  uint64_t below(uint64_t bound);
};

// Integer instance with entries uniform in [lo, hi].
QapInstance random_instance(int n, uint64_t seed, long long lo = 0, long long hi = 9);

struct RenderSpec {
  int cell = 40;                      // pixels per tile or lattice cell
  bool show_weights = false;
  std::optional<VertexSet> highlight; // graphs only; must be vertices of the graph
};

// Deterministic SVG, integer coordinates only: tiles as squares with their
// wires, restrictions as X marks, biases as circles.
std::string render_circuit(const Circuit &c, const RenderSpec &spec = {});

// Vertices as discs on the lattice with king adjacency drawn, the highlight
// set filled.
std::string render_graph(const LatticeGraph &g, const RenderSpec &spec = {});

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

} // namespace qapc
