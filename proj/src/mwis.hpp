#pragma once

#include "kinggraph.hpp"

#include <functional>
#include <optional>

namespace qapc {

struct MwisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolveReport {
  VertexSet set;
  DeltaWeight weight;                // circuit weight of `set`, symbolic in delta
  std::optional<Rat> resolved;       // weight at the concrete delta (bnb only)
  long long nodes = 0;
  double wall_seconds = 0.0;
  std::string solver;
  bool timed_out = false;            // incumbent only; optimality not certified
};

// Exhaustive search in the large-delta order, maximizing circuit weight (the
// per-skipped-connecting-vertex delta included). Ties go to the smallest
// vertex-position set in lexicographic order. Biases must share one symbol
// profile wherever two delta coefficients tie; pure-rational biases always
// qualify.
SolveReport brute_mwis(const LatticeGraph &g, int cap = 30);

// Exact branch and bound at a concrete delta > 0: kernel reductions
// (nonpositive and simplicial vertices), max-degree include-first branching,
// and a greedy cover of the remaining vertices by 2x1/2x2 king cliques as the
// upper bound. All biases must be plain rationals. A negative timeout reads
// QAPC_TIMEOUT_SECS (default 600 seconds); on expiry the incumbent comes back
// flagged. Completed solves return the lexicographically smallest optimum.
SolveReport bnb_mwis(const LatticeGraph &g, const Rat &delta, double timeout_seconds = -1.0);

// Independence plus exact weight recomputation; never throws, the reason for
// a false verdict lands in *reason when given.
bool verify(const LatticeGraph &g, const VertexSet &s, const DeltaWeight &claimed,
            std::string *reason = nullptr);

// Visits every maximal independent set once, in the subset order induced by
// ascending vertex positions. |V| <= 64; throws past `cap` visits.
void for_each_maximal_is(const LatticeGraph &g,
                         const std::function<void(const VertexSet &)> &visit,
                         size_t cap = 1u << 22);
std::vector<VertexSet> enumerate_maximal_is(const LatticeGraph &g, size_t cap = 1u << 22);

} // namespace qapc
