#pragma once

#include "qap.hpp"

namespace qapc {

struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  Rat cost;                          // optimal
  std::vector<Placement> optima;     // every placement achieving it, lex order
  unsigned long long examined = 0;   // n!
};

// Full enumeration of S_n in lexicographic order; the referee for every
// pipeline result. n <= 10.
OracleResult brute_qap(const QapInstance &inst);

} // namespace qapc
