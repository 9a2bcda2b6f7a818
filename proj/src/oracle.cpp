#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace qapc {

OracleResult brute_qap(const QapInstance &inst) {
  inst.validate();
  if (inst.n > 10) throw OracleError("oracle enumerates at most 10! placements");
  int n = inst.n;
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);

  OracleResult res;
  bool first = true;
  do {
    ++res.examined;
    Rat c = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        c += inst.F[static_cast<size_t>(x)][static_cast<size_t>(y)] *
             inst.D[static_cast<size_t>(perm[static_cast<size_t>(x)])]
                   [static_cast<size_t>(perm[static_cast<size_t>(y)])];
    if (first || c < res.cost) {
      res.cost = c;
      res.optima.clear();
      first = false;
    }
    if (c == res.cost) res.optima.push_back(Placement{perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return res;
}

} // namespace qapc
