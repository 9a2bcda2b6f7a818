#include "delta.hpp"

namespace qapc {

std::string DeltaWeight::str() const {
  std::string out = std::to_string(dc) + "d";
  if (!bias.is_zero()) {
    std::string b = bias.str();
    if (!b.empty() && b[0] == '-')
      out += " - " + (bias * Rat(-1)).str();
    else
      out += " + " + b;
  }
  return out;
}

bool leq_for_all_delta(const DeltaWeight &a, const DeltaWeight &b) {
  return a.dc <= b.dc && provably_le(a.bias, b.bias);
}

bool leq_for_large_delta(const DeltaWeight &a, const DeltaWeight &b) {
  if (a.dc != b.dc)
    return a.dc < b.dc;
  return provably_le(a.bias, b.bias);
}

} // namespace qapc
