#pragma once

#include "linform.hpp"

namespace qapc {

// Affine weight in the lattice scale parameter: dc * delta + bias. Kept
// symbolic through every correctness check; resolved to a rational only when
// a concrete delta is chosen at export or solve time.
struct DeltaWeight {
  long long dc = 0;
  LinForm bias;

  DeltaWeight() = default;
  DeltaWeight(long long delta_coeff, LinForm b = {}) : dc(delta_coeff), bias(std::move(b)) {}

  DeltaWeight &operator+=(const DeltaWeight &o) {
    dc += o.dc;
    bias += o.bias;
    return *this;
  }
  DeltaWeight &operator-=(const DeltaWeight &o) {
    dc -= o.dc;
    bias -= o.bias;
    return *this;
  }
  friend DeltaWeight operator+(DeltaWeight a, const DeltaWeight &b) { return a += b; }
  friend DeltaWeight operator-(DeltaWeight a, const DeltaWeight &b) { return a -= b; }
  bool operator==(const DeltaWeight &o) const { return dc == o.dc && bias == o.bias; }
  bool operator!=(const DeltaWeight &o) const { return !(*this == o); }

  Rat eval(const Rat &delta, const std::map<std::string, Rat> &env = {}) const {
    return Rat(dc) * delta + bias.eval(env);
  }

  std::string str() const;
};

// a <= b for every delta > 0 (and every symbol assignment): needs dc_a <= dc_b
// and the bias gap to survive delta -> 0, i.e. bias_a <= bias_b provably.
bool leq_for_all_delta(const DeltaWeight &a, const DeltaWeight &b);

// a <= b for all sufficiently large delta: the delta coefficient dominates,
// biases only break ties.
bool leq_for_large_delta(const DeltaWeight &a, const DeltaWeight &b);

} // namespace qapc
