#pragma once

#include "rat.hpp"

#include <map>
#include <string>

namespace qapc {

// Linear form over named symbols with a rational constant: c + sum a_s * s.
// This is the value type for circuit weights so that worked examples with
// symbolic biases (w1..w4 and friends) certify exactly rather than at sampled
// numbers. A form with no terms is just a rational.
//
// Symbols whose name is wrapped in bars, "|w|", denote the absolute value of
// the bare symbol and are therefore nonnegative by construction. abs_upper()
// rewrites a form into that nonnegative vocabulary, which is what makes the
// order queries below decidable.
struct LinForm {
  Rat c;
  std::map<std::string, Rat> terms; // symbol -> coefficient, never zero

  LinForm() = default;
  LinForm(const Rat &constant) : c(constant) {}
  LinForm(long long constant) : c(constant) {}

  static LinForm sym(const std::string &name, const Rat &coeff = 1);
  static std::string abs_name(const std::string &name);
  static bool is_abs_name(const std::string &name);

  bool is_constant() const { return terms.empty(); }
  bool is_zero() const { return terms.empty() && c == 0; }

  LinForm &operator+=(const LinForm &o);
  LinForm &operator-=(const LinForm &o);
  LinForm &operator*=(const Rat &k);
  friend LinForm operator+(LinForm a, const LinForm &b) { return a += b; }
  friend LinForm operator-(LinForm a, const LinForm &b) { return a -= b; }
  friend LinForm operator*(LinForm a, const Rat &k) { return a *= k; }
  LinForm operator-() const;
  bool operator==(const LinForm &o) const { return c == o.c && terms == o.terms; }
  bool operator!=(const LinForm &o) const { return !(*this == o); }

  // c >= 0 and every term is a nonnegative multiple of an abs symbol; such a
  // form is >= 0 for every assignment of the underlying symbols.
  bool provably_nonneg() const;

  // |c| + sum |a_s| * |s|; pointwise dominates both this form and its negation.
  LinForm abs_upper() const;

  Rat eval(const std::map<std::string, Rat> &env) const;

  std::string str() const;
};

// b - a provably nonnegative (see above). A partial order: forms mentioning
// bare symbols with distinct coefficients are simply incomparable.
bool provably_le(const LinForm &a, const LinForm &b);

// Coefficient-wise max of two abs_upper-style forms; the least form in that
// vocabulary dominating both arguments.
LinForm join_upper(const LinForm &a, const LinForm &b);

} // namespace qapc
