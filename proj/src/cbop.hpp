#pragma once

#include "linform.hpp"

#include <stdexcept>
#include <vector>

namespace qapc {

struct CbopError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Monomial over binary variables: product of distinct variables times a
// coefficient. Coefficients are linear forms so worked examples can carry
// symbolic weights; ordinary problems only ever use the constant part.
struct Monomial {
  std::vector<int> vars; // sorted, distinct
  LinForm coeff;
};

struct WeightPolynomial {
  std::vector<Monomial> monomials;
  LinForm constant;

  // Adds coeff * prod(vars), merging with an existing monomial over the same
  // variable set. Repeated indices collapse (x*x = x on binaries).
  void add_term(std::vector<int> vars, const LinForm &coeff);
  LinForm eval(const std::vector<int> &x) const;
  int max_degree() const;
};

enum class ConstraintKind { LinearLE, LinearGE, LinearEQ, TruthTable };

struct Constraint {
  ConstraintKind kind = ConstraintKind::LinearEQ;
  std::vector<int> vars;
  std::vector<long long> coeffs;       // linear kinds, aligned with vars
  long long bound = 0;                 // linear kinds
  std::vector<std::vector<int>> rows;  // TruthTable: allowed rows, aligned with vars

  static Constraint linear(ConstraintKind k, std::vector<int> vars,
                           std::vector<long long> coeffs, long long bound);
  static Constraint table(std::vector<int> vars, std::vector<std::vector<int>> rows);
  bool satisfied(const std::vector<int> &x) const;
};

struct BinaryProblem {
  int num_vars = 0;
  std::vector<std::string> var_names; // empty or size num_vars
  std::vector<Constraint> constraints;
  WeightPolynomial weight;

  // Enforces the structural invariants: indices in range, truth tables at
  // most 20 variables wide, monomial variables distinct.
  void validate() const;
};

// Affine expression over source variables: c + sum coeff * x[var].
struct AffineExpr {
  long long c = 0;
  std::vector<std::pair<long long, int>> terms;
  long long eval(const std::vector<int> &x) const;
};

// target variable index -> expression in source variables.
struct VariableMap {
  std::vector<AffineExpr> exprs;
};

LinForm evaluate_weight(const BinaryProblem &p, const std::vector<int> &x);
bool is_valid(const BinaryProblem &p, const std::vector<int> &x);

// All valid assignments with weights, bit-vectors in lexicographic order.
std::vector<std::pair<std::vector<int>, LinForm>>
enumerate_valid(const BinaryProblem &p, int cap = 24);

struct EncodingCheck {
  bool ok = false;
  LinForm offset;               // w0 with w_b(f(x)) = w_a(x) + w0
  std::vector<int> witness;     // counterexample assignment when !ok
  std::string reason;
};

// Does a encode b under f: f carries a's valid set onto b's and weights agree
// up to one constant offset. Both problems are enumerated in full.
EncodingCheck check_encoding(const BinaryProblem &a, const BinaryProblem &b,
                             const VariableMap &f, int cap = 24);

} // namespace qapc
