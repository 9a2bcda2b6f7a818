#include "cbop.hpp"

#include <algorithm>
#include <set>

namespace qapc {

void WeightPolynomial::add_term(std::vector<int> vars, const LinForm &coeff) {
  if (coeff.is_zero())
    return;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.empty()) {
    constant += coeff;
    return;
  }
  for (auto &m : monomials) {
    if (m.vars == vars) {
      m.coeff += coeff;
      if (m.coeff.is_zero()) {
        m.vars = monomials.back().vars;
        m.coeff = monomials.back().coeff;
        monomials.pop_back();
      }
      return;
    }
  }
  monomials.push_back({std::move(vars), coeff});
}

LinForm WeightPolynomial::eval(const std::vector<int> &x) const {
  LinForm v = constant;
  for (const auto &m : monomials) {
    bool all = true;
    for (int i : m.vars)
      if (!x[static_cast<size_t>(i)]) {
        all = false;
        break;
      }
    if (all)
      v += m.coeff;
  }
  return v;
}

int WeightPolynomial::max_degree() const {
  size_t d = 0;
  for (const auto &m : monomials)
    d = std::max(d, m.vars.size());
  return static_cast<int>(d);
}

Constraint Constraint::linear(ConstraintKind k, std::vector<int> vars,
                              std::vector<long long> coeffs, long long bound) {
  if (k == ConstraintKind::TruthTable)
    throw CbopError("linear() cannot build a truth-table constraint");
  if (vars.size() != coeffs.size())
    throw CbopError("constraint coefficient count mismatch");
  Constraint c;
  c.kind = k;
  c.vars = std::move(vars);
  c.coeffs = std::move(coeffs);
  c.bound = bound;
  return c;
}

Constraint Constraint::table(std::vector<int> vars, std::vector<std::vector<int>> rows) {
  Constraint c;
  c.kind = ConstraintKind::TruthTable;
  c.vars = std::move(vars);
  c.rows = std::move(rows);
  for (const auto &r : c.rows)
    if (r.size() != c.vars.size())
      throw CbopError("truth-table row width mismatch");
  return c;
}

bool Constraint::satisfied(const std::vector<int> &x) const {
  if (kind == ConstraintKind::TruthTable) {
    std::vector<int> row(vars.size());
    for (size_t k = 0; k < vars.size(); ++k)
      row[k] = x[static_cast<size_t>(vars[k])];
    return std::find(rows.begin(), rows.end(), row) != rows.end();
  }
  long long lhs = 0;
  for (size_t k = 0; k < vars.size(); ++k)
    lhs += coeffs[k] * x[static_cast<size_t>(vars[k])];
  switch (kind) {
  case ConstraintKind::LinearLE:
    return lhs <= bound;
  case ConstraintKind::LinearGE:
    return lhs >= bound;
  case ConstraintKind::LinearEQ:
    return lhs == bound;
  default:
    return false;
  }
}

void BinaryProblem::validate() const {
  if (!var_names.empty() && static_cast<int>(var_names.size()) != num_vars)
    throw CbopError("var_names size mismatch");
  auto in_range = [&](int v) { return v >= 0 && v < num_vars; };
  for (const auto &c : constraints) {
    for (int v : c.vars)
      if (!in_range(v))
        throw CbopError("constraint references variable out of range");
    if (c.kind == ConstraintKind::TruthTable && c.vars.size() > 20)
      throw CbopError("truth-table constraint wider than 20 variables");
  }
  for (const auto &m : weight.monomials) {
    std::set<int> seen;
    for (int v : m.vars) {
      if (!in_range(v))
        throw CbopError("weight monomial references variable out of range");
      if (!seen.insert(v).second)
        throw CbopError("weight monomial repeats a variable");
    }
  }
}

long long AffineExpr::eval(const std::vector<int> &x) const {
  long long v = c;
  for (const auto &[coeff, var] : terms)
    v += coeff * x[static_cast<size_t>(var)];
  return v;
}

LinForm evaluate_weight(const BinaryProblem &p, const std::vector<int> &x) {
  if (static_cast<int>(x.size()) != p.num_vars)
    throw CbopError("assignment length mismatch");
  return p.weight.eval(x);
}

bool is_valid(const BinaryProblem &p, const std::vector<int> &x) {
  if (static_cast<int>(x.size()) != p.num_vars)
    throw CbopError("assignment length mismatch");
  for (const auto &c : p.constraints)
    if (!c.satisfied(x))
      return false;
  return true;
}

std::vector<std::pair<std::vector<int>, LinForm>>
enumerate_valid(const BinaryProblem &p, int cap) {
  if (p.num_vars > cap)
    throw CbopError("enumerate_valid: " + std::to_string(p.num_vars) +
                    " variables exceeds cap " + std::to_string(cap));
  std::vector<std::pair<std::vector<int>, LinForm>> out;
  const int n = p.num_vars;
  std::vector<int> x(static_cast<size_t>(n), 0);
  const unsigned long long total = 1ULL << n;
  for (unsigned long long mask = 0; mask < total; ++mask) {
    // bit 0 of the vector is the most significant position: lexicographic order
    for (int i = 0; i < n; ++i)
      x[static_cast<size_t>(i)] = static_cast<int>((mask >> (n - 1 - i)) & 1ULL);
    if (is_valid(p, x))
      out.emplace_back(x, p.weight.eval(x));
  }
  return out;
}

EncodingCheck check_encoding(const BinaryProblem &a, const BinaryProblem &b,
                             const VariableMap &f, int cap) {
  if (static_cast<int>(f.exprs.size()) != b.num_vars)
    throw CbopError("variable map arity does not match target problem");
  EncodingCheck res;
  auto valid_a = enumerate_valid(a, cap);
  auto valid_b = enumerate_valid(b, cap);

  std::set<std::vector<int>> image;
  bool have_offset = false;
  for (const auto &[x, wa] : valid_a) {
    std::vector<int> y(static_cast<size_t>(b.num_vars));
    for (int j = 0; j < b.num_vars; ++j) {
      long long v = f.exprs[static_cast<size_t>(j)].eval(x);
      if (v != 0 && v != 1) {
        res.witness = x;
        res.reason = "map produced non-binary value " + std::to_string(v) +
                     " for target variable " + std::to_string(j);
        return res;
      }
      y[static_cast<size_t>(j)] = static_cast<int>(v);
    }
    if (!is_valid(b, y)) {
      res.witness = x;
      res.reason = "image of a valid source assignment violates target constraints";
      return res;
    }
    image.insert(y);
    LinForm off = evaluate_weight(b, y) - wa;
    if (!have_offset) {
      res.offset = off;
      have_offset = true;
    } else if (off != res.offset) {
      res.witness = x;
      res.reason = "weight offset is not constant across the valid set";
      return res;
    }
  }
  for (const auto &[y, wb] : valid_b) {
    (void)wb;
    if (!image.count(y)) {
      res.witness = y;
      res.reason = "target assignment not reached by the map";
      return res;
    }
  }
  res.ok = true;
  return res;
}

} // namespace qapc
