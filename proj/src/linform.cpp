#include "linform.hpp"

namespace qapc {

LinForm LinForm::sym(const std::string &name, const Rat &coeff) {
  LinForm f;
  if (coeff != 0)
    f.terms[name] = coeff;
  return f;
}

std::string LinForm::abs_name(const std::string &name) {
  if (is_abs_name(name))
    return name;
  return "|" + name + "|";
}

bool LinForm::is_abs_name(const std::string &name) {
  return name.size() >= 2 && name.front() == '|' && name.back() == '|';
}

LinForm &LinForm::operator+=(const LinForm &o) {
  c += o.c;
  for (const auto &[name, coeff] : o.terms) {
    Rat &slot = terms[name];
    slot += coeff;
    if (slot == 0)
      terms.erase(name);
  }
  return *this;
}

LinForm &LinForm::operator-=(const LinForm &o) {
  c -= o.c;
  for (const auto &[name, coeff] : o.terms) {
    Rat &slot = terms[name];
    slot -= coeff;
    if (slot == 0)
      terms.erase(name);
  }
  return *this;
}

LinForm &LinForm::operator*=(const Rat &k) {
  if (k == 0)
    return *this = LinForm();
  c *= k;
  for (auto &[name, coeff] : terms)
    coeff *= k;
  return *this;
}

LinForm LinForm::operator-() const {
  LinForm f(*this);
  f *= Rat(-1);
  return f;
}

bool LinForm::provably_nonneg() const {
  if (c < 0)
    return false;
  // A bare symbol s may be negative, but a|s| + b*s >= (a - |b|)|s|, so the
  // form is nonnegative whenever each bare coefficient is dominated by the
  // coefficient of the matching absolute symbol.
  for (const auto &[name, coeff] : terms) {
    if (is_abs_name(name)) {
      if (coeff < 0)
        return false;
      continue;
    }
    auto abs_it = terms.find(abs_name(name));
    Rat a = abs_it == terms.end() ? Rat(0) : abs_it->second;
    if (a < rat_abs(coeff))
      return false;
  }
  return true;
}

LinForm LinForm::abs_upper() const {
  LinForm f(rat_abs(c));
  for (const auto &[name, coeff] : terms) {
    Rat &slot = f.terms[abs_name(name)];
    slot += rat_abs(coeff);
    if (slot == 0)
      f.terms.erase(abs_name(name));
  }
  return f;
}

Rat LinForm::eval(const std::map<std::string, Rat> &env) const {
  Rat v = c;
  for (const auto &[name, coeff] : terms) {
    auto it = env.find(name);
    if (it != env.end()) {
      v += coeff * it->second;
      continue;
    }
    // |s| falls back to |env(s)| so callers only need to bind bare symbols.
    if (is_abs_name(name)) {
      auto bare = env.find(name.substr(1, name.size() - 2));
      if (bare != env.end()) {
        v += coeff * rat_abs(bare->second);
        continue;
      }
    }
    throw std::out_of_range("unbound symbol in LinForm::eval: " + name);
  }
  return v;
}

std::string LinForm::str() const {
  std::string out;
  if (!is_constant() && c == 0) {
    // skip leading zero constant
  } else {
    out = rat_str(c);
  }
  for (const auto &[name, coeff] : terms) {
    if (!out.empty())
      out += coeff < 0 ? " - " : " + ";
    else if (coeff < 0)
      out += "-";
    Rat mag = rat_abs(coeff);
    if (mag != 1)
      out += rat_str(mag) + "*";
    out += name;
  }
  if (out.empty())
    out = "0";
  return out;
}

bool provably_le(const LinForm &a, const LinForm &b) {
  return (b - a).provably_nonneg();
}

LinForm join_upper(const LinForm &a, const LinForm &b) {
  LinForm f;
  f.c = a.c > b.c ? a.c : b.c;
  f.terms = a.terms;
  for (const auto &[name, coeff] : b.terms) {
    auto it = f.terms.find(name);
    if (it == f.terms.end())
      f.terms[name] = coeff;
    else if (coeff > it->second)
      it->second = coeff;
  }
  return f;
}

} // namespace qapc
