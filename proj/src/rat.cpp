#include "rat.hpp"

#include <cctype>

namespace qapc {

std::string rat_str(const Rat &r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1)
    s += "/" + rat_den(r).str();
  return s;
}

bool looks_like_float(const std::string &text) {
  for (char ch : text)
    if (ch == '.' || ch == 'e' || ch == 'E')
      return true;
  return false;
}

std::optional<Rat> rat_parse(const std::string &text) {
  if (text.empty())
    return std::nullopt;
  size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  auto digits = [&](BigInt &out) -> bool {
    size_t start = i;
    out = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      out = out * 10 + (text[i] - '0');
      ++i;
    }
    return i > start;
  };
  BigInt whole;
  if (!digits(whole))
    return std::nullopt;
  Rat value(whole);
  if (i < text.size() && text[i] == '/') {
    ++i;
    BigInt den;
    if (!digits(den) || i != text.size() || den == 0)
      return std::nullopt;
    value = Rat(whole, den);
  } else if (i < text.size() && text[i] == '.') {
    ++i;
    size_t start = i;
    BigInt frac;
    if (!digits(frac))
      return std::nullopt;
    if (i != text.size())
      return std::nullopt;
    BigInt scale = 1;
    for (size_t k = start; k < i; ++k)
      scale *= 10;
    value = Rat(whole * scale + frac, scale);
  } else if (i != text.size()) {
    return std::nullopt;
  }
  if (neg)
    value = -value;
  return value;
}

} // namespace qapc
