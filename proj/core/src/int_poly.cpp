#include "flagcone/int_poly.hpp"

#include <cctype>
#include <optional>

namespace flagcone {

IntPoly IntPoly::constant(std::int64_t c) {
  IntPoly p;
  p.coeffs_ = {Integer(c)};
  p.trim();
  return p;
}

IntPoly IntPoly::variable() {
  IntPoly p;
  p.coeffs_ = {Integer(0), Integer(1)};
  return p;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
  auto fail = [&] { return Error(Errc::ParseError, "bad polynomial '" + std::string(text) + "'"); };
  if (s.empty()) throw fail();

  IntPoly p;
  std::size_t i = 0;
  auto number = [&]() -> std::optional<Integer> {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return std::nullopt;
    return Integer(s.substr(start, i - start));
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw fail();
    }
    first = false;
    auto coef = number();
    std::size_t power = 0;
    if (i < s.size() && s[i] == '*') {
      if (!coef) throw fail();
      ++i;
    }
    if (i < s.size() && s[i] == 'N') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        auto e = number();
        if (!e || *e > 64) throw fail();
        power = static_cast<std::size_t>(*e);
      }
    } else if (!coef) {
      throw fail();
    }
    if (p.coeffs_.size() <= power) p.coeffs_.resize(power + 1, Integer(0));
    p.coeffs_[power] += sign * coef.value_or(Integer(1));
  }
  p.trim();
  return p;
}

Integer IntPoly::eval(const Integer& N) const {
  Integer v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * N + *it;
  return v;
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t d = coeffs_.size(); d-- > 0;) {
    const Integer& c = coeffs_[d];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? "-" : "+";
    if (d == 0 || mag != 1) out += mag.str();
    if (d >= 1) out += "N";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

}  // namespace flagcone
