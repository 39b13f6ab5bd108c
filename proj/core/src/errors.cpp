#include "flagcone/types.hpp"

#include <charconv>

namespace flagcone {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotGraded: return "NotGraded";
    case Errc::NoUniqueExtremes: return "NoUniqueExtremes";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::NotComparable: return "NotComparable";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::RangeOutOfBounds: return "RangeOutOfBounds";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NonIntegerResult: return "NonIntegerResult";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::NotThickEnough: return "NotThickEnough";
    case Errc::DegreeExceeded: return "DegreeExceeded";
    case Errc::InterpolationMismatch: return "InterpolationMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

KParam::KParam(int two_k) : two_k_(two_k) {
  if (two_k < 1) throw Error(Errc::InvalidArgument, "k must be a positive multiple of 1/2");
}

KParam KParam::parse(std::string_view text) {
  auto to_int = [&](std::string_view part) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size())
      throw Error(Errc::ParseError, "bad k value '" + std::string(text) + "'");
    return value;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return KParam(2 * to_int(text));
  int num = to_int(text.substr(0, slash));
  int den = to_int(text.substr(slash + 1));
  if (den == 2) return KParam(num);
  if (den == 1) return KParam(2 * num);
  throw Error(Errc::ParseError, "k must be written as j/2, got '" + std::string(text) + "'");
}

std::string KParam::to_string() const {
  if (two_k_ % 2 == 0) return std::to_string(two_k_ / 2);
  return std::to_string(two_k_) + "/2";
}

std::string to_exact_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_exact_string(const Integer& z) { return z.str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!is_int(num) || !is_int(den)) throw Error(Errc::ParseError, "bad rational '" + s + "'");
  Integer d(den);
  if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
  return Rational(Integer(num), d);
}

}  // namespace flagcone
