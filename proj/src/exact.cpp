#include "exact.hpp"

#include <boost/multiprecision/integer.hpp>

namespace geoscale {

ExactInt num(const ExactRatio& q) { return numerator(q); }
ExactInt den(const ExactRatio& q) { return denominator(q); }

std::string to_string(const ExactInt& v) { return v.str(); }

std::string ratio_str(const ExactRatio& q) {
  ExactInt d = denominator(q);
  if (d == 1) return numerator(q).str();
  return numerator(q).str() + "/" + d.str();
}

ExactInt parse_int(const std::string& text) {
  std::size_t pos = 0;
  if (!text.empty() && text[0] == '-') pos = 1;
  if (pos == text.size())
    throw ParseError("not an integer: \"" + text + "\"");
  for (std::size_t i = pos; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw ParseError("not an integer: \"" + text + "\"");
  return ExactInt(text);
}

ExactRatio parse_ratio(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) return ExactRatio(parse_int(text));
  if (text.find('/', slash + 1) != std::string::npos)
    throw ParseError("not a rational: \"" + text + "\"");
  ExactInt p = parse_int(text.substr(0, slash));
  ExactInt q = parse_int(text.substr(slash + 1));
  if (q <= 0)
    throw ParseError("denominator must be positive in \"" + text + "\"");
  return ExactRatio(p, q);
}

ExactInt ceil_ratio(const ExactRatio& q) {
  ExactInt p = numerator(q), d = denominator(q);
  ExactInt t = p / d; // truncates toward zero, which is ceil for p < 0
  if (p % d != 0 && p > 0) ++t;
  return t;
}

ExactInt pow_int(const ExactInt& base, unsigned exp) {
  ExactInt result(1), b = base;
  while (exp) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp) b *= b;
  }
  return result;
}

unsigned bit_length(const ExactInt& v) {
  if (v == 0) return 0;
  ExactInt a = v < 0 ? ExactInt(-v) : v;
  return boost::multiprecision::msb(a) + 1;
}

} // namespace geoscale
