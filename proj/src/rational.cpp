#include "gelfand/rational.hpp"

#include <stdexcept>

namespace gelfand {

std::string rational_to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

Rational rational_from_string(const std::string& s) {
  size_t slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  Integer num(s.substr(0, slash));
  Integer den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational(num, den);
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

}  // namespace gelfand
