#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gelfand {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p" or "p/q" with q > 0.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

bool is_integer(const Rational& q);

}  // namespace gelfand
