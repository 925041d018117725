#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace plethyst {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

// Decimal text; rationals with a non-unit denominator render as "p/q".
inline std::string to_decimal(const Integer& z) { return z.str(); }
inline std::string to_decimal(const Rational& q) {
  if (is_integral(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

}  // namespace plethyst
