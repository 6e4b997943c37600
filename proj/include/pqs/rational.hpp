#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pqs {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_integer(const Rational& x)
{
  return boost::multiprecision::denominator(x) == 1;
}

// Precondition: is_integer(x) and the value fits.
inline std::int64_t to_int64(const Rational& x)
{
  return boost::multiprecision::numerator(x).convert_to<std::int64_t>();
}

// "p/q", or "p" for integers.
inline std::string to_string(const Rational& x)
{
  if (is_integer(x))
    return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
  return Rational(BigInt(num), BigInt(den));
}

} // namespace pqs
