#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <string>

namespace hotplug {

using Rational = boost::multiprecision::cpp_rational;

inline std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

// Fixed 6-decimal rendering used by all CSV output.
inline std::string to_decimal_string(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

inline std::string to_decimal_string(const Rational& r) {
  return to_decimal_string(static_cast<double>(r));
}

}  // namespace hotplug
