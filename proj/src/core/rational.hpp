#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace verlinde {

// Exact rationals for conformal weights and central charges; h-integrality
// tests must never go through floating point.
using rat = boost::rational<long long>;

inline bool is_integer(const rat& r) { return r.denominator() == 1; }

// Fractional part in [0,1).
inline rat frac(const rat& r) {
  long long n = r.numerator(), d = r.denominator();
  long long m = n % d;
  if (m < 0) m += d;
  return rat(m, d);
}

inline double to_double(const rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace verlinde
