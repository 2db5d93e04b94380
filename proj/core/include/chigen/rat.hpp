#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace chigen {

// Arbitrary-precision integers and rationals. cpp_rational keeps values
// reduced with a positive denominator, which is exactly the invariant every
// coefficient in the engine relies on. There is no floating-point mode.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline std::string rat_str(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace chigen
