#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace qsing {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always reduced with a positive denominator.
/// Compare against Rational(k), never a bare integer: boost 1.74's mixed
/// operator== recurses forever under C++20 rewritten comparisons.
using Rational = boost::rational<std::int64_t>;

/// "p/q" form, e.g. "3/2", "1/1", "0/1".
inline std::string to_fraction_string(const Rational &q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// Shortest form: integers print bare ("1"), everything else as "p/q".
inline std::string to_display_string(const Rational &q) {
  if (q.denominator() == 1)
    return std::to_string(q.numerator());
  return to_fraction_string(q);
}

inline std::string to_string(const BigInt &v) { return v.str(); }

} // namespace qsing
