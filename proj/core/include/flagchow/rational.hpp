#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace flagchow {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax error carrying the 0-based offset into the input text.
struct ParseError : Error {
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

inline Integer rational_floor(const Rational& q) {
  Integer num = numerator(q);
  Integer den = denominator(q);  // positive by normalization
  Integer quot = num / den;
  if (num < 0 && quot * den != num) {
    --quot;
  }
  return quot;
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace flagchow
